#include "lozenge/symmetry.hpp"

#include <cstdint>
#include <deque>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lozenge {

// Derived by reflecting the corner set and reading the image cell back off;
// each map is an involution on cells of the infinite lattice.

TriCell reflect_h(TriCell c, int j0) {
    int a = c.anchor(), j = c.row;
    if (c.up()) return cell_at(a + j - j0, 2 * j0 - j - 1, false);
    return cell_at(a + j - j0 + 1, 2 * j0 - j - 1, true);
}

TriCell reflect_v(TriCell c, int x2) {
    int a = c.anchor(), j = c.row;
    if (c.up()) return cell_at(x2 - j - a - 1, j, true);
    return cell_at(x2 - j - a - 2, j, false);
}

TriCell reflect_c(TriCell c, int k, int cj) {
    int a = c.anchor(), j = c.row;
    return cell_at(k - a - 1, cj - j - 1, !c.up());
}

namespace {

struct CentroidSums {
    std::int64_t sx = 0, sy = 0, n = 0;
};

CentroidSums centroid_sums(const Region& r) {
    CentroidSums s;
    for (TriCell c : r.cells()) {
        auto [x, y] = centroid6(c);
        s.sx += x;
        s.sy += y;
        ++s.n;
    }
    return s;
}

int exact_div(std::int64_t num, std::int64_t den, const char* axis) {
    if (num % den != 0)
        throw std::invalid_argument(std::string(axis) + " symmetry axis is not lattice-aligned");
    return static_cast<int>(num / den);
}

using CellMap = std::function<TriCell(TriCell)>;
using PointMap = std::function<LatticePoint(LatticePoint)>;

struct Generator {
    const char* name;
    CellMap cell;
    PointMap point;
};

// The axis/center of any symmetry must fix the centroid, so the centroid
// determines each candidate generator uniquely.
Generator make_horizontal(const CentroidSums& s) {
    int j0 = exact_div(s.sy, 6 * s.n, "horizontal");
    return {"horizontally",
            [j0](TriCell c) { return reflect_h(c, j0); },
            [j0](LatticePoint q) { return LatticePoint{q.i + q.j - j0, 2 * j0 - q.j}; }};
}

Generator make_vertical(const CentroidSums& s) {
    int x2 = exact_div(s.sx, 3 * s.n, "vertical");
    return {"vertically",
            [x2](TriCell c) { return reflect_v(c, x2); },
            [x2](LatticePoint q) { return LatticePoint{x2 - q.i - q.j, q.j}; }};
}

Generator make_central(const CentroidSums& s) {
    int k = exact_div(2 * s.sx - s.sy, 6 * s.n, "central");
    int cj = exact_div(s.sy, 3 * s.n, "central");
    return {"centrally",
            [k, cj](TriCell c) { return reflect_c(c, k, cj); },
            [k, cj](LatticePoint q) { return LatticePoint{k - q.i, cj - q.j}; }};
}

void check_invariant(const Region& r, const Generator& g) {
    for (TriCell c : r.cells())
        if (!r.contains(g.cell(c)))
            throw std::invalid_argument(std::string("region is not ") + g.name + " symmetric");
    for (const Edge& e : r.cut_edges())
        if (!r.is_cut_edge(Edge(g.point(e.u), g.point(e.v))))
            throw std::invalid_argument(std::string("cut edges are not ") + g.name + " symmetric");
}

} // namespace

Int symmetric_count(const Region& r, const SymmetrySpec& s) {
    if (!s.horizontal && !s.vertical && !s.central)
        throw std::invalid_argument("symmetric_count: no symmetry selected");
    if (!r.free_edges().empty())
        throw std::invalid_argument("symmetric_count: region must have a closed boundary");
    if (r.empty()) return 1;

    CentroidSums sums = centroid_sums(r);
    std::vector<Generator> gens;
    if (s.horizontal) gens.push_back(make_horizontal(sums));
    if (s.vertical) gens.push_back(make_vertical(sums));
    if (s.central) gens.push_back(make_central(sums));
    for (const Generator& g : gens) check_invariant(r, g);

    const std::vector<TriCell>& cells = r.cells();
    int n = static_cast<int>(cells.size());
    std::unordered_map<TriCell, int, TriCellHash> index;
    for (int i = 0; i < n; ++i) index.emplace(cells[i], i);

    // Images of each cell under each generator, precomputed.
    std::vector<std::vector<int>> image(gens.size(), std::vector<int>(n));
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (int i = 0; i < n; ++i)
            image[g][i] = index.at(gens[g].cell(cells[i]));

    std::vector<int> partner(n, -1);
    std::vector<std::pair<int, int>> added;

    // Places the lozenge (a, b) and everything its orbit closure demands.
    // Returns false (rolling back nothing; caller rolls back via mark) when
    // an image collides with what is already placed.
    auto place_orbit = [&](int a0, int b0) -> bool {
        std::deque<std::pair<int, int>> work{{a0, b0}};
        while (!work.empty()) {
            auto [a, b] = work.front();
            work.pop_front();
            if (partner[a] == b) continue; // orbit closed onto itself
            if (partner[a] != -1 || partner[b] != -1) return false;
            partner[a] = b;
            partner[b] = a;
            added.emplace_back(a, b);
            for (std::size_t g = 0; g < gens.size(); ++g)
                work.emplace_back(image[g][a], image[g][b]);
        }
        return true;
    };

    Int count = 0;
    std::function<void(int)> rec = [&](int scan_from) {
        int v = scan_from;
        while (v < n && partner[v] != -1) ++v;
        if (v == n) {
            ++count;
            return;
        }
        for (TriCell w : neighbors(cells[v])) {
            auto it = index.find(w);
            if (it == index.end() || partner[it->second] != -1) continue;
            if (!r.lozenge_allowed(cells[v], w)) continue;
            std::size_t mark = added.size();
            if (place_orbit(v, it->second)) rec(v + 1);
            while (added.size() > mark) {
                auto [a, b] = added.back();
                added.pop_back();
                partner[a] = -1;
                partner[b] = -1;
            }
        }
    };
    rec(0);
    return count;
}

Region symmetric_reduction(const Region& r) {
    if (!r.free_edges().empty())
        throw std::invalid_argument("symmetric_reduction: region must have a closed boundary");
    if (r.empty()) return r;

    CentroidSums sums = centroid_sums(r);
    Generator h = make_horizontal(sums);
    Generator v = make_vertical(sums);
    check_invariant(r, h);
    check_invariant(r, v);
    int j0 = exact_div(sums.sy, 6 * sums.n, "horizontal");
    // The vertical axis must run through lattice points for the bisected
    // cells to pair into forced on-axis lozenges.
    int x2 = exact_div(sums.sx, 3 * sums.n, "vertical");
    if (x2 % 2 != 0)
        throw std::invalid_argument("vertical symmetry axis does not pass through lattice points");

    auto in_quarter = [&](TriCell c) {
        if (c.row < j0) return false;
        for (auto q : corners(c))
            if (2 * q.i + q.j < x2) return false;
        return true;
    };

    std::vector<TriCell> cells;
    std::vector<Edge> free_edges;
    for (TriCell c : r.cells())
        if (in_quarter(c)) {
            cells.push_back(c);
            if (c.row == j0 && c.up()) {
                Edge base = edge_of(c, EdgeDir::H);
                if (!r.is_cut_edge(base)) free_edges.push_back(base);
            }
        }
    std::vector<Edge> cuts;
    for (const Edge& e : r.cut_edges()) {
        auto [ca, cb] = cells_of_edge(e);
        if (in_quarter(ca) && in_quarter(cb)) cuts.push_back(e);
    }
    return Region::make(std::move(cells), std::move(free_edges), std::move(cuts)).normalized();
}

} // namespace lozenge
