#include "lozenge/catalog.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace lozenge {

namespace {

void require_nonneg(std::initializer_list<int> vals, const char* what) {
    for (int v : vals)
        if (v < 0) throw std::invalid_argument(std::string(what) + ": negative side length");
}

// The hexagon with sides a, b, c, a, b, c is the intersection of six closed
// half-planes in lattice coordinates. A cell belongs iff all of its corners
// do, which for a convex region is exactly the cells inside.
struct HexagonPredicate {
    int a, b, c;
    bool point_in(LatticePoint q) const {
        return q.j >= 0 && q.j <= b + c && q.i >= 0 && q.i <= a + b &&
               q.i + q.j >= b && q.i + q.j <= a + b + c;
    }
    bool cell_in(TriCell t) const {
        for (auto q : corners(t))
            if (!point_in(q)) return false;
        return true;
    }
};

std::vector<TriCell> hexagon_cells(int a, int b, int c) {
    HexagonPredicate hex{a, b, c};
    std::vector<TriCell> cells;
    for (int j = 0; j < b + c; ++j)
        for (int alpha = 0; alpha < a + b; ++alpha)
            for (bool up : {true, false}) {
                TriCell t = cell_at(alpha, j, up);
                if (hex.cell_in(t)) cells.push_back(t);
            }
    return cells;
}

// The bowtie hole of a butterfly hexagon: two side-K triangles with tips at
// the center (i0, j0), pulled apart horizontally by P. Written as two convex
// pieces; a cell is in the hole iff all its corners lie in one piece.
struct BowtiePredicate {
    int i0, j0, big_k, big_p;
    bool in_upper(LatticePoint q) const {
        return q.j >= j0 && q.j <= j0 + big_k && q.i + q.j >= i0 + j0 - big_p &&
               q.i <= i0 + big_p;
    }
    bool in_lower(LatticePoint q) const {
        return q.j >= j0 - big_k && q.j <= j0 && q.i + q.j <= i0 + j0 + big_p &&
               q.i >= i0 - big_p;
    }
    bool cell_in(TriCell t) const {
        bool upper = true, lower = true;
        for (auto q : corners(t)) {
            upper = upper && in_upper(q);
            lower = lower && in_lower(q);
        }
        return upper || lower;
    }
};

} // namespace

Region hexagon(int a, int b, int c) {
    require_nonneg({a, b, c}, "hexagon");
    return Region::make(hexagon_cells(a, b, c));
}

Region butterfly_hexagon(int x, int y, int k, int p) {
    require_nonneg({x, y, k, p}, "butterfly_hexagon");
    if (k == 0 && p == 0) return hexagon(x, y, y);
    if ((x + y) % 2 != 0)
        throw std::invalid_argument("butterfly_hexagon: center must be a lattice point (x + y even)");
    int i0 = (x + y) / 2, j0 = y;
    HexagonPredicate hex{x, y, y};
    // The hole fits iff its extreme corners do.
    for (LatticePoint q : {LatticePoint{i0 - p, j0}, LatticePoint{i0 + p, j0},
                           LatticePoint{i0 - p - k, j0 + k}, LatticePoint{i0 + p, j0 + k},
                           LatticePoint{i0 - p, j0 - k}, LatticePoint{i0 + p + k, j0 - k}})
        if (!hex.point_in(q))
            throw std::invalid_argument("butterfly_hexagon: hole does not fit inside the hexagon");

    if (k == 0) {
        // Zero-height bowtie: a horizontal slit of length 2p through the center.
        std::vector<Edge> cut;
        for (int i = i0 - p; i < i0 + p; ++i)
            cut.emplace_back(LatticePoint{i, j0}, LatticePoint{i + 1, j0});
        return Region::make(hexagon_cells(x, y, y), {}, std::move(cut));
    }

    BowtiePredicate hole{i0, j0, k, p};
    std::vector<TriCell> cells;
    for (TriCell t : hexagon_cells(x, y, y))
        if (!hole.cell_in(t)) cells.push_back(t);
    return Region::make(std::move(cells));
}

namespace {

// Shared construction for the flashlight and its reduced form, in the
// coordinates of butterfly_hexagon(2x, 2y, 2k, p) before normalization:
// the cells right of the vertical symmetry line and above the horizontal
// one, bottom edges free beyond the hole waist.
void flashlight_raw(int x, int z, int k, int p,
                    std::vector<TriCell>& cells, std::vector<Edge>& free_edges) {
    int y = z + k;
    int i0 = x + y, j0 = 2 * y;
    HexagonPredicate hex{2 * x, 2 * y, 2 * y};
    BowtiePredicate hole{i0, j0, 2 * k, p};
    auto in_quarter = [&](TriCell t) {
        bool in_hole_upper = k >= 1;
        for (auto q : corners(t)) {
            if (!hex.point_in(q)) return false;
            if (2 * q.i + q.j < 2 * x + 4 * y) return false; // right of the axis
            in_hole_upper = in_hole_upper && hole.in_upper(q);
        }
        return !in_hole_upper;
    };
    for (int j = j0; j < 4 * y; ++j)
        for (int alpha = 0; alpha < 2 * x + 2 * y; ++alpha)
            for (bool up : {true, false}) {
                TriCell t = cell_at(alpha, j, up);
                if (in_quarter(t)) cells.push_back(t);
            }
    // Bottom edges are free beyond the hole waist; the p bases inside the
    // waist stay constrained (they are the slit when k = 0).
    for (TriCell t : cells)
        if (t.row == j0 && t.up() && t.anchor() >= i0 + p)
            free_edges.push_back(edge_of(t, EdgeDir::H));
}

} // namespace

Region flashlight(int x, int z, int k, int p) {
    require_nonneg({x, z, k, p}, "flashlight");
    if (x + z < k + p)
        throw std::invalid_argument("flashlight: requires x + z >= k + p");
    std::vector<TriCell> cells;
    std::vector<Edge> free_edges;
    flashlight_raw(x, z, k, p, cells, free_edges);
    return Region::make(std::move(cells), std::move(free_edges)).normalized();
}

Region reduced_flashlight(int x, int z, int k, int p) {
    require_nonneg({x, z, k, p}, "reduced_flashlight");
    if (x + z < k + p)
        throw std::invalid_argument("reduced_flashlight: requires x + z >= k + p");
    if (z < 1)
        throw std::invalid_argument("reduced_flashlight: requires z >= 1");
    std::vector<TriCell> cells;
    std::vector<Edge> free_edges;
    flashlight_raw(x, z, k, p, cells, free_edges);

    int y = z + k;
    int i0 = x + y;
    std::unordered_set<TriCell, TriCellHash> forced;
    // x lozenges along the top edge ...
    int j_top = 4 * y - 1;
    for (int a = x; a < 2 * x; ++a) {
        forced.insert(cell_at(a, j_top, false));
        forced.insert(cell_at(a + 1, j_top, true));
    }
    // ... and k + p over the top of the hole notch.
    int j_notch = 2 * y + 2 * k;
    for (int a = i0 - k; a < i0 + p; ++a) {
        forced.insert(cell_at(a, j_notch, true));
        forced.insert(cell_at(a, j_notch, false));
    }

    std::vector<TriCell> kept;
    kept.reserve(cells.size());
    std::size_t hit = 0;
    for (TriCell t : cells) {
        if (forced.count(t)) ++hit;
        else kept.push_back(t);
    }
    if (hit != forced.size())
        throw std::logic_error("reduced_flashlight: an expected forced cell is missing");
    return Region::make(std::move(kept), std::move(free_edges)).normalized();
}

Region free_trapezoid(int a, int b) {
    require_nonneg({a, b}, "free_trapezoid");
    std::vector<TriCell> cells;
    std::vector<Edge> free_edges;
    for (TriCell t : hexagon_cells(b, a, a))
        if (t.row >= a) {
            cells.push_back(t);
            if (t.row == a && t.up()) free_edges.push_back(edge_of(t, EdgeDir::H));
        }
    return Region::make(std::move(cells), std::move(free_edges)).normalized();
}

} // namespace lozenge
