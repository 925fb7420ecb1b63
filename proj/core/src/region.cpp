#include "lozenge/region.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace lozenge {

namespace {
bool row_col_less(TriCell a, TriCell b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
}
} // namespace

Region Region::make(std::vector<TriCell> cells, std::vector<Edge> free_edges,
                    std::vector<Edge> cut_edges) {
    Region r;
    std::sort(cells.begin(), cells.end(), row_col_less);
    for (std::size_t t = 1; t < cells.size(); ++t)
        if (cells[t] == cells[t - 1])
            throw std::invalid_argument("duplicate cell " + to_string(cells[t]));
    r.cells_ = std::move(cells);
    r.cell_set_.insert(r.cells_.begin(), r.cells_.end());

    std::sort(free_edges.begin(), free_edges.end());
    for (std::size_t t = 1; t < free_edges.size(); ++t)
        if (free_edges[t] == free_edges[t - 1])
            throw std::invalid_argument("duplicate free edge");
    for (const Edge& e : free_edges) {
        auto owners = cells_of_edge(e);
        bool in0 = r.cell_set_.count(owners[0]) != 0;
        bool in1 = r.cell_set_.count(owners[1]) != 0;
        if (!in0 && !in1)
            throw std::invalid_argument("free edge touches no cell of the region");
        if (in0 && in1)
            throw std::invalid_argument(
                "free edge between two region cells (interior edges cannot be free)");
    }
    r.free_ = std::move(free_edges);
    r.free_set_.insert(r.free_.begin(), r.free_.end());

    std::sort(cut_edges.begin(), cut_edges.end());
    for (std::size_t t = 1; t < cut_edges.size(); ++t)
        if (cut_edges[t] == cut_edges[t - 1])
            throw std::invalid_argument("duplicate cut edge");
    for (const Edge& e : cut_edges) {
        auto owners = cells_of_edge(e);
        if (!r.cell_set_.count(owners[0]) || !r.cell_set_.count(owners[1]))
            throw std::invalid_argument("cut edge is not interior to the region");
        if (r.free_set_.count(e))
            throw std::invalid_argument("edge is both free and cut");
    }
    r.cut_ = std::move(cut_edges);
    r.cut_set_.insert(r.cut_.begin(), r.cut_.end());
    return r;
}

bool Region::is_free_cell(TriCell c) const {
    if (free_.empty()) return false;
    for (auto& [d, e] : edges_of(c))
        if (free_set_.count(e)) return true;
    return false;
}

bool Region::lozenge_allowed(TriCell a, TriCell b) const {
    if (!contains(a) || !contains(b)) return false;
    for (auto& [d, e] : edges_of(a))
        if (neighbor_across(a, d) == b)
            return !is_cut_edge(e);
    return false;
}

Region Region::translated(int di, int dj) const {
    std::vector<TriCell> cs;
    cs.reserve(cells_.size());
    for (TriCell c : cells_)
        cs.push_back(TriCell{c.col + 2 * di + dj, c.row + dj});
    auto shift = [&](const std::vector<Edge>& es) {
        std::vector<Edge> out;
        out.reserve(es.size());
        for (const Edge& e : es)
            out.emplace_back(LatticePoint{e.u.i + di, e.u.j + dj},
                             LatticePoint{e.v.i + di, e.v.j + dj});
        return out;
    };
    return make(std::move(cs), shift(free_), shift(cut_));
}

Region Region::normalized() const {
    if (cells_.empty()) return *this;
    int min_row = std::numeric_limits<int>::max();
    for (TriCell c : cells_) min_row = std::min(min_row, c.row);
    int dj = -min_row;
    int min_col = std::numeric_limits<int>::max();
    for (TriCell c : cells_) min_col = std::min(min_col, c.col + dj);
    // col shifts come in steps of 2 once dj is fixed, so the minimum col
    // lands on 0 or 1 depending on parity.
    int di = -(min_col >= 0 ? min_col / 2 : (min_col - 1) / 2);
    return translated(di, dj);
}

void validate_tiling(const Region& r, const Tiling& t) {
    std::unordered_set<TriCell, TriCellHash> covered;
    auto cover = [&](TriCell c) {
        if (!r.contains(c))
            throw std::invalid_argument("tiling uses cell outside region: " + to_string(c));
        if (!covered.insert(c).second)
            throw std::invalid_argument("cell covered twice: " + to_string(c));
    };
    for (auto& [a, b] : t.lozenges) {
        if (!r.lozenge_allowed(a, b))
            throw std::invalid_argument("lozenge cells not adjacent within the region");
        cover(a);
        cover(b);
    }
    for (TriCell c : t.unmatched) {
        if (!r.is_free_cell(c))
            throw std::invalid_argument("unmatched cell has no free edge: " + to_string(c));
        cover(c);
    }
    if (covered.size() != r.cell_count())
        throw std::invalid_argument("tiling does not cover the region");
}

} // namespace lozenge
