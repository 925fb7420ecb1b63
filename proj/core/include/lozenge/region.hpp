#pragma once

#include "lozenge/cells.hpp"

#include <iosfwd>
#include <unordered_set>
#include <vector>

namespace lozenge {

// A finite set of unit triangles plus a set of free boundary edges.
// Free edges mark where a lozenge may protrude halfway out of the region
// (equivalently: where the dual vertex is allowed to stay unmatched).
//
// Cut edges are interior edges along which the region is slit: both cells
// stay, but no lozenge may straddle the edge. They arise from zero-height
// slits (e.g. a bowtie hole whose triangles have side 0 but whose waist
// still has positive width).
//
// Disconnected regions are legal; matching counts multiply over components.
class Region {
public:
    Region() = default;

    // Validates: no duplicate cells; every free edge is an edge of exactly
    // one cell of the region (boundary edge); every cut edge is shared by
    // two cells of the region (interior edge). Throws std::invalid_argument.
    static Region make(std::vector<TriCell> cells, std::vector<Edge> free_edges = {},
                       std::vector<Edge> cut_edges = {});

    const std::vector<TriCell>& cells() const { return cells_; }
    const std::vector<Edge>& free_edges() const { return free_; }
    const std::vector<Edge>& cut_edges() const { return cut_; }
    std::size_t cell_count() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    bool contains(TriCell c) const { return cell_set_.count(c) != 0; }
    bool is_free_edge(const Edge& e) const { return free_set_.count(e) != 0; }
    bool is_cut_edge(const Edge& e) const { return cut_set_.count(e) != 0; }
    // Incident to at least one free edge.
    bool is_free_cell(TriCell c) const;
    // True when the two cells may be covered by one lozenge: both present,
    // sharing an edge, and that edge is not cut.
    bool lozenge_allowed(TriCell a, TriCell b) const;

    // Lattice translation by (di, dj); in (col,row) space this moves cells
    // by (2*di + dj, dj), preserving orientation parity.
    Region translated(int di, int dj) const;

    // Translate so the minimum row is 0 and the minimum col is 0 or 1
    // (parity-constrained). Canonical form for region equality.
    Region normalized() const;

    bool operator==(const Region& o) const {
        return cells_ == o.cells_ && free_ == o.free_ && cut_ == o.cut_;
    }

private:
    std::vector<TriCell> cells_;           // sorted by (row, col)
    std::vector<Edge> free_;               // sorted
    std::vector<Edge> cut_;                // sorted
    std::unordered_set<TriCell, TriCellHash> cell_set_;
    std::unordered_set<Edge, EdgeHash> free_set_;
    std::unordered_set<Edge, EdgeHash> cut_set_;
};

// One lozenge = two cells sharing an edge. A tiling covers every cell
// exactly once; cells incident to a free edge may instead stay unmatched
// (drawn as a half-lozenge protruding across the free edge).
struct Tiling {
    std::vector<std::pair<TriCell, TriCell>> lozenges;
    std::vector<TriCell> unmatched;
};

// Throws std::invalid_argument when t is not a tiling of r.
void validate_tiling(const Region& r, const Tiling& t);

// Text format, one item per line:
//   col row U        (or D; orientation must match col+row parity)
//   FREE col row d   (d in {L,R,H}: that side of cell (col,row) is free)
//   CUT col row d    (that side of cell (col,row) is slit through)
std::string region_to_text(const Region& r);
Region region_from_text(const std::string& text);
Region region_from_stream(std::istream& in);

} // namespace lozenge
