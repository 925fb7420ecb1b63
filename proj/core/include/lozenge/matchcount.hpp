#pragma once

#include "lozenge/graph.hpp"
#include "lozenge/region.hpp"

#include <functional>
#include <optional>

namespace lozenge {

// Branching matcher with forced-move propagation: repeatedly matches any
// non-free vertex left with a single available partner, prunes when one has
// none, and otherwise branches on a vertex of minimum availability. Free
// vertices may additionally stay unmatched.

// Number of matchings covering every non-free vertex (weights ignored).
Int mf_count(const FreeMatchGraph& g);

// Sum over those matchings of the product of matched edge weights.
Rat mf_weight(const FreeMatchGraph& g);

// Visits every matching covering the non-free vertices; mate[v] is the
// partner of v, -1 for an unmatched (necessarily free) vertex. Return false
// from the visitor to stop. Visit order is deterministic.
void for_each_matching(const FreeMatchGraph& g,
                       const std::function<bool(const std::vector<int>&)>& visit);

std::optional<std::vector<int>> any_matching(const FreeMatchGraph& g);

// Perfect matching count by plain first-uncovered-vertex recursion, with no
// propagation machinery. Slow but independent; reference for cross-checks.
Int perfect_count_plain(const FreeMatchGraph& g);

// Region-level engines. Counts are of tilings: lozenges cover every cell,
// cells with a free edge may stay uncovered.
Int count_tilings_enum(const Region& r);

// Independent oracle: sums perfect-matching counts of the dual with every
// subset of free cells deleted, using perfect_count_plain underneath.
// Throws when the region has more than 20 free cells.
Int count_tilings_subsets(const Region& r);

std::optional<Tiling> first_tiling(const Region& r);

} // namespace lozenge
