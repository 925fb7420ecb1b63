#pragma once

#include "lozenge/numbers.hpp"
#include "lozenge/region.hpp"

namespace lozenge {

// Broken-profile dynamic programming over cells in (row, col) order. State
// is a bitmask of "already covered" over the cells whose adjacency still
// reaches forward; a cell leaves the frontier uncovered only when a free
// edge lets it stay unmatched. Throws when more than 64 cells would be on
// the frontier at once (region too wide for this engine).
//
// Equals count_tilings_enum by a completely different route, which is the
// point: the two engines cross-check each other.
Int count_tilings_dp(const Region& r);

} // namespace lozenge
