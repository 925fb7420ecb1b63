#pragma once

#include "lozenge/numbers.hpp"
#include "lozenge/region.hpp"

namespace lozenge {

// Reflections of single cells, exact in lattice coordinates.
//   reflect_h: about the horizontal line of lattice row j0.
//   reflect_v: about the vertical line at plane abscissa x2/2.
//   reflect_c: point reflection; k = 2X - j0 and cj = 2 * j0 for a center
//              at plane abscissa X and row j0.
TriCell reflect_h(TriCell c, int j0);
TriCell reflect_v(TriCell c, int x2);
TriCell reflect_c(TriCell c, int k, int cj);

struct SymmetrySpec {
    bool horizontal = false;
    bool vertical = false;
    bool central = false;
};

// Number of tilings invariant under every selected symmetry. The axes and
// center are derived from the centroid (the only candidates); throws when
// they are not lattice-aligned, when the region is not actually invariant,
// or when the region has free edges. Counts by placing whole orbits of
// lozenges at a time; cells bisected by an axis can only be covered by
// self-symmetric lozenges, which the orbit closure enforces by itself.
Int symmetric_count(const Region& r, const SymmetrySpec& s);

// The quotient of a horizontally and vertically symmetric region: cells on
// or above the horizontal axis and right of the vertical one, with each cell
// bisected by the vertical axis dropped (its half is forced) and the bottom
// edges on the horizontal axis free wherever the region continues across
// (cut edges there stay constrained). Tilings of the quarter with free
// boundary biject with symmetric tilings of the whole.
//
// Requires both symmetries, no free edges, a vertical axis through lattice
// points (integral plane abscissa) and an integral horizontal axis row.
Region symmetric_reduction(const Region& r);

} // namespace lozenge
