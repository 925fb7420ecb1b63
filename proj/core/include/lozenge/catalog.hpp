#pragma once

#include "lozenge/region.hpp"

namespace lozenge {

// Hexagonal region with side lengths a, b, c, a, b, c clockwise from the
// top edge; 2(ab+bc+ca) cells, no free boundary. Zero sides are legal and
// degenerate (a,0,0 is empty).
Region hexagon(int a, int b, int c);

// hexagon(x, y, y) with a bowtie hole at its center: a down-pointing and an
// up-pointing triangle of side k, tips meeting at the center, pushed apart
// sideways by p on each side into a waist of width 2p. With k = 0 and p > 0
// the hole collapses to a horizontal slit of length 2p, represented as cut
// edges. Requires x + y even (the center must be a lattice point) and the
// hole to fit inside the hexagon; throws otherwise.
Region butterfly_hexagon(int x, int y, int k, int p);

// Quarter of butterfly_hexagon(2x, 2(z+k), 2k, p): the part above the
// horizontal symmetry line and right of the vertical one, with the bottom
// edges on the horizontal line free except along the hole. Standalone
// region with a free boundary of length x + z + k - p. Requires
// x + z >= k + p (otherwise the dent does not fit).
Region flashlight(int x, int z, int k, int p);

// flashlight(x, z, k, p) minus the lozenges that are forced in every
// tiling: x along the top edge and k + p over the top of the hole notch.
// Tiling counts are unchanged; the dual graph loses its forced pendants.
// Requires z >= 1 (at z = 0 the two rows coincide).
Region reduced_flashlight(int x, int z, int k, int p);

// Upper half of hexagon(b, a, a): a trapezoid with parallel sides b and
// b + 2a, legs a, and the b + a bottom edges of its up cells free.
Region free_trapezoid(int a, int b);

} // namespace lozenge
