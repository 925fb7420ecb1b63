#pragma once

#include "lozenge/numbers.hpp"
#include "lozenge/real.hpp"

namespace lozenge {

// Product formulas evaluated exactly in rational arithmetic. Every product
// whose index limits are out of order is 1, including Pochhammer factors
// with non-positive length; that convention is what makes the flashlight
// count vanish (not error) when x < k + p.

// Tilings of the hexagon with sides x, y, z, x, y, z.
Int macmahon_box(int x, int y, int z);

// Symmetric plane partitions in an a x a x b box.
Int spp(int a, int b);

// M_f of flashlight(x, z, k, p); zero when x < k + p.
Int flashlight_formula(int x, int z, int k, int p);

// Horizontally and vertically symmetric tilings of butterfly_hexagon
// (2x, 2y, 2k, p). Coincides with flashlight_formula(x, y-k, k, p) term by
// term for y >= k; evaluated in its own right so the equality is testable.
Int butterfly_sym_formula(int x, int y, int k, int p);

// Corner correlation limit: 3^((k-p)(k-p+1)/2) / 2^(2k^2+k+p^2).
Rat corner_correlation(int k, int p);

// Bulk correlation limit at waist 0, exact: mantissa times pi^pi_exp. The
// Gamma factors at integers are factorials and at half-integers reduce to
// rational multiples of sqrt(pi); the sqrt(pi) powers pair up, giving
// pi_exp = -2k.
PiScaledRational bulk_correlation(int k);

Real to_real(const PiScaledRational& v, mpfr_prec_t prec);

// Large-k law for the bulk correlation:
//   e^(1/4) / (A^3 2^(1/6) k^(1/4)) * 3^(2k^2) / 2^(8k^2),
// A the Glaisher-Kinkelin constant. Rejects k = 0.
Real bulk_asymptote(int k, int digits);

// Glaisher-Kinkelin constant A to the requested number of digits, from
// ln A = 1/12 - zeta'(-1) with zeta'(-1) expressed through zeta'(2) and
// zeta'(2) summed by Euler-Maclaurin.
Real glaisher(int digits);

// ln of flashlight_formula via lngamma, for parameters far beyond exact
// range. Requires a strictly positive value (throws when x < k + p).
Real ln_flashlight_formula(int x, int z, int k, int p, mpfr_prec_t prec);

} // namespace lozenge
