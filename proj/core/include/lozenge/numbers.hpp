#pragma once

#include <gmpxx.h>
#include <string>
#include <cstdint>

namespace lozenge {

// Exact arithmetic used by every counting path. Counts of unweighted
// matchings are Int; weighted counts and edge weights are Rat. No floating
// point is allowed anywhere near a count.
using Int = mpz_class;
using Rat = mpq_class;

// Decimal serialization. Counts always travel as strings so callers never
// see a truncated value.
std::string to_string(const Int& v);

// "num/den" in lowest terms, or just "num" when the denominator is 1.
std::string to_string(const Rat& v);

// Parses "123", "-4/7". Throws std::invalid_argument on malformed input.
Rat parse_rational(const std::string& s);

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);

// Rising factorial q(q+1)...(q+n-1); empty product for n == 0.
Rat pochhammer(const Rat& q, long n);
Int pochhammer_int(long q, long n);

// Exact value mantissa * pi^pi_exp. Mantissas stay rational because every
// Gamma factor at integer and half-integer arguments reduces to
// factorials times a power of sqrt(pi).
struct PiScaledRational {
    Rat mantissa;
    long pi_exp = 0;

    bool operator==(const PiScaledRational&) const = default;
};

std::string to_string(const PiScaledRational& v);

} // namespace lozenge
