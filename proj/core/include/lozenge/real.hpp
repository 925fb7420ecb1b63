#pragma once

#include "lozenge/numbers.hpp"

#include <mpfr.h>
#include <string>

namespace lozenge {

// Thin value-semantic wrapper over mpfr_t. Precision is carried per value
// (in bits); binary operations compute at the larger operand precision.
// Only the correlation/asymptotics layer uses this type; counting stays
// exact.
class Real {
public:
    static mpfr_prec_t bits_for_digits(int digits);

    Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(const Int& x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN); }
    Real(const Rat& x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN); }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    static Real pi(mpfr_prec_t prec);
    static Real euler_gamma(mpfr_prec_t prec);

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    Real operator-() const;

    Real& operator+=(const Real& b) { *this = *this + b; return *this; }
    Real& operator-=(const Real& b) { *this = *this - b; return *this; }
    Real& operator*=(const Real& b) { *this = *this * b; return *this; }
    Real& operator/=(const Real& b) { *this = *this / b; return *this; }

    friend Real ln(const Real& a);
    friend Real exp(const Real& a);
    friend Real sqrt(const Real& a);
    friend Real abs(const Real& a);
    friend Real lngamma(const Real& a);        // requires a > 0
    friend Real pow(const Real& a, const Real& b);
    friend Real pow_si(const Real& a, long e);

    int sign() const { return mpfr_sgn(v_); }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    std::strong_ordering operator<=>(const Real& o) const {
        int c = mpfr_cmp(v_, o.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }
    bool operator==(const Real& o) const { return mpfr_cmp(v_, o.v_) == 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // Scientific decimal string with the given significant digits.
    std::string to_string(int digits) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

} // namespace lozenge
