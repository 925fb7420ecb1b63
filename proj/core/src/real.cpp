#include "lozenge/real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace lozenge {

mpfr_prec_t Real::bits_for_digits(int digits) {
    if (digits < 1) throw std::invalid_argument("digits must be positive");
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 32;
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real Real::pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::euler_gamma(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_euler(r.v_, MPFR_RNDN);
    return r;
}

namespace {
mpfr_prec_t join(const Real& a, const Real& b) {
    return std::max(a.prec(), b.prec());
}
} // namespace

Real operator+(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
Real operator-(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
Real operator*(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
Real operator/(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
Real Real::operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

Real ln(const Real& a) {
    Real r(a.prec());
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
}
Real exp(const Real& a) {
    Real r(a.prec());
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
}
Real sqrt(const Real& a) {
    Real r(a.prec());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
}
Real abs(const Real& a) {
    Real r(a.prec());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
}
Real lngamma(const Real& a) {
    if (a.sign() <= 0) throw std::domain_error("lngamma: argument must be positive");
    Real r(a.prec());
    mpfr_lngamma(r.v_, a.v_, MPFR_RNDN);
    return r;
}
Real pow(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
Real pow_si(const Real& a, long e) {
    Real r(a.prec());
    mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
}

std::string Real::to_string(int digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_zero_p(v_)) return "0";
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    if (!s) throw std::runtime_error("mpfr_get_str failed");
    std::string digs(s);
    mpfr_free_str(s);
    std::string sign;
    if (!digs.empty() && digs[0] == '-') {
        sign = "-";
        digs.erase(0, 1);
    }
    // digs = d1 d2 ... dn with value 0.d1d2...dn * 10^e
    std::string out = sign + digs.substr(0, 1);
    if (digs.size() > 1) out += "." + digs.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

} // namespace lozenge
