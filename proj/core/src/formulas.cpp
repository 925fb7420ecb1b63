#include "lozenge/formulas.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace lozenge {

namespace {

// Rising factorial with the out-of-order convention: n <= 0 gives 1.
// q may be non-positive, producing an exact zero factor.
Int rising(long q, long n) {
    return n <= 0 ? Int(1) : pochhammer_int(q, n);
}

Int to_integer(const Rat& v, const char* what) {
    Rat c = v;
    c.canonicalize();
    if (c.get_den() != 1)
        throw std::logic_error(std::string(what) + " did not reduce to an integer");
    return c.get_num();
}

Int int_pow(unsigned long base, unsigned long e) {
    Int v;
    mpz_ui_pow_ui(v.get_mpz_t(), base, e);
    return v;
}

} // namespace

Int macmahon_box(int x, int y, int z) {
    if (x < 0 || y < 0 || z < 0) throw std::invalid_argument("negative box side");
    Rat v = 1;
    for (int i = 1; i <= x; ++i)
        for (int j = 1; j <= y; ++j)
            for (int k = 1; k <= z; ++k)
                v *= Rat(i + j + k - 1, i + j + k - 2);
    return to_integer(v, "box product");
}

Int spp(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative box side");
    Rat v = 1;
    for (int i = 1; i <= a; ++i) {
        v *= Rat(b + 2 * i - 1, 2 * i - 1);
        for (int j = i + 1; j <= a; ++j) v *= Rat(b + i + j - 1, i + j - 1);
    }
    return to_integer(v, "symmetric box product");
}

Int flashlight_formula(int x, int z, int k, int p) {
    if (x < 0 || z < 0 || k < 0 || p < 0) throw std::invalid_argument("negative parameter");
    Rat v = 1;
    for (int i = 1; i <= z - 1; ++i) v *= Rat(k + i, i);
    for (int i = 0; i <= p - 1; ++i)
        v *= Rat(rising(x + z + k + p - 2 * i, z - 1), rising(x + k + p - 2 * i, z - 1));
    for (int i = 1; i <= z - 1; ++i)
        for (int j = 2; j <= i; ++j) v *= Rat(2 * k + i + j - 1, i + j - 1);
    for (int j = 1; j <= k; ++j)
        v *= Rat(rising(x - k - p + 2 * j - 1, 2 * z + 4 * k - 4 * j + 3),
                 rising(2 * j - 1, 2 * z + 4 * k - 4 * j + 3));
    for (int j = 1; j <= z; ++j)
        v *= Rat(rising(x + k - p + j, 2 * z - 2 * j + 1),
                 rising(2 * k + j, 2 * z - 2 * j + 1));
    return to_integer(v, "flashlight product");
}

Int butterfly_sym_formula(int x, int y, int k, int p) {
    if (x < 0 || y < 0 || k < 0 || p < 0) throw std::invalid_argument("negative parameter");
    Rat v = 1;
    for (int i = 1; i <= y - k - 1; ++i) v *= Rat(k + i, i);
    for (int i = 0; i <= p - 1; ++i)
        v *= Rat(rising(x + y + p - 2 * i, y - k - 1), rising(x + k + p - 2 * i, y - k - 1));
    for (int i = 1; i <= y - k - 1; ++i)
        for (int j = 2; j <= i; ++j) v *= Rat(2 * k + i + j - 1, i + j - 1);
    for (int j = 1; j <= k; ++j)
        v *= Rat(rising(x - k - p + 2 * j - 1, 2 * y + 2 * k - 4 * j + 3),
                 rising(2 * j - 1, 2 * y + 2 * k - 4 * j + 3));
    for (int j = 1; j <= y - k; ++j)
        v *= Rat(rising(x + k - p + j, 2 * y - 2 * k - 2 * j + 1),
                 rising(2 * k + j, 2 * y - 2 * k - 2 * j + 1));
    return to_integer(v, "symmetric butterfly product");
}

Rat corner_correlation(int k, int p) {
    if (k < 0 || p < 0) throw std::invalid_argument("negative parameter");
    // 3-exponent (k-p)(k-p+1)/2 is a non-negative integer for all k, p.
    long d = k - p;
    unsigned long e3 = static_cast<unsigned long>(d * (d + 1) / 2);
    unsigned long e2 = static_cast<unsigned long>(2L * k * k + k + 1L * p * p);
    return Rat(int_pow(3, e3), int_pow(2, e2));
}

namespace {

// Exact value carrying a power of sqrt(pi): m * pi^(sp/2).
struct SqrtPiScaled {
    Rat m = 1;
    long sp = 0;
    SqrtPiScaled& operator*=(const SqrtPiScaled& o) {
        m *= o.m;
        sp += o.sp;
        return *this;
    }
    SqrtPiScaled& operator/=(const SqrtPiScaled& o) {
        m /= o.m;
        sp -= o.sp;
        return *this;
    }
};

// Gamma at n or n + 1/2 for integer n; n + 1/2 uses
// Gamma(n + 1/2) = (2n)! sqrt(pi) / (4^n n!), valid for n >= 0.
SqrtPiScaled gamma_int(long n) {
    if (n <= 0) throw std::invalid_argument("Gamma pole");
    return {Rat(factorial(n - 1)), 0};
}

SqrtPiScaled gamma_half(long n) {
    if (n < 0) throw std::invalid_argument("Gamma at negative half-integer");
    return {Rat(factorial(2 * n), int_pow(4, static_cast<unsigned long>(n)) * factorial(n)), 1};
}

} // namespace

PiScaledRational bulk_correlation(int k) {
    if (k < 0) throw std::invalid_argument("negative parameter");
    SqrtPiScaled v;
    v.sp -= 2 * k; // the 1/pi^k prefactor
    v *= gamma_int(2 * k + 1);
    v *= gamma_half(k);
    v /= gamma_int(k + 1);
    v /= gamma_half(2 * k);
    SqrtPiScaled bracket;
    for (long i = 1; i <= k; ++i) {
        bracket *= gamma_int(i);
        bracket *= gamma_int(2 * i - 1);
        bracket /= gamma_half(k + i - 1);
    }
    v *= bracket;
    v *= bracket;
    unsigned long kk = static_cast<unsigned long>(k) * static_cast<unsigned long>(k);
    v.m *= Rat(int_pow(3, 2 * kk), int_pow(2, 6 * kk + 2 * static_cast<unsigned long>(k)));
    if (v.sp % 2 != 0)
        throw std::logic_error("sqrt(pi) powers did not pair up");
    return PiScaledRational{v.m, v.sp / 2};
}

Real to_real(const PiScaledRational& v, mpfr_prec_t prec) {
    Real r(v.mantissa, prec);
    if (v.pi_exp != 0) r = r * pow_si(Real::pi(prec), v.pi_exp);
    return r;
}

Real bulk_asymptote(int k, int digits) {
    if (k <= 0) throw std::invalid_argument("asymptote needs k >= 1");
    if (digits < 15) throw std::invalid_argument("need at least 15 digits");
    mpfr_prec_t prec = Real::bits_for_digits(digits + 10);
    Real quarter(Rat(1, 4), prec);
    Real a = glaisher(digits + 10);
    Real v = exp(quarter);
    v = v / (a * a * a);
    v = v / pow(Real(2l, prec), Real(Rat(1, 6), prec));
    v = v / pow(Real(static_cast<long>(k), prec), quarter);
    unsigned long kk = static_cast<unsigned long>(k) * static_cast<unsigned long>(k);
    v = v * Real(Rat(int_pow(3, 2 * kk), int_pow(2, 8 * kk)), prec);
    return v;
}

namespace {

// zeta'(2) = -sum_{n>=2} ln(n)/n^2, summed directly to N-1 with the tail
// handled by Euler-Maclaurin. For f(x) = ln(x)/x^2:
//   integral_N^inf f = (ln N + 1)/N,
//   f^(m)(x) = x^(-2-m) (a_m + b_m ln x), a_0 = 0, b_0 = 1,
//   a_{m+1} = (-2-m) a_m + b_m, b_{m+1} = (-2-m) b_m.
Real zeta_prime_2(mpfr_prec_t prec, long n_terms, long em_order) {
    Real s(prec);
    for (long n = 2; n < n_terms; ++n) {
        Real ln_n = ln(Real(n, prec));
        s = s + ln_n / Real(n * n, prec);
    }
    Real N(n_terms, prec);
    Real lnN = ln(N);
    Real tail = (lnN + Real(1l, prec)) / N; // integral
    tail = tail + lnN / (N * N) / Real(2l, prec); // f(N)/2

    // Bernoulli numbers B_0..B_{2K} by the standard recurrence, exact.
    long top = 2 * em_order;
    std::vector<Rat> bern(static_cast<std::size_t>(top) + 1);
    bern[0] = 1;
    for (long m = 1; m <= top; ++m) {
        Rat acc = 0;
        for (long j = 0; j < m; ++j)
            acc += Rat(binomial(m + 1, j)) * bern[static_cast<std::size_t>(j)];
        bern[static_cast<std::size_t>(m)] = -acc / Rat(m + 1);
    }

    // Derivative coefficients a_m, b_m, exact integers:
    // f^(m)(x) = x^(-2-m) (a_m + b_m ln x).
    Int a = 0, b = 1; // order 0
    long m = 0;
    for (long kk = 1; kk <= em_order; ++kk) {
        while (m < 2 * kk - 1) {
            Int na = Int(-2 - m) * a + b;
            Int nb = Int(-2 - m) * b;
            a = na;
            b = nb;
            ++m;
        }
        Real deriv = (Real(a, prec) + Real(b, prec) * lnN) /
                     pow_si(N, 2 + m);
        Rat coef = bern[static_cast<std::size_t>(2 * kk)] / Rat(factorial(2 * kk));
        tail = tail - Real(coef, prec) * deriv;
    }
    return -(s + tail);
}

} // namespace

Real glaisher(int digits) {
    if (digits < 1) throw std::invalid_argument("digits must be positive");
    int work = digits + 10;
    mpfr_prec_t prec = Real::bits_for_digits(work);
    long n_terms = std::max(250l, 3l * work);
    long em_order = std::max(60l, static_cast<long>(work));

    Real zp2 = zeta_prime_2(prec, n_terms, em_order);
    Real pi = Real::pi(prec);
    Real zeta2 = pi * pi / Real(6l, prec);
    Real gamma = Real::euler_gamma(prec);
    Real ln2pi = ln(Real(2l, prec) * pi);
    Real one(1l, prec);
    Real zp_m1 = (one - gamma - ln2pi + zp2 / zeta2) / Real(12l, prec);
    Real lnA = Real(Rat(1, 12), prec) - zp_m1;
    return exp(lnA);
}

namespace {

Real ln_gamma(long q, mpfr_prec_t prec) {
    if (q <= 0) throw std::invalid_argument("lngamma needs a positive argument");
    return lngamma(Real(q, prec));
}

// ln of the rising factorial (q)_n for q >= 1; n <= 0 contributes 0.
Real ln_rising(long q, long n, mpfr_prec_t prec) {
    if (n <= 0) return Real(0l, prec);
    return ln_gamma(q + n, prec) - ln_gamma(q, prec);
}

} // namespace

Real ln_flashlight_formula(int x, int z, int k, int p, mpfr_prec_t prec) {
    if (x < 0 || z < 0 || k < 0 || p < 0) throw std::invalid_argument("negative parameter");
    if (x < k + p) throw std::invalid_argument("value is zero, no logarithm");
    Real v(0l, prec);
    // prod (k+i)/i over i < z  =  Gamma(k+z) Gamma(1) / (Gamma(k+1) Gamma(z))
    if (z >= 2)
        v = v + ln_gamma(k + z, prec) - ln_gamma(k + 1, prec) - ln_gamma(z, prec);
    for (int i = 0; i <= p - 1; ++i)
        v = v + ln_rising(x + z + k + p - 2 * i, z - 1, prec) -
            ln_rising(x + k + p - 2 * i, z - 1, prec);
    // prod_{i<z} prod_{j=2..i} (2k+i+j-1)/(i+j-1)
    //   = prod_{i<z} Gamma(2k+2i) Gamma(i+1) / (Gamma(2k+i+1) Gamma(2i))
    for (int i = 2; i <= z - 1; ++i)
        v = v + ln_gamma(2 * k + 2 * i, prec) + ln_gamma(i + 1, prec) -
            ln_gamma(2 * k + i + 1, prec) - ln_gamma(2 * i, prec);
    for (int j = 1; j <= k; ++j)
        v = v + ln_rising(x - k - p + 2 * j - 1, 2 * z + 4 * k - 4 * j + 3, prec) -
            ln_rising(2 * j - 1, 2 * z + 4 * k - 4 * j + 3, prec);
    for (int j = 1; j <= z; ++j)
        v = v + ln_rising(x + k - p + j, 2 * z - 2 * j + 1, prec) -
            ln_rising(2 * k + j, 2 * z - 2 * j + 1, prec);
    return v;
}

} // namespace lozenge
