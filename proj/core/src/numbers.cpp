#include "lozenge/numbers.hpp"

#include <stdexcept>

namespace lozenge {

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
    Rat c = v;
    c.canonicalize();
    return c.get_str();
}

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rat pochhammer(const Rat& q, long n) {
    if (n < 0) throw std::invalid_argument("pochhammer: negative length");
    Rat acc(1), term(q);
    for (long t = 0; t < n; ++t) {
        acc *= term;
        term += 1;
    }
    return acc;
}

Int pochhammer_int(long q, long n) {
    if (n < 0) throw std::invalid_argument("pochhammer_int: negative length");
    Int acc(1);
    for (long t = 0; t < n; ++t) acc *= Int(q + t);
    return acc;
}

std::string to_string(const PiScaledRational& v) {
    std::string s = to_string(v.mantissa);
    if (v.pi_exp != 0) s += " * pi^" + std::to_string(v.pi_exp);
    return s;
}

} // namespace lozenge
