#include "reccf/rational.hpp"

#include <cmath>
#include <cstdio>

#include "reccf/errors.hpp"

namespace reccf {

Rat rat_from_parts(const Int& num, const Int& den) {
    if (den == 0) {
        throw division_by_zero_error("rational with zero denominator");
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat_pow(const Rat& base, unsigned long exp) {
    Rat out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
    return out;
}

Int int_pow(const Int& base, unsigned long exp) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Int floor_of(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), mpq_numref(x.get_mpq_t()),
               mpq_denref(x.get_mpq_t()));
    return q;
}

bool is_integer(const Rat& x) {
    return mpz_cmp_ui(mpq_denref(x.get_mpq_t()), 1) == 0;
}

std::string to_string(const Rat& x) {
    return x.get_str();
}

std::string to_string(const Int& x) {
    return x.get_str();
}

std::size_t decimal_digits(const Int& x) {
    if (x == 0) {
        return 1;
    }
    std::string s = x.get_str();
    return s.size() - (s[0] == '-' ? 1 : 0);
}

double log_of(const Int& x) {
    signed long exp = 0;
    double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

double log_abs(const Rat& x) {
    Int num(mpq_numref(x.get_mpq_t()));
    Int den(mpq_denref(x.get_mpq_t()));
    if (num < 0) {
        num = -num;
    }
    return log_of(num) - log_of(den);
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

}  // namespace reccf
