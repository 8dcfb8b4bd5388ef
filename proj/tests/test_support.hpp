#pragma once

// Deterministic random generators shared by the unit and acceptance suites.

#include <random>
#include <string>
#include <vector>

#include "reccf/power_sum.hpp"

namespace reccf::testing {

using Rng = std::mt19937_64;

inline Int random_int(Rng& rng, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return Int(dist(rng));
}

// Uniform positive integer with 1..max_digits decimal digits.
inline Int random_big_int(Rng& rng, unsigned max_digits) {
    std::uniform_int_distribution<unsigned> digits_dist(1, max_digits);
    std::uniform_int_distribution<int> digit(0, 9);
    unsigned digits = digits_dist(rng);
    std::string text;
    text += static_cast<char>('1' + digit(rng) % 9);
    for (unsigned i = 1; i < digits; ++i) {
        text += static_cast<char>('0' + digit(rng));
    }
    return Int(text, 10);
}

// Nonzero rational with |numerator|, denominator <= height.
inline Rat random_coeff(Rng& rng, long height) {
    Int num = random_int(rng, 1, height);
    Int den = random_int(rng, 1, height);
    std::uniform_int_distribution<int> sign(0, 1);
    if (sign(rng) == 1) {
        num = -num;
    }
    return rat_from_parts(num, den);
}

// Positive rational root with numerator, denominator <= bound.
inline Rat random_root(Rng& rng, long bound) {
    return rat_from_parts(random_int(rng, 1, bound), random_int(rng, 1, bound));
}

struct PowerSumOptions {
    unsigned max_terms = 6;
    long root_bound = 50;
    long coeff_height = 1000000;
    bool integer_roots = false;
    bool allow_zero = true;
};

inline PowerSum random_power_sum(Rng& rng, const PowerSumOptions& opt = {}) {
    std::uniform_int_distribution<unsigned> count_dist(opt.allow_zero ? 0 : 1,
                                                       opt.max_terms);
    unsigned count = count_dist(rng);
    std::vector<Term> raw;
    raw.reserve(count);
    for (unsigned i = 0; i < count; ++i) {
        Rat root = opt.integer_roots ? Rat(random_int(rng, 1, opt.root_bound))
                                     : random_root(rng, opt.root_bound);
        raw.push_back(Term{root, random_coeff(rng, opt.coeff_height)});
    }
    PowerSum out = PowerSum::from_terms(raw);
    if (!opt.allow_zero && out.is_zero()) {
        return PowerSum::constant(Rat(1));
    }
    return out;
}

inline PowerSum random_nonzero_power_sum(Rng& rng,
                                         const PowerSumOptions& base = {}) {
    PowerSumOptions opt = base;
    opt.allow_zero = false;
    return random_power_sum(rng, opt);
}

inline Rat random_rational(Rng& rng, unsigned max_digits,
                           bool allow_negative = true) {
    Int num = random_big_int(rng, max_digits);
    Int den = random_big_int(rng, max_digits);
    if (allow_negative) {
        std::uniform_int_distribution<int> sign(0, 1);
        if (sign(rng) == 1) {
            num = -num;
        }
    }
    return rat_from_parts(num, den);
}

}  // namespace reccf::testing
