#pragma once

// Exact arithmetic in the ring of power sums n |-> sum_i c_i * a_i^n with
// rational coefficients c_i and positive rational roots a_i. Terms are kept
// normalized: roots strictly descending, pairwise distinct, coefficients
// nonzero. The zero sum is the empty term list.

#include <vector>

#include "reccf/errors.hpp"
#include "reccf/rational.hpp"

namespace reccf {

struct Term {
    Rat root;   // > 0, lowest terms
    Rat coeff;  // != 0 in normalized values

    bool operator==(const Term&) const = default;
};

// The dominant-growth valuation of a power sum: the largest root, with the
// convention that the zero sum has valuation 0. Multiplicative on products,
// subadditive on sums.
class Valuation {
public:
    Valuation() : value_(0) {}

    explicit Valuation(Rat v) : value_(std::move(v)) {
        if (value_ < 0) {
            throw error("valuation cannot be negative");
        }
    }

    const Rat& value() const { return value_; }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.value_ == b.value_;
    }
    friend bool operator<(const Valuation& a, const Valuation& b) {
        return a.value_ < b.value_;
    }
    friend bool operator<=(const Valuation& a, const Valuation& b) {
        return a.value_ <= b.value_;
    }

private:
    Rat value_;
};

class PowerSum {
public:
    // The zero power sum.
    PowerSum() = default;

    // Normalizes an arbitrary term list: merges duplicate roots, drops zero
    // coefficients, orders roots descending. Throws invalid_root_error if
    // any root is <= 0.
    static PowerSum from_terms(std::vector<Term> raw);

    // c * 1^n (the empty sum when c == 0).
    static PowerSum constant(const Rat& c);

    // coeff * root^n.
    static PowerSum monomial(const Rat& coeff, const Rat& root);

    bool is_zero() const { return terms_.empty(); }

    // Nonzero with 1 as the only root.
    bool is_constant() const {
        return terms_.size() == 1 && terms_.front().root == 1;
    }

    // Requires is_constant().
    const Rat& constant_value() const { return terms_.front().coeff; }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Dominant term; requires a nonzero sum.
    const Term& leading() const;

    Valuation ell() const;

    // Exact value at integer argument n.
    Rat eval(unsigned long n) const;

    // Coefficients multiplied by `factor` (zero factor yields the zero sum).
    PowerSum scaled(const Rat& factor) const;

    // Roots multiplied by `factor` > 0; pointwise this is
    // alpha(n) * factor^n. Throws invalid_root_error for factor <= 0.
    PowerSum with_scaled_roots(const Rat& factor) const;

    // True iff every root is a positive integer (vacuously for zero).
    bool is_integer_rooted() const;

    // The terms whose roots are positive integers.
    PowerSum integer_root_subsum() const;

    // The terms whose roots are >= bound.
    PowerSum subsum_roots_at_least(const Rat& bound) const;

    // Least positive D such that D^n * this(n) has integer roots: the lcm
    // of the root denominators.
    Int min_clearing_denominator() const;

    PowerSum operator-() const;

    friend PowerSum operator+(const PowerSum& a, const PowerSum& b);
    friend PowerSum operator-(const PowerSum& a, const PowerSum& b);
    friend PowerSum operator*(const PowerSum& a, const PowerSum& b);

    bool operator==(const PowerSum&) const = default;

private:
    // Terms already known to have positive roots.
    static PowerSum normalized(std::vector<Term> raw);

    std::vector<Term> terms_;  // descending by root
};

PowerSum pow(const PowerSum& base, unsigned exp);

}  // namespace reccf
