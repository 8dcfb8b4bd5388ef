#pragma once

// Exact continued fractions of rational numbers: canonical expansion via
// floor/reciprocal, convergents, length, and reconstruction. Canonical
// form: a_0 any integer, a_i >= 1 for i >= 1, and the last quotient >= 2
// whenever there is more than one.

#include <cstddef>
#include <vector>

#include "reccf/rational.hpp"

namespace reccf {

struct RationalCF {
    std::vector<Int> quotients;  // canonical
    Rat source;

    bool operator==(const RationalCF&) const = default;
};

struct Convergent {
    Int p;
    Int q;  // > 0, lowest terms

    bool operator==(const Convergent&) const = default;
};

using ConvergentTable = std::vector<Convergent>;

RationalCF cf_of_rational(const Rat& x);

// p_{r+1} = a_{r+1} p_r + p_{r-1}, likewise for q; q_0 = 1 and the final
// convergent equals the source.
ConvergentTable convergents(const RationalCF& cf);

// Number of partial quotients of the canonical expansion.
std::size_t psi(const Rat& x);

Rat reconstruct(const RationalCF& cf);

}  // namespace reccf
