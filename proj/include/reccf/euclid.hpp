#pragma once

// Division with remainder in the integer-root subring, and finite symbolic
// continued fractions built from it. A Euclid step for alpha : beta is a
// quotient zeta with integer roots and ell(alpha - zeta*beta) < ell(beta);
// its existence is decidable: build the approximate quotient eta at
// threshold ell(beta) and keep the subsum of eta over roots >= 1. The step
// exists iff every such root is an integer; otherwise any non-integral
// root >= 1 certifies non-existence.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "reccf/power_sum.hpp"

namespace reccf {

// Either a quotient/remainder pair or a refutation naming a root >= 1 of
// the approximate quotient that is not a positive integer.
class DivisionOutcome {
public:
    static DivisionOutcome step(PowerSum quotient, PowerSum remainder) {
        DivisionOutcome out;
        out.quotient_ = std::move(quotient);
        out.remainder_ = std::move(remainder);
        return out;
    }

    static DivisionOutcome refutation(Rat offending_root) {
        DivisionOutcome out;
        out.offending_root_ = std::move(offending_root);
        return out;
    }

    bool has_quotient() const { return quotient_.has_value(); }
    const PowerSum& quotient() const { return *quotient_; }
    const PowerSum& remainder() const { return *remainder_; }
    const Rat& offending_root() const { return *offending_root_; }

private:
    DivisionOutcome() = default;

    std::optional<PowerSum> quotient_;
    std::optional<PowerSum> remainder_;
    std::optional<Rat> offending_root_;
};

// Finite continued fraction [zeta_0, ..., zeta_k] over the integer-root
// subring. Normalized expansions have no constant partial quotient at
// index >= 1.
struct SymbolicCF {
    std::vector<PowerSum> quotients;

    bool operator==(const SymbolicCF&) const = default;
};

struct CfRefutation {
    std::size_t step = 0;
    Rat offending_root;
};

class CfExpansion {
public:
    static CfExpansion success(SymbolicCF cf) {
        CfExpansion out;
        out.cf_ = std::move(cf);
        return out;
    }

    static CfExpansion failure(CfRefutation refutation) {
        CfExpansion out;
        out.refutation_ = std::move(refutation);
        return out;
    }

    bool ok() const { return cf_.has_value(); }
    const SymbolicCF& cf() const { return *cf_; }
    const CfRefutation& refutation() const { return *refutation_; }

private:
    CfExpansion() = default;

    std::optional<SymbolicCF> cf_;
    std::optional<CfRefutation> refutation_;
};

// Decides the Euclid step for alpha : beta. Requires both operands to have
// integer roots (domain_error otherwise) and beta != 0
// (division_by_zero_error). The returned remainder is exact.
DivisionOutcome try_divide(const PowerSum& alpha, const PowerSum& beta);

// Iterated Euclid steps until a zero remainder, then constant absorption.
// Reports the step index and offending root if any step refutes.
CfExpansion cf_expand(const PowerSum& alpha, const PowerSum& beta);

// Removes constant partial quotients at index >= 1 using
//   [A, c, B] = [A + 1/c, -c*(c*B + 1)]
// extended over a longer tail by the alternating rescale
//   m*[x0, x1, x2, x3, ...] = [m*x0, x1/m, m*x2, x3/m, ...],
// and merges a trailing constant via [..., A, c] = [..., A + 1/c].
// Re-runs to a fixed point; the folded ratio is verified unchanged.
// Throws degenerate_expansion_error on a zero quotient at index >= 1.
SymbolicCF absorb_constants(const SymbolicCF& cf);

// Formal fraction N/D by back-substitution. When cf came from
// cf_expand(alpha, beta), alpha*D == beta*N exactly.
std::pair<PowerSum, PowerSum> fold(const SymbolicCF& cf);

}  // namespace reccf
