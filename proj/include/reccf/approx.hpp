#pragma once

// Constructive quotient approximation: given nonzero power sums alpha, beta
// and a threshold t > 0, produce eta with ell(alpha - eta*beta) < t by a
// truncated geometric expansion of 1/beta around its dominant term.

#include "reccf/power_sum.hpp"

namespace reccf {

struct ApproxCertificate {
    PowerSum eta;
    unsigned truncation_order = 0;  // least order R satisfying the bound
    Valuation residual_valuation;   // exact ell(alpha - eta*beta)
    Rat threshold;                  // t

    bool operator==(const ApproxCertificate&) const = default;
};

// Writes beta = c*b^n*(1 - delta) with b the leading root, c its
// coefficient, and ell(delta) = u < 1; then
//   eta = (alpha / (c*b^n)) * sum_{r=0}^{R} delta^r
// with R minimal such that u^R < t / (u * ell(alpha)). The exact residual
// alpha - eta*beta equals alpha*delta^(R+1), so its valuation is below t;
// the certificate carries the recomputed valuation. A single-term beta
// short-circuits to the exact quotient (R = 0, residual 0).
//
// Throws undefined_quotient_error for a zero operand and
// invalid_threshold_error for t <= 0.
ApproxCertificate approximate_quotient(const PowerSum& alpha,
                                       const PowerSum& beta, const Rat& t);

}  // namespace reccf
