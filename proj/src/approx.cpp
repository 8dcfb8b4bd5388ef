#include "reccf/approx.hpp"

namespace reccf {

ApproxCertificate approximate_quotient(const PowerSum& alpha,
                                       const PowerSum& beta, const Rat& t) {
    if (t <= 0) {
        throw invalid_threshold_error("threshold must be positive, got " +
                                      to_string(t));
    }
    if (alpha.is_zero() || beta.is_zero()) {
        throw undefined_quotient_error(
            "quotient approximation requires nonzero operands");
    }

    const Term& lead = beta.leading();
    const Rat& c = lead.coeff;
    const Rat& b = lead.root;

    // alpha / (c*b^n) and delta = 1 - beta / (c*b^n); all roots of delta
    // are strictly below 1.
    PowerSum alpha_over = alpha.scaled(1 / c).with_scaled_roots(1 / b);
    PowerSum delta =
        PowerSum::constant(Rat(1)) - beta.scaled(1 / c).with_scaled_roots(1 / b);

    unsigned order = 0;
    PowerSum eta;
    if (delta.is_zero()) {
        eta = alpha_over;
    } else {
        Rat u = delta.ell().value();
        // least R with ell(alpha) * u^(R+1) < t
        Rat bound = alpha.ell().value() * u;
        while (!(bound < t)) {
            bound *= u;
            ++order;
        }
        PowerSum series = PowerSum::constant(Rat(1));
        PowerSum power = series;
        for (unsigned r = 1; r <= order; ++r) {
            power = power * delta;
            series = series + power;
        }
        eta = alpha_over * series;
    }

    PowerSum residual = alpha - eta * beta;
    Valuation residual_valuation = residual.ell();
    if (!(residual_valuation.value() < t)) {
        throw error("internal: residual valuation not below threshold");
    }
    return ApproxCertificate{std::move(eta), order,
                             std::move(residual_valuation), t};
}

}  // namespace reccf
