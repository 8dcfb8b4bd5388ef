#include "reccf/euclid.hpp"

#include "reccf/approx.hpp"

namespace reccf {

DivisionOutcome try_divide(const PowerSum& alpha, const PowerSum& beta) {
    if (beta.is_zero()) {
        throw division_by_zero_error("division by the zero power sum");
    }
    if (!alpha.is_integer_rooted() || !beta.is_integer_rooted()) {
        throw domain_error("Euclid step requires integer roots");
    }
    if (alpha.is_zero()) {
        return DivisionOutcome::step(PowerSum(), PowerSum());
    }

    Rat t = beta.ell().value();
    ApproxCertificate cert = approximate_quotient(alpha, beta, t);
    PowerSum candidate = cert.eta.subsum_roots_at_least(Rat(1));
    for (const Term& term : candidate.terms()) {
        if (!is_integer(term.root)) {
            // roots are descending, so this is the largest offender
            return DivisionOutcome::refutation(term.root);
        }
    }

    PowerSum remainder = alpha - candidate * beta;
    if (!(remainder.ell().value() < t)) {
        throw error("internal: Euclid step verification failed");
    }
    return DivisionOutcome::step(std::move(candidate), std::move(remainder));
}

CfExpansion cf_expand(const PowerSum& alpha, const PowerSum& beta) {
    PowerSum num = alpha;
    PowerSum den = beta;
    SymbolicCF cf;
    for (std::size_t step = 0;; ++step) {
        DivisionOutcome outcome = try_divide(num, den);
        if (!outcome.has_quotient()) {
            return CfExpansion::failure(
                CfRefutation{step, outcome.offending_root()});
        }
        cf.quotients.push_back(outcome.quotient());
        if (outcome.remainder().is_zero()) {
            break;
        }
        // ell of the denominators strictly decreases through the positive
        // integers, so this terminates
        num = den;
        den = outcome.remainder();
    }
    return CfExpansion::success(absorb_constants(cf));
}

namespace {

bool cross_equal(const std::pair<PowerSum, PowerSum>& a,
                 const std::pair<PowerSum, PowerSum>& b) {
    return a.first * b.second == b.first * a.second;
}

}  // namespace

SymbolicCF absorb_constants(const SymbolicCF& cf) {
    std::pair<PowerSum, PowerSum> before = fold(cf);
    std::vector<PowerSum> q = cf.quotients;

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 1; i < q.size(); ++i) {
            if (q[i].is_zero()) {
                throw degenerate_expansion_error(
                    "zero partial quotient at index " + std::to_string(i));
            }
            if (!q[i].is_constant()) {
                continue;
            }
            const Rat c = q[i].constant_value();
            if (i + 1 == q.size()) {
                // trailing merge: [..., A, c] = [..., A + 1/c]
                q[i - 1] = q[i - 1] + PowerSum::constant(1 / c);
                q.pop_back();
            } else {
                // [A, c, B, t1, t2, ...]
                //   = [A + 1/c, m*B - c, t1/m, m*t2, t3/m, ...], m = -c^2
                const Rat m = -c * c;
                q[i - 1] = q[i - 1] + PowerSum::constant(1 / c);
                q[i + 1] = q[i + 1].scaled(m) - PowerSum::constant(c);
                for (std::size_t j = i + 2, k = 1; j < q.size(); ++j, ++k) {
                    q[j] = q[j].scaled(k % 2 == 1 ? 1 / m : m);
                }
                q.erase(q.begin() + static_cast<std::ptrdiff_t>(i));
            }
            changed = true;
            break;
        }
    }

    SymbolicCF out{std::move(q)};
    if (!cross_equal(before, fold(out))) {
        throw error("internal: constant absorption changed the folded ratio");
    }
    return out;
}

std::pair<PowerSum, PowerSum> fold(const SymbolicCF& cf) {
    if (cf.quotients.empty()) {
        throw error("cannot fold an empty continued fraction");
    }
    PowerSum num = cf.quotients.back();
    PowerSum den = PowerSum::constant(Rat(1));
    for (std::size_t i = cf.quotients.size() - 1; i-- > 0;) {
        PowerSum next_num = cf.quotients[i] * num + den;
        den = num;
        num = std::move(next_num);
    }
    return {std::move(num), std::move(den)};
}

}  // namespace reccf
