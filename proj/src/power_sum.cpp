#include "reccf/power_sum.hpp"

#include <algorithm>
#include <utility>

namespace reccf {

PowerSum PowerSum::normalized(std::vector<Term> raw) {
    std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) {
        return a.root > b.root;
    });
    std::vector<Term> merged;
    merged.reserve(raw.size());
    for (auto& term : raw) {
        if (!merged.empty() && merged.back().root == term.root) {
            merged.back().coeff += term.coeff;
            if (merged.back().coeff == 0) {
                merged.pop_back();
            }
        } else if (term.coeff != 0) {
            merged.push_back(std::move(term));
        }
    }
    PowerSum out;
    out.terms_ = std::move(merged);
    return out;
}

PowerSum PowerSum::from_terms(std::vector<Term> raw) {
    for (const Term& term : raw) {
        if (term.root <= 0) {
            throw invalid_root_error("power-sum root must be positive, got " +
                                     to_string(term.root));
        }
    }
    return normalized(std::move(raw));
}

PowerSum PowerSum::constant(const Rat& c) {
    return normalized({Term{Rat(1), c}});
}

PowerSum PowerSum::monomial(const Rat& coeff, const Rat& root) {
    return from_terms({Term{root, coeff}});
}

const Term& PowerSum::leading() const {
    if (terms_.empty()) {
        throw error("zero power sum has no leading term");
    }
    return terms_.front();
}

Valuation PowerSum::ell() const {
    if (terms_.empty()) {
        return Valuation();
    }
    return Valuation(terms_.front().root);
}

Rat PowerSum::eval(unsigned long n) const {
    Rat acc(0);
    for (const Term& term : terms_) {
        acc += term.coeff * rat_pow(term.root, n);
    }
    return acc;
}

PowerSum PowerSum::scaled(const Rat& factor) const {
    std::vector<Term> raw;
    raw.reserve(terms_.size());
    for (const Term& term : terms_) {
        raw.push_back(Term{term.root, term.coeff * factor});
    }
    return normalized(std::move(raw));
}

PowerSum PowerSum::with_scaled_roots(const Rat& factor) const {
    if (factor <= 0) {
        throw invalid_root_error("root scale factor must be positive, got " +
                                 to_string(factor));
    }
    std::vector<Term> raw;
    raw.reserve(terms_.size());
    for (const Term& term : terms_) {
        raw.push_back(Term{term.root * factor, term.coeff});
    }
    return normalized(std::move(raw));
}

bool PowerSum::is_integer_rooted() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return is_integer(t.root); });
}

PowerSum PowerSum::integer_root_subsum() const {
    std::vector<Term> kept;
    for (const Term& term : terms_) {
        if (is_integer(term.root)) {
            kept.push_back(term);
        }
    }
    return normalized(std::move(kept));
}

PowerSum PowerSum::subsum_roots_at_least(const Rat& bound) const {
    std::vector<Term> kept;
    for (const Term& term : terms_) {
        if (term.root >= bound) {
            kept.push_back(term);
        }
    }
    return normalized(std::move(kept));
}

Int PowerSum::min_clearing_denominator() const {
    Int d(1);
    for (const Term& term : terms_) {
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(),
                mpq_denref(term.root.get_mpq_t()));
    }
    return d;
}

PowerSum PowerSum::operator-() const {
    return scaled(Rat(-1));
}

PowerSum operator+(const PowerSum& a, const PowerSum& b) {
    std::vector<Term> raw;
    raw.reserve(a.terms_.size() + b.terms_.size());
    raw.insert(raw.end(), a.terms_.begin(), a.terms_.end());
    raw.insert(raw.end(), b.terms_.begin(), b.terms_.end());
    return PowerSum::normalized(std::move(raw));
}

PowerSum operator-(const PowerSum& a, const PowerSum& b) {
    return a + (-b);
}

PowerSum operator*(const PowerSum& a, const PowerSum& b) {
    std::vector<Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const Term& ta : a.terms_) {
        for (const Term& tb : b.terms_) {
            raw.push_back(Term{ta.root * tb.root, ta.coeff * tb.coeff});
        }
    }
    return PowerSum::normalized(std::move(raw));
}

PowerSum pow(const PowerSum& base, unsigned exp) {
    PowerSum acc = PowerSum::constant(Rat(1));
    for (unsigned i = 0; i < exp; ++i) {
        acc = acc * base;
    }
    return acc;
}

}  // namespace reccf
