#include "reccf/rational_cf.hpp"

#include "reccf/errors.hpp"

namespace reccf {

RationalCF cf_of_rational(const Rat& x) {
    std::vector<Int> quotients;
    Int num(x.get_num());
    Int den(x.get_den());  // > 0, coprime to num
    for (;;) {
        Int a, r;
        mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
                    den.get_mpz_t());
        quotients.push_back(std::move(a));
        if (r == 0) {
            break;
        }
        num = std::move(den);
        den = std::move(r);
    }
    return RationalCF{std::move(quotients), x};
}

ConvergentTable convergents(const RationalCF& cf) {
    ConvergentTable table;
    table.reserve(cf.quotients.size());
    Int p_prev(1), q_prev(0);  // virtual index -1
    Int p(0), q(1);
    bool first = true;
    for (const Int& a : cf.quotients) {
        if (first) {
            p = a;
            q = 1;
            first = false;
        } else {
            Int p_next = a * p + p_prev;
            Int q_next = a * q + q_prev;
            p_prev = std::move(p);
            q_prev = std::move(q);
            p = std::move(p_next);
            q = std::move(q_next);
        }
        table.push_back(Convergent{p, q});
    }
    return table;
}

std::size_t psi(const Rat& x) {
    return cf_of_rational(x).quotients.size();
}

Rat reconstruct(const RationalCF& cf) {
    if (cf.quotients.empty()) {
        throw error("cannot reconstruct an empty continued fraction");
    }
    Rat value(cf.quotients.back());
    for (std::size_t i = cf.quotients.size() - 1; i-- > 0;) {
        value = Rat(cf.quotients[i]) + 1 / value;
    }
    return value;
}

}  // namespace reccf
