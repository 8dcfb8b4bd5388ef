#include "reccf/experiments.hpp"

#include <algorithm>
#include <thread>

#include "reccf/euclid.hpp"
#include "reccf/expr.hpp"
#include "reccf/rational_cf.hpp"

namespace reccf {

namespace {

void check_range(unsigned long n_from, unsigned long n_to) {
    if (n_from < 1 || n_from > n_to) {
        throw invalid_range_error("empty range: n_from=" +
                                  std::to_string(n_from) +
                                  " n_to=" + std::to_string(n_to));
    }
}

// Applies fn(index, n) for n in [n_from, n_to], striding indices across
// workers. fn must be pure per index.
template <typename Fn>
void for_each_n(unsigned long n_from, unsigned long n_to, unsigned threads,
                Fn&& fn) {
    const unsigned long count = n_to - n_from + 1;
    unsigned workers = std::max(1u, threads);
    if (static_cast<unsigned long>(workers) > count) {
        workers = static_cast<unsigned>(count);
    }
    if (workers == 1) {
        for (unsigned long i = 0; i < count; ++i) {
            fn(i, n_from + i);
        }
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (unsigned long i = w; i < count; i += workers) {
                fn(i, n_from + i);
            }
        });
    }
    for (auto& worker : pool) {
        worker.join();
    }
}

// Up to ten contiguous windows covering [n_from, n_to].
std::vector<WindowStat> window_stats(const std::vector<ScanRecord>& records,
                                     unsigned long n_from,
                                     unsigned long n_to) {
    const unsigned long count = n_to - n_from + 1;
    const unsigned long parts = std::min<unsigned long>(10, count);
    std::vector<WindowStat> windows;
    windows.reserve(parts);
    for (unsigned long j = 0; j < parts; ++j) {
        unsigned long lo = n_from + j * count / parts;
        unsigned long hi = n_from + (j + 1) * count / parts - 1;
        WindowStat stat{lo, hi, 0, 0, 0};
        for (unsigned long n = lo; n <= hi; ++n) {
            const ScanRecord& rec = records[n - n_from];
            if (rec.skipped) {
                continue;
            }
            if (stat.count == 0) {
                stat.min_psi = stat.max_psi = rec.psi;
            } else {
                stat.min_psi = std::min(stat.min_psi, rec.psi);
                stat.max_psi = std::max(stat.max_psi, rec.psi);
            }
            ++stat.count;
        }
        windows.push_back(stat);
    }
    return windows;
}

}  // namespace

ScanReport length_scan(const PowerSum& alpha, const PowerSum& beta,
                       unsigned long n_from, unsigned long n_to,
                       unsigned threads) {
    if (beta.is_zero()) {
        throw division_by_zero_error("beta must be nonzero");
    }
    check_range(n_from, n_to);

    ScanReport report;
    report.config = ScanConfig{"scan", render(alpha), render(beta), n_from,
                               n_to};
    report.records.resize(n_to - n_from + 1);
    for_each_n(n_from, n_to, threads, [&](unsigned long i, unsigned long n) {
        ScanRecord& rec = report.records[i];
        rec.n = n;
        Rat denominator = beta.eval(n);
        if (denominator == 0) {
            rec.skipped = true;
            return;
        }
        Rat value = alpha.eval(n) / denominator;
        rec.psi = psi(value);
        rec.num_digits = decimal_digits(Int(value.get_num()));
        rec.den_digits = decimal_digits(Int(value.get_den()));
    });
    report.windows = window_stats(report.records, n_from, n_to);
    return report;
}

ScanReport pourchet_scan(const Int& a, const Int& b, unsigned long n_from,
                         unsigned long n_to, unsigned threads) {
    if (a <= 1 || b <= 1) {
        throw domain_error("pourchet requires a, b > 1");
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g != 1) {
        throw domain_error("pourchet requires coprime a, b");
    }
    ScanReport report = length_scan(PowerSum::monomial(Rat(1), Rat(a)),
                                    PowerSum::monomial(Rat(1), Rat(b)), n_from,
                                    n_to, threads);
    report.config.command = "pourchet";
    return report;
}

ScanReport cor3_scan(const Int& a, const Int& b, unsigned long n_from,
                     unsigned long n_to, unsigned threads) {
    if (a < 2 || b < 2) {
        throw domain_error("cor3 requires a, b >= 2");
    }
    if (!multiplicatively_independent(a, b)) {
        throw domain_error("cor3 requires multiplicatively independent a, b");
    }
    PowerSum one = PowerSum::constant(Rat(1));
    ScanReport report =
        length_scan(PowerSum::monomial(Rat(1), Rat(a)) - one,
                    PowerSum::monomial(Rat(1), Rat(b)) - one, n_from, n_to,
                    threads);
    report.config.command = "cor3";
    return report;
}

bool multiplicatively_independent(const Int& a, const Int& b,
                                  unsigned max_exponent) {
    if (a == 1 || b == 1) {
        return !(a == 1 && b == 1);
    }
    Int pa = a;
    for (unsigned i = 1; i <= max_exponent; ++i) {
        Int pb = b;
        for (unsigned j = 1; j <= max_exponent; ++j) {
            if (pa == pb) {
                return false;
            }
            if (pb > pa) {
                break;
            }
            pb *= b;
        }
        pa *= a;
    }
    return true;
}

ThueReport thue_probe(const PowerSum& alpha, const PowerSum& beta,
                      unsigned long n_from, unsigned long n_to, const Rat& q0,
                      double epsilon0, unsigned threads) {
    if (!(q0 > 1)) {
        throw invalid_threshold_error("q0 must be > 1, got " + to_string(q0));
    }
    if (beta.is_zero()) {
        throw division_by_zero_error("beta must be nonzero");
    }
    check_range(n_from, n_to);

    ThueReport report;
    report.config =
        ThueConfig{render(alpha), render(beta), n_from, n_to, q0, epsilon0, ""};
    // record whether a Euclid step exists (the probe is of interest when it
    // does not); inputs outside the integer-root subring go unchecked
    if (alpha.is_integer_rooted() && beta.is_integer_rooted()) {
        DivisionOutcome outcome = try_divide(alpha, beta);
        if (outcome.has_quotient()) {
            report.config.euclid_step =
                "exists: quotient " + render(outcome.quotient());
        } else {
            report.config.euclid_step =
                "refuted: offending root " + to_string(outcome.offending_root());
        }
    } else {
        report.config.euclid_step = "unchecked: roots outside Z";
    }

    report.records.resize(n_to - n_from + 1);
    for_each_n(n_from, n_to, threads, [&](unsigned long i, unsigned long n) {
        ThueRecord& rec = report.records[i];
        rec.n = n;
        Rat denominator = beta.eval(n);
        if (denominator == 0) {
            rec.skipped = true;
            return;
        }
        Rat value = alpha.eval(n) / denominator;
        Rat bound = rat_pow(q0, n);
        ConvergentTable table = convergents(cf_of_rational(value));
        for (std::size_t r = 0; r < table.size(); ++r) {
            const Convergent& conv = table[r];
            if (Rat(conv.q) >= bound) {
                break;  // q_r is nondecreasing
            }
            ThueConvergentRecord crec;
            crec.index = r;
            crec.q = conv.q;
            crec.abs_delta = abs(value - rat_from_parts(conv.p, conv.q));
            crec.exact = (crec.abs_delta == 0);
            if (!crec.exact && conv.q >= 2) {
                double e = -log_abs(crec.abs_delta) / log_of(conv.q);
                crec.exponent = e;
                if (!rec.max_exponent || e > *rec.max_exponent) {
                    rec.max_exponent = e;
                }
            }
            rec.convergents.push_back(std::move(crec));
        }
    });

    for (const ThueRecord& rec : report.records) {
        for (const ThueConvergentRecord& crec : rec.convergents) {
            if (crec.exponent && *crec.exponent > epsilon0) {
                ++report.summary.exceeding_epsilon0;
            }
        }
        if (rec.max_exponent &&
            (!report.summary.max_exponent ||
             *rec.max_exponent > *report.summary.max_exponent)) {
            report.summary.max_exponent = rec.max_exponent;
        }
    }
    return report;
}

DenomReport denom_probe(const PowerSum& zeta, unsigned long n_from,
                        unsigned long n_to, unsigned threads) {
    if (zeta.is_zero()) {
        throw domain_error("zeta must be nonzero");
    }
    check_range(n_from, n_to);

    DenomReport report;
    report.config = DenomConfig{render(zeta), n_from, n_to,
                                zeta.min_clearing_denominator()};
    const Int& d = report.config.clearing_denominator;
    report.records.resize(n_to - n_from + 1);
    for_each_n(n_from, n_to, threads, [&](unsigned long i, unsigned long n) {
        DenomRecord& rec = report.records[i];
        rec.n = n;
        rec.denominator = Int(zeta.eval(n).get_den());
        if (d == 1) {
            rec.ratio = 1.0;
        } else {
            rec.ratio = log_of(rec.denominator) /
                        (static_cast<double>(n) * log_of(d));
        }
    });
    report.min_ratio = report.records.front().ratio;
    for (const DenomRecord& rec : report.records) {
        report.min_ratio = std::min(report.min_ratio, rec.ratio);
    }
    return report;
}

}  // namespace reccf
