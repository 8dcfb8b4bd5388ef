#pragma once

// Desk-scale experiment harness: continued-fraction length scans over n,
// the rational-approximation exponent probe, and the denominator-growth
// probe. Per-n computations are pure and may run on worker threads; records
// are always merged in ascending n before emission.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "reccf/power_sum.hpp"

namespace reccf {

struct ScanConfig {
    std::string command;  // "scan", "pourchet" or "cor3"
    std::string alpha;
    std::string beta;
    unsigned long n_from = 0;
    unsigned long n_to = 0;
};

struct ScanRecord {
    unsigned long n = 0;
    bool skipped = false;  // beta(n) == 0; carries no psi
    std::size_t psi = 0;
    std::size_t num_digits = 0;
    std::size_t den_digits = 0;
};

struct WindowStat {
    unsigned long n_lo = 0;
    unsigned long n_hi = 0;
    std::size_t count = 0;  // non-skipped records in the window
    std::size_t min_psi = 0;
    std::size_t max_psi = 0;
};

struct ScanReport {
    ScanConfig config;
    std::vector<ScanRecord> records;   // ascending n
    std::vector<WindowStat> windows;   // up to ten contiguous windows
};

// psi of the exact value alpha(n)/beta(n) for each n in [n_from, n_to];
// n with beta(n) == 0 are recorded as skipped. Requires beta != 0 and
// 1 <= n_from <= n_to.
ScanReport length_scan(const PowerSum& alpha, const PowerSum& beta,
                       unsigned long n_from, unsigned long n_to,
                       unsigned threads = 1);

// alpha = a^n, beta = b^n; requires coprime a, b > 1.
ScanReport pourchet_scan(const Int& a, const Int& b, unsigned long n_from,
                         unsigned long n_to, unsigned threads = 1);

// alpha = a^n - 1, beta = b^n - 1; requires multiplicatively independent
// a, b >= 2 (exponent search up to 64).
ScanReport cor3_scan(const Int& a, const Int& b, unsigned long n_from,
                     unsigned long n_to, unsigned threads = 1);

// True iff a^i == b^j has no solution with 1 <= i, j <= max_exponent.
bool multiplicatively_independent(const Int& a, const Int& b,
                                  unsigned max_exponent = 64);

struct ThueConfig {
    std::string alpha;
    std::string beta;
    unsigned long n_from = 0;
    unsigned long n_to = 0;
    Rat q0;               // enumerate convergents with q < q0^n
    double epsilon0 = 0;  // exponents above this are flagged in the summary
    std::string euclid_step;  // outcome of the divisibility pre-check
};

struct ThueConvergentRecord {
    std::size_t index = 0;  // r
    Int q;
    Rat abs_delta;  // exact |alpha(n)/beta(n) - p_r/q_r|
    bool exact = false;     // delta == 0 (final convergent)
    std::optional<double> exponent;  // -log|delta| / log q, only for q >= 2
};

struct ThueRecord {
    unsigned long n = 0;
    bool skipped = false;
    std::vector<ThueConvergentRecord> convergents;
    std::optional<double> max_exponent;
};

struct ThueSummary {
    std::optional<double> max_exponent;  // empirical exponent candidate
    std::size_t exceeding_epsilon0 = 0;
};

struct ThueReport {
    ThueConfig config;
    std::vector<ThueRecord> records;
    ThueSummary summary;
};

// Enumerates convergents of alpha(n)/beta(n) with denominator below q0^n
// and measures approximation exponents. Requires q0 > 1 and beta != 0.
ThueReport thue_probe(const PowerSum& alpha, const PowerSum& beta,
                      unsigned long n_from, unsigned long n_to, const Rat& q0,
                      double epsilon0 = 2.5, unsigned threads = 1);

struct DenomConfig {
    std::string zeta;
    unsigned long n_from = 0;
    unsigned long n_to = 0;
    Int clearing_denominator;  // D
};

struct DenomRecord {
    unsigned long n = 0;
    Int denominator;  // exact denominator of zeta(n)
    double ratio = 0;  // log(den) / (n log D); 1 by convention when D == 1
};

struct DenomReport {
    DenomConfig config;
    std::vector<DenomRecord> records;
    double min_ratio = 0;
};

// Exact denominators of zeta(n) against the clearing denominator D.
// Requires zeta != 0 and a nonempty range.
DenomReport denom_probe(const PowerSum& zeta, unsigned long n_from,
                        unsigned long n_to, unsigned threads = 1);

}  // namespace reccf
