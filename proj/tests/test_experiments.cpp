#include <doctest.h>

#include <sstream>

#include "reccf/experiments.hpp"
#include "reccf/expr.hpp"
#include "reccf/rational_cf.hpp"
#include "reccf/report_io.hpp"
#include "test_support.hpp"

using namespace reccf;

namespace {

Rat rat(long num, long den = 1) {
    return rat_from_parts(Int(num), Int(den));
}

}  // namespace

TEST_CASE("length scan records the documented value") {
    ScanReport report = length_scan(parse_power_sum("2^n - 1"),
                                    parse_power_sum("3^n - 1"), 2, 2);
    REQUIRE(report.records.size() == 1);
    CHECK(report.records[0].n == 2);
    CHECK_FALSE(report.records[0].skipped);
    CHECK(report.records[0].psi == 4);  // 3/8 -> [0, 2, 1, 2]
    CHECK(report.records[0].num_digits == 1);
    CHECK(report.records[0].den_digits == 1);
}

TEST_CASE("length scan skips vanishing denominators") {
    // 2^n - 2 vanishes at n = 1
    ScanReport report = length_scan(parse_power_sum("3^n"),
                                    parse_power_sum("2^n - 2"), 1, 4);
    REQUIRE(report.records.size() == 4);
    CHECK(report.records[0].skipped);
    CHECK_FALSE(report.records[1].skipped);
    for (const ScanRecord& rec : report.records) {
        if (!rec.skipped) {
            Rat value = parse_power_sum("3^n").eval(rec.n) /
                        parse_power_sum("2^n - 2").eval(rec.n);
            CHECK(rec.psi == psi(value));
        }
    }
}

TEST_CASE("scan pipeline consistency and identical quotients") {
    PowerSum alpha = parse_power_sum("2^n + 1");
    ScanReport same = length_scan(alpha, alpha, 1, 12);
    for (const ScanRecord& rec : same.records) {
        CHECK(rec.psi == 1);
    }

    ScanReport report = length_scan(parse_power_sum("2^n"),
                                    parse_power_sum("3^n"), 1, 30);
    for (const ScanRecord& rec : report.records) {
        Rat value = rat_pow(rat(2, 3), rec.n);
        CHECK(rec.psi == psi(value));
        CHECK(rec.num_digits == decimal_digits(Int(value.get_num())));
        CHECK(rec.den_digits == decimal_digits(Int(value.get_den())));
    }
}

TEST_CASE("scan rejects bad inputs") {
    PowerSum a = parse_power_sum("2^n");
    CHECK_THROWS_AS(length_scan(a, PowerSum(), 1, 5), division_by_zero_error);
    CHECK_THROWS_AS(length_scan(a, a, 0, 5), invalid_range_error);
    CHECK_THROWS_AS(length_scan(a, a, 7, 5), invalid_range_error);
}

TEST_CASE("presets validate their inputs") {
    CHECK_THROWS_AS(pourchet_scan(Int(4), Int(2), 1, 5), domain_error);
    CHECK_THROWS_AS(pourchet_scan(Int(1), Int(3), 1, 5), domain_error);
    CHECK_THROWS_AS(cor3_scan(Int(8), Int(2), 1, 5), domain_error);
    CHECK_THROWS_AS(cor3_scan(Int(1), Int(3), 1, 5), domain_error);

    ScanReport ok = pourchet_scan(Int(2), Int(3), 1, 5);
    CHECK(ok.config.command == "pourchet");
    ScanReport ok3 = cor3_scan(Int(2), Int(3), 1, 5);
    CHECK(ok3.config.command == "cor3");
}

TEST_CASE("multiplicative independence search") {
    CHECK_FALSE(multiplicatively_independent(Int(2), Int(8)));
    CHECK_FALSE(multiplicatively_independent(Int(4), Int(8)));
    CHECK_FALSE(multiplicatively_independent(Int(6), Int(36)));
    CHECK_FALSE(multiplicatively_independent(Int(5), Int(5)));
    CHECK(multiplicatively_independent(Int(2), Int(3)));
    CHECK(multiplicatively_independent(Int(6), Int(10)));
    CHECK(multiplicatively_independent(Int(2), Int(1)));
    CHECK_FALSE(multiplicatively_independent(Int(1), Int(1)));
}

TEST_CASE("cor3 reduction shifts only the integer part") {
    // (6^n - 1)/(2^n - 1) = 3^n + (3^n - 1)/(2^n - 1), so the lengths agree
    PowerSum a6 = parse_power_sum("6^n - 1");
    PowerSum a3 = parse_power_sum("3^n - 1");
    PowerSum b = parse_power_sum("2^n - 1");
    for (unsigned long n = 2; n <= 40; ++n) {
        long lhs = static_cast<long>(psi(a6.eval(n) / b.eval(n)));
        long rhs = static_cast<long>(psi(a3.eval(n) / b.eval(n)));
        CHECK(std::abs(lhs - rhs) <= 1);
    }
}

TEST_CASE("thue probe on the geometric pair") {
    ThueReport report = thue_probe(parse_power_sum("2^n"),
                                   parse_power_sum("3^n"), 1, 25, rat(3));
    // ell(alpha) < ell(beta), so the zero quotient is a valid Euclid step;
    // the interesting refutation shows up for the reciprocal pair
    CHECK(report.config.euclid_step == "exists: quotient 0");
    ThueReport flipped = thue_probe(parse_power_sum("3^n"),
                                    parse_power_sum("2^n"), 1, 5, rat(3));
    CHECK(flipped.config.euclid_step == "refuted: offending root 3/2");
    REQUIRE(report.records.size() == 25);
    for (const ThueRecord& rec : report.records) {
        CHECK_FALSE(rec.skipped);
        Rat bound = rat_pow(rat(3), rec.n);
        for (const ThueConvergentRecord& crec : rec.convergents) {
            CHECK(Rat(crec.q) < bound);
            if (crec.exact) {
                CHECK_FALSE(crec.exponent.has_value());
                CHECK(crec.abs_delta == 0);
            }
            if (crec.exponent) {
                REQUIRE(crec.q >= 2);
                // exponent >= 2 exactly: delta * q^2 <= 1
                CHECK(crec.abs_delta * Rat(crec.q) * Rat(crec.q) <= 1);
                CHECK(*crec.exponent >= 2.0 - 1e-9);
            }
        }
        // the final convergent (q = 3^n) is never enumerated
        for (const ThueConvergentRecord& crec : rec.convergents) {
            CHECK_FALSE(crec.exact);
        }
    }
    REQUIRE(report.summary.max_exponent.has_value());
    CHECK(*report.summary.max_exponent < 10.0);
}

TEST_CASE("thue probe enumerates the exact final convergent when allowed") {
    // x = 5/2 at n = 1 with a loose bound: the last convergent is exact
    ThueReport report = thue_probe(parse_power_sum("5^n"),
                                   parse_power_sum("2^n"), 1, 1, rat(100));
    REQUIRE(report.records.size() == 1);
    bool saw_exact = false;
    for (const ThueConvergentRecord& crec : report.records[0].convergents) {
        if (crec.exact) {
            saw_exact = true;
            CHECK_FALSE(crec.exponent.has_value());
        }
    }
    CHECK(saw_exact);
}

TEST_CASE("thue probe validates q0") {
    PowerSum a = parse_power_sum("2^n");
    PowerSum b = parse_power_sum("3^n");
    CHECK_THROWS_AS(thue_probe(a, b, 1, 5, rat(1)), invalid_threshold_error);
    CHECK_THROWS_AS(thue_probe(a, b, 1, 5, rat(1, 2)),
                    invalid_threshold_error);
}

TEST_CASE("denominator probe on the documented instances") {
    DenomReport half = denom_probe(parse_power_sum("(3/2)^n"), 1, 30);
    CHECK(half.config.clearing_denominator == 2);
    for (const DenomRecord& rec : half.records) {
        CHECK(rec.denominator == int_pow(Int(2), rec.n));
        CHECK(rec.ratio == doctest::Approx(1.0));
    }
    CHECK(half.min_ratio == doctest::Approx(1.0));

    DenomReport sixth = denom_probe(parse_power_sum("(1/2)^n + (1/3)^n"), 1, 30);
    CHECK(sixth.config.clearing_denominator == 6);
    for (const DenomRecord& rec : sixth.records) {
        CHECK(rec.denominator == int_pow(Int(6), rec.n));
    }

    DenomReport unit = denom_probe(parse_power_sum("5^n"), 1, 10);
    CHECK(unit.config.clearing_denominator == 1);
    for (const DenomRecord& rec : unit.records) {
        CHECK(rec.denominator == 1);
        CHECK(rec.ratio == 1.0);  // convention for D == 1
    }

    CHECK_THROWS_AS(denom_probe(PowerSum(), 1, 5), domain_error);
}

TEST_CASE("coefficient denominators can push the ratio above one") {
    // (1/2)*(3/2)^n has denominator 2^(n+1)
    DenomReport report = denom_probe(parse_power_sum("(1/2)*(3/2)^n"), 1, 10);
    for (const DenomRecord& rec : report.records) {
        CHECK(rec.denominator == int_pow(Int(2), rec.n + 1));
        CHECK(rec.ratio > 1.0);
    }
}

TEST_CASE("worker count does not change the records") {
    PowerSum alpha = parse_power_sum("2^n - 1");
    PowerSum beta = parse_power_sum("3^n - 1");
    ScanReport serial = length_scan(alpha, beta, 1, 40, 1);
    ScanReport parallel = length_scan(alpha, beta, 1, 40, 4);
    REQUIRE(serial.records.size() == parallel.records.size());
    for (std::size_t i = 0; i < serial.records.size(); ++i) {
        CHECK(serial.records[i].n == parallel.records[i].n);
        CHECK(serial.records[i].psi == parallel.records[i].psi);
    }

    std::ostringstream a, b;
    write_csv(serial, a);
    write_csv(parallel, b);
    CHECK(a.str() == b.str());
}

TEST_CASE("serialization is deterministic") {
    ScanReport report = length_scan(parse_power_sum("2^n"),
                                    parse_power_sum("3^n"), 1, 15);
    std::ostringstream csv1, csv2;
    write_csv(report, csv1);
    write_csv(report, csv2);
    CHECK(csv1.str() == csv2.str());
    CHECK(to_json(report).dump(2) == to_json(report).dump(2));

    ThueReport thue = thue_probe(parse_power_sum("2^n"),
                                 parse_power_sum("3^n"), 1, 10, rat(3));
    std::ostringstream t1, t2;
    write_csv(thue, t1);
    write_csv(thue, t2);
    CHECK(t1.str() == t2.str());
    CHECK(to_json(thue) == to_json(thue));

    DenomReport denom = denom_probe(parse_power_sum("(3/2)^n"), 1, 10);
    std::ostringstream d1, d2;
    write_csv(denom, d1);
    write_csv(denom, d2);
    CHECK(d1.str() == d2.str());
}

TEST_CASE("csv quoting") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_field("line\nbreak") == "\"line\nbreak\"");
}

TEST_CASE("window statistics partition the range") {
    ScanReport report = length_scan(parse_power_sum("2^n"),
                                    parse_power_sum("3^n"), 1, 100);
    REQUIRE(report.windows.size() == 10);
    CHECK(report.windows.front().n_lo == 1);
    CHECK(report.windows.back().n_hi == 100);
    unsigned long expected_lo = 1;
    for (const WindowStat& win : report.windows) {
        CHECK(win.n_lo == expected_lo);
        CHECK(win.count == win.n_hi - win.n_lo + 1);
        CHECK(win.min_psi <= win.max_psi);
        expected_lo = win.n_hi + 1;
    }

    ScanReport tiny = length_scan(parse_power_sum("2^n"),
                                  parse_power_sum("3^n"), 3, 5);
    CHECK(tiny.windows.size() == 3);
}
