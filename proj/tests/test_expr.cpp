#include <doctest.h>

#include "reccf/expr.hpp"
#include "test_support.hpp"

using namespace reccf;
using reccf::testing::Rng;

namespace {

Rat rat(long num, long den = 1) {
    return rat_from_parts(Int(num), Int(den));
}

}  // namespace

TEST_CASE("parses the documented forms") {
    PowerSum a = parse_power_sum("3*4^n + 2^n");
    CHECK(a == PowerSum::from_terms({{rat(4), rat(3)}, {rat(2), rat(1)}}));

    PowerSum b = parse_power_sum("(1/2)*(3/2)^n - 5");
    CHECK(b == PowerSum::from_terms({{rat(3, 2), rat(1, 2)},
                                     {rat(1), rat(-5)}}));

    CHECK(parse_power_sum("2^n - 2^n").is_zero());
    CHECK(parse_power_sum("0").is_zero());
    CHECK(parse_power_sum("  3/2 ^ n ") ==
          PowerSum::monomial(rat(1), rat(3, 2)));
    CHECK(parse_power_sum("-2^n") == PowerSum::monomial(rat(-1), rat(2)));
    CHECK(parse_power_sum("-1/2*3^n") == PowerSum::monomial(rat(-1, 2), rat(3)));
    CHECK(parse_power_sum("1 + 2 + 3") == PowerSum::constant(rat(6)));
}

TEST_CASE("rejects bad input with positions") {
    CHECK_THROWS_AS(parse_power_sum(""), parse_error);
    CHECK_THROWS_AS(parse_power_sum("2^m"), parse_error);
    CHECK_THROWS_AS(parse_power_sum("2^"), parse_error);
    CHECK_THROWS_AS(parse_power_sum("4^^n"), parse_error);
    CHECK_THROWS_AS(parse_power_sum("2^n +"), parse_error);
    CHECK_THROWS_AS(parse_power_sum("3*"), parse_error);
    CHECK_THROWS_AS(parse_power_sum("3*4"), parse_error);
    CHECK_THROWS_AS(parse_power_sum("(1/2"), parse_error);
    CHECK_THROWS_AS(parse_power_sum("2^n 3^n"), parse_error);

    try {
        parse_power_sum("1/0");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.position == 2);
    }

    try {
        parse_power_sum("(-2)^n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.position == 0);
        CHECK(std::string(e.what()).find("base") != std::string::npos);
    }

    try {
        parse_power_sum("2^n + 0^n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.position == 6);
    }
}

TEST_CASE("renders canonical text") {
    CHECK(render(PowerSum()) == "0");
    CHECK(render(PowerSum::monomial(rat(1), rat(2))) == "2^n");
    CHECK(render(parse_power_sum("3*4^n+2^n")) == "3*4^n + 2^n");
    CHECK(render(parse_power_sum("(1/2)*(3/2)^n-5")) == "1/2*(3/2)^n - 5");
    CHECK(render(parse_power_sum("-2^n+1")) == "-2^n + 1");
}

TEST_CASE("parse/render round trip on randomized sums") {
    Rng rng(20240611);
    for (int i = 0; i < 300; ++i) {
        PowerSum value = testing::random_power_sum(
            rng, {.max_terms = 6, .root_bound = 40, .coeff_height = 100000});
        CHECK(parse_power_sum(render(value)) == value);
    }
}

TEST_CASE("fuzzed garbage never crashes") {
    Rng rng(20240612);
    const std::string alphabet = "0123456789+-*/^n() \t";
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<std::size_t> len(0, 24);
    int parsed = 0;
    for (int i = 0; i < 3000; ++i) {
        std::string text;
        std::size_t length = len(rng);
        for (std::size_t j = 0; j < length; ++j) {
            text += alphabet[pick(rng)];
        }
        try {
            parse_power_sum(text);
            ++parsed;
        } catch (const parse_error&) {
            // expected for most inputs
        }
    }
    CHECK(parsed > 0);  // some random strings are valid
}
