#include "reccf/expr.hpp"

#include <cctype>

namespace reccf {

namespace {

// grammar:
//   expr   := term (('+'|'-') term)*
//   term   := ['+'|'-'] (coeff | coeff '*' pow | pow)
//   pow    := base '^' 'n'
//   coeff  := rational
//   base   := rational, value > 0
//   rational := ['-'] (digits ['/' digits] | '(' rational ')')
class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    PowerSum run() {
        PowerSum result = parse_expr();
        skip_ws();
        if (pos_ != src_.size()) {
            fail("unexpected character", pos_);
        }
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& message, std::size_t at) {
        throw parse_error(message, at);
    }

    void skip_ws() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
    }

    bool at_end() {
        skip_ws();
        return pos_ == src_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Int parse_digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
        if (pos_ == start) {
            fail("expected a number", start);
        }
        return Int(std::string(src_.substr(start, pos_ - start)), 10);
    }

    Rat parse_rational(bool allow_sign) {
        skip_ws();
        bool negate = false;
        if (allow_sign && (peek() == '-' || peek() == '+')) {
            negate = (src_[pos_] == '-');
            ++pos_;
        }
        Rat value;
        if (consume('(')) {
            value = parse_rational(true);
            skip_ws();
            if (!consume(')')) {
                fail("expected ')'", pos_);
            }
        } else {
            Int num = parse_digits();
            Int den(1);
            skip_ws();
            if (pos_ < src_.size() && src_[pos_] == '/') {
                ++pos_;
                skip_ws();
                std::size_t den_at = pos_;
                den = parse_digits();
                if (den == 0) {
                    fail("zero denominator", den_at);
                }
            }
            value = rat_from_parts(num, den);
        }
        return negate ? Rat(-value) : value;
    }

    // The '^' and the exponent variable, after the base has been read.
    void expect_exponent() {
        if (!consume('^')) {
            fail("expected '^'", pos_);
        }
        skip_ws();
        if (pos_ >= src_.size() || src_[pos_] != 'n') {
            fail("expected exponent variable 'n'", pos_);
        }
        ++pos_;
    }

    PowerSum parse_term() {
        skip_ws();
        bool negate = false;
        if (peek() == '-' || peek() == '+') {
            negate = (src_[pos_] == '-');
            ++pos_;
        }
        skip_ws();
        std::size_t first_at = pos_;
        Rat first = parse_rational(false);
        Rat sign(negate ? -1 : 1);
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == '^') {
            // the rational was a base: [-] base^n
            if (first <= 0) {
                fail("base must be positive", first_at);
            }
            expect_exponent();
            return PowerSum::monomial(sign, first);
        }
        if (pos_ < src_.size() && src_[pos_] == '*') {
            ++pos_;
            skip_ws();
            std::size_t base_at = pos_;
            Rat base = parse_rational(false);
            if (base <= 0) {
                fail("base must be positive", base_at);
            }
            expect_exponent();
            return PowerSum::monomial(sign * first, base);
        }
        return PowerSum::constant(sign * first);
    }

    PowerSum parse_expr() {
        if (at_end()) {
            fail("expected an expression", pos_);
        }
        PowerSum acc = parse_term();
        while (peek() == '+' || peek() == '-') {
            bool subtract = (src_[pos_] == '-');
            ++pos_;
            PowerSum term = parse_term();
            acc = subtract ? acc - term : acc + term;
        }
        return acc;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

std::string rat_str(const Rat& x) {
    return to_string(x);
}

std::string pow_str(const Rat& root) {
    if (is_integer(root)) {
        return to_string(root) + "^n";
    }
    return "(" + rat_str(root) + ")^n";
}

}  // namespace

PowerSum parse_power_sum(std::string_view text) {
    return Parser(text).run();
}

std::string render(const PowerSum& ps) {
    if (ps.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const Term& term : ps.terms()) {
        bool negative = term.coeff < 0;
        Rat mag = negative ? Rat(-term.coeff) : term.coeff;
        std::string piece;
        if (term.root == 1) {
            piece = rat_str(mag);
        } else if (mag == 1) {
            piece = pow_str(term.root);
        } else {
            piece = rat_str(mag) + "*" + pow_str(term.root);
        }
        if (first) {
            out = (negative ? "-" : "") + piece;
            first = false;
        } else {
            out += (negative ? " - " : " + ") + piece;
        }
    }
    return out;
}

}  // namespace reccf
