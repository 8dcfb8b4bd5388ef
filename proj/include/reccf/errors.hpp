#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reccf {

// Root of the library's exception hierarchy.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A power-sum root (or root scale factor) was not strictly positive.
struct invalid_root_error : error {
    using error::error;
};

// Approximation threshold t was not strictly positive, or a probe bound
// was out of range.
struct invalid_threshold_error : error {
    using error::error;
};

// Quotient approximation requested for a zero numerator or denominator.
struct undefined_quotient_error : error {
    using error::error;
};

struct division_by_zero_error : error {
    using error::error;
};

// Operand lies outside the integer-root subring where the operation is
// defined.
struct domain_error : error {
    using error::error;
};

// A continued fraction cannot be normalized (zero partial quotient where
// a reciprocal is required).
struct degenerate_expansion_error : error {
    using error::error;
};

// Scan range is empty or otherwise unusable.
struct invalid_range_error : error {
    using error::error;
};

// Expression text rejected; `position` is the 0-based character offset of
// the offending token.
struct parse_error : error {
    std::size_t position;

    parse_error(const std::string& message, std::size_t pos)
        : error(message + " (offset " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Command-line misuse distinct from mathematical domain errors.
struct usage_error : error {
    using error::error;
};

}  // namespace reccf
