#pragma once

// Surface syntax for power sums, e.g. "3*4^n + 2^n - 1/2". Whitespace is
// insignificant. The only exponent variable is n; bases must be positive
// rationals; a bare rational denotes a root-1 term. A sign in front of a
// term binds to its coefficient, so "-2^n" means (-1)*2^n while "(-2)^n"
// is rejected as a nonpositive base.

#include <string>
#include <string_view>

#include "reccf/power_sum.hpp"

namespace reccf {

// Throws parse_error (with character offset) on bad input.
PowerSum parse_power_sum(std::string_view text);

// Canonical text form; parse_power_sum(render(x)) == x.
std::string render(const PowerSum& ps);

}  // namespace reccf
