#pragma once

namespace reccf {

// Entry point behind the reccf binary. Exit codes: 0 success, 1 usage
// error (including malformed expressions), 2 domain error.
int run_cli(int argc, const char* const* argv);

}  // namespace reccf
