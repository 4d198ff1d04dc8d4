#pragma once

#include <iosfwd>

namespace hunt::cli {

enum ExitCode : int {
    ok = 0,          // success, winning, invariant holds
    negative = 1,    // definitive negative: not winning, k insufficient
    input_error = 2,
    resource_cap = 3,  // inconclusive
};

// Entry point of the `hunt` tool. Results go to `out`, diagnostics to `err`;
// `play` reads volleys from `in`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hunt::cli
