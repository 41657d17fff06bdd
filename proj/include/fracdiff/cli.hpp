#pragma once

#include <iosfwd>

namespace fracdiff {

/// Command-line entry point. Exit codes: 0 success, 1 numerical failure
/// (series non-convergence, pivot breakdown), 2 invalid arguments.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace fracdiff
