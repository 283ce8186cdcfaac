#pragma once

#include <iosfwd>

namespace amoeba::cli {

/// Runs one command line. Exit codes: 0 decided or completed, 2 undecided
/// within budget, 1 bad input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace amoeba::cli
