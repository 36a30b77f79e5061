// cli.hpp -- command-line surface: enumerate, count, factors, entropy, verify, sample

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace randfib {

/// Runs the tool on the given arguments (argv[0] excluded), writing reports
/// to `out` and diagnostics to `err`.
///
/// Exit codes: 0 success, 1 unexpected verification failure, 2 budget
/// refusal, 64 usage error, 70 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// main()-style wrapper over run_cli.
int run_cli(int argc, const char* const* argv);

}  // namespace randfib
