#pragma once

#include <iosfwd>

namespace exotic {

/// Parses argv, runs one subcommand and returns the exit status
/// (0 success, 1 check failure, 2 usage error).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace exotic
