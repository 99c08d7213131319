#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace erdos_straus::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,       // verification failed or the query found nothing
  kUsage = 2,
  kCounterexample = 3  // a prime with no decomposition; never expected
};

/// Parses argv and runs one subcommand. Results go to `out` (or to the
/// --out file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace erdos_straus::cli
