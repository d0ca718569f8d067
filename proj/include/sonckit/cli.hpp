#pragma once

#include <ostream>

namespace sonckit::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kInvariantViolation = 2,
  kCorpusMismatch = 3,
};

/// Entry point of the `sonckit` command line tool, with injectable streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sonckit::cli
