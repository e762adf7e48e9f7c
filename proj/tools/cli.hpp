#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twinreduce::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,
  kParseFailure = 2,
  kIoFailure = 3,
  kSizeGuard = 4,
  kOrderMismatch = 5,
};

/// Runs one command line (without the program name). `in` backs `--in -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace twinreduce::cli
