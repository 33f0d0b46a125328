#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace treesigma::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kUsageError = 2,
  kVerificationFailure = 3,
};

/// Runs one command. `args` excludes the program name. Results go to `out`
/// (or the --out file), diagnostics to `err`; graph6 input is read from `in`
/// unless --in is given.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

/// Closest known flag to `flag` by edit distance, or empty if nothing is close.
std::string suggest_flag(const std::string& flag);

}  // namespace treesigma::cli
