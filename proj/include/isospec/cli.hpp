#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "isospec/error.hpp"

namespace isospec::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // verdict "no" (not isospectral, family check failed)
  kParse = 2,
  kNumeric = 3,
  kMismatch = 4,
  kCertificate = 5,
};

int exit_code_for(ErrorKind kind) noexcept;

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isospec::cli
