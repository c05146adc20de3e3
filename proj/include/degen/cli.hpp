#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "degen/families.hpp"

namespace degen::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
};

/// Runs the command line (args excludes the program name). Output goes to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "symbolic", a rational literal, or "x+c" / "x-c".
Argument parse_argument(const std::string& text);
/// "symbolic", a rational literal, or "c*l".
LambdaMode parse_lambda(const std::string& text);

}  // namespace degen::cli
