#pragma once

// Command-line front end: build | indices | solve | verify | report.

#include <iosfwd>
#include <string>
#include <vector>

namespace superein {

enum ExitCode : int { ExitOk = 0, ExitVerificationFailed = 1, ExitInvalidInput = 2 };

/// Default tolerances; --tol may only lower the one a subcommand checks.
struct DefaultTolerances
{
  static constexpr double jacobi = 1e-12;
  static constexpr double table = 1e-9;
  static constexpr double residual = 1e-10;
  static constexpr double ricci = 1e-8;
};

/// Runs the CLI on argv-style arguments (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace superein
