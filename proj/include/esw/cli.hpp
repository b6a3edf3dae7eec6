#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace esw {

/// Runs the command-line interface against explicit streams. Exit codes:
/// 0 success, 1 reproduction mismatch, 2 usage error, 3 precondition
/// failure (metric not Einstein). The ESW_TOL environment variable
/// overrides the default classification tolerance.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace esw
