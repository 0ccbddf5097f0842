#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace compactum::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kFailed = 2, kBudget = 3 };

/// Runs one subcommand; diagnostics go to `err`, results to `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// (file name, SVG text) for every figure, in a fixed order.
std::vector<std::pair<std::string, std::string>> figure_set();

}  // namespace compactum::cli
