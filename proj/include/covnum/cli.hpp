#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace covnum::cli {

/// Exit codes of run().
enum ExitCode : int { ok = 0, mismatch = 1, failure = 2 };

/// Runs one command line (without the program name), writing reports to
/// out and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Library names in a batch suite; throws UnknownName.
const std::vector<std::string>& suite(std::string_view name);
std::vector<std::string> suite_names();

}  // namespace covnum::cli
