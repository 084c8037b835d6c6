#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bigmcg::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2, kUnknownOnly = 3 };

// args excludes the program name.  Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Budget after applying the BIGMCG_MAX_BUDGET cap, if set.
std::size_t capped_budget(std::size_t requested);

}  // namespace bigmcg::cli
