#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fbcs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args[0] is the program name). Diagnostics go to `err`, help text to
/// `out`. Returns 0 on success, 1 for domain/format/I/O failures and 2 for usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fbcs::cli
