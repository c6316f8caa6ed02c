#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bchcov::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Runs one command line (args excludes the program name). JSON or CSV goes
/// to `out`, diagnostics and progress to `err`.
/// Returns 0 on success, 1 when a computed check fails, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bchcov::cli
