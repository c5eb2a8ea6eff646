#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace garside::cli {

inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line (without the program name).  Output goes to `out`,
/// diagnostics to `err`; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace garside::cli
