#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tuning::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args exclude the program name) and returns the exit status.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tuning::cli
