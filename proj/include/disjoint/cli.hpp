#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace disjoint::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kToolVersion = "0.1.0";

/// Entry point for the `disjoint` tool: construct, verify, profile, scan, fit,
/// search, frontier. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace disjoint::cli
