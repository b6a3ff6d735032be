#pragma once

#include <string>
#include <vector>

namespace qec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;  // payload (text or a single JSON document)
  std::string err;  // diagnostics and usage text
};

/// Runs one command. args[0] is the program name, args[1] the subcommand:
/// qec, star, minroot, condmin, bounds, paths, seq or verify.
CommandResult run(const std::vector<std::string>& args);

}  // namespace qec::cli
