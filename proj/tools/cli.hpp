#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lgc::cli {

inline constexpr const char* kToolName = "lgc";
inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitValidation = 2,
  kExitBudget = 3,
  kExitMismatch = 4,
};

// Runs one command. args excludes the program name. The JSON report goes to
// --out (default `out`); diagnostics go to `err`.
int RunCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// 64-bit FNV-1a of a file's bytes, as 16 hex digits.
std::string FileDigest(const std::string& path);

}  // namespace lgc::cli
