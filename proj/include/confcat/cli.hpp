#pragma once

#include <string>
#include <vector>

namespace confcat::cli {

struct Outcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Exit codes: 0 success, 1 domain error (bad n, k, range...), 2 usage
// error, 3 internal inconsistency, 4 a verification suite failed.
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kInconsistency = 3;
inline constexpr int kVerifyFailed = 4;

/// Runs one command; args exclude the program name.
Outcome run(const std::vector<std::string>& args);

}  // namespace confcat::cli
