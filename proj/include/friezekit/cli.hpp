#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace friezekit::cli {

/// Exit statuses of `run`.
enum ExitStatus : int {
  kOk = 0,
  kCheckFailed = 1,  ///< verify / glide-check found a defect
  kUsage = 2,
  kDomain = 3,       ///< KnitBlocked, ParseError, DomainError, IndexError
  kTheorem = 4,      ///< TheoremViolation
};

/// Environment variable consulted for the default search bound.
inline constexpr const char* kBoundEnv = "FRIEZEKIT_BOUND";

/// Runs one command. `args` excludes the program name. Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace friezekit::cli
