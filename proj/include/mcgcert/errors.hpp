#pragma once

#include <stdexcept>
#include <string>

namespace mcgcert {

// Every refusable condition carries a stable machine-readable code next to the
// human message, so callers (CLI, tests) can branch on the exact cause.
class McgError : public std::runtime_error {
public:
  McgError(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

inline McgError invalid_argument_error(const std::string& msg) {
  return McgError("invalid-argument", msg);
}
inline McgError no_completion_error(const std::string& msg) {
  return McgError("no-completion", msg);
}
inline McgError construction_failed_error(const std::string& msg) {
  return McgError("construction-failed", msg);
}
inline McgError branch_not_available_error(const std::string& msg) {
  return McgError("branch-not-available", msg);
}
inline McgError budget_exceeded_error(const std::string& msg) {
  return McgError("search-budget-exceeded", msg);
}

}  // namespace mcgcert
