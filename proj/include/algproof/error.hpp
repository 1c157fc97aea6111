#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace algproof {

// Raised for malformed input, violated preconditions and translator failures.
// `code` is a stable machine-readable name (e.g. "ParseError", "CostGuard").
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace algproof
