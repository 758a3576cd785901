#pragma once

#include <stdexcept>
#include <string>

namespace schober {

// Domain-level failure with a stable machine-readable code ("not-a-loop",
// "missing-k0", ...). The CLI maps these to {"ok":false,"error":code}.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string code, std::string detail = "")
      : std::runtime_error(detail.empty() ? code : code + ": " + detail),
        code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

// Input that failed to parse (JSON files, word literals, CLI payloads).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(std::string detail)
      : std::runtime_error(std::move(detail)) {}
};

} // namespace schober
