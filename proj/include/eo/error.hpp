#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace eo {

enum class ErrorKind { Parse, Domain, Internal };

/// Exception carrying a stable machine-readable code ("NonPrime",
/// "DivisionByZero", ...) next to the human message. The CLI maps the
/// kind to its exit code: parse -> 2, domain -> 3, internal -> 4.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void parse_error(std::string code, const std::string& message) {
  throw Error(ErrorKind::Parse, std::move(code), message);
}

[[noreturn]] inline void domain_error(std::string code, const std::string& message) {
  throw Error(ErrorKind::Domain, std::move(code), message);
}

[[noreturn]] inline void internal_error(std::string code, const std::string& message) {
  throw Error(ErrorKind::Internal, std::move(code), message);
}

inline void require_domain(bool cond, const char* code, const std::string& message) {
  if (!cond) domain_error(code, message);
}

inline void require_internal(bool cond, const char* code, const std::string& message) {
  if (!cond) internal_error(code, message);
}

}  // namespace eo
