#pragma once

#include <stdexcept>
#include <string>

namespace graded {

enum class ErrorKind {
  InvalidInput,
  Budget,
  InternalInconsistency,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void invalid_input(const std::string& what) {
  throw Error(ErrorKind::InvalidInput, what);
}

[[noreturn]] inline void budget_exceeded(const std::string& what) {
  throw Error(ErrorKind::Budget, what);
}

[[noreturn]] inline void internal_inconsistency(const std::string& what) {
  throw Error(ErrorKind::InternalInconsistency, what);
}

}  // namespace graded
