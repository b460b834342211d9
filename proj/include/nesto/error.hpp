#pragma once

#include <stdexcept>
#include <string>

namespace nesto {

enum class ErrorKind {
  InvalidInput,
  UnsupportedSymbol,
  BudgetExceeded,
};

/// Library-wide exception. `kind()` distinguishes bad input from
/// computations that were refused or ran out of budget.
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

[[noreturn]] inline void unsupported_symbol(const std::string& what) {
  throw Error(ErrorKind::UnsupportedSymbol, what);
}

[[noreturn]] inline void budget_exceeded(const std::string& what) {
  throw Error(ErrorKind::BudgetExceeded, what);
}

}  // namespace nesto
