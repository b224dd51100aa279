#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rnametric {

enum class ErrorKind {
  IndexOutOfRange,
  AdjacentContact,
  SelfLoop,
  DuplicateBond,
  InvalidLength,
  LengthMismatch,
  SyntaxError,
  UnbalancedBracket,
  UnknownCharacter,
  TooManyFamilies,
  DimensionMismatch,
  Overflow,
  TooLarge,
  Infeasible,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` identifies the violated rule;
/// `line()` is the 1-based source line for parse errors, 0 when not applicable.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), kind_(kind), line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

private:
  ErrorKind kind_;
  std::size_t line_;
};

}  // namespace rnametric
