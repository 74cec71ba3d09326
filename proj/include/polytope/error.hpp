#ifndef POLYTOPE_ERROR_HPP
#define POLYTOPE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polytope {

enum class ErrorCode {
  DuplicateId,
  DanglingCover,
  NotGraded,
  NotBounded,
  UnknownId,
  NotComparable,
  SearchBudgetExceeded,
  NonPositiveExponent,
  MissingProvenance,
  ClosureBudgetExceeded,
  BudgetExceeded,
  InvalidPolytope,
  ParseError,
  MixedOperatorsWithoutParens,
  BadFormat,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Raised by the expression parser; `position` is a 0-based byte offset.
class ParseError : public Error {
public:
  ParseError(ErrorCode code, std::size_t position, const std::string& what)
      : Error(code, what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace polytope

#endif // POLYTOPE_ERROR_HPP
