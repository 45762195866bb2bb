#ifndef CIST_ERRORS_HPP
#define CIST_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cist {

/// Out-of-range labels, dimensions, or arguments outside an operation's domain.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A precondition of a mathematical statement does not hold, so the statement
/// says nothing about the input (as opposed to evaluating to false).
class Inapplicable : public DomainError {
public:
  using DomainError::DomainError;
};

/// An operation that requires a verified family was handed one that is not.
class Refusal : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Exhaustive check refused because the input is too large.
class CostGuard : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace cist

#endif // CIST_ERRORS_HPP
