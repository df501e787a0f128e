#pragma once

#include <stdexcept>
#include <string>

namespace reltrace {

/// An argument lies outside the domain of an operation: a set that is not
/// open, a restriction to a non-subset, mismatched universes or arities.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Adjacent columns of a trace are not related by the state orders.
class ChainViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Adjacent columns of a trace that should be nondegenerate are equal.
class DegenerateTrace : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A partial operation (trace concatenation) is undefined on its arguments.
class CompositionUndefined : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An operation's stated precondition does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A spec file failed to parse or validate. The message carries the location.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string location, const std::string& what)
      : std::runtime_error(location.empty() ? what : location + ": " + what),
        location_(std::move(location)),
        detail_(what) {}

  const std::string& location() const noexcept { return location_; }
  /// The message without the location prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string location_;
  std::string detail_;
};

}  // namespace reltrace
