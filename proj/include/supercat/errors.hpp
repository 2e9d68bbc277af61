#pragma once

#include <stdexcept>
#include <string>

namespace supercat {

/// Input outside an operation's domain (negative index, malformed path, violated precondition).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Series or quotient whose constant term is not a unit of the coefficient ring.
class NotInvertibleError : public DomainError {
 public:
  explicit NotInvertibleError(const std::string& what) : DomainError(what) {}
};

/// An integer-valued operation whose exact value is not an integer.
class NonIntegralError : public DomainError {
 public:
  explicit NonIntegralError(const std::string& what) : DomainError(what) {}
};

}  // namespace supercat
