#pragma once

#include <stdexcept>
#include <string>

namespace sheafwc {

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An internal consistency check failed: a result that must be a polynomial
/// was not, a sign came out the wrong way, and so on. Never recoverable.
class ConventionError : public std::logic_error {
 public:
  explicit ConventionError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace sheafwc
