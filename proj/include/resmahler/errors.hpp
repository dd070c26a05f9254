#pragma once

#include <stdexcept>

namespace resmahler {

/// Malformed input text or an out-of-range parameter.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input that violates a mathematical precondition
/// (zero polynomial, support with fewer than two points, branch cut, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace resmahler
