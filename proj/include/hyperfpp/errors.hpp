#pragma once

#include <stdexcept>
#include <string>

namespace hyperfpp {

/// Malformed input: bad permutation, bad flag value, overlapping endpoint sets.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input outside the mathematical domain of an operation (n < 3 for middle edges, x > 700, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The request is well-formed but exceeds a configured size limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyperfpp
