#pragma once

#include <stdexcept>
#include <string>

namespace trif {

// Input outside an operation's mathematical domain (zero radius, unknown
// variable, degenerate parametrization, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A floating evaluation produced inf/nan.
class NonFiniteError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A configured term/pair budget was exceeded. Never a silent truncation.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace trif
