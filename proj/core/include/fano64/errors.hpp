#pragma once

#include <stdexcept>
#include <string>

namespace fano64 {

/// Caller passed arguments that violate an operation's precondition.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The inputs are well-formed but the result falls outside the valid domain
/// (e.g. a projection that would leave a non-positive degree).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The input is valid but the requested classification is not implemented
/// for it (e.g. cones of lattice index above two).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A fan or polytope failed a structural check required by the operation.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fano64

namespace fano64 {

/// Malformed input document (e.g. a fan file).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fano64
