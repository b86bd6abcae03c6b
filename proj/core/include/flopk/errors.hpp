#pragma once

#include <stdexcept>
#include <string>

namespace flopk {

/// Bad arguments: partitions outside a box, out-of-range degrees, etc.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands built over different Grassmannians.
class BoxMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A Chern-character solve produced non-integer coordinates. Every genuine
/// K-class expands integrally, so this always means a malformed expression
/// or a bug upstream.
class NonIntegralExpansion : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A chamber operation was asked to act on a wall point (repeated entries).
class RegularityViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace flopk
