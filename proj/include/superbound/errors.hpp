#pragma once

#include <stdexcept>
#include <string>

namespace superbound {

/// Operands disagree on dimensions.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A decomposition failed or produced non-finite output.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value broke one of its type invariants (e.g. a non-Hermitian density matrix).
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input is too close to zero to be measured.
class DegenerateInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument lies outside the supported range (component count, size caps).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An operation-specific precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace superbound
