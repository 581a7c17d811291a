#pragma once

#include <stdexcept>
#include <string>

namespace qrf {

// Matrix or tensor dimensions do not fit together.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A state or vector is not normalized within the accepted tolerance.
struct NormalizationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A caller violated a documented precondition (e.g. non-Hermitian input).
struct ContractError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A density matrix has an eigenvalue below the clamping window.
struct PositivityError : std::domain_error {
  using std::domain_error::domain_error;
};

// Inputs outside the mathematical domain of an operation (wrong dimension
// for a qubit-only formula, unsupported quantifier pair, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A Cayley table failed validation.
struct GroupError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Group averaging or reduction produced a (numerically) zero vector.
struct DegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A relative state is not in the image of the reduction map.
struct NotInImageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qrf
