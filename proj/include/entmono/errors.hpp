#pragma once

#include <stdexcept>
#include <string>

namespace entmono {

/// Requested matrix dimension exceeds the configured cap.
struct SizeError : std::length_error {
  using std::length_error::length_error;
};

/// Subsystem dimensions inconsistent with the matrix they annotate.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A precondition on a matrix argument (Hermiticity, finiteness) was violated.
struct ContractError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Invalid user-supplied parameter (normalization, qubit count, mu/l ranges, ...).
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Scalar function argument outside its mathematical domain.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// The requested quantity has no certified algorithm in this library
/// (e.g. entropic measures of mixed states beyond 2x2).
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace entmono
