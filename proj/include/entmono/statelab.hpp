#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "entmono/densemat.hpp"

namespace entmono {

inline constexpr double kPureNormTol = 1e-12;
inline constexpr double kFileNormTol = 1e-9;

/// Normalized amplitude vector over an ordered register.
class PureState {
 public:
  /// Throws ParameterError if the squared norm deviates from 1 by more than
  /// `norm_tol`. When the deviation is within `norm_tol` but above 1e-12 the
  /// vector is rescaled to unit norm.
  PureState(std::vector<cplx> amplitudes, SubsystemDims dims, double norm_tol = kPureNormTol);

  static PureState qubits(std::vector<cplx> amplitudes, double norm_tol = kPureNormTol);

  std::span<const cplx> amplitudes() const noexcept { return amps_; }
  const SubsystemDims& dims() const noexcept { return dims_; }
  std::size_t subsystems() const noexcept { return dims_.count(); }

  CMatrix projector() const { return CMatrix::outer(amps_); }

 private:
  std::vector<cplx> amps_;
  SubsystemDims dims_;
};

/// Hermitian, PSD, unit-trace matrix with its tensor layout. Validated once at
/// construction (tolerance 1e-10 for each of the three conditions).
class DensityMatrix {
 public:
  DensityMatrix(CMatrix rho, SubsystemDims dims);

  const CMatrix& matrix() const noexcept { return rho_; }
  const SubsystemDims& dims() const noexcept { return dims_; }
  std::size_t subsystems() const noexcept { return dims_.count(); }
  /// Tr(rho^2)
  double purity() const;

 private:
  CMatrix rho_;
  SubsystemDims dims_;
};

struct SchmidtParams {
  std::array<double, 5> lambda{};  // lambda_0 .. lambda_4
  double phi = 0.0;
};

/// Generalized Schmidt form of three qubits A B C. lambda2 weights the
/// component that flips A and B, lambda3 the one that flips A and C, so that
/// C_AB = 2 lambda0 lambda2, C_AC = 2 lambda0 lambda3 and
/// C_A|BC = 2 lambda0 sqrt(lambda2^2 + lambda3^2 + lambda4^2):
///   lambda0|000> + lambda1 e^{i phi}|100> + lambda2|110> + lambda3|101> + lambda4|111>
PureState schmidt3(const SchmidtParams& p);

/// The worked-example member of the family: lambda0 = lambda3 = lambda4 = 1/sqrt5,
/// lambda2 = sqrt(2/5), lambda1 = 0.
SchmidtParams example1_params();

PureState bell();
PureState ghz(std::size_t n);
PureState w_state(std::size_t n);

/// Haar-random n-qubit state from normalized complex Gaussians; deterministic in `seed`.
PureState random_pure(std::size_t n, std::uint64_t seed);

/// Tr_rest |s><s| restricted to the (sorted, unique, nonempty) `keep` set.
DensityMatrix reduce(const PureState& s, std::span<const std::size_t> keep);

/// Full projector |s><s| as a density matrix.
DensityMatrix to_density(const PureState& s);

/// Per-sample seed derivation: stable mix of (master seed, sample index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace entmono
