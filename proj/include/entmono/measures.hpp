#pragma once

// Bipartite entanglement measures on qubit registers.
//
// Pure states: every measure is a function of the reduced state on one side
// of the cut and is computed exactly for any bipartition.
//
// Mixed states: two-qubit states are exact through the spin-flip concurrence
// (EoF, Tsallis and Renyi entanglement are closed-form functions of it). For a
// qubit A against a register of k >= 2 qubits the concurrence is bracketed by
// a certified interval; entropic measures there are unsupported.
//
// Assisted (maximizing) measures only have a heuristic estimator; see
// assisted_estimate.

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "entmono/statelab.hpp"

namespace entmono {

enum class MeasureFamily { Concurrence, Cren, Eof, Tsallis, Renyi };

struct MeasureKind {
  MeasureFamily family = MeasureFamily::Concurrence;
  double param = 0.0;  // q for Tsallis, the Renyi order for Renyi; unused otherwise
  bool assisted = false;

  static MeasureKind concurrence() { return {MeasureFamily::Concurrence, 0.0, false}; }
  static MeasureKind cren() { return {MeasureFamily::Cren, 0.0, false}; }
  static MeasureKind eof() { return {MeasureFamily::Eof, 0.0, false}; }
  static MeasureKind tsallis(double q) { return {MeasureFamily::Tsallis, q, false}; }
  static MeasureKind renyi(double order) { return {MeasureFamily::Renyi, order, false}; }

  MeasureKind as_assisted() const { return {family, param, true}; }
  MeasureKind as_plain() const { return {family, param, false}; }

  /// Throws ParameterError unless q (or the Renyi order) is > 0 and != 1.
  void validate() const;
  /// "concurrence", "eof", "tsallis(q=2)", "assisted-eof", ...
  std::string name() const;

  friend bool operator==(const MeasureKind&, const MeasureKind&) = default;
};

enum class Certification { Exact, Interval, Heuristic };

std::string to_string(Certification c);

/// A measure value with its provenance. For Interval, `value` is the certified
/// lower endpoint and [lo, hi] brackets the true value. For Exact, lo == hi == value.
struct MeasureValue {
  double value = 0.0;
  Certification cert = Certification::Exact;
  double lo = 0.0;
  double hi = 0.0;

  static MeasureValue exact(double v) { return {v, Certification::Exact, v, v}; }
  static MeasureValue interval(double lo, double hi) { return {lo, Certification::Interval, lo, hi}; }
  static MeasureValue heuristic(double v) { return {v, Certification::Heuristic, v, v}; }

  bool certified() const noexcept { return cert != Certification::Heuristic; }
};

// ---------------------------------------------------------------------------
// scalar helpers

/// -x log2 x - (1-x) log2(1-x), with 0 log 0 = 0.
double binary_entropy(double x);

/// f(x) = H((1 + sqrt(1-x)) / 2) on [0, 1]: EoF as a function of C^2.
double f_eof(double x);

/// g_q(x) = [1 - ((1+sqrt(1-x))/2)^q - ((1-sqrt(1-x))/2)^q] / (q-1): Tsallis-q
/// entanglement as a function of C^2.
double g_tsallis(double x, double q);

/// f_a(x) = log2[((1-sqrt(1-x^2))/2)^a + ((1+sqrt(1-x^2))/2)^a] / (1-a): Renyi
/// entanglement as a function of C (not C^2).
double f_renyi(double x, double order);

/// Lower end of the q window where T_q(rho) = g_q(C^2(rho)) holds for mixed
/// two-qubit states, and the upper end.
inline const double kTsallisWindowLo = (5.0 - std::sqrt(13.0)) / 2.0;
inline const double kTsallisWindowHi = (5.0 + std::sqrt(13.0)) / 2.0;

// Spectral entropies, base 2. Input spectra are clamped per clamp_psd_spectrum.
double von_neumann_entropy(std::span<const double> spectrum);
double tsallis_entropy(std::span<const double> spectrum, double q);
double renyi_entropy(std::span<const double> spectrum, double order);

// ---------------------------------------------------------------------------
// measures

/// Cut `side_a | rest` of a pure state. `side_a` must be sorted, unique,
/// nonempty and a proper subset of the subsystems.
MeasureValue concurrence_pure(const PureState& s, std::span<const std::size_t> side_a);

/// Spin-flip closed form max{0, l1 - l2 - l3 - l4}. Requires 2x2 dims.
MeasureValue concurrence_two_qubit(const DensityMatrix& rho);

/// Certified bracket for qubit `a` against the remaining k >= 2 qubits of a
/// mixed state:
///   lo = sqrt(sum_j C^2(rho_{a B_j}))    (squared-concurrence monogamy)
///   hi = sqrt(2 (1 - Tr rho_a^2))        (concavity of the pure-state formula)
/// Rank-one inputs collapse to the pure-state value.
MeasureValue concurrence_interval(const DensityMatrix& rho, std::size_t a = 0);

/// ||rho^{T_S}||_1 - 1 where S is the listed set of subsystems.
MeasureValue negativity(const DensityMatrix& rho, std::span<const std::size_t> sides);
MeasureValue negativity(const PureState& s, std::span<const std::size_t> side_a);

/// Equals concurrence_two_qubit on every 2x2 state.
MeasureValue cren_two_qubit(const DensityMatrix& rho);

MeasureValue eof(const PureState& s, std::span<const std::size_t> side_a);
/// 2x2 only: f_eof(C^2). Larger mixed inputs throw UnsupportedError.
MeasureValue eof(const DensityMatrix& rho);

MeasureValue tsallis(const PureState& s, std::span<const std::size_t> side_a, double q);
/// 2x2 only, q within [kTsallisWindowLo, kTsallisWindowHi].
MeasureValue tsallis(const DensityMatrix& rho, double q);

MeasureValue renyi(const PureState& s, std::span<const std::size_t> side_a, double order);
/// 2x2 only: f_renyi(C).
MeasureValue renyi(const DensityMatrix& rho, double order);

/// Dispatch on a non-assisted kind. Assisted kinds on pure states reduce to
/// the plain measure (a pure state has a single decomposition).
MeasureValue measure(const PureState& s, std::span<const std::size_t> side_a, MeasureKind kind);
/// Mixed-state dispatch: 2x2 exact; concurrence/CREN of a qubit against k >= 2
/// qubits as an interval; anything else UnsupportedError. Assisted kinds throw
/// (use assisted_estimate).
MeasureValue measure(const DensityMatrix& rho, MeasureKind kind);

/// Measure of a 2 x d pure state expressed through its concurrence.
double pure_measure_from_concurrence(double c, MeasureKind kind);

/// Heuristic lower estimate of an assisted (maximizing) measure of a two-qubit
/// mixed state. Searches pure-state ensembles {sqrt(p_i)|psi_i>} = U W, where W
/// holds the scaled eigenvectors of rho and U ranges over K x r isometries
/// (K = r^2), by random restarts plus accept-if-better perturbation. The best
/// value found after `budget` evaluations is returned; for a fixed seed it is
/// non-decreasing in the budget. Rank-one inputs return the exact plain value.
MeasureValue assisted_estimate(const DensityMatrix& rho, MeasureKind kind, std::size_t budget,
                               std::uint64_t seed);

/// Validates a bipartition and returns the complementary side.
std::vector<std::size_t> complement(std::span<const std::size_t> side_a, std::size_t n);

}  // namespace entmono
