#pragma once

// Weighted monogamy (lower) and polygamy (upper) bounds for the one-to-group
// entanglement of qubit A against B_1 ... B_{N-1}.
//
// The tightened bound chains K_r = (mu_r + l_r)^s - l_r^s coefficients through
// the register; s is alpha/2, alpha/sqrt2 or alpha depending on the measure.
// With split index m, pairs 1..m follow the "A B_i carries more than the rest"
// branch and pairs m+1..N-2 the opposite one:
//
//   M_1^a + K_1 M_2^a + ... + K_1..K_{m-1} M_m^a
//     + K_1..K_m (K_{m+1} M_{m+1}^a + ... + K_{N-2} M_{N-2}^a)
//     + K_1..K_m M_{N-1}^a
//
// m = N-2 (or no split) gives M_1^a + K_1 M_2^a + ... + K_1..K_{N-2} M_{N-1}^a.
//
// Three earlier bounds are provided as comparators: the plain power sum, the
// (2^s - 1)-weighted chain, and the k-parametrized chain with weight
// ((1+k)^s - 1)/k^s.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "entmono/measures.hpp"

namespace entmono {

enum class Direction { Monogamy, Polygamy };

inline constexpr double kCertifiedSlack = 1e-9;
inline constexpr double kSaturationTol = 1e-12;

/// Measure plus inequality direction; fixes the hypothesis power p, the
/// coefficient exponent s(alpha) = alpha / divisor and the admissible alpha range.
struct BoundFamily {
  MeasureKind measure;
  Direction direction = Direction::Monogamy;
  double hypothesis_power = 2.0;
  double exponent_divisor = 2.0;
  double alpha_min = 2.0;
  double alpha_max = 0.0;  // only meaningful for polygamy (closed range [alpha_min, alpha_max])

  /// Concurrence, CREN (p = 2, s = alpha/2, alpha >= 2); EoF (p = sqrt2,
  /// s = alpha/sqrt2, alpha >= sqrt2); Tsallis with 2 <= q <= 3 and Renyi with
  /// order >= 2 (p = 1, s = alpha, alpha >= 1).
  static BoundFamily monogamy(MeasureKind plain);
  /// Assisted EoF; assisted Tsallis with q in [1,2] or [3,4]; assisted Renyi
  /// with order in [(sqrt7-1)/2, (sqrt13-1)/2]. p = 1, s = alpha, 0 <= alpha <= 1.
  static BoundFamily polygamy(MeasureKind plain);

  double scale(double alpha) const { return alpha / exponent_divisor; }
  bool admits_alpha(double alpha) const;
  void require_alpha(double alpha) const;
  std::string name() const;
  /// Symbol used in condition texts, e.g. "C^2", "E^sqrt2", "T_q".
  std::string hypothesis_symbol() const;
};

enum class Branch { AbDominant, TailDominant };

struct BoundParams {
  double alpha = 2.0;
  std::vector<double> mu;   // mu_1 .. mu_{N-2}
  std::vector<double> ell;  // l_1 .. l_{N-2}
  std::optional<std::size_t> split_m;  // empty: all steps on the AbDominant branch
  BoundFamily family;

  /// Throws ParameterError unless the lists have n_pairs - 1 entries, mu/l lie
  /// in the family's ranges, split_m is in [1, n_pairs - 1] and alpha is admissible.
  void validate(std::size_t n_pairs) const;
  /// 1-based step r.
  Branch branch(std::size_t r) const;
};

/// (mu + l)^s - l^s.
double coefficient_K(double mu, double ell, double alpha, const BoundFamily& family);

/// (1 + x)^t - x^t evaluated without cancellation for large x.
double power_gap(double x, double t);

struct BoundTerm {
  std::size_t pair = 0;  // 1-based: B_pair
  double coefficient = 0.0;
  double value = 0.0;  // M(rho_{A B_pair})
  double contribution = 0.0;
};

struct RhsAssembly {
  std::vector<double> coefficients;  // K_1 .. K_{N-2}
  std::vector<BoundTerm> terms;
  double rhs = 0.0;
};

/// `values` are the pairwise measures M_1 .. M_{N-1} (N-1 >= 2).
RhsAssembly rhs_assemble(std::span<const double> values, const BoundParams& params);

enum class PriorKind { CkwPower, Jf2Pow, KfKParam };
std::string to_string(PriorKind k);

/// Comparator right-hand side. `k` is used only by KfKParam and must be in (0, 1].
double prior_rhs(std::span<const double> values, double alpha, const BoundFamily& family,
                 PriorKind kind, double k = 0.5, std::optional<std::size_t> split_m = {});

/// Measures along the chain for one state. tail[j] = M(A | B_{j+1} .. B_{N-1}),
/// pairs[j] = M(A B_{j+1}); tail[0] is the one-to-group value and tail[N-2]
/// coincides with pairs[N-2]. An empty optional marks a quantity with no
/// certified algorithm.
struct Chain {
  std::vector<std::optional<MeasureValue>> tail;
  std::vector<std::optional<MeasureValue>> pairs;

  std::size_t qubits() const { return pairs.size() + 1; }
  /// Builds an all-exact chain from plain numbers (caller-supplied values).
  static Chain exact(std::vector<double> tail, std::vector<double> pairs);
};

struct ChainOptions {
  std::size_t assisted_budget = 2000;
  std::uint64_t seed = 1;
};

/// Evaluates the chain of a pure N-qubit state (N >= 3) with A = qubit 0.
Chain evaluate_chain(const PureState& state, const BoundFamily& family,
                     const ChainOptions& options = {});

enum class ExtractionStatus { Ok, Unconstrained, Unsatisfiable, Uncertified };
std::string to_string(ExtractionStatus s);

struct StepExtraction {
  std::size_t step = 0;  // 1-based r
  Branch branch = Branch::AbDominant;
  ExtractionStatus status = ExtractionStatus::Ok;
  std::optional<double> mu;   // mu*_r
  std::optional<double> ell;  // l*_r
  bool heuristic = false;     // derived from heuristic (assisted) values
};

/// Extremal feasible (mu*_r, l*_r) per step: the largest mu and l satisfying
/// the step hypotheses for monogamy, the smallest mu and largest l for polygamy.
std::vector<StepExtraction> extract_mu_l(const Chain& chain, const BoundFamily& family,
                                         std::optional<std::size_t> split_m = {});

/// Fills mu and l from an extraction. Steps without a usable extraction get
/// mu = l = 1. `ell_override` replaces every l_r when given.
BoundParams auto_params(const Chain& chain, const BoundFamily& family, double alpha,
                        std::optional<std::size_t> split_m = {},
                        std::optional<double> ell_override = {});

enum class ConditionStatus { Holds, Fails, Undecidable };
std::string to_string(ConditionStatus s);

struct ClauseCheck {
  std::size_t step = 0;
  std::string text;
  ConditionStatus status = ConditionStatus::Undecidable;
  double slack_lo = 0.0;  // certified range of (lhs - rhs) of the clause
  double slack_hi = 0.0;
  std::string note;
};

struct ConditionReport {
  std::vector<ClauseCheck> clauses;
  /// Fails if any clause fails, else Undecidable if any is undecidable, else Holds.
  ConditionStatus overall() const;
};

ConditionReport check_conditions(const Chain& chain, const BoundParams& params);
ConditionReport check_conditions(const PureState& state, const BoundParams& params,
                                 const ChainOptions& options = {});

enum class Verdict { Pass, ConditionsFail, Undecidable, Violation };
std::string to_string(Verdict v);

struct BoundReport {
  BoundParams params;
  Chain chain;
  double lhs = 0.0;
  double rhs = 0.0;
  std::vector<double> coefficients;
  std::vector<BoundTerm> terms;
  double prior_ckw = 0.0;
  double prior_jf = 0.0;
  double prior_kf = 0.0;
  double k = 0.5;
  ConditionReport conditions;
  double margin = 0.0;  // lhs - rhs for monogamy, rhs - lhs for polygamy
  bool comparator_only = false;

  Verdict verdict() const;
};

struct VerifyOptions {
  ChainOptions chain;
  double k = 0.5;
  bool comparator_only = false;
};

/// Throws UnsupportedError outside the certified regime: non-concurrence
/// families need N = 3 unless comparator_only is set.
BoundReport verify(const PureState& state, const BoundParams& params,
                   const VerifyOptions& options = {});
/// Same, on a precomputed chain.
BoundReport verify(const Chain& chain, const BoundParams& params, const VerifyOptions& options = {});

}  // namespace entmono
