#pragma once

// Seeded randomized and grid checks of the inequalities the bounds rest on.
// Each suite reports its worst slack (smallest lhs - rhs over all checks; for
// equality checks, minus the absolute deviation) against a fixed tolerance.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace entmono {

enum class Suite {
  Lemma1,       // (1+x)^t - x^t vs (1+y)^t - y^t orderings, t in [1,4] and s in [0,1]
  Ckw,          // C^2(A|BC) >= C^2(AB) + C^2(AC) on random 3-qubit states
  Consistency,  // closed forms vs direct evaluation on random 2-qubit states
  Hierarchy,    // coefficient orderings between the four bounds; mu-monotonicity of K
  Lemma2,       // per-step concurrence inequality with extracted (mu*, l*)
  Grids,        // additivity and monotonicity of the scalar functions on fixed grids
};

std::string to_string(Suite s);
/// Throws ParameterError for unknown names.
Suite parse_suite(const std::string& name);
std::vector<Suite> all_suites();

struct CorpusSpec {
  Suite suite = Suite::Lemma1;
  std::size_t samples = 0;  // 0 selects the suite default; ignored by Grids
  std::uint64_t seed = 1;
};

std::size_t default_samples(Suite s);
double suite_tolerance(Suite s);

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t checks = 0;
  std::size_t violations = 0;
  double worst_slack = 0.0;
  double tolerance = 0.0;
  std::optional<std::string> first_violation;  // human-readable description

  bool passed() const { return violations == 0; }
};

SuiteResult run_suite(const CorpusSpec& spec);

}  // namespace entmono
