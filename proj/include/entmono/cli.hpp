#pragma once

// The `entmono` command-line front end. Exit codes:
//   0  success
//   1  verify: a hypothesis of the selected bound certifiably fails (bound not applicable)
//   2  usage, parse, validation or capability error
//   3  verify: hypotheses undecidable in the certified regime
//   4  verify: margin violation with all hypotheses holding; corpus: any violation

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "entmono/bounds.hpp"

namespace entmono::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotApplicable = 1;
inline constexpr int kExitError = 2;
inline constexpr int kExitUndecidable = 3;
inline constexpr int kExitViolation = 4;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "A|BC" -> ({0}, {1, 2}). Letters A..L name qubits 0..11.
struct Partition {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
};
Partition parse_partition(const std::string& text, std::size_t n_qubits);

/// "thm1-concurrence" .. "thm16-reoa"; odd numbers select the split form.
struct TheoremSelector {
  int number = 1;
  std::string name;
  BoundFamily family;
  bool split_form = true;
};
/// Tsallis q defaults to 2 and the Renyi order to 2; the assisted Renyi bound
/// has no default order.
TheoremSelector parse_theorem(const std::string& name, std::optional<double> q,
                              std::optional<double> order);
std::vector<std::string> theorem_names();

/// "2" or "2,1.5,3" -> values; a single value is broadcast to `count` entries.
std::vector<double> parse_real_list(const std::string& text, std::size_t count, const char* what);

}  // namespace entmono::cli
