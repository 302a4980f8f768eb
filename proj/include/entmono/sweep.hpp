#pragma once

// Alpha sweeps of the one-to-group value and the four lower bounds on a state.

#include <optional>
#include <string>
#include <vector>

#include "entmono/bounds.hpp"

namespace entmono {

enum class BoundColumn { Ours, Kf, Jf, Ckw };
std::string to_string(BoundColumn c);
/// Parses a comma-separated subset of {ours, kf, jf, ckw}; output keeps the
/// canonical column order.
std::vector<BoundColumn> parse_columns(const std::string& list);

struct SweepSpec {
  double alpha_min = 2.0;
  double alpha_max = 5.0;
  std::size_t steps = 61;
  std::vector<BoundColumn> columns{BoundColumn::Ours, BoundColumn::Kf, BoundColumn::Jf,
                                   BoundColumn::Ckw};
  BoundFamily family;
  double k = 0.5;
  std::optional<double> mu;   // all steps; default mu*_r
  std::optional<double> ell;  // all steps; default 1/k, or l*_r with use_extracted_ell
  bool use_extracted_ell = false;
  std::optional<std::size_t> split_m;

  /// alpha_min >= family minimum, alpha_max > alpha_min, steps >= 2, 0 < k <= 1,
  /// monogamy family. Throws ParameterError (UnsupportedError for polygamy).
  void validate() const;
};

struct SweepRow {
  double alpha = 0.0;
  double lhs = 0.0;
  double ours = 0.0;
  double kf = 0.0;
  double jf = 0.0;
  double ckw = 0.0;
};

std::vector<SweepRow> run_sweep(const Chain& chain, const SweepSpec& spec);
std::vector<SweepRow> run_sweep(const PureState& state, const SweepSpec& spec);

/// Header `alpha,lhs,<selected columns>`, one LF-terminated line per row.
std::string sweep_csv(const std::vector<SweepRow>& rows, const std::vector<BoundColumn>& columns);

}  // namespace entmono
