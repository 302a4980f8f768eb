#include "entmono/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "entmono/errors.hpp"
#include "entmono/format.hpp"

namespace entmono {

namespace {

const BoundColumn kAllColumns[] = {BoundColumn::Ours, BoundColumn::Kf, BoundColumn::Jf,
                                   BoundColumn::Ckw};

double column_value(const SweepRow& r, BoundColumn c) {
  switch (c) {
    case BoundColumn::Ours: return r.ours;
    case BoundColumn::Kf: return r.kf;
    case BoundColumn::Jf: return r.jf;
    case BoundColumn::Ckw: return r.ckw;
  }
  return 0.0;
}

}  // namespace

std::string to_string(BoundColumn c) {
  switch (c) {
    case BoundColumn::Ours: return "ours";
    case BoundColumn::Kf: return "kf";
    case BoundColumn::Jf: return "jf";
    case BoundColumn::Ckw: return "ckw";
  }
  return "?";
}

std::vector<BoundColumn> parse_columns(const std::string& list) {
  std::vector<bool> chosen(4, false);
  std::stringstream ss(list);
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ',')) {
    bool found = false;
    for (std::size_t i = 0; i < 4; ++i)
      if (to_string(kAllColumns[i]) == item) chosen[i] = found = any = true;
    if (!found) throw ParameterError("unknown bound column '" + item + "' (expected ours, kf, jf, ckw)");
  }
  if (!any) throw ParameterError("empty bound column list");
  std::vector<BoundColumn> out;
  for (std::size_t i = 0; i < 4; ++i)
    if (chosen[i]) out.push_back(kAllColumns[i]);
  return out;
}

void SweepSpec::validate() const {
  if (family.direction != Direction::Monogamy)
    throw UnsupportedError("sweep: only monogamy families are swept");
  if (!std::isfinite(alpha_min) || !std::isfinite(alpha_max))
    throw ParameterError("sweep: alpha range must be finite");
  family.require_alpha(alpha_min);
  if (!(alpha_max > alpha_min)) throw ParameterError("sweep: alpha_max must exceed alpha_min");
  if (steps < 2) throw ParameterError("sweep: steps must be >= 2");
  if (!(k > 0.0 && k <= 1.0)) throw ParameterError("sweep: k must lie in (0, 1]");
  if (columns.empty()) throw ParameterError("sweep: no bound columns selected");
}

std::vector<SweepRow> run_sweep(const Chain& chain, const SweepSpec& spec) {
  spec.validate();
  if (!chain.tail[0]) throw UnsupportedError("sweep: one-to-group value unavailable");
  std::vector<double> values;
  for (const auto& p : chain.pairs) {
    if (!p) throw UnsupportedError("sweep: pairwise value unavailable");
    values.push_back(p->value);
  }
  std::optional<double> ell = spec.ell;
  if (!ell && !spec.use_extracted_ell) ell = 1.0 / spec.k;

  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < spec.steps; ++i) {
    const double alpha =
        i + 1 == spec.steps
            ? spec.alpha_max
            : spec.alpha_min + (spec.alpha_max - spec.alpha_min) * static_cast<double>(i) /
                                   static_cast<double>(spec.steps - 1);
    BoundParams params = auto_params(chain, spec.family, alpha, spec.split_m, ell);
    if (spec.mu) std::fill(params.mu.begin(), params.mu.end(), *spec.mu);
    SweepRow row;
    row.alpha = alpha;
    row.lhs = std::pow(chain.tail[0]->value, alpha);
    row.ours = rhs_assemble(values, params).rhs;
    row.kf = prior_rhs(values, alpha, spec.family, PriorKind::KfKParam, spec.k, spec.split_m);
    row.jf = prior_rhs(values, alpha, spec.family, PriorKind::Jf2Pow, spec.k, spec.split_m);
    row.ckw = prior_rhs(values, alpha, spec.family, PriorKind::CkwPower);
    rows.push_back(row);
  }
  return rows;
}

std::vector<SweepRow> run_sweep(const PureState& state, const SweepSpec& spec) {
  spec.validate();
  return run_sweep(evaluate_chain(state, spec.family), spec);
}

std::string sweep_csv(const std::vector<SweepRow>& rows, const std::vector<BoundColumn>& columns) {
  std::string out = "alpha,lhs";
  for (BoundColumn c : kAllColumns)
    if (std::find(columns.begin(), columns.end(), c) != columns.end()) out += "," + to_string(c);
  out += "\n";
  for (const SweepRow& r : rows) {
    out += format_real(r.alpha) + "," + format_real(r.lhs);
    for (BoundColumn c : kAllColumns)
      if (std::find(columns.begin(), columns.end(), c) != columns.end())
        out += "," + format_real(column_value(r, c));
    out += "\n";
  }
  return out;
}

}  // namespace entmono
