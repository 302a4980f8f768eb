#include "entmono/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "entmono/errors.hpp"
#include "entmono/format.hpp"

namespace entmono {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool finite(double x) { return std::isfinite(x); }

void require_values(std::span<const double> values, const char* what) {
  if (values.size() < 2)
    throw ParameterError(std::string(what) + ": need at least two pairwise values (N >= 3)");
  for (double v : values)
    if (!(v >= 0.0) || !finite(v))
      throw ParameterError(std::string(what) + ": pairwise values must be finite and >= 0");
}

void require_split(std::optional<std::size_t> m, std::size_t steps, const char* what) {
  if (m && (*m < 1 || *m > steps))
    throw ParameterError(std::string(what) + ": split index m=" + std::to_string(*m) +
                         " outside [1, " + std::to_string(steps) + "]");
}

// Coefficients of M_1^a .. M_{N-1}^a for per-step weights w_1 .. w_{N-2}.
std::vector<double> chain_coefficients(std::span<const double> w, std::optional<std::size_t> split_m) {
  const std::size_t steps = w.size();
  const std::size_t m = split_m.value_or(steps);
  std::vector<double> coef(steps + 1);
  double prod = 1.0;
  for (std::size_t i = 1; i <= m; ++i) {
    coef[i - 1] = prod;
    prod *= w[i - 1];
  }
  for (std::size_t j = m + 1; j <= steps; ++j) coef[j - 1] = prod * w[j - 1];
  coef[steps] = prod;
  return coef;
}

std::string pair_label(std::size_t j) { return "AB" + std::to_string(j); }

std::string tail_label(std::size_t first, std::size_t n) {
  if (first == n - 1) return pair_label(first);
  return "A|B" + std::to_string(first) + "..B" + std::to_string(n - 1);
}

struct Bracket {
  bool known = false;
  bool certified = true;
  double lo = 0.0;
  double hi = 0.0;
};

Bracket powered(const std::optional<MeasureValue>& v, double p) {
  if (!v) return {};
  return {true, v->certified(), std::pow(v->lo, p), std::pow(v->hi, p)};
}

// Range of sum_k c_k x_k over x_k in [lo_k, hi_k].
void linear_range(std::span<const double> c, std::span<const Bracket> x, double& lo, double& hi) {
  lo = hi = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] >= 0.0) {
      lo += c[k] * x[k].lo;
      hi += c[k] * x[k].hi;
    } else {
      lo += c[k] * x[k].hi;
      hi += c[k] * x[k].lo;
    }
  }
}

ClauseCheck evaluate_clause(std::size_t step, std::string text, std::span<const double> c,
                            std::span<const Bracket> x, std::span<const std::string> labels) {
  ClauseCheck out;
  out.step = step;
  out.text = std::move(text);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0.0) continue;
    if (!x[k].known) {
      out.status = ConditionStatus::Undecidable;
      out.slack_lo = -kInf;
      out.slack_hi = kInf;
      out.note = "no certified value for " + labels[k];
      return out;
    }
  }
  linear_range(c, x, out.slack_lo, out.slack_hi);
  bool heuristic = false;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0.0 && !x[k].certified) heuristic = true;
  if (heuristic) {
    out.status = ConditionStatus::Undecidable;
    out.note = "depends on heuristic (assisted) estimates";
  } else if (out.slack_lo >= -kCertifiedSlack) {
    out.status = ConditionStatus::Holds;
  } else if (out.slack_hi < -kCertifiedSlack) {
    out.status = ConditionStatus::Fails;
  } else {
    out.status = ConditionStatus::Undecidable;
    out.note = "interval values straddle the threshold";
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// families

BoundFamily BoundFamily::monogamy(MeasureKind plain) {
  plain.validate();
  if (plain.assisted) throw ParameterError("monogamy bounds use non-assisted measures");
  BoundFamily f;
  f.measure = plain;
  f.direction = Direction::Monogamy;
  f.alpha_max = kInf;
  switch (plain.family) {
    case MeasureFamily::Concurrence:
    case MeasureFamily::Cren:
      f.hypothesis_power = 2.0;
      f.exponent_divisor = 2.0;
      f.alpha_min = 2.0;
      break;
    case MeasureFamily::Eof:
      f.hypothesis_power = std::sqrt(2.0);
      f.exponent_divisor = std::sqrt(2.0);
      f.alpha_min = std::sqrt(2.0);
      break;
    case MeasureFamily::Tsallis:
      if (plain.param < 2.0 || plain.param > 3.0)
        throw ParameterError("tsallis monogamy bound requires 2 <= q <= 3");
      f.hypothesis_power = f.exponent_divisor = f.alpha_min = 1.0;
      break;
    case MeasureFamily::Renyi:
      if (plain.param < 2.0) throw ParameterError("renyi monogamy bound requires order >= 2");
      f.hypothesis_power = f.exponent_divisor = f.alpha_min = 1.0;
      break;
  }
  return f;
}

BoundFamily BoundFamily::polygamy(MeasureKind plain) {
  plain = plain.as_assisted();
  plain.validate();
  const double q = plain.param;
  if (plain.family == MeasureFamily::Tsallis &&
      !((q >= 1.0 && q <= 2.0) || (q >= 3.0 && q <= 4.0)))
    throw ParameterError("assisted tsallis polygamy bound requires q in [1,2] or [3,4]");
  if (plain.family == MeasureFamily::Renyi &&
      !(q >= (std::sqrt(7.0) - 1.0) / 2.0 && q <= (std::sqrt(13.0) - 1.0) / 2.0))
    throw ParameterError(
        "assisted renyi polygamy bound requires order in [(sqrt7-1)/2, (sqrt13-1)/2]");
  BoundFamily f;
  f.measure = plain;
  f.direction = Direction::Polygamy;
  f.hypothesis_power = f.exponent_divisor = 1.0;
  f.alpha_min = 0.0;
  f.alpha_max = 1.0;
  return f;
}

bool BoundFamily::admits_alpha(double alpha) const {
  if (!finite(alpha)) return false;
  if (direction == Direction::Monogamy) return alpha >= alpha_min;
  return alpha >= alpha_min && alpha <= alpha_max;
}

void BoundFamily::require_alpha(double alpha) const {
  if (admits_alpha(alpha)) return;
  if (direction == Direction::Monogamy)
    throw ParameterError(name() + ": alpha=" + format_real(alpha) + " below minimum " +
                         format_real(alpha_min));
  throw ParameterError(name() + ": alpha=" + format_real(alpha) + " outside [" +
                       format_real(alpha_min) + ", " + format_real(alpha_max) + "]");
}

std::string BoundFamily::name() const {
  return (direction == Direction::Monogamy ? "monogamy/" : "polygamy/") + measure.name();
}

std::string BoundFamily::hypothesis_symbol() const {
  const std::string a = measure.assisted ? "a" : "";
  switch (measure.family) {
    case MeasureFamily::Concurrence: return "C^2";
    case MeasureFamily::Cren: return "N^2";
    case MeasureFamily::Eof: return measure.assisted ? "Ea" : "E^sqrt2";
    case MeasureFamily::Tsallis: return "T" + a + "_" + format_real(measure.param);
    case MeasureFamily::Renyi: return "R" + a + "_" + format_real(measure.param);
  }
  return "M";
}

// ---------------------------------------------------------------------------
// params and coefficients

void BoundParams::validate(std::size_t n_pairs) const {
  if (n_pairs < 2) throw ParameterError("bound needs N >= 3 (at least two pairs)");
  const std::size_t steps = n_pairs - 1;
  family.require_alpha(alpha);
  if (mu.size() != steps || ell.size() != steps)
    throw ParameterError("expected " + std::to_string(steps) + " mu and l values, got " +
                         std::to_string(mu.size()) + " and " + std::to_string(ell.size()));
  for (std::size_t r = 0; r < steps; ++r) {
    if (!finite(mu[r]) || !finite(ell[r]))
      throw ParameterError("mu and l must be finite");
    if (ell[r] < 1.0)
      throw ParameterError("l_" + std::to_string(r + 1) + "=" + format_real(ell[r]) + " must be >= 1");
    if (family.direction == Direction::Monogamy && mu[r] < 1.0)
      throw ParameterError("mu_" + std::to_string(r + 1) + "=" + format_real(mu[r]) +
                           " must be >= 1");
    if (family.direction == Direction::Polygamy && !(mu[r] > 0.0 && mu[r] <= 1.0))
      throw ParameterError("mu_" + std::to_string(r + 1) + "=" + format_real(mu[r]) +
                           " must lie in (0, 1]");
  }
  require_split(split_m, steps, "bound");
}

Branch BoundParams::branch(std::size_t r) const {
  return (!split_m || r <= *split_m) ? Branch::AbDominant : Branch::TailDominant;
}

double power_gap(double x, double t) {
  if (!(x >= 0.0) || !finite(x) || !finite(t)) throw ParameterError("power_gap: bad argument");
  if (x == 0.0) return 1.0;
  return std::pow(x, t) * std::expm1(t * std::log1p(1.0 / x));
}

double coefficient_K(double mu, double ell, double alpha, const BoundFamily& family) {
  family.require_alpha(alpha);
  if (!finite(mu) || !finite(ell) || ell < 1.0)
    throw ParameterError("coefficient_K: l must be finite and >= 1");
  if (family.direction == Direction::Monogamy && mu < 1.0)
    throw ParameterError("coefficient_K: mu must be >= 1 for monogamy");
  if (family.direction == Direction::Polygamy && !(mu > 0.0 && mu <= 1.0))
    throw ParameterError("coefficient_K: mu must lie in (0, 1] for polygamy");
  const double s = family.scale(alpha);
  return std::pow(ell, s) * std::expm1(s * std::log1p(mu / ell));
}

RhsAssembly rhs_assemble(std::span<const double> values, const BoundParams& params) {
  require_values(values, "rhs_assemble");
  params.validate(values.size());
  RhsAssembly out;
  const std::size_t steps = values.size() - 1;
  out.coefficients.resize(steps);
  for (std::size_t r = 0; r < steps; ++r)
    out.coefficients[r] = coefficient_K(params.mu[r], params.ell[r], params.alpha, params.family);
  const auto coef = chain_coefficients(out.coefficients, params.split_m);
  for (std::size_t j = 0; j < values.size(); ++j) {
    BoundTerm t;
    t.pair = j + 1;
    t.coefficient = coef[j];
    t.value = values[j];
    t.contribution = coef[j] * std::pow(values[j], params.alpha);
    out.rhs += t.contribution;
    out.terms.push_back(t);
  }
  return out;
}

std::string to_string(PriorKind k) {
  switch (k) {
    case PriorKind::CkwPower: return "ckw";
    case PriorKind::Jf2Pow: return "jf";
    case PriorKind::KfKParam: return "kf";
  }
  return "?";
}

double prior_rhs(std::span<const double> values, double alpha, const BoundFamily& family,
                 PriorKind kind, double k, std::optional<std::size_t> split_m) {
  require_values(values, "prior_rhs");
  family.require_alpha(alpha);
  const std::size_t steps = values.size() - 1;
  require_split(split_m, steps, "prior_rhs");
  const double s = family.scale(alpha);
  double c = 1.0;
  switch (kind) {
    case PriorKind::CkwPower: {
      double sum = 0.0;
      for (double v : values) sum += std::pow(v, alpha);
      return sum;
    }
    case PriorKind::Jf2Pow: c = std::expm1(s * std::log(2.0)); break;
    case PriorKind::KfKParam:
      if (!(k > 0.0 && k <= 1.0)) throw ParameterError("prior_rhs: k must lie in (0, 1]");
      // ((1+k)^s - 1) / k^s
      c = std::expm1(s * std::log1p(k)) / std::pow(k, s);
      break;
  }
  const std::vector<double> w(steps, c);
  const auto coef = chain_coefficients(w, split_m);
  double sum = 0.0;
  for (std::size_t j = 0; j < values.size(); ++j) sum += coef[j] * std::pow(values[j], alpha);
  return sum;
}

// ---------------------------------------------------------------------------
// extraction

Chain Chain::exact(std::vector<double> tail, std::vector<double> pairs) {
  if (pairs.size() < 2 || tail.size() != pairs.size())
    throw ParameterError("Chain::exact: need N-1 >= 2 tail and pair values");
  Chain c;
  for (double v : tail) c.tail.emplace_back(MeasureValue::exact(v));
  for (double v : pairs) c.pairs.emplace_back(MeasureValue::exact(v));
  return c;
}

std::string to_string(ExtractionStatus s) {
  switch (s) {
    case ExtractionStatus::Ok: return "ok";
    case ExtractionStatus::Unconstrained: return "unconstrained";
    case ExtractionStatus::Unsatisfiable: return "unsatisfiable";
    case ExtractionStatus::Uncertified: return "uncertified";
  }
  return "?";
}

std::vector<StepExtraction> extract_mu_l(const Chain& chain, const BoundFamily& family,
                                         std::optional<std::size_t> split_m) {
  const std::size_t steps = chain.pairs.size() - 1;
  if (chain.pairs.size() < 2 || chain.tail.size() != chain.pairs.size())
    throw ParameterError("extract_mu_l: malformed chain");
  require_split(split_m, steps, "extract_mu_l");
  const double p = family.hypothesis_power;
  std::vector<StepExtraction> out;
  for (std::size_t r = 1; r <= steps; ++r) {
    StepExtraction e;
    e.step = r;
    e.branch = (!split_m || r <= *split_m) ? Branch::AbDominant : Branch::TailDominant;
    const auto& vt = chain.tail[r - 1];
    const auto& vp = chain.pairs[r - 1];
    const auto& vn = chain.tail[r];
    const auto exact_value = [](const std::optional<MeasureValue>& v) {
      return v && v->lo == v->hi;
    };
    if (!exact_value(vt) || !exact_value(vp) || !exact_value(vn)) {
      e.status = ExtractionStatus::Uncertified;
      out.push_back(e);
      continue;
    }
    e.heuristic = !vt->certified() || !vp->certified() || !vn->certified();
    const double x = std::pow(vt->value, p);
    const double y = std::pow(vp->value, p);
    const double z = std::pow(vn->value, p);
    // AbDominant: y >= l z and x >= y + mu z (<= for polygamy)
    // TailDominant: z >= l y and x >= mu y + z
    const double num = e.branch == Branch::AbDominant ? y : z;
    const double den = e.branch == Branch::AbDominant ? z : y;
    if (den <= 0.0) {
      e.status = ExtractionStatus::Unconstrained;
      out.push_back(e);
      continue;
    }
    e.mu = (x - num) / den;
    e.ell = num / den;
    const bool ell_bad = *e.ell < 1.0 - kCertifiedSlack;
    const bool mu_bad = family.direction == Direction::Monogamy ? *e.mu < 1.0 - kCertifiedSlack
                                                               : *e.mu > 1.0 + kCertifiedSlack;
    e.status = (ell_bad || mu_bad) ? ExtractionStatus::Unsatisfiable : ExtractionStatus::Ok;
    out.push_back(e);
  }
  return out;
}

BoundParams auto_params(const Chain& chain, const BoundFamily& family, double alpha,
                        std::optional<std::size_t> split_m, std::optional<double> ell_override) {
  BoundParams params;
  params.alpha = alpha;
  params.family = family;
  params.split_m = split_m;
  for (const StepExtraction& e : extract_mu_l(chain, family, split_m)) {
    double mu = 1.0;
    double ell = 1.0;
    if (e.status == ExtractionStatus::Ok) {
      ell = std::max(*e.ell, 1.0);
      mu = family.direction == Direction::Monogamy
               ? std::max(*e.mu, 1.0)
               : std::clamp(*e.mu, std::numeric_limits<double>::min(), 1.0);
    }
    params.mu.push_back(mu);
    params.ell.push_back(ell_override.value_or(ell));
  }
  return params;
}

// ---------------------------------------------------------------------------
// conditions

std::string to_string(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::Holds: return "holds";
    case ConditionStatus::Fails: return "fails";
    case ConditionStatus::Undecidable: return "undecidable";
  }
  return "?";
}

ConditionStatus ConditionReport::overall() const {
  bool undecided = false;
  for (const ClauseCheck& c : clauses) {
    if (c.status == ConditionStatus::Fails) return ConditionStatus::Fails;
    if (c.status == ConditionStatus::Undecidable) undecided = true;
  }
  return undecided ? ConditionStatus::Undecidable : ConditionStatus::Holds;
}

ConditionReport check_conditions(const Chain& chain, const BoundParams& params) {
  if (chain.pairs.size() < 2 || chain.tail.size() != chain.pairs.size())
    throw ParameterError("check_conditions: malformed chain");
  params.validate(chain.pairs.size());
  const std::size_t n = chain.qubits();
  const std::size_t steps = n - 2;
  const double p = params.family.hypothesis_power;
  const bool mono = params.family.direction == Direction::Monogamy;
  const std::string sym = params.family.hypothesis_symbol();
  const std::string rel = mono ? " >= " : " <= ";

  ConditionReport report;
  for (std::size_t r = 1; r <= steps; ++r) {
    const std::string rs = std::to_string(r);
    const Bracket x = powered(chain.tail[r - 1], p);
    const Bracket y = powered(chain.pairs[r - 1], p);
    const Bracket z = powered(chain.tail[r], p);
    const std::array<Bracket, 3> vars{x, y, z};
    const std::array<std::string, 3> labels{tail_label(r, n), pair_label(r), tail_label(r + 1, n)};
    const std::string sx = sym + "[" + labels[0] + "]";
    const std::string sy = sym + "[" + labels[1] + "]";
    const std::string sz = sym + "[" + labels[2] + "]";
    const double mu = params.mu[r - 1];
    const double ell = params.ell[r - 1];
    const double sign = mono ? 1.0 : -1.0;

    if (params.branch(r) == Branch::AbDominant) {
      // y - l z >= 0
      const std::array<double, 3> ratio{0.0, 1.0, -ell};
      report.clauses.push_back(evaluate_clause(
          r, sy + " >= l" + rs + "*" + sz, ratio, vars, labels));
      // x - y - mu z >= 0 (sign-flipped for polygamy)
      const std::array<double, 3> add{sign, -sign, -sign * mu};
      report.clauses.push_back(evaluate_clause(
          r, sx + rel + sy + " + mu" + rs + "*" + sz, add, vars, labels));
    } else {
      const std::array<double, 3> ratio{0.0, -ell, 1.0};
      report.clauses.push_back(evaluate_clause(
          r, sz + " >= l" + rs + "*" + sy, ratio, vars, labels));
      const std::array<double, 3> add{sign, -sign * mu, -sign};
      report.clauses.push_back(evaluate_clause(
          r, sx + rel + "mu" + rs + "*" + sy + " + " + sz, add, vars, labels));
    }
  }
  return report;
}

ConditionReport check_conditions(const PureState& state, const BoundParams& params,
                                 const ChainOptions& options) {
  return check_conditions(evaluate_chain(state, params.family, options), params);
}

// ---------------------------------------------------------------------------
// verify

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::ConditionsFail: return "conditions-fail";
    case Verdict::Undecidable: return "undecidable";
    case Verdict::Violation: return "violation";
  }
  return "?";
}

Verdict BoundReport::verdict() const {
  switch (conditions.overall()) {
    case ConditionStatus::Fails: return Verdict::ConditionsFail;
    case ConditionStatus::Undecidable: return Verdict::Undecidable;
    case ConditionStatus::Holds: break;
  }
  return margin >= -kCertifiedSlack ? Verdict::Pass : Verdict::Violation;
}

BoundReport verify(const Chain& chain, const BoundParams& params, const VerifyOptions& options) {
  if (chain.pairs.size() < 2 || chain.tail.size() != chain.pairs.size())
    throw ParameterError("verify: malformed chain");
  params.validate(chain.pairs.size());
  if (!chain.tail[0]) throw UnsupportedError("verify: one-to-group value unavailable");
  std::vector<double> values;
  for (std::size_t j = 0; j < chain.pairs.size(); ++j) {
    if (!chain.pairs[j])
      throw UnsupportedError("verify: pairwise value for " + pair_label(j + 1) + " unavailable");
    values.push_back(chain.pairs[j]->value);
  }

  BoundReport rep;
  rep.params = params;
  rep.chain = chain;
  rep.k = options.k;
  rep.comparator_only = options.comparator_only;
  rep.lhs = std::pow(chain.tail[0]->value, params.alpha);
  const RhsAssembly rhs = rhs_assemble(values, params);
  rep.rhs = rhs.rhs;
  rep.coefficients = rhs.coefficients;
  rep.terms = rhs.terms;
  rep.prior_ckw = prior_rhs(values, params.alpha, params.family, PriorKind::CkwPower);
  rep.prior_jf = prior_rhs(values, params.alpha, params.family, PriorKind::Jf2Pow, options.k,
                           params.split_m);
  rep.prior_kf = prior_rhs(values, params.alpha, params.family, PriorKind::KfKParam, options.k,
                           params.split_m);
  rep.margin = params.family.direction == Direction::Monogamy ? rep.lhs - rep.rhs
                                                              : rep.rhs - rep.lhs;
  rep.conditions = check_conditions(chain, params);
  return rep;
}

BoundReport verify(const PureState& state, const BoundParams& params, const VerifyOptions& options) {
  const std::size_t n = state.subsystems();
  if (n < 3) throw ParameterError("verify: need N >= 3 qubits");
  const MeasureFamily fam = params.family.measure.family;
  const bool interval_family = fam == MeasureFamily::Concurrence || fam == MeasureFamily::Cren;
  if (n > 3 && !interval_family && !options.comparator_only)
    throw UnsupportedError("verify: " + params.family.name() +
                           " has no certified one-to-group values for N > 3; use comparator-only mode");
  return verify(evaluate_chain(state, params.family, options.chain), params, options);
}

}  // namespace entmono
