#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "entmono/bounds.hpp"
#include "entmono/cli.hpp"
#include "entmono/corpus.hpp"
#include "entmono/errors.hpp"
#include "entmono/format.hpp"
#include "entmono/state_io.hpp"
#include "entmono/sweep.hpp"

namespace entmono::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Reals rounded to 12 significant digits; non-finite values become null.
ordered_json real(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::strtod(format_real(v).c_str(), nullptr);
}

ordered_json reals(const std::vector<double>& v) {
  ordered_json a = ordered_json::array();
  for (double x : v) a.push_back(real(x));
  return a;
}

ordered_json value_json(const MeasureValue& v) {
  ordered_json j;
  j["value"] = real(v.value);
  j["certification"] = to_string(v.cert);
  j["lo"] = real(v.lo);
  j["hi"] = real(v.hi);
  return j;
}

ordered_json optional_value_json(const std::optional<MeasureValue>& v) {
  return v ? value_json(*v) : ordered_json(nullptr);
}

// Common state-source options.
struct StateSource {
  std::string preset;
  std::string path;

  PureState load() const {
    if (!preset.empty() && !path.empty())
      throw ParameterError("give either --preset or --state, not both");
    if (!preset.empty()) return preset_state(preset);
    if (!path.empty()) return load_state_file(path);
    throw ParameterError("a state is required (--preset or --state)");
  }

  std::string label() const { return preset.empty() ? "file:" + path : preset; }

  void attach(CLI::App* cmd) {
    cmd->add_option("--preset", preset, "Preset state: example1, bell, ghz:N, w:N");
    cmd->add_option("--state", path, "JSON state file");
  }
};

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw ParameterError("cannot open output file '" + out_path + "'");
  f << text;
  f.flush();
  if (!f) throw ParameterError("failed writing output file '" + out_path + "'");
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

MeasureKind parse_kind(const std::string& name, std::optional<double> q, std::optional<double> order) {
  const bool assisted = name.starts_with("assisted-");
  const std::string base = assisted ? name.substr(9) : name;
  MeasureKind k;
  if (base == "concurrence") k = MeasureKind::concurrence();
  else if (base == "cren") k = MeasureKind::cren();
  else if (base == "eof") k = MeasureKind::eof();
  else if (base == "tsallis") k = MeasureKind::tsallis(q.value_or(2.0));
  else if (base == "renyi") k = MeasureKind::renyi(order.value_or(2.0));
  else
    throw ParameterError("unknown measure kind '" + name +
                         "' (concurrence, cren, eof, tsallis, renyi, assisted-eof, "
                         "assisted-tsallis, assisted-renyi)");
  if (assisted) k = k.as_assisted();
  k.validate();
  return k;
}

std::string letters(const std::vector<std::size_t>& idx) {
  std::string s;
  for (std::size_t i : idx) s += static_cast<char>('A' + i);
  return s;
}

// ---------------------------------------------------------------------------
// measure

struct MeasureArgs {
  StateSource source;
  std::string kind = "concurrence";
  std::string partition;
  std::optional<double> q;
  std::optional<double> order;
  std::size_t budget = 2000;
  std::uint64_t seed = 1;
  std::string out_path;
};

MeasureValue measure_partition(const PureState& s, const Partition& p, MeasureKind kind,
                               const MeasureArgs& a) {
  const std::size_t n = s.subsystems();
  std::vector<std::size_t> kept = p.left;
  kept.insert(kept.end(), p.right.begin(), p.right.end());
  std::sort(kept.begin(), kept.end());
  if (kept.size() == n) return measure(s, p.left, kind);

  const DensityMatrix rho = reduce(s, kept);
  const auto position = [&](std::size_t q) {
    return static_cast<std::size_t>(std::find(kept.begin(), kept.end(), q) - kept.begin());
  };
  if (kept.size() == 2) {
    if (kind.assisted) return assisted_estimate(rho, kind, a.budget, a.seed);
    return measure(rho, kind);  // symmetric under swapping the two qubits
  }
  const bool conc_like =
      kind.family == MeasureFamily::Concurrence || kind.family == MeasureFamily::Cren;
  if (conc_like && !kind.assisted) {
    if (p.left.size() == 1) return concurrence_interval(rho, position(p.left[0]));
    if (p.right.size() == 1) return concurrence_interval(rho, position(p.right[0]));
  }
  throw UnsupportedError("measure: " + kind.name() + " of a mixed " +
                         std::to_string(kept.size()) + "-qubit cut " + letters(p.left) + "|" +
                         letters(p.right) + " has no certified algorithm");
}

int cmd_measure(const MeasureArgs& a, std::ostream& out) {
  const PureState s = a.source.load();
  const MeasureKind kind = parse_kind(a.kind, a.q, a.order);
  const Partition p = parse_partition(a.partition, s.subsystems());
  const MeasureValue v = measure_partition(s, p, kind, a);

  ordered_json j;
  j["command"] = "measure";
  j["state"] = a.source.label();
  j["n_qubits"] = s.subsystems();
  j["kind"] = kind.name();
  j["partition"] = letters(p.left) + "|" + letters(p.right);
  if (kind.assisted) {
    j["budget"] = a.budget;
    j["seed"] = a.seed;
  }
  const ordered_json vj = value_json(v);
  for (const auto& [key, val] : vj.items()) j[key] = val;
  emit(dump(j), a.out_path, out);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
  StateSource source;
  std::string family = "concurrence";
  std::optional<double> q;
  std::optional<double> order;
  std::optional<double> alpha_min;
  std::optional<double> alpha_max;
  std::size_t steps = 61;
  std::string bounds = "ours,kf,jf,ckw";
  double k = 0.5;
  std::optional<double> mu;
  std::optional<double> ell;
  bool auto_params = false;
  std::optional<std::size_t> m_split;
  std::uint64_t seed = 1;
  std::string out_path;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  if (a.auto_params && a.ell) throw ParameterError("--auto and --ell are mutually exclusive");
  const PureState s = a.source.load();
  SweepSpec spec;
  spec.family = BoundFamily::monogamy(parse_kind(a.family, a.q, a.order));
  spec.alpha_min = a.alpha_min.value_or(spec.family.alpha_min);
  spec.alpha_max = a.alpha_max.value_or(spec.alpha_min + 3.0);
  spec.steps = a.steps;
  spec.columns = parse_columns(a.bounds);
  spec.k = a.k;
  spec.mu = a.mu;
  spec.ell = a.ell;
  spec.use_extracted_ell = a.auto_params;
  spec.split_m = a.m_split;
  const auto rows = run_sweep(s, spec);
  emit(sweep_csv(rows, spec.columns), a.out_path, out);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  StateSource source;
  std::string theorem;
  std::optional<double> q;
  std::optional<double> order;
  std::optional<double> alpha;
  std::string mu;
  std::string ell;
  bool auto_params = false;
  std::optional<std::size_t> m_split;
  double k = 0.5;
  bool comparator_only = false;
  std::size_t budget = 2000;
  std::uint64_t seed = 1;
  std::string out_path;
};

ordered_json report_json(const BoundReport& r, const TheoremSelector& t, const VerifyArgs& a,
                         const std::vector<StepExtraction>& extraction) {
  ordered_json j;
  j["command"] = "verify";
  j["theorem"] = t.name;
  j["family"] = r.params.family.name();
  j["state"] = a.source.label();
  j["n_qubits"] = r.chain.qubits();
  j["alpha"] = real(r.params.alpha);
  j["form"] = t.split_form ? "split" : "all";
  j["split_m"] = r.params.split_m ? ordered_json(*r.params.split_m) : ordered_json(nullptr);
  j["mu"] = reals(r.params.mu);
  j["ell"] = reals(r.params.ell);

  ordered_json ex = ordered_json::array();
  for (const StepExtraction& e : extraction) {
    ordered_json x;
    x["step"] = e.step;
    x["branch"] = e.branch == Branch::AbDominant ? "pair-dominant" : "tail-dominant";
    x["status"] = to_string(e.status);
    x["mu_star"] = e.mu ? real(*e.mu) : ordered_json(nullptr);
    x["ell_star"] = e.ell ? real(*e.ell) : ordered_json(nullptr);
    x["heuristic"] = e.heuristic;
    ex.push_back(x);
  }
  j["extraction"] = ex;

  ordered_json chain;
  chain["tail"] = ordered_json::array();
  chain["pairs"] = ordered_json::array();
  for (const auto& v : r.chain.tail) chain["tail"].push_back(optional_value_json(v));
  for (const auto& v : r.chain.pairs) chain["pairs"].push_back(optional_value_json(v));
  j["chain"] = chain;

  j["lhs"] = real(r.lhs);
  j["rhs"] = real(r.rhs);
  j["coefficients"] = reals(r.coefficients);
  ordered_json terms = ordered_json::array();
  for (const BoundTerm& t : r.terms) {
    ordered_json x;
    x["pair"] = t.pair;
    x["coefficient"] = real(t.coefficient);
    x["value"] = real(t.value);
    x["contribution"] = real(t.contribution);
    terms.push_back(x);
  }
  j["terms"] = terms;
  j["priors"] = {{"ckw", real(r.prior_ckw)}, {"jf", real(r.prior_jf)},
                 {"kf", real(r.prior_kf)},   {"k", real(r.k)}};

  ordered_json clauses = ordered_json::array();
  for (const ClauseCheck& c : r.conditions.clauses) {
    ordered_json x;
    x["step"] = c.step;
    x["clause"] = c.text;
    x["status"] = to_string(c.status);
    x["slack_lo"] = real(c.slack_lo);
    x["slack_hi"] = real(c.slack_hi);
    if (!c.note.empty()) x["note"] = c.note;
    clauses.push_back(x);
  }
  j["conditions"] = {{"overall", to_string(r.conditions.overall())}, {"clauses", clauses}};
  j["margin"] = real(r.margin);
  j["comparator_only"] = r.comparator_only;
  if (r.params.family.measure.assisted) {
    j["budget"] = a.budget;
    j["seed"] = a.seed;
  }
  j["verdict"] = to_string(r.verdict());
  return j;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const TheoremSelector t = parse_theorem(a.theorem, a.q, a.order);
  if (a.auto_params && (!a.mu.empty() || !a.ell.empty()))
    throw ParameterError("--auto cannot be combined with --mu or --ell");
  if (!t.split_form && a.m_split)
    throw ParameterError(t.name + " is an all-branch form; --m-split applies to split forms only");

  const PureState s = a.source.load();
  const std::size_t n = s.subsystems();
  if (n < 3) throw ParameterError("verify: need a state of N >= 3 qubits");
  const std::size_t steps = n - 2;

  std::optional<std::size_t> split;
  if (t.split_form) split = a.m_split.value_or(1);
  const double alpha = a.alpha.value_or(t.family.direction == Direction::Monogamy
                                            ? t.family.alpha_min
                                            : t.family.alpha_max);

  VerifyOptions opts;
  opts.k = a.k;
  opts.comparator_only = a.comparator_only;
  opts.chain.assisted_budget = a.budget;
  opts.chain.seed = a.seed;
  if (!(a.k > 0.0 && a.k <= 1.0)) throw ParameterError("--k must lie in (0, 1]");

  const MeasureFamily fam = t.family.measure.family;
  const bool interval_family = fam == MeasureFamily::Concurrence || fam == MeasureFamily::Cren;
  if (n > 3 && !interval_family && !a.comparator_only)
    throw UnsupportedError(
        "verify: " + t.family.name() + " needs certified one-to-group values M(A|B_r..B_" +
        std::to_string(n - 1) + ") for N > 3, which are unavailable; rerun with --comparator-only");
  const Chain chain = evaluate_chain(s, t.family, opts.chain);
  if (split && (*split < 1 || *split > steps))
    throw ParameterError("--m-split must lie in [1, " + std::to_string(steps) + "]");
  const auto extraction = extract_mu_l(chain, t.family, split);

  BoundParams params = auto_params(chain, t.family, alpha, split);
  if (!a.mu.empty()) params.mu = parse_real_list(a.mu, steps, "--mu");
  if (!a.ell.empty()) params.ell = parse_real_list(a.ell, steps, "--ell");

  const BoundReport r = verify(chain, params, opts);
  emit(dump(report_json(r, t, a, extraction)), a.out_path, out);
  switch (r.verdict()) {
    case Verdict::Pass: return kExitOk;
    case Verdict::ConditionsFail: return kExitNotApplicable;
    case Verdict::Undecidable: return kExitUndecidable;
    case Verdict::Violation: return kExitViolation;
  }
  return kExitError;
}

// ---------------------------------------------------------------------------
// corpus

struct CorpusArgs {
  std::string suite = "all";
  std::size_t samples = 0;
  std::uint64_t seed = 42;
  std::string out_path;
};

int cmd_corpus(const CorpusArgs& a, std::ostream& out) {
  std::vector<Suite> suites;
  if (a.suite == "all") suites = all_suites();
  else suites.push_back(parse_suite(a.suite));

  ordered_json j;
  j["command"] = "corpus";
  j["seed"] = a.seed;
  ordered_json arr = ordered_json::array();
  std::size_t total = 0;
  for (Suite s : suites) {
    const SuiteResult r = run_suite({s, a.samples, a.seed});
    ordered_json x;
    x["suite"] = r.suite;
    x["seed"] = r.seed;
    x["samples"] = r.samples;
    x["checks"] = r.checks;
    x["passed_checks"] = r.checks - r.violations;
    x["violations"] = r.violations;
    x["worst_slack"] = real(r.worst_slack);
    x["tolerance"] = real(r.tolerance);
    x["status"] = r.passed() ? "pass" : "fail";
    x["first_violation"] = r.first_violation ? ordered_json(*r.first_violation) : ordered_json(nullptr);
    arr.push_back(x);
    total += r.violations;
  }
  j["suites"] = arr;
  j["violations"] = total;
  emit(dump(j), a.out_path, out);
  return total == 0 ? kExitOk : kExitViolation;
}

}  // namespace

// ---------------------------------------------------------------------------
// parsing helpers

Partition parse_partition(const std::string& text, std::size_t n_qubits) {
  const auto bar = text.find('|');
  if (bar == std::string::npos || text.find('|', bar + 1) != std::string::npos)
    throw ParameterError("partition '" + text + "' must look like A|BC");
  std::vector<bool> used(n_qubits, false);
  auto side = [&](const std::string& s) {
    std::vector<std::size_t> out;
    for (char ch : s) {
      const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      if (up < 'A' || up > 'Z') throw ParameterError("partition: bad character in '" + text + "'");
      const std::size_t idx = static_cast<std::size_t>(up - 'A');
      if (idx >= n_qubits)
        throw ParameterError("partition: qubit " + std::string(1, up) + " does not exist in a " +
                             std::to_string(n_qubits) + "-qubit state");
      if (used[idx]) throw ParameterError("partition: qubit " + std::string(1, up) + " repeated");
      used[idx] = true;
      out.push_back(idx);
    }
    if (out.empty()) throw ParameterError("partition: both sides must be nonempty");
    std::sort(out.begin(), out.end());
    return out;
  };
  Partition p;
  p.left = side(text.substr(0, bar));
  p.right = side(text.substr(bar + 1));
  return p;
}

std::vector<std::string> theorem_names() {
  static const char* suffix[] = {"concurrence", "eof", "eoa", "cren",
                                 "tsallis",     "teoa", "renyi", "reoa"};
  std::vector<std::string> out;
  for (int i = 0; i < 16; ++i) out.push_back("thm" + std::to_string(i + 1) + "-" + suffix[i / 2]);
  return out;
}

TheoremSelector parse_theorem(const std::string& name, std::optional<double> q,
                              std::optional<double> order) {
  const auto names = theorem_names();
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) {
    std::string list;
    for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
    throw ParameterError("unknown theorem selector '" + name + "' (expected one of " + list + ")");
  }
  TheoremSelector t;
  t.number = static_cast<int>(it - names.begin()) + 1;
  t.name = name;
  t.split_form = t.number % 2 == 1;
  switch ((t.number - 1) / 2) {
    case 0: t.family = BoundFamily::monogamy(MeasureKind::concurrence()); break;
    case 1: t.family = BoundFamily::monogamy(MeasureKind::eof()); break;
    case 2: t.family = BoundFamily::polygamy(MeasureKind::eof()); break;
    case 3: t.family = BoundFamily::monogamy(MeasureKind::cren()); break;
    case 4: t.family = BoundFamily::monogamy(MeasureKind::tsallis(q.value_or(2.0))); break;
    case 5: t.family = BoundFamily::polygamy(MeasureKind::tsallis(q.value_or(2.0))); break;
    case 6: t.family = BoundFamily::monogamy(MeasureKind::renyi(order.value_or(2.0))); break;
    default:
      if (!order) throw ParameterError(name + " requires --aacute");
      t.family = BoundFamily::polygamy(MeasureKind::renyi(*order));
  }
  return t;
}

std::vector<double> parse_real_list(const std::string& text, std::size_t count, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end != item.c_str() + item.size() || !std::isfinite(v))
      throw ParameterError(std::string(what) + ": '" + item + "' is not a number");
    out.push_back(v);
  }
  if (out.size() == 1) out.assign(count, out[0]);
  if (out.size() != count)
    throw ParameterError(std::string(what) + ": expected 1 or " + std::to_string(count) +
                         " values, got " + std::to_string(out.size()));
  return out;
}

// ---------------------------------------------------------------------------

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monogamy and polygamy bounds for multiqubit entanglement", "entmono"};
  app.require_subcommand(1);

  MeasureArgs ma;
  auto* measure_cmd = app.add_subcommand("measure", "Evaluate an entanglement measure");
  ma.source.attach(measure_cmd);
  measure_cmd->add_option("--kind", ma.kind, "Measure kind")->capture_default_str();
  measure_cmd->add_option("--partition", ma.partition, "Cut such as A|BC or A|B")->required();
  measure_cmd->add_option("--q", ma.q, "Tsallis order q");
  measure_cmd->add_option("--aacute", ma.order, "Renyi order");
  measure_cmd->add_option("--budget", ma.budget, "Assisted-estimator evaluations")->capture_default_str();
  measure_cmd->add_option("--seed", ma.seed, "Seed for the assisted estimator")->capture_default_str();
  measure_cmd->add_option("--out", ma.out_path, "Write JSON to this file");

  SweepArgs sa;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate bounds over a range of alpha as CSV");
  sa.source.attach(sweep_cmd);
  sweep_cmd->add_option("--family", sa.family, "concurrence, cren, eof, tsallis, renyi")->capture_default_str();
  sweep_cmd->add_option("--q", sa.q, "Tsallis order q");
  sweep_cmd->add_option("--aacute", sa.order, "Renyi order");
  sweep_cmd->add_option("--alpha-min", sa.alpha_min, "Smallest alpha (default: family minimum)");
  sweep_cmd->add_option("--alpha-max", sa.alpha_max, "Largest alpha (default: alpha-min + 3)");
  sweep_cmd->add_option("--steps", sa.steps, "Grid points")->capture_default_str();
  sweep_cmd->add_option("--bounds", sa.bounds, "Columns: subset of ours,kf,jf,ckw")->capture_default_str();
  sweep_cmd->add_option("--k", sa.k, "k in (0,1] for the k-parametrized bound; l defaults to 1/k")->capture_default_str();
  sweep_cmd->add_option("--mu", sa.mu, "mu for every step (default: extracted mu*)");
  sweep_cmd->add_option("--ell", sa.ell, "l for every step (default: 1/k)");
  sweep_cmd->add_flag("--auto", sa.auto_params, "Use extracted l* instead of 1/k");
  sweep_cmd->add_option("--m-split", sa.m_split, "Split index m");
  sweep_cmd->add_option("--seed", sa.seed, "Accepted for uniformity; sweeps are deterministic");
  sweep_cmd->add_option("--out", sa.out_path, "Write CSV to this file");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Check a bound and its hypotheses on a state");
  va.source.attach(verify_cmd);
  verify_cmd->add_option("--theorem", va.theorem, "Selector thm1-concurrence .. thm16-reoa")->required();
  verify_cmd->add_option("--q", va.q, "Tsallis order q");
  verify_cmd->add_option("--aacute", va.order, "Renyi order");
  verify_cmd->add_option("--alpha", va.alpha, "Exponent alpha (default: family minimum, or 1 for polygamy)");
  verify_cmd->add_option("--mu", va.mu, "mu value or comma list per step (default: extracted)");
  verify_cmd->add_option("--ell", va.ell, "l value or comma list per step (default: extracted)");
  verify_cmd->add_flag("--auto", va.auto_params, "Use extracted (mu*, l*) for every step");
  verify_cmd->add_option("--m-split", va.m_split, "Split index m for split forms (default 1)");
  verify_cmd->add_option("--k", va.k, "k for the k-parametrized comparator")->capture_default_str();
  verify_cmd->add_flag("--comparator-only", va.comparator_only,
                       "Allow uncertified regimes; conditions are reported as undecidable");
  verify_cmd->add_option("--budget", va.budget, "Assisted-estimator evaluations")->capture_default_str();
  verify_cmd->add_option("--seed", va.seed, "Seed for the assisted estimator")->capture_default_str();
  verify_cmd->add_option("--out", va.out_path, "Write JSON to this file");

  CorpusArgs ca;
  auto* corpus_cmd = app.add_subcommand("corpus", "Run seeded property suites");
  corpus_cmd->add_option("--suite", ca.suite, "lemma1, ckw, consistency, hierarchy, lemma2, grids or all")
      ->capture_default_str();
  corpus_cmd->add_option("--samples", ca.samples, "Samples per suite (default: suite default)")
      ->check(CLI::PositiveNumber);
  corpus_cmd->add_option("--seed", ca.seed, "Master seed")->capture_default_str();
  corpus_cmd->add_option("--out", ca.out_path, "Write JSON to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*measure_cmd) return cmd_measure(ma, out);
    if (*sweep_cmd) return cmd_sweep(sa, out);
    if (*verify_cmd) return cmd_verify(va, out);
    if (*corpus_cmd) return cmd_corpus(ca, out);
  } catch (const std::exception& e) {
    err << "entmono: error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace entmono::cli
