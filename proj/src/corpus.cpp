#include "entmono/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "entmono/bounds.hpp"
#include "entmono/errors.hpp"
#include "entmono/format.hpp"
#include "entmono/measures.hpp"
#include "entmono/statelab.hpp"

namespace entmono {

namespace {

class Tracker {
 public:
  Tracker(SuiteResult& r) : r_(r) { r_.worst_slack = std::numeric_limits<double>::infinity(); }

  // A check passes when slack >= -tolerance.
  void check(double slack, const std::function<std::string()>& describe) {
    check(slack, slack >= -r_.tolerance, describe);
  }

  void check(double slack, bool ok, const std::function<std::string()>& describe) {
    ++r_.checks;
    r_.worst_slack = std::min(r_.worst_slack, slack);
    if (ok) return;
    ++r_.violations;
    if (!r_.first_violation) r_.first_violation = describe() + " slack=" + format_real(slack);
  }

  void finish() {
    if (r_.checks == 0) r_.worst_slack = 0.0;
  }

 private:
  SuiteResult& r_;
};

double rel(double diff, double scale) { return diff / std::max(1.0, std::abs(scale)); }

std::string amplitudes_text(const PureState& s) {
  std::ostringstream os;
  os << "[";
  const auto a = s.amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ",";
    os << "[" << format_real(a[i].real()) << "," << format_real(a[i].imag()) << "]";
  }
  os << "]";
  return os.str();
}

void run_lemma1(const CorpusSpec& spec, SuiteResult& r) {
  Tracker t(r);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t i = 0; i < r.samples; ++i) {
    std::mt19937_64 rng(derive_seed(spec.seed, i));
    double x = 4.0 * unit(rng);
    double y = 4.0 * unit(rng);
    if (y > x) std::swap(x, y);
    const double tt = 1.0 + 3.0 * unit(rng);
    const double s = unit(rng);
    const auto where = [&](double e) {
      return [=] {
        return "sample " + std::to_string(i) + " x=" + format_real(x) + " y=" + format_real(y) +
               " exponent=" + format_real(e);
      };
    };
    const double gx = power_gap(x, tt), gy = power_gap(y, tt);
    t.check(rel(gx - gy, gx), where(tt));
    const double hx = power_gap(x, s), hy = power_gap(y, s);
    t.check(rel(hy - hx, hy), where(s));
  }
  t.finish();
}

void run_ckw(const CorpusSpec& spec, SuiteResult& r) {
  Tracker t(r);
  const std::size_t a[] = {0};
  const std::size_t ab[] = {0, 1};
  const std::size_t ac[] = {0, 2};
  for (std::size_t i = 0; i < r.samples; ++i) {
    const PureState s = random_pure(3, derive_seed(spec.seed, i));
    const double c = concurrence_pure(s, a).value;
    const double cab = concurrence_two_qubit(reduce(s, ab)).value;
    const double cac = concurrence_two_qubit(reduce(s, ac)).value;
    t.check(c * c - cab * cab - cac * cac,
            [&] { return "sample " + std::to_string(i) + " state=" + amplitudes_text(s); });
  }
  t.finish();
}

void run_consistency(const CorpusSpec& spec, SuiteResult& r) {
  Tracker t(r);
  const std::size_t a[] = {0};
  for (std::size_t i = 0; i < r.samples; ++i) {
    const PureState s = random_pure(2, derive_seed(spec.seed, i));
    const double c = concurrence_pure(s, a).value;
    const auto where = [&](const std::string& what) {
      return [&, what] {
        return "sample " + std::to_string(i) + " " + what + " state=" + amplitudes_text(s);
      };
    };
    t.check(-std::abs(eof(s, a).value - f_eof(c * c)), where("eof"));
    for (double q : {2.0, 2.5, 3.0})
      t.check(-std::abs(tsallis(s, a, q).value - g_tsallis(c * c, q)),
              where("tsallis q=" + format_real(q)));
    for (double order : {2.0, 3.0})
      t.check(-std::abs(renyi(s, a, order).value - f_renyi(c, order)),
              where("renyi order=" + format_real(order)));
    t.check(-std::abs(concurrence_two_qubit(to_density(s)).value - c), where("spin-flip"));
    t.check(-std::abs(negativity(s, a).value - c), where("negativity"));
  }
  t.finish();
}

struct HierarchyCase {
  BoundFamily family;
  double alpha;
  double mu;
  double k;
};

HierarchyCase hierarchy_case(std::size_t i, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  HierarchyCase c;
  switch (i % 8) {
    case 0: c.family = BoundFamily::monogamy(MeasureKind::concurrence()); break;
    case 1: c.family = BoundFamily::monogamy(MeasureKind::cren()); break;
    case 2: c.family = BoundFamily::monogamy(MeasureKind::eof()); break;
    case 3: c.family = BoundFamily::monogamy(MeasureKind::tsallis(2.0 + unit(rng))); break;
    case 4: c.family = BoundFamily::monogamy(MeasureKind::renyi(2.0 + 2.0 * unit(rng))); break;
    case 5: c.family = BoundFamily::polygamy(MeasureKind::eof()); break;
    case 6: c.family = BoundFamily::polygamy(MeasureKind::tsallis(3.0 + unit(rng))); break;
    default: {
      const double lo = (std::sqrt(7.0) - 1.0) / 2.0, hi = (std::sqrt(13.0) - 1.0) / 2.0;
      c.family = BoundFamily::polygamy(MeasureKind::renyi(lo + (hi - lo) * unit(rng)));
    }
  }
  c.k = 0.1 + 0.9 * unit(rng);
  if (c.family.direction == Direction::Monogamy) {
    c.alpha = c.family.alpha_min + 4.0 * unit(rng);
    c.mu = 1.0 + 3.0 * unit(rng);
  } else {
    c.alpha = 1.0 - unit(rng);  // (0, 1]
    c.mu = 1.0 - 0.95 * unit(rng);
  }
  return c;
}

void run_hierarchy(const CorpusSpec& spec, SuiteResult& r) {
  Tracker t(r);
  for (std::size_t i = 0; i < r.samples; ++i) {
    std::mt19937_64 rng(derive_seed(spec.seed, i));
    const HierarchyCase c = hierarchy_case(i, rng);
    const double s = c.family.scale(c.alpha);
    const double ell = 1.0 / c.k;
    const double ours = coefficient_K(c.mu, ell, c.alpha, c.family);
    const double kf = std::expm1(s * std::log1p(c.k)) / std::pow(c.k, s);
    const double jf = std::expm1(s * std::log(2.0));
    const double at_mu1 = coefficient_K(1.0, ell, c.alpha, c.family);
    const double at_l1 = coefficient_K(1.0, 1.0, c.alpha, c.family);
    const auto where = [&](const char* what) {
      return [=] {
        return "sample " + std::to_string(i) + " " + what + " family=" + c.family.name() +
               " alpha=" + format_real(c.alpha) + " mu=" + format_real(c.mu) +
               " k=" + format_real(c.k);
      };
    };
    if (c.family.direction == Direction::Monogamy) {
      t.check(rel(ours - kf, ours), where("ours>=kf"));
      t.check(rel(kf - jf, kf), where("kf>=jf"));
      const double bigger = coefficient_K(c.mu + 0.25, ell, c.alpha, c.family);
      t.check(bigger - ours, bigger > ours, where("K increasing in mu"));
    } else {
      t.check(rel(kf - ours, kf), where("ours<=kf"));
      t.check(rel(jf - kf, jf), where("kf<=jf"));
      const double smaller = coefficient_K(0.75 * c.mu, ell, c.alpha, c.family);
      t.check(ours - smaller, ours > smaller, where("K increasing in mu"));
    }
    t.check(-std::abs(rel(at_mu1 - kf, kf)), where("mu=1 equals kf"));
    t.check(-std::abs(rel(at_l1 - jf, jf)), where("mu=l=1 equals jf"));
  }
  t.finish();
}

void run_lemma2(const CorpusSpec& spec, SuiteResult& r) {
  Tracker t(r);
  const std::size_t a[] = {0};
  const std::size_t ab[] = {0, 1};
  const std::size_t ac[] = {0, 2};
  const BoundFamily fam = BoundFamily::monogamy(MeasureKind::concurrence());
  for (std::size_t i = 0; i < r.samples; ++i) {
    const PureState s = random_pure(3, derive_seed(spec.seed, i));
    const double c = concurrence_pure(s, a).value;
    double x = concurrence_two_qubit(reduce(s, ab)).value;
    double y = concurrence_two_qubit(reduce(s, ac)).value;
    // label the parties so that C_AB >= C_AC, giving l* >= 1
    if (y > x) std::swap(x, y);
    double mu_star = 1.0, l_star = 1.0;
    if (y > 0.0) {
      l_star = std::max(1.0, (x * x) / (y * y));
      mu_star = std::max(1.0, (c * c - x * x) / (y * y));
    }
    for (double ell : {1.0, l_star}) {
      for (double alpha : {2.0, 2.5, 3.0, 4.0}) {
        const double k = coefficient_K(mu_star, ell, alpha, fam);
        const double slack = std::pow(c, alpha) - std::pow(x, alpha) - k * std::pow(y, alpha);
        t.check(slack, [&, ell, alpha] {
          return "sample " + std::to_string(i) + " alpha=" + format_real(alpha) +
                 " l=" + format_real(ell) + " mu=" + format_real(mu_star) +
                 " state=" + amplitudes_text(s);
        });
      }
    }
  }
  t.finish();
}

void run_grids(SuiteResult& r) {
  Tracker t(r);
  const double s2 = std::sqrt(2.0);
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i <= 100; ++i)
    for (int j = 0; j <= 100; ++j) {
      const double x = i / 100.0, y = j / 100.0;
      if (x * x + y * y <= 1.0) pts.emplace_back(x * x, y * y);
    }
  const auto at = [](const char* what, double u, double v) {
    return [=] { return std::string(what) + " x=" + format_real(u) + " y=" + format_real(v); };
  };
  for (const auto& [u, v] : pts) {
    t.check(std::pow(f_eof(u + v), s2) - std::pow(f_eof(u), s2) - std::pow(f_eof(v), s2),
            at("f^sqrt2 superadditive", u, v));
    t.check(f_eof(u) + f_eof(v) - f_eof(u + v), at("f subadditive", u, v));
    for (double q : {2.0, 2.25, 2.5, 2.75, 3.0})
      t.check(g_tsallis(u + v, q) - g_tsallis(u, q) - g_tsallis(v, q),
              at(("g superadditive q=" + format_real(q)).c_str(), u, v));
    for (double q : {1.25, 1.5, 1.75, 2.0, 3.0, 3.25, 3.5, 3.75, 4.0})
      t.check(g_tsallis(u, q) + g_tsallis(v, q) - g_tsallis(u + v, q),
              at(("g subadditive q=" + format_real(q)).c_str(), u, v));
  }

  // monotone nondecreasing on a 1e-3 grid of [0, 1]
  const std::vector<std::pair<std::string, std::function<double(double)>>> fns = {
      {"f_eof", [](double x) { return f_eof(x); }},
      {"g_2", [](double x) { return g_tsallis(x, 2.0); }},
      {"g_2.5", [](double x) { return g_tsallis(x, 2.5); }},
      {"g_3", [](double x) { return g_tsallis(x, 3.0); }},
      {"f_renyi_0.5", [](double x) { return f_renyi(x, 0.5); }},
      {"f_renyi_2", [](double x) { return f_renyi(x, 2.0); }},
      {"f_renyi_3", [](double x) { return f_renyi(x, 3.0); }},
  };
  for (const auto& [name, fn] : fns) {
    double prev = fn(0.0);
    for (int i = 1; i <= 1000; ++i) {
      const double x = i / 1000.0;
      const double cur = fn(x);
      t.check(cur - prev, at((name + " monotone").c_str(), x, 0.0));
      prev = cur;
    }
  }
  t.finish();
}

}  // namespace

std::string to_string(Suite s) {
  switch (s) {
    case Suite::Lemma1: return "lemma1";
    case Suite::Ckw: return "ckw";
    case Suite::Consistency: return "consistency";
    case Suite::Hierarchy: return "hierarchy";
    case Suite::Lemma2: return "lemma2";
    case Suite::Grids: return "grids";
  }
  return "?";
}

Suite parse_suite(const std::string& name) {
  for (Suite s : all_suites())
    if (to_string(s) == name) return s;
  throw ParameterError("unknown suite '" + name +
                       "' (expected lemma1, ckw, consistency, hierarchy, lemma2 or grids)");
}

std::vector<Suite> all_suites() {
  return {Suite::Lemma1, Suite::Ckw, Suite::Consistency, Suite::Hierarchy, Suite::Lemma2,
          Suite::Grids};
}

std::size_t default_samples(Suite s) {
  switch (s) {
    case Suite::Lemma1: return 100000;
    case Suite::Ckw: return 1000;
    case Suite::Consistency: return 1000;
    case Suite::Hierarchy: return 10000;
    case Suite::Lemma2: return 200;
    case Suite::Grids: return 1;
  }
  return 1;
}

double suite_tolerance(Suite s) {
  switch (s) {
    case Suite::Lemma1:
    case Suite::Hierarchy:
    case Suite::Grids: return 1e-12;
    case Suite::Ckw:
    case Suite::Consistency:
    case Suite::Lemma2: return 1e-9;
  }
  return 1e-9;
}

SuiteResult run_suite(const CorpusSpec& spec) {
  SuiteResult r;
  r.suite = to_string(spec.suite);
  r.seed = spec.seed;
  r.samples = spec.suite == Suite::Grids ? 1 : (spec.samples ? spec.samples : default_samples(spec.suite));
  r.tolerance = suite_tolerance(spec.suite);
  switch (spec.suite) {
    case Suite::Lemma1: run_lemma1(spec, r); break;
    case Suite::Ckw: run_ckw(spec, r); break;
    case Suite::Consistency: run_consistency(spec, r); break;
    case Suite::Hierarchy: run_hierarchy(spec, r); break;
    case Suite::Lemma2: run_lemma2(spec, r); break;
    case Suite::Grids: run_grids(r); break;
  }
  return r;
}

}  // namespace entmono
