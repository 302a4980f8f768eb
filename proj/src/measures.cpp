#include "entmono/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "entmono/errors.hpp"
#include "entmono/format.hpp"

namespace entmono {

namespace {

constexpr double kDomainSlack = 1e-12;

double clamp_unit(double x, const char* what) {
  if (!(x >= -kDomainSlack && x <= 1.0 + kDomainSlack))
    throw DomainError(std::string(what) + ": argument " + std::to_string(x) + " outside [0, 1]");
  return std::clamp(x, 0.0, 1.0);
}

void require_order(double q, const char* what) {
  if (!(q > 0.0) || q == 1.0 || !std::isfinite(q))
    throw DomainError(std::string(what) + ": order must be > 0 and != 1");
}

void require_two_qubit(const DensityMatrix& rho, const char* what) {
  if (rho.dims() != SubsystemDims::qubits(2))
    throw DimensionError(std::string(what) + ": expected a 2x2 (two-qubit) state");
}

DensityMatrix smaller_marginal(const PureState& s, std::span<const std::size_t> side_a) {
  const auto side_b = complement(side_a, s.subsystems());
  const auto& dims = s.dims();
  // both marginals of a pure state share their nonzero spectrum
  const bool use_a = dims.subset(side_a).total() <= dims.subset(side_b).total();
  return reduce(s, use_a ? side_a : std::span<const std::size_t>(side_b));
}

std::vector<double> reduced_spectrum(const PureState& s, std::span<const std::size_t> side_a) {
  return clamp_psd_spectrum(herm_eigvals(smaller_marginal(s, side_a).matrix()));
}

// Wootters' lambdas as the singular values of tau = W^T (sy x sy) W, where the
// columns of W are sqrt(e_k) v_k for the numerically nonzero eigenpairs of rho.
// This is the same spectrum as sqrt(eig(rho rho~)) without taking square roots
// of roundoff-level eigenvalues.
double spin_flip_concurrence(const CMatrix& rho) {
  const HermEigen eig = herm_eig(rho);
  const double scale = std::max(eig.values.front(), 0.0);
  const double cutoff = 64.0 * std::numeric_limits<double>::epsilon() * std::max(scale, 1.0);
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < 4; ++k)
    if (eig.values[k] > cutoff) kept.push_back(k);
  if (kept.empty()) return 0.0;

  const std::size_t r = kept.size();
  CMatrix w(4, r);
  for (std::size_t j = 0; j < r; ++j) {
    const double amp = std::sqrt(eig.values[kept[j]]);
    for (std::size_t i = 0; i < 4; ++i) w(i, j) = amp * eig.vectors(i, kept[j]);
  }
  // (sy x sy) is real: rows (0,3) and (1,2) swapped with signs -1 / +1.
  CMatrix yw(4, r);
  for (std::size_t j = 0; j < r; ++j) {
    yw(0, j) = -w(3, j);
    yw(1, j) = w(2, j);
    yw(2, j) = w(1, j);
    yw(3, j) = -w(0, j);
  }
  const CMatrix tau = w.transpose() * yw;
  std::vector<double> lambda = singular_values(tau);
  lambda.resize(4, 0.0);
  std::sort(lambda.begin(), lambda.end(), std::greater<>{});
  return std::clamp(lambda[0] - lambda[1] - lambda[2] - lambda[3], 0.0, 1.0);
}

}  // namespace

void MeasureKind::validate() const {
  if (family == MeasureFamily::Tsallis || family == MeasureFamily::Renyi) {
    if (!(param > 0.0) || param == 1.0 || !std::isfinite(param))
      throw ParameterError(name() + ": order must be > 0 and != 1");
  }
  if (assisted && (family == MeasureFamily::Concurrence || family == MeasureFamily::Cren))
    throw ParameterError("assisted measures are defined for EoF, Tsallis and Renyi only");
}

std::string MeasureKind::name() const {
  std::string base;
  switch (family) {
    case MeasureFamily::Concurrence: base = "concurrence"; break;
    case MeasureFamily::Cren: base = "cren"; break;
    case MeasureFamily::Eof: base = "eof"; break;
    case MeasureFamily::Tsallis: base = "tsallis(q=" + format_real(param) + ")"; break;
    case MeasureFamily::Renyi: base = "renyi(order=" + format_real(param) + ")"; break;
  }
  return assisted ? "assisted-" + base : base;
}

std::string to_string(Certification c) {
  switch (c) {
    case Certification::Exact: return "exact";
    case Certification::Interval: return "interval";
    case Certification::Heuristic: return "heuristic";
  }
  return "?";
}

std::vector<std::size_t> complement(std::span<const std::size_t> side_a, std::size_t n) {
  if (side_a.empty() || side_a.size() >= n)
    throw ParameterError("partition: side A must be a nonempty proper subset");
  std::vector<bool> in_a(n, false);
  for (std::size_t i = 0; i < side_a.size(); ++i) {
    if (side_a[i] >= n) throw ParameterError("partition: subsystem index out of range");
    if (i > 0 && side_a[i] <= side_a[i - 1])
      throw ParameterError("partition: indices must be sorted and unique");
    in_a[side_a[i]] = true;
  }
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < n; ++k)
    if (!in_a[k]) rest.push_back(k);
  return rest;
}

// ---------------------------------------------------------------------------
// scalar helpers

double binary_entropy(double x) {
  x = clamp_unit(x, "binary_entropy");
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

double f_eof(double x) {
  x = clamp_unit(x, "f_eof");
  return binary_entropy((1.0 + std::sqrt(1.0 - x)) / 2.0);
}

double g_tsallis(double x, double q) {
  x = clamp_unit(x, "g_tsallis");
  require_order(q, "g_tsallis");
  const double s = std::sqrt(1.0 - x);
  const double hi = (1.0 + s) / 2.0;
  const double lo = (1.0 - s) / 2.0;
  return (1.0 - std::pow(hi, q) - std::pow(lo, q)) / (q - 1.0);
}

double f_renyi(double x, double order) {
  x = clamp_unit(x, "f_renyi");
  require_order(order, "f_renyi");
  const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
  const double lo = (1.0 - s) / 2.0;
  const double hi = (1.0 + s) / 2.0;
  return std::log2(std::pow(lo, order) + std::pow(hi, order)) / (1.0 - order);
}

double von_neumann_entropy(std::span<const double> spectrum) {
  double h = 0.0;
  for (double e : clamp_psd_spectrum({spectrum.begin(), spectrum.end()}))
    if (e > 0.0) h -= e * std::log2(e);
  return std::max(h, 0.0);
}

double tsallis_entropy(std::span<const double> spectrum, double q) {
  require_order(q, "tsallis_entropy");
  double t = 0.0;
  for (double e : clamp_psd_spectrum({spectrum.begin(), spectrum.end()}))
    if (e > 0.0) t += std::pow(e, q);
  return std::max((1.0 - t) / (q - 1.0), 0.0);
}

double renyi_entropy(std::span<const double> spectrum, double order) {
  require_order(order, "renyi_entropy");
  double t = 0.0;
  for (double e : clamp_psd_spectrum({spectrum.begin(), spectrum.end()}))
    if (e > 0.0) t += std::pow(e, order);
  return std::max(std::log2(t) / (1.0 - order), 0.0);
}

// ---------------------------------------------------------------------------
// measures

MeasureValue concurrence_pure(const PureState& s, std::span<const std::size_t> side_a) {
  const double purity = smaller_marginal(s, side_a).purity();
  return MeasureValue::exact(std::sqrt(std::max(0.0, 2.0 * (1.0 - purity))));
}

MeasureValue concurrence_two_qubit(const DensityMatrix& rho) {
  require_two_qubit(rho, "concurrence_two_qubit");
  return MeasureValue::exact(spin_flip_concurrence(rho.matrix()));
}

MeasureValue cren_two_qubit(const DensityMatrix& rho) {
  require_two_qubit(rho, "cren_two_qubit");
  return concurrence_two_qubit(rho);
}

MeasureValue concurrence_interval(const DensityMatrix& rho, std::size_t a) {
  const auto& dims = rho.dims();
  for (std::size_t d : dims.dims())
    if (d != 2) throw DimensionError("concurrence_interval: qubit registers only");
  if (dims.count() < 3)
    throw DimensionError("concurrence_interval: need qubit A plus at least two more qubits");
  if (a >= dims.count()) throw DimensionError("concurrence_interval: qubit index out of range");

  const std::size_t single[] = {a};
  const CMatrix rho_a = partial_trace(rho.matrix(), dims, single);
  double purity_a = 0.0;
  for (const cplx& z : rho_a.entries()) purity_a += std::norm(z);
  const double hi = std::sqrt(std::max(0.0, 2.0 * (1.0 - purity_a)));

  if (rho.purity() >= 1.0 - 1e-10) return MeasureValue::interval(hi, hi);

  double sum_sq = 0.0;
  for (std::size_t b = 0; b < dims.count(); ++b) {
    if (b == a) continue;
    const std::size_t pair[] = {std::min(a, b), std::max(a, b)};
    const DensityMatrix rho_ab(partial_trace(rho.matrix(), dims, pair), SubsystemDims::qubits(2));
    const double c = concurrence_two_qubit(rho_ab).value;
    sum_sq += c * c;
  }
  return MeasureValue::interval(std::sqrt(sum_sq), hi);
}

MeasureValue negativity(const DensityMatrix& rho, std::span<const std::size_t> sides) {
  if (sides.empty()) throw DimensionError("negativity: no subsystem to transpose");
  CMatrix pt = rho.matrix();
  for (std::size_t s : sides) pt = partial_transpose(pt, rho.dims(), s);
  double n = trace_norm(pt) - 1.0;
  if (n < 0.0 && n >= -kDomainSlack) n = 0.0;
  return MeasureValue::exact(std::max(n, 0.0));
}

MeasureValue negativity(const PureState& s, std::span<const std::size_t> side_a) {
  complement(side_a, s.subsystems());  // validates the cut
  return negativity(to_density(s), side_a);
}

MeasureValue eof(const PureState& s, std::span<const std::size_t> side_a) {
  return MeasureValue::exact(von_neumann_entropy(reduced_spectrum(s, side_a)));
}

MeasureValue eof(const DensityMatrix& rho) {
  if (rho.dims() != SubsystemDims::qubits(2))
    throw UnsupportedError("eof: mixed states are supported only for two qubits");
  const double c = concurrence_two_qubit(rho).value;
  return MeasureValue::exact(f_eof(c * c));
}

MeasureValue tsallis(const PureState& s, std::span<const std::size_t> side_a, double q) {
  return MeasureValue::exact(tsallis_entropy(reduced_spectrum(s, side_a), q));
}

MeasureValue tsallis(const DensityMatrix& rho, double q) {
  require_order(q, "tsallis");
  if (rho.dims() != SubsystemDims::qubits(2))
    throw UnsupportedError("tsallis: mixed states are supported only for two qubits");
  if (q < kTsallisWindowLo || q > kTsallisWindowHi)
    throw UnsupportedError("tsallis: q = " + format_real(q) +
                           " is outside [(5-sqrt13)/2, (5+sqrt13)/2], where the "
                           "mixed two-qubit closed form holds");
  const double c = concurrence_two_qubit(rho).value;
  return MeasureValue::exact(g_tsallis(c * c, q));
}

MeasureValue renyi(const PureState& s, std::span<const std::size_t> side_a, double order) {
  return MeasureValue::exact(renyi_entropy(reduced_spectrum(s, side_a), order));
}

MeasureValue renyi(const DensityMatrix& rho, double order) {
  require_order(order, "renyi");
  if (rho.dims() != SubsystemDims::qubits(2))
    throw UnsupportedError("renyi: mixed states are supported only for two qubits");
  return MeasureValue::exact(f_renyi(concurrence_two_qubit(rho).value, order));
}

MeasureValue measure(const PureState& s, std::span<const std::size_t> side_a, MeasureKind kind) {
  kind.validate();
  switch (kind.family) {
    case MeasureFamily::Concurrence: return concurrence_pure(s, side_a);
    // on a 2 x d pure state the negativity equals the concurrence; in general
    // the convex roof of a pure state is the pure-state negativity itself
    case MeasureFamily::Cren: return negativity(s, side_a);
    case MeasureFamily::Eof: return eof(s, side_a);
    case MeasureFamily::Tsallis: return tsallis(s, side_a, kind.param);
    case MeasureFamily::Renyi: return renyi(s, side_a, kind.param);
  }
  throw ParameterError("measure: unknown family");
}

MeasureValue measure(const DensityMatrix& rho, MeasureKind kind) {
  kind.validate();
  if (kind.assisted)
    throw UnsupportedError("measure: assisted measures of mixed states need assisted_estimate");
  const bool two_qubit = rho.dims() == SubsystemDims::qubits(2);
  switch (kind.family) {
    case MeasureFamily::Concurrence:
    case MeasureFamily::Cren:
      // the pure-state negativity and concurrence coincide whenever side A is
      // a qubit, so their convex roofs coincide as well
      return two_qubit ? concurrence_two_qubit(rho) : concurrence_interval(rho, 0);
    case MeasureFamily::Eof: return eof(rho);
    case MeasureFamily::Tsallis: return tsallis(rho, kind.param);
    case MeasureFamily::Renyi: return renyi(rho, kind.param);
  }
  throw ParameterError("measure: unknown family");
}

double pure_measure_from_concurrence(double c, MeasureKind kind) {
  c = clamp_unit(c, "pure_measure_from_concurrence");
  switch (kind.family) {
    case MeasureFamily::Concurrence:
    case MeasureFamily::Cren: return c;
    case MeasureFamily::Eof: return f_eof(c * c);
    case MeasureFamily::Tsallis: return g_tsallis(c * c, kind.param);
    case MeasureFamily::Renyi: return f_renyi(c, kind.param);
  }
  throw ParameterError("pure_measure_from_concurrence: unknown family");
}

}  // namespace entmono
