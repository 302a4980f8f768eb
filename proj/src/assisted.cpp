#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>

#include "entmono/errors.hpp"
#include "entmono/measures.hpp"

namespace entmono {

namespace {

// K x r complex isometry, column-major: col(j)[i] = u[j * rows + i]
struct Isometry {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<cplx> u;

  cplx& at(std::size_t i, std::size_t j) { return u[j * rows + i]; }
  cplx at(std::size_t i, std::size_t j) const { return u[j * rows + i]; }
};

// Modified Gram-Schmidt on the columns. Returns false if the columns are
// numerically dependent.
bool orthonormalize(Isometry& m) {
  for (std::size_t j = 0; j < m.cols; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      cplx dot{};
      for (std::size_t i = 0; i < m.rows; ++i) dot += std::conj(m.at(i, k)) * m.at(i, j);
      for (std::size_t i = 0; i < m.rows; ++i) m.at(i, j) -= dot * m.at(i, k);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < m.rows; ++i) norm += std::norm(m.at(i, j));
    norm = std::sqrt(norm);
    if (norm < 1e-12) return false;
    for (std::size_t i = 0; i < m.rows; ++i) m.at(i, j) /= norm;
  }
  return true;
}

class EnsembleSearch {
 public:
  EnsembleSearch(std::vector<std::array<cplx, 4>> scaled_vectors, MeasureKind kind)
      : w_(std::move(scaled_vectors)), kind_(kind) {}

  std::size_t rank() const { return w_.size(); }
  const std::vector<std::array<cplx, 4>>& vectors() const { return w_; }

  // sum_i p_i M(psi_i / |psi_i|) for the ensemble psi_i = sum_j U_ij w_j
  double average(const Isometry& u) const {
    double total = 0.0;
    for (std::size_t i = 0; i < u.rows; ++i) {
      std::array<cplx, 4> psi{};
      for (std::size_t j = 0; j < u.cols; ++j)
        for (std::size_t k = 0; k < 4; ++k) psi[k] += u.at(i, j) * w_[j][k];
      double p = 0.0;
      for (const cplx& z : psi) p += std::norm(z);
      if (p <= 0.0) continue;
      // pure two-qubit concurrence 2|ad - bc| of the normalized vector
      const double c = std::min(1.0, 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]) / p);
      total += p * pure_measure_from_concurrence(c, kind_);
    }
    return total;
  }

 private:
  std::vector<std::array<cplx, 4>> w_;
  MeasureKind kind_;
};

// Equal-concurrence ensemble: Takagi-diagonalize tau = W^T (sy x sy) W, then
// mix the diagonal basis with a +-1/2 Hadamard so every member carries the
// same preconcurrence. Reaches the concurrence of assistance. Rows beyond the
// first four are zero.
Isometry assistance_seed(const std::vector<std::array<cplx, 4>>& w, std::size_t rows) {
  const std::size_t r = w.size();
  // sy x sy maps (a, b, c, d) to (-d, c, b, -a)
  auto flip = [](const std::array<cplx, 4>& v) { return std::array<cplx, 4>{-v[3], v[2], v[1], -v[0]}; };
  std::vector<cplx> tau(r * r);
  for (std::size_t i = 0; i < r; ++i) {
    const auto fi = flip(w[i]);
    for (std::size_t j = 0; j < r; ++j) {
      cplx t{};
      for (std::size_t k = 0; k < 4; ++k) t += fi[k] * w[j][k];
      tau[i * r + j] = t;
    }
  }
  // tau = A + iB; the real symmetric [[A, B], [B, -A]] has eigenvector (x; y)
  // for +sigma exactly when v = x + iy satisfies tau conj(v) = sigma v.
  CMatrix big(2 * r, 2 * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const double a = 0.5 * (tau[i * r + j].real() + tau[j * r + i].real());
      const double b = 0.5 * (tau[i * r + j].imag() + tau[j * r + i].imag());
      big(i, j) = a;
      big(i, r + j) = b;
      big(r + i, j) = b;
      big(r + i, r + j) = -a;
    }
  const HermEigen eig = herm_eig(big);
  // C = conj(V): column k of C is conj(v_k)
  Isometry c{r, r, std::vector<cplx>(r * r)};
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < r; ++i)
      c.at(i, k) = cplx(eig.vectors(i, k).real(), -eig.vectors(r + i, k).real());
  orthonormalize(c);

  static constexpr double kHadamard[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
  Isometry u{rows, r, std::vector<cplx>(rows * r)};
  for (std::size_t i = 0; i < 4 && i < rows; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      cplx sum{};
      for (std::size_t k = 0; k < r; ++k) sum += 0.5 * kHadamard[i][k] * c.at(j, k);
      u.at(i, j) = sum;
    }
  return u;
}

}  // namespace

MeasureValue assisted_estimate(const DensityMatrix& rho, MeasureKind kind, std::size_t budget,
                               std::uint64_t seed) {
  if (!kind.assisted) throw ParameterError("assisted_estimate: kind must be an assisted measure");
  kind.validate();
  if (rho.dims() != SubsystemDims::qubits(2))
    throw UnsupportedError("assisted_estimate: only two-qubit states are supported");

  const HermEigen eig = herm_eig(rho.matrix());
  const double cutoff = 64.0 * std::numeric_limits<double>::epsilon();
  std::vector<std::array<cplx, 4>> w;
  for (std::size_t k = 0; k < 4; ++k) {
    if (eig.values[k] <= cutoff) continue;
    std::array<cplx, 4> col{};
    const double amp = std::sqrt(eig.values[k]);
    for (std::size_t i = 0; i < 4; ++i) col[i] = amp * eig.vectors(i, k);
    w.push_back(col);
  }
  const MeasureKind plain = kind.as_plain();
  if (w.size() <= 1) {
    // a single decomposition exists; the plain value is exact
    const double c = concurrence_two_qubit(rho).value;
    return MeasureValue::exact(pure_measure_from_concurrence(c, plain));
  }

  const EnsembleSearch search(std::move(w), plain);
  const std::size_t r = search.rank();
  const std::size_t ensemble = r * r;

  Isometry current{ensemble, r, std::vector<cplx>(ensemble * r)};
  for (std::size_t j = 0; j < r; ++j) current.at(j, j) = 1.0;  // eigen-ensemble
  double current_value = search.average(current);
  Isometry seeded = assistance_seed(search.vectors(), ensemble);
  if (orthonormalize(seeded)) {
    const double v = search.average(seeded);
    if (v > current_value) {
      current = std::move(seeded);
      current_value = v;
    }
  }
  double best = current_value;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  auto gaussian_fill = [&](Isometry& m, double scale) {
    for (cplx& z : m.u) {
      const double re = gauss(rng);
      z += scale * cplx(re, gauss(rng));
    }
  };

  constexpr std::size_t kRestartPeriod = 64;
  double step = 0.3;
  for (std::size_t t = 0; t < budget; ++t) {
    Isometry candidate = current;
    const bool restart = t > 0 && t % kRestartPeriod == 0;
    if (restart) {
      std::fill(candidate.u.begin(), candidate.u.end(), cplx{});
      gaussian_fill(candidate, 1.0);
      step = 0.3;
    } else {
      gaussian_fill(candidate, step);
    }
    if (!orthonormalize(candidate)) continue;
    const double value = search.average(candidate);
    if (restart || value > current_value) {
      if (!restart) step = std::min(step * 1.25, 1.0);
      current = std::move(candidate);
      current_value = value;
    } else {
      step = std::max(step * 0.85, 1e-4);
    }
    best = std::max(best, current_value);
  }
  return MeasureValue::heuristic(best);
}

}  // namespace entmono
