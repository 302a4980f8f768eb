#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "entmono/densemat.hpp"

namespace testutil {

using entmono::CMatrix;
using entmono::cplx;

inline CMatrix random_matrix(std::size_t r, std::size_t c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  CMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      const double re = g(rng);
      m(i, j) = cplx(re, g(rng));
    }
  return m;
}

inline CMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  const CMatrix a = random_matrix(n, n, seed);
  return 0.5 * (a + a.adjoint());
}

// Random density matrix G G^dagger / Tr.
inline CMatrix random_density(std::size_t n, std::uint64_t seed) {
  const CMatrix g = random_matrix(n, n, seed);
  CMatrix rho = g * g.adjoint();
  const cplx tr = rho.trace();
  rho = (1.0 / tr) * rho;
  // exact Hermitian symmetrization against roundoff
  return 0.5 * (rho + rho.adjoint());
}

// Determinant by Gaussian elimination with partial pivoting.
inline cplx det(CMatrix m) {
  const std::size_t n = m.rows();
  cplx d = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > std::abs(m(p, k))) p = i;
    if (std::abs(m(p, k)) == 0.0) return 0.0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      d = -d;
    }
    d *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return d;
}

}  // namespace testutil
