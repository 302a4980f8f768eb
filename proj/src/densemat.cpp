#include "entmono/densemat.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include <Eigen/Dense>

#include "entmono/errors.hpp"

namespace entmono {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

using EigenMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

EigenMat to_eigen(const CMatrix& m) {
  EigenMat out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

void require_square(const CMatrix& m, const char* what) {
  if (!m.square())
    throw DimensionError(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
}

void require_dims(const CMatrix& m, const SubsystemDims& dims, const char* what) {
  require_square(m, what);
  if (dims.count() == 0 || dims.total() != m.rows())
    throw DimensionError(std::string(what) + ": subsystem dims multiply to " +
                         std::to_string(dims.total()) + " but matrix dimension is " +
                         std::to_string(m.rows()));
}

std::vector<std::size_t> strides_of(const SubsystemDims& dims) {
  std::vector<std::size_t> s(dims.count(), 1);
  for (std::size_t k = dims.count(); k-- > 1;) s[k - 1] = s[k] * dims[k];
  return s;
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) throw SizeError("CMatrix: zero extent");
  if (rows > kDefaultMaxDim || cols > kDefaultMaxDim)
    throw SizeError("CMatrix: extent " + std::to_string(std::max(rows, cols)) +
                    " exceeds the 2^12 cap");
  data_.assign(rows * cols, cplx{});
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : CMatrix(rows, cols) {
  if (entries.size() != rows * cols)
    throw ContractError("CMatrix: " + std::to_string(entries.size()) + " entries for a " +
                        std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  if (!std::all_of(entries.begin(), entries.end(), finite))
    throw ContractError("CMatrix: non-finite entry");
  data_ = std::move(entries);
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::initializer_list<cplx> entries)
    : CMatrix(rows, cols, std::vector<cplx>(entries)) {}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const double> d) {
  CMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!std::isfinite(d[i])) throw ContractError("CMatrix::diagonal: non-finite entry");
    m(i, i) = d[i];
  }
  return m;
}

CMatrix CMatrix::outer(std::span<const cplx> v) {
  std::vector<cplx> e(v.size() * v.size());
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) e[r * v.size() + c] = v[r] * std::conj(v[c]);
  return CMatrix(v.size(), v.size(), std::move(e));
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

CMatrix CMatrix::transpose() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

CMatrix CMatrix::conjugate() const {
  CMatrix out = *this;
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

cplx CMatrix::trace() const {
  require_square(*this, "trace");
  cplx t{};
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::hermitian_defect() const {
  require_square(*this, "hermitian_defect");
  double worst = 0.0;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return worst;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
  CMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum: shape mismatch");
  CMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) { return a + cplx{-1.0} * b; }

CMatrix operator*(cplx s, const CMatrix& a) {
  CMatrix out = a;
  for (auto& z : out.data_) z *= s;
  return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("max_abs_diff: shape mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

SubsystemDims::SubsystemDims(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  std::size_t total = 1;
  for (std::size_t d : dims_) {
    if (d == 0) throw DimensionError("SubsystemDims: zero local dimension");
    if (total > kDefaultMaxDim / d) throw SizeError("SubsystemDims: total dimension exceeds 2^12");
    total *= d;
  }
}

SubsystemDims SubsystemDims::qubits(std::size_t n) {
  return SubsystemDims(std::vector<std::size_t>(n, 2));
}

std::size_t SubsystemDims::total() const noexcept {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>{});
}

SubsystemDims SubsystemDims::subset(std::span<const std::size_t> keep) const {
  std::vector<std::size_t> out;
  out.reserve(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= dims_.size()) throw DimensionError("subset: subsystem index out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw DimensionError("subset: indices must be sorted and unique");
    out.push_back(dims_[keep[i]]);
  }
  return SubsystemDims(std::move(out));
}

CMatrix kron(const CMatrix& a, const CMatrix& b, std::size_t max_dim) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (rows > max_dim || cols > max_dim)
    throw SizeError("kron: result " + std::to_string(rows) + "x" + std::to_string(cols) +
                    " exceeds the configured maximum " + std::to_string(max_dim));
  CMatrix out(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

CMatrix partial_trace(const CMatrix& rho, const SubsystemDims& dims,
                      std::span<const std::size_t> keep) {
  require_dims(rho, dims, "partial_trace");
  if (keep.empty()) throw DimensionError("partial_trace: keep set is empty");
  const SubsystemDims kept = dims.subset(keep);  // validates sorted/unique/in range

  std::vector<bool> is_kept(dims.count(), false);
  for (std::size_t k : keep) is_kept[k] = true;

  const std::size_t dk = kept.total();
  const std::size_t dt = dims.total() / dk;
  const auto strides = strides_of(dims);

  // full_index[a * dt + t] for kept multi-index a and traced multi-index t
  std::vector<std::size_t> full_index(dk * dt);
  for (std::size_t i = 0; i < dims.total(); ++i) {
    std::size_t a = 0, t = 0;
    for (std::size_t s = 0; s < dims.count(); ++s) {
      const std::size_t digit = (i / strides[s]) % dims[s];
      if (is_kept[s])
        a = a * dims[s] + digit;
      else
        t = t * dims[s] + digit;
    }
    full_index[a * dt + t] = i;
  }

  CMatrix out(dk, dk);
  for (std::size_t a = 0; a < dk; ++a)
    for (std::size_t b = 0; b < dk; ++b) {
      cplx acc{};
      for (std::size_t t = 0; t < dt; ++t) acc += rho(full_index[a * dt + t], full_index[b * dt + t]);
      out(a, b) = acc;
    }
  return out;
}

CMatrix partial_transpose(const CMatrix& rho, const SubsystemDims& dims, std::size_t side) {
  require_dims(rho, dims, "partial_transpose");
  if (side >= dims.count()) throw DimensionError("partial_transpose: side index out of range");
  const std::size_t n = rho.rows();
  const std::size_t stride = strides_of(dims)[side];
  std::vector<std::size_t> digit(n), base(n);
  for (std::size_t i = 0; i < n; ++i) {
    digit[i] = (i / stride) % dims[side];
    base[i] = i - digit[i] * stride;
  }
  CMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = rho(base[i] + digit[j] * stride, base[j] + digit[i] * stride);
  return out;
}

HermEigen herm_eig(const CMatrix& m) {
  require_square(m, "herm_eig");
  const double defect = m.hermitian_defect();
  if (defect > kHermitianTol)
    throw ContractError("herm_eig: matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  Eigen::SelfAdjointEigenSolver<EigenMat> solver(to_eigen(m));
  if (solver.info() != Eigen::Success) throw ContractError("herm_eig: eigensolver did not converge");
  const std::size_t n = m.rows();
  HermEigen out{std::vector<double>(n), CMatrix(n, n)};
  // Eigen sorts ascending.
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = n - 1 - k;
    out.values[k] = solver.eigenvalues()(src);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = solver.eigenvectors()(r, src);
  }
  return out;
}

std::vector<double> herm_eigvals(const CMatrix& m) {
  require_square(m, "herm_eigvals");
  const double defect = m.hermitian_defect();
  if (defect > kHermitianTol)
    throw ContractError("herm_eigvals: matrix is not Hermitian (defect " + std::to_string(defect) +
                        ")");
  Eigen::SelfAdjointEigenSolver<EigenMat> solver(to_eigen(m), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw ContractError("herm_eigvals: eigensolver did not converge");
  std::vector<double> v(solver.eigenvalues().data(),
                        solver.eigenvalues().data() + solver.eigenvalues().size());
  std::reverse(v.begin(), v.end());
  return v;
}

std::vector<double> singular_values(const CMatrix& m) {
  Eigen::JacobiSVD<EigenMat> svd(to_eigen(m));
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};  // Eigen returns them descending
}

double trace_norm(const CMatrix& m) {
  const auto s = singular_values(m);
  return std::accumulate(s.begin(), s.end(), 0.0);
}

std::vector<double> clamp_psd_spectrum(std::vector<double> eigenvalues) {
  for (double& e : eigenvalues) {
    if (e < -kHermitianTol)
      throw ContractError("clamp_psd_spectrum: eigenvalue " + std::to_string(e) +
                          " below -1e-10, matrix is not positive semidefinite");
    if (e < 0.0) e = 0.0;
  }
  return eigenvalues;
}

}  // namespace entmono
