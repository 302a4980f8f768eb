#pragma once

// Dense complex matrices at desk scale (up to 12 qubits) and the handful of
// quantum-information primitives built on them: Kronecker products, partial
// trace and partial transpose over a tensor-factor layout, Hermitian
// eigenvalues and the trace norm.
//
// Storage is row-major. Subsystem 0 is the leftmost tensor factor, so for
// qubits the computational-basis index has subsystem 0 as its most
// significant bit.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace entmono {

using cplx = std::complex<double>;

inline constexpr std::size_t kDefaultMaxDim = std::size_t{1} << 12;
inline constexpr double kHermitianTol = 1e-10;

class CMatrix {
 public:
  CMatrix() = default;
  /// Zero matrix. Throws SizeError if either extent is zero.
  CMatrix(std::size_t rows, std::size_t cols);
  /// Throws ContractError on size mismatch or non-finite entries.
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  CMatrix(std::size_t rows, std::size_t cols, std::initializer_list<cplx> entries);

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(std::span<const double> d);
  /// |v><v|
  static CMatrix outer(std::span<const cplx> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  cplx operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const cplx> entries() const noexcept { return data_; }

  CMatrix adjoint() const;
  CMatrix transpose() const;
  CMatrix conjugate() const;
  cplx trace() const;

  /// Largest |m_ij - conj(m_ji)|.
  double hermitian_defect() const;
  bool is_hermitian(double tol = kHermitianTol) const { return hermitian_defect() <= tol; }

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator+(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator*(cplx s, const CMatrix& a);
  friend bool operator==(const CMatrix& a, const CMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

/// Largest absolute entrywise difference; throws DimensionError on shape mismatch.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// Local dimensions of the tensor factors, leftmost first.
class SubsystemDims {
 public:
  SubsystemDims() = default;
  explicit SubsystemDims(std::vector<std::size_t> dims);
  static SubsystemDims qubits(std::size_t n);

  std::size_t count() const noexcept { return dims_.size(); }
  std::size_t operator[](std::size_t i) const { return dims_.at(i); }
  std::size_t total() const noexcept;
  std::span<const std::size_t> dims() const noexcept { return dims_; }
  /// Dims of the listed subsystems (which must be sorted and unique).
  SubsystemDims subset(std::span<const std::size_t> keep) const;

  friend bool operator==(const SubsystemDims&, const SubsystemDims&) = default;

 private:
  std::vector<std::size_t> dims_;
};

CMatrix kron(const CMatrix& a, const CMatrix& b, std::size_t max_dim = kDefaultMaxDim);

/// Reduced matrix on `keep` (sorted, unique, nonempty). Kept factors retain
/// their relative order.
CMatrix partial_trace(const CMatrix& rho, const SubsystemDims& dims,
                      std::span<const std::size_t> keep);

/// Transposes the indices of subsystem `side` only. Involutive.
CMatrix partial_transpose(const CMatrix& rho, const SubsystemDims& dims, std::size_t side);

/// Eigenvalues of a Hermitian matrix in descending order. Throws ContractError
/// if the Hermitian defect exceeds 1e-10.
std::vector<double> herm_eigvals(const CMatrix& m);

struct HermEigen {
  std::vector<double> values;  // descending
  CMatrix vectors;             // column k belongs to values[k]
};
HermEigen herm_eig(const CMatrix& m);

/// Sum of singular values.
double trace_norm(const CMatrix& m);

/// Singular values in descending order.
std::vector<double> singular_values(const CMatrix& m);

/// Clamps eigenvalues in [-1e-10, 0) to zero; anything below -1e-10 is a
/// ContractError (the input was not PSD).
std::vector<double> clamp_psd_spectrum(std::vector<double> eigenvalues);

}  // namespace entmono
