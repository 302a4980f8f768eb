#include "entmono/statelab.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "entmono/errors.hpp"

namespace entmono {

namespace {

double squared_norm(std::span<const cplx> v) {
  double n = 0.0;
  for (const cplx& z : v) n += std::norm(z);
  return n;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

void require_qubit_count(std::size_t n, std::size_t min, const char* what) {
  if (n < min || n > 12)
    throw ParameterError(std::string(what) + ": qubit count " + std::to_string(n) +
                         " outside [" + std::to_string(min) + ", 12]");
}

}  // namespace

PureState::PureState(std::vector<cplx> amplitudes, SubsystemDims dims, double norm_tol)
    : amps_(std::move(amplitudes)), dims_(std::move(dims)) {
  if (dims_.count() == 0) throw ParameterError("PureState: no subsystems");
  if (amps_.size() != dims_.total())
    throw ParameterError("PureState: " + std::to_string(amps_.size()) +
                         " amplitudes for total dimension " + std::to_string(dims_.total()));
  for (const cplx& z : amps_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw ParameterError("PureState: non-finite amplitude");
  const double n2 = squared_norm(amps_);
  if (std::abs(n2 - 1.0) > norm_tol)
    throw ParameterError("PureState: squared norm " + std::to_string(n2) +
                         " deviates from 1 beyond tolerance");
  if (std::abs(n2 - 1.0) > kPureNormTol) {
    const double scale = 1.0 / std::sqrt(n2);
    for (cplx& z : amps_) z *= scale;
  }
}

PureState PureState::qubits(std::vector<cplx> amplitudes, double norm_tol) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < amplitudes.size()) ++n;
  if ((std::size_t{1} << n) != amplitudes.size() || n == 0)
    throw ParameterError("PureState::qubits: amplitude count " +
                         std::to_string(amplitudes.size()) + " is not a power of two >= 2");
  return PureState(std::move(amplitudes), SubsystemDims::qubits(n), norm_tol);
}

DensityMatrix::DensityMatrix(CMatrix rho, SubsystemDims dims)
    : rho_(std::move(rho)), dims_(std::move(dims)) {
  if (!rho_.square() || dims_.total() != rho_.rows())
    throw DimensionError("DensityMatrix: dims do not match matrix size");
  if (!rho_.is_hermitian()) throw ContractError("DensityMatrix: not Hermitian within 1e-10");
  const cplx tr = rho_.trace();
  if (std::abs(tr - 1.0) > 1e-10)
    throw ContractError("DensityMatrix: trace " + std::to_string(tr.real()) + " != 1");
  const auto ev = herm_eigvals(rho_);
  if (ev.back() < -1e-10)
    throw ContractError("DensityMatrix: negative eigenvalue " + std::to_string(ev.back()));
}

double DensityMatrix::purity() const {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
  double p = 0.0;
  for (const cplx& z : rho_.entries()) p += std::norm(z);
  return p;
}

PureState schmidt3(const SchmidtParams& p) {
  double n2 = 0.0;
  for (double l : p.lambda) {
    if (!(l >= 0.0) || !std::isfinite(l)) throw ParameterError("schmidt3: lambda must be >= 0");
    n2 += l * l;
  }
  if (std::abs(n2 - 1.0) > kPureNormTol)
    throw ParameterError("schmidt3: sum of lambda_i^2 is " + std::to_string(n2) + ", expected 1");
  if (!std::isfinite(p.phi)) throw ParameterError("schmidt3: non-finite phase");
  std::vector<cplx> a(8);
  a[0b000] = p.lambda[0];
  a[0b100] = p.lambda[1] * std::polar(1.0, p.phi);
  a[0b110] = p.lambda[2];
  a[0b101] = p.lambda[3];
  a[0b111] = p.lambda[4];
  return PureState(std::move(a), SubsystemDims::qubits(3));
}

SchmidtParams example1_params() {
  const double r5 = 1.0 / std::sqrt(5.0);
  return SchmidtParams{{r5, 0.0, std::sqrt(2.0 / 5.0), r5, r5}, 0.0};
}

PureState bell() { return ghz(2); }

PureState ghz(std::size_t n) {
  require_qubit_count(n, 2, "ghz");
  std::vector<cplx> a(std::size_t{1} << n);
  a.front() = a.back() = 1.0 / std::sqrt(2.0);
  return PureState(std::move(a), SubsystemDims::qubits(n));
}

PureState w_state(std::size_t n) {
  require_qubit_count(n, 2, "w");
  std::vector<cplx> a(std::size_t{1} << n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) a[std::size_t{1} << k] = amp;
  return PureState(std::move(a), SubsystemDims::qubits(n));
}

PureState random_pure(std::size_t n, std::uint64_t seed) {
  require_qubit_count(n, 1, "random_pure");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<cplx> a(std::size_t{1} << n);
  for (cplx& z : a) {
    const double re = gauss(rng);
    z = cplx(re, gauss(rng));
  }
  const double scale = 1.0 / std::sqrt(squared_norm(a));
  for (cplx& z : a) z *= scale;
  return PureState(std::move(a), SubsystemDims::qubits(n));
}

DensityMatrix reduce(const PureState& s, std::span<const std::size_t> keep) {
  if (keep.empty()) throw ParameterError("reduce: keep set is empty");
  const SubsystemDims& dims = s.dims();
  SubsystemDims kept = [&] {
    try {
      return dims.subset(keep);
    } catch (const DimensionError& e) {
      throw ParameterError(std::string("reduce: ") + e.what());
    }
  }();

  std::vector<bool> is_kept(dims.count(), false);
  for (std::size_t k : keep) is_kept[k] = true;
  const std::size_t dk = kept.total();
  const std::size_t dt = dims.total() / dk;

  // psi reshaped as a dk x dt matrix; rho = M M^dagger
  std::vector<cplx> m(dk * dt);
  const auto amps = s.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    std::size_t rem = i, a = 0, t = 0, ka = 1, kt = 1;
    for (std::size_t sub = dims.count(); sub-- > 0;) {
      const std::size_t digit = rem % dims[sub];
      rem /= dims[sub];
      if (is_kept[sub]) {
        a += digit * ka;
        ka *= dims[sub];
      } else {
        t += digit * kt;
        kt *= dims[sub];
      }
    }
    m[a * dt + t] = amps[i];
  }
  CMatrix rho(dk, dk);
  for (std::size_t a = 0; a < dk; ++a)
    for (std::size_t b = a; b < dk; ++b) {
      cplx acc{};
      for (std::size_t t = 0; t < dt; ++t) acc += m[a * dt + t] * std::conj(m[b * dt + t]);
      rho(a, b) = acc;
      rho(b, a) = std::conj(acc);
    }
  return DensityMatrix(std::move(rho), std::move(kept));
}

DensityMatrix to_density(const PureState& s) { return DensityMatrix(s.projector(), s.dims()); }

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

}  // namespace entmono
