#include <numeric>
#include <string>

#include "entmono/bounds.hpp"
#include "entmono/errors.hpp"

namespace entmono {

Chain evaluate_chain(const PureState& state, const BoundFamily& family, const ChainOptions& options) {
  const std::size_t n = state.subsystems();
  if (n < 3) throw ParameterError("evaluate_chain: need N >= 3 qubits");
  if (state.dims() != SubsystemDims::qubits(n))
    throw DimensionError("evaluate_chain: every subsystem must be a qubit");

  const MeasureKind kind = family.measure;
  const bool assisted = kind.assisted;
  const bool interval_family =
      kind.family == MeasureFamily::Concurrence || kind.family == MeasureFamily::Cren;

  Chain chain;
  chain.tail.resize(n - 1);
  chain.pairs.resize(n - 1);

  const std::size_t a_side[] = {0};
  // a pure state has a single decomposition, so assisted and plain agree
  chain.tail[0] = measure(state, a_side, kind.as_plain());

  for (std::size_t j = 1; j < n; ++j) {
    const std::size_t keep[] = {0, j};
    const DensityMatrix rho = reduce(state, keep);
    if (assisted) {
      chain.pairs[j - 1] = assisted_estimate(rho, kind, options.assisted_budget,
                                             derive_seed(options.seed, j));
    } else {
      chain.pairs[j - 1] = measure(rho, kind);
    }
  }

  for (std::size_t first = 2; first + 1 < n; ++first) {
    // A against B_first .. B_{N-1}: mixed, at least two qubits on the far side
    if (!interval_family || assisted) continue;
    std::vector<std::size_t> keep(n - first + 1);
    keep[0] = 0;
    std::iota(keep.begin() + 1, keep.end(), first);
    chain.tail[first - 1] = measure(reduce(state, keep), kind);
  }
  chain.tail[n - 2] = chain.pairs[n - 2];
  return chain;
}

}  // namespace entmono
