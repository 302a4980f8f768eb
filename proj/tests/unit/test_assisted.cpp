#include <doctest.h>

#include "entmono/errors.hpp"
#include "entmono/measures.hpp"

using namespace entmono;

namespace {

// p|Phi+><Phi+| + (1-p)|Psi+><Psi+|, a rank-2 Bell-diagonal state
DensityMatrix bell_diagonal(double p) {
  const double h = 1.0 / std::sqrt(2.0);
  const std::vector<cplx> phi{h, 0.0, 0.0, h};
  const std::vector<cplx> psi{0.0, h, h, 0.0};
  return DensityMatrix(p * CMatrix::outer(phi) + (1.0 - p) * CMatrix::outer(psi),
                       SubsystemDims::qubits(2));
}

const MeasureKind kKinds[] = {MeasureKind::eof().as_assisted(), MeasureKind::tsallis(2.0).as_assisted(),
                              MeasureKind::tsallis(3.5).as_assisted(), MeasureKind::renyi(1.2).as_assisted()};

}  // namespace

TEST_SUITE("assisted") {
  TEST_CASE("rank-one input returns the plain value exactly") {
    const PureState s = random_pure(2, 3);
    const std::size_t a[] = {0};
    for (const MeasureKind& k : kKinds) {
      const MeasureValue v = assisted_estimate(to_density(s), k, 50, 1);
      CHECK(v.cert == Certification::Exact);
      CHECK(v.value == doctest::Approx(measure(s, a, k.as_plain()).value).epsilon(1e-9));
    }
  }

  TEST_CASE("maximally mixed state stays in range") {
    const DensityMatrix mixed(0.25 * CMatrix::identity(4), SubsystemDims::qubits(2));
    const MeasureValue v = assisted_estimate(mixed, MeasureKind::eof().as_assisted(), 400, 9);
    CHECK(v.cert == Certification::Heuristic);
    CHECK(v.value >= 0.0);
    CHECK(v.value <= 1.0 + 1e-12);
    // I/4 is an equal mixture of four Bell states, so the assisted value is 1
    CHECK(v.value > 0.9);
  }

  TEST_CASE("best-so-far is non-decreasing in the budget") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      double prev = -1.0;
      for (std::size_t budget : {0u, 1u, 10u, 50u, 200u, 800u}) {
        const double v = assisted_estimate(bell_diagonal(0.7), MeasureKind::eof().as_assisted(), budget, seed).value;
        CHECK(v >= prev);
        prev = v;
      }
    }
  }

  TEST_CASE("estimate dominates the plain measure") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const PureState s = random_pure(3, 40 + seed);
      const std::size_t ab[] = {0, 1};
      const DensityMatrix rho = reduce(s, ab);
      for (const MeasureKind& k : kKinds) {
        const double plain = measure(rho, k.as_plain()).value;
        CHECK(assisted_estimate(rho, k, 300, seed).value >= plain - 1e-9);
      }
    }
  }

  TEST_CASE("assisted EoF stays below the marginal entropy") {
    const std::size_t a[] = {0};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const PureState s = random_pure(3, 90 + seed);
      const std::size_t ab[] = {0, 1};
      const DensityMatrix rho = reduce(s, ab);
      const double bound = von_neumann_entropy(herm_eigvals(reduce(s, a).matrix()));
      const double v = assisted_estimate(rho, MeasureKind::eof().as_assisted(), 200, seed).value;
      CHECK(v <= bound + 1e-9);
    }
  }

  TEST_CASE("deterministic for a fixed seed") {
    const DensityMatrix rho = bell_diagonal(0.6);
    const auto k = MeasureKind::tsallis(2.0).as_assisted();
    CHECK(assisted_estimate(rho, k, 300, 5).value == assisted_estimate(rho, k, 300, 5).value);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(assisted_estimate(bell_diagonal(0.5), MeasureKind::eof(), 10, 1), ParameterError);
    const std::size_t abc[] = {0, 1, 2};
    CHECK_THROWS_AS(assisted_estimate(reduce(ghz(4), abc), MeasureKind::eof().as_assisted(), 10, 1),
                    UnsupportedError);
  }
}
