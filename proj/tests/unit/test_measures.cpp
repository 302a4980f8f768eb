#include <doctest.h>

#include "entmono/errors.hpp"
#include "entmono/measures.hpp"
#include "helpers.hpp"

using namespace entmono;

namespace {

const std::size_t kA[] = {0};
const std::size_t kAB[] = {0, 1};
const std::size_t kAC[] = {0, 2};

PureState example() { return schmidt3(example1_params()); }

DensityMatrix werner(double p) {
  const double h = 1.0 / std::sqrt(2.0);
  const std::vector<cplx> phi{h, 0.0, 0.0, h};
  CMatrix rho = p * CMatrix::outer(phi) + ((1.0 - p) / 4.0) * CMatrix::identity(4);
  return DensityMatrix(rho, SubsystemDims::qubits(2));
}

DensityMatrix product_density() {
  const std::vector<cplx> v{0.6, cplx(0.0, 0.8)};
  const CMatrix a = CMatrix::outer(v);
  return DensityMatrix(kron(a, 0.5 * CMatrix::identity(2)), SubsystemDims::qubits(2));
}

}  // namespace

TEST_SUITE("measures") {
  TEST_CASE("MeasureKind validation and names") {
    CHECK_THROWS_AS(MeasureKind::tsallis(1.0).validate(), ParameterError);
    CHECK_THROWS_AS(MeasureKind::tsallis(0.0).validate(), ParameterError);
    CHECK_THROWS_AS(MeasureKind::renyi(-2.0).validate(), ParameterError);
    CHECK_THROWS_AS(MeasureKind::concurrence().as_assisted().validate(), ParameterError);
    CHECK_NOTHROW(MeasureKind::eof().as_assisted().validate());
    CHECK(MeasureKind::tsallis(2.5).name() == "tsallis(q=2.5)");
    CHECK(MeasureKind::renyi(2).as_assisted().name() == "assisted-renyi(order=2)");
  }

  TEST_CASE("pure concurrence") {
    CHECK(concurrence_pure(bell(), kA).value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(concurrence_pure(example(), kA).value == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(concurrence_pure(PureState::qubits({1.0, 0.0, 0.0, 0.0}), kA).value == 0.0);
    const std::size_t ab[] = {0, 1};
    // 2 x 4 cut of a 3-qubit state equals the A|BC value by symmetry of the pure formula
    const std::size_t c[] = {2};
    CHECK(concurrence_pure(example(), ab).value == doctest::Approx(concurrence_pure(example(), c).value));
    const std::size_t all[] = {0, 1, 2};
    CHECK_THROWS_AS(concurrence_pure(example(), all), ParameterError);
    CHECK_THROWS_AS(concurrence_pure(example(), std::span<const std::size_t>{}), ParameterError);
    const std::size_t unsorted[] = {1, 0};
    CHECK_THROWS_AS(concurrence_pure(example(), unsorted), ParameterError);
  }

  TEST_CASE("pure concurrence stays inside its range") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const PureState s = random_pure(4, seed);
      const std::size_t two[] = {0, 1};
      const double c1 = concurrence_pure(s, kA).value;
      const double c2 = concurrence_pure(s, two).value;
      CHECK(c1 >= 0.0);
      CHECK(c1 <= 1.0 + 1e-12);
      CHECK(c2 <= std::sqrt(2.0 * 3.0 / 4.0) + 1e-12);
    }
  }

  TEST_CASE("two-qubit concurrence of the example state") {
    CHECK(std::abs(concurrence_two_qubit(reduce(example(), kAB)).value - 2.0 * std::sqrt(2.0) / 5.0) < 1e-12);
    CHECK(std::abs(concurrence_two_qubit(reduce(example(), kAC)).value - 0.4) < 1e-12);
  }

  TEST_CASE("Werner states") {
    CHECK(concurrence_two_qubit(werner(0.0)).value == doctest::Approx(0.0));
    CHECK(std::abs(concurrence_two_qubit(werner(0.4)).value - 0.1) < 1e-12);
    CHECK(std::abs(concurrence_two_qubit(werner(1.0)).value - 1.0) < 1e-12);
    CHECK(concurrence_two_qubit(werner(1.0 / 3.0)).value == doctest::Approx(0.0).epsilon(1e-12));
  }

  TEST_CASE("two-qubit concurrence needs 2x2 dims") {
    CHECK_THROWS_AS(concurrence_two_qubit(reduce(example(), kA)), DimensionError);
    CHECK_THROWS_AS(cren_two_qubit(reduce(ghz(3), std::vector<std::size_t>{0, 1, 2})), DimensionError);
  }

  TEST_CASE("rank-one spin-flip agrees with the pure formula") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const PureState s = random_pure(2, seed);
      CHECK(std::abs(concurrence_two_qubit(to_density(s)).value - concurrence_pure(s, kA).value) < 1e-9);
    }
  }

  TEST_CASE("concurrence interval") {
    const std::size_t abc[] = {0, 1, 2};
    const MeasureValue g = concurrence_interval(reduce(ghz(4), abc));
    CHECK(g.cert == Certification::Interval);
    CHECK(g.lo == doctest::Approx(0.0));
    CHECK(g.hi == doctest::Approx(1.0).epsilon(1e-14));
    // rank one: a 3-qubit pure state padded by a product qubit
    const PureState s = random_pure(3, 5);
    std::vector<cplx> amps(16);
    for (std::size_t i = 0; i < 8; ++i) amps[i * 2] = s.amplitudes()[i];
    const MeasureValue collapsed = concurrence_interval(reduce(PureState::qubits(amps), abc));
    CHECK(std::abs(collapsed.lo - concurrence_pure(s, kA).value) < 1e-10);
    CHECK(std::abs(collapsed.hi - concurrence_pure(s, kA).value) < 1e-10);
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
      const MeasureValue v = concurrence_interval(reduce(random_pure(4, 900 + seed), abc));
      CHECK(v.lo <= v.hi + 1e-12);
    }
    // A in another position
    const std::size_t bcd[] = {1, 2, 3};
    const MeasureValue mid = concurrence_interval(reduce(w_state(4), bcd), 1);
    CHECK(mid.lo <= mid.hi);
    CHECK_THROWS_AS(concurrence_interval(reduce(example(), kAB)), DimensionError);
  }

  TEST_CASE("negativity") {
    CHECK(negativity(bell(), kA).value == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(negativity(example(), kA).value - 0.8) < 1e-12);
    CHECK(negativity(product_density(), kA).value == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(negativity(to_density(bell()), kA).value == doctest::Approx(1.0).epsilon(1e-13));
  }

  TEST_CASE("cren delegates to the spin-flip concurrence") {
    CHECK(std::abs(cren_two_qubit(reduce(example(), kAB)).value - 2.0 * std::sqrt(2.0) / 5.0) < 1e-12);
    CHECK(std::abs(cren_two_qubit(reduce(example(), kAC)).value - 0.4) < 1e-12);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const DensityMatrix rho(testutil::random_density(4, seed), SubsystemDims::qubits(2));
      CHECK(cren_two_qubit(rho).value == concurrence_two_qubit(rho).value);
    }
  }

  TEST_CASE("f_eof") {
    CHECK(f_eof(0.0) == 0.0);
    CHECK(f_eof(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(f_eof(8.0 / 25.0) - 0.428710) < 1e-6);
    CHECK(std::abs(f_eof(8.0 / 25.0) - 0.4287100716069234) < 1e-12);
    CHECK_THROWS_AS(f_eof(1.1), DomainError);
    CHECK_THROWS_AS(f_eof(-0.1), DomainError);
    CHECK_NOTHROW(f_eof(1.0 + 1e-13));
  }

  TEST_CASE("eof") {
    CHECK(std::abs(eof(example(), kA).value - 0.7219280948873623) < 1e-12);
    CHECK(std::abs(eof(reduce(example(), kAB)).value - 0.4287100716069234) < 1e-12);
    CHECK(std::abs(eof(reduce(example(), kAC)).value - 0.2502249116110705) < 1e-12);
    CHECK(eof(bell(), kA).value == doctest::Approx(1.0).epsilon(1e-14));
    const std::size_t abc[] = {0, 1, 2};
    CHECK_THROWS_AS(eof(reduce(ghz(4), abc)), UnsupportedError);
  }

  TEST_CASE("g_tsallis") {
    CHECK(g_tsallis(16.0 / 25.0, 2.0) == doctest::Approx(8.0 / 25.0).epsilon(1e-14));
    for (double q : {0.5, 1.5, 2.0, 3.0, 4.0}) CHECK(g_tsallis(0.0, q) == doctest::Approx(0.0));
    for (int i = 0; i <= 100; ++i) {
      const double x = i / 100.0;
      CHECK(std::abs(g_tsallis(x, 2.0) - x / 2.0) < 1e-15);
    }
    CHECK_THROWS_AS(g_tsallis(0.5, 1.0), DomainError);
    CHECK_THROWS_AS(g_tsallis(1.5, 2.0), DomainError);
  }

  TEST_CASE("tsallis") {
    CHECK(std::abs(tsallis(example(), kA, 2.0).value - 8.0 / 25.0) < 1e-12);
    CHECK(std::abs(tsallis(reduce(example(), kAB), 2.0).value - 4.0 / 25.0) < 1e-12);
    CHECK(std::abs(tsallis(reduce(example(), kAC), 2.0).value - 2.0 / 25.0) < 1e-12);
    CHECK(tsallis(bell(), kA, 2.0).value == doctest::Approx(0.5).epsilon(1e-14));
    CHECK_THROWS_AS(tsallis(reduce(example(), kAB), 5.0), UnsupportedError);
    CHECK_THROWS_AS(tsallis(reduce(example(), kAB), 0.5), UnsupportedError);
    // pure route and g_q route agree on a 2 x 4 pure state
    for (double q : {0.8, 2.0, 3.5}) {
      const PureState s = random_pure(3, 77);
      const double c = concurrence_pure(s, kA).value;
      CHECK(std::abs(tsallis(s, kA, q).value - g_tsallis(c * c, q)) < 1e-12);
    }
  }

  TEST_CASE("f_renyi") {
    CHECK(std::abs(f_renyi(2.0 * std::sqrt(2.0) / 5.0, 2.0) - std::log2(25.0 / 21.0)) < 1e-12);
    CHECK(std::abs(f_renyi(0.8, 2.0) - std::log2(25.0 / 17.0)) < 1e-12);
    CHECK(std::abs(f_renyi(0.8, 2.0) - 0.556393) < 1e-6);
    for (double a : {0.5, 2.0, 3.0}) {
      CHECK(f_renyi(0.0, a) == doctest::Approx(0.0));
      CHECK(f_renyi(1.0, a) == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS(f_renyi(0.5, 1.0), DomainError);
  }

  TEST_CASE("renyi") {
    CHECK(std::abs(renyi(example(), kA, 2.0).value - 0.55639334852438529) < 1e-12);
    CHECK(std::abs(renyi(reduce(example(), kAB), 2.0).value - 0.25153876699596441) < 1e-12);
    CHECK(std::abs(renyi(reduce(example(), kAC), 2.0).value - 0.12029423371771182) < 1e-12);
    for (double a : {0.5, 2.0, 3.0, 7.0}) CHECK(renyi(bell(), kA, a).value == doctest::Approx(1.0).epsilon(1e-13));
    const PureState s = random_pure(3, 78);
    const double c = concurrence_pure(s, kA).value;
    CHECK(std::abs(renyi(s, kA, 3.0).value - f_renyi(c, 3.0)) < 1e-12);
  }

  TEST_CASE("spectral entropies") {
    const std::vector<double> flat{0.5, 0.5};
    CHECK(von_neumann_entropy(flat) == doctest::Approx(1.0));
    CHECK(tsallis_entropy(flat, 2.0) == doctest::Approx(0.5));
    CHECK(renyi_entropy(flat, 3.0) == doctest::Approx(1.0));
    const std::vector<double> with_zero{1.0, 0.0, -1e-12};
    CHECK(von_neumann_entropy(with_zero) == 0.0);
  }

  TEST_CASE("measure dispatch") {
    CHECK(measure(example(), kA, MeasureKind::cren()).value == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(measure(example(), kA, MeasureKind::eof().as_assisted()).value ==
          doctest::Approx(eof(example(), kA).value));
    const DensityMatrix rab = reduce(example(), kAB);
    CHECK(measure(rab, MeasureKind::renyi(2.0)).value == doctest::Approx(0.25153876699596441).epsilon(1e-12));
    CHECK_THROWS_AS(measure(rab, MeasureKind::eof().as_assisted()), UnsupportedError);
    const std::size_t abc[] = {0, 1, 2};
    CHECK(measure(reduce(ghz(4), abc), MeasureKind::cren()).cert == Certification::Interval);
    CHECK_THROWS_AS(measure(reduce(ghz(4), abc), MeasureKind::tsallis(2.0)), UnsupportedError);
  }

  TEST_CASE("pure_measure_from_concurrence") {
    CHECK(pure_measure_from_concurrence(0.8, MeasureKind::tsallis(2.0)) == doctest::Approx(0.32));
    CHECK(pure_measure_from_concurrence(0.8, MeasureKind::concurrence()) == 0.8);
    CHECK_THROWS_AS(pure_measure_from_concurrence(1.5, MeasureKind::eof()), DomainError);
  }

  TEST_CASE("complement") {
    const std::size_t a[] = {1};
    CHECK(complement(a, 3) == std::vector<std::size_t>{0, 2});
    const std::size_t out_of_range[] = {3};
    CHECK_THROWS_AS(complement(out_of_range, 3), ParameterError);
  }
}
