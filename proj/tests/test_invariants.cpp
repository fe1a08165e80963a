#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "stuq/invariants.hpp"
#include "stuq/schmidt.hpp"
#include "test_util.hpp"

using namespace stuq;

TEST_CASE("quartic invariant on four-charge configurations") {
  CHECK(delta(FullChargeVector(0, 1, 1, 1, -1, 0, 0, 0)) == 4);
  CHECK(delta(FullChargeVector(0, 0, 0, 0, 0, 0, 0, 0)) == 0);
  CHECK(delta(FullChargeVector(0, 1, 1, 1, -4, 0, 0, 0)) == 16);
}

TEST_CASE("quartic invariant equals -4 p1 p2 p3 q0 when only four charges are set") {
  auto g = testutil::rng(21);
  for (int i = 0; i < 500; ++i) {
    const ChargeVector c = testutil::random_charges(g, 50);
    CHECK(delta(FullChargeVector(c)) == -4 * c.p1() * c.p2() * c.p3() * c.q0());
  }
}

TEST_CASE("overflow in the quartic invariant is reported") {
  const std::int64_t big = std::int64_t{1} << 30;
  CHECK_THROWS_AS(delta(FullChargeVector(big, big, big, big, big, big, big, big)),
                  std::overflow_error);
  CHECK_THROWS_AS(FullChargeVector(big * 2, 0, 0, 0, 0, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("hyperdeterminant values") {
  CHECK(cayley_hyperdet(charge_amplitudes(FullChargeVector(ChargeVector(-1, 1, 1, 1)))) == 4);

  CHECK(std::abs(cayley_hyperdet(PureState3Q::basis(0))) == 0.0);

  // Canonical-form states have det = (l0 l4)^2 regardless of l1..l3.
  std::array<Complex, 8> a{};
  a[0] = 0.6;
  a[5] = 0.3;
  a[6] = 0.4;
  a[7] = 0.5;
  const Complex det = cayley_hyperdet(PureState3Q(a));
  CHECK(std::abs(det - Complex(0.09, 0)) < 1e-15);
}

TEST_CASE("dictionary contract: Delta == det Psi exactly") {
  auto g = testutil::rng(22);
  std::uniform_int_distribution<std::int64_t> dist(-50, 50);
  for (int i = 0; i < 10000; ++i) {
    const FullChargeVector c(dist(g), dist(g), dist(g), dist(g), dist(g), dist(g), dist(g),
                             dist(g));
    CHECK(delta(c) == cayley_hyperdet(charge_amplitudes(c)));
  }
}

TEST_CASE("hyperdeterminant magnitude of charge states") {
  auto g = testutil::rng(23);
  for (int i = 0; i < 200; ++i) {
    const ChargeVector c = testutil::random_charges(g, 100);
    const auto det = cayley_hyperdet(charge_amplitudes(FullChargeVector(c)));
    CHECK(std::abs(det) == 4 * std::abs(c.p1() * c.p2() * c.p3() * c.q0()));
  }
}

TEST_CASE("three-tangle") {
  CHECK(three_tangle(charges_to_state(ChargeVector(-1, 1, 1, 1)).normalized()) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(three_tangle(PureState3Q::basis(0)) == doctest::Approx(0.0));

  std::array<Complex, 8> ghz{};
  ghz[0] = ghz[7] = 1.0 / std::sqrt(2.0);
  CHECK(three_tangle(PureState3Q(ghz)) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(three_tangle(charges_to_state(ChargeVector(-1, 1, 1, 1))),
                  std::invalid_argument);
}

TEST_CASE("three-tangle stays in [0,1] on random normalized states") {
  auto g = testutil::rng(24);
  for (int i = 0; i < 500; ++i) {
    const double tau = three_tangle(testutil::random_state(g));
    CHECK(tau >= -1e-12);
    CHECK(tau <= 1.0 + 1e-12);
  }
}

TEST_CASE("entropy of worked charge vectors") {
  const double pi = std::numbers::pi;
  CHECK(entropy(ChargeVector(-1, 1, 1, 1)) == doctest::Approx(2 * pi).epsilon(1e-12));
  CHECK(entropy(ChargeVector(4, 1, 1, 1)) == doctest::Approx(4 * pi).epsilon(1e-12));
  CHECK(entropy(ChargeVector(-8, 2, 1, 4)) == doctest::Approx(16 * pi).epsilon(1e-12));
}

TEST_CASE("LU invariants of canonical forms") {
  SchmidtForm ghz;
  ghz.lambda = {1.0 / std::sqrt(2.0), 0, 0, 0, 1.0 / std::sqrt(2.0)};
  ghz.lambda1_zero = ghz.lambda2_zero = ghz.lambda3_zero = true;
  const InvariantTriple j = acin_invariants(ghz);
  CHECK(j.j1 == doctest::Approx(0.0));
  CHECK(j.j2 == doctest::Approx(0.0));
  CHECK(j.j3 == doctest::Approx(0.0));
  CHECK(j.j4 == doctest::Approx(0.25).epsilon(1e-14));

  const SchmidtForm f = schmidt_decompose(ChargeVector(-4, 1, 1, 1));
  const InvariantTriple ji = acin_invariants(f);
  CHECK(ji.j1 == doctest::Approx(9.0 / 361.0).epsilon(1e-12));
  CHECK(ji.j2 == doctest::Approx(9.0 / 361.0).epsilon(1e-12));
  CHECK(ji.j3 == doctest::Approx(9.0 / 361.0).epsilon(1e-12));

  SchmidtForm no2 = f;
  no2.lambda[2] = 0.0;
  CHECK(acin_invariants(no2).j2 == doctest::Approx(0.0));
}

TEST_CASE("J4 transports |det| through the decomposition") {
  auto g = testutil::rng(25);
  for (int i = 0; i < 300; ++i) {
    const ChargeVector c = testutil::random_charges(g, 50);
    const SchmidtForm f = schmidt_decompose(c);
    const double n2 = f.norm_factor * f.norm_factor;
    const double lhs = n2 * n2 * acin_invariants(f).j4;
    const double rhs = 4.0 * static_cast<double>(std::abs(c.p1() * c.p2() * c.p3() * c.q0()));
    CHECK(std::abs(lhs - rhs) <= 1e-10 * rhs);
  }
}
