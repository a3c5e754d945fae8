#include <doctest.h>

#include <cmath>
#include <numbers>

#include "skewinfo/catalog.hpp"
#include "skewinfo/skew.hpp"
#include "test_helpers.hpp"

using namespace skewinfo;
using namespace skewinfo::testing;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("skew") {

TEST_CASE("DensityState validation") {
  SUBCASE("accepts the maximally mixed state and caches its sqrt") {
    const DensityState rho(0.5 * ComplexMatrix::Identity(2, 2));
    CHECK((rho.sqrt() * rho.sqrt() - rho.matrix()).norm() <
          1e-8 * std::max(1.0, rho.matrix().norm()));
    CHECK(rho.eigenvalues()(0) == doctest::Approx(0.5));
  }
  SUBCASE("rejects non-Hermitian matrices") {
    ComplexMatrix m(2, 2);
    m << 0.5, 0.2, 0.0, 0.5;
    CHECK_THROWS_AS(DensityState{m}, NotHermitian);
  }
  SUBCASE("rejects indefinite matrices") {
    ComplexMatrix m(2, 2);
    m << 1.5, 0, 0, -0.5;
    CHECK_THROWS_AS(DensityState{m}, NotPositiveSemidefinite);
  }
  SUBCASE("rejects wrong trace") {
    CHECK_THROWS_AS(DensityState(ComplexMatrix::Identity(2, 2)), InvalidTrace);
  }
  SUBCASE("clamps pure-state spectra to exact zeros") {
    const DensityState rho = spin1_pure_state(0.3, 1.1);
    CHECK(rho.eigenvalues()(0) == 0.0);
    CHECK(rho.eigenvalues()(1) == 0.0);
    CHECK(rho.eigenvalues()(2) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("rejects non-positive tolerances") {
    Tolerances tol;
    tol.psd_tol = 0.0;
    CHECK_THROWS_AS(DensityState(0.5 * ComplexMatrix::Identity(2, 2), tol), DomainError);
  }
}

TEST_CASE("Observable and KrausChannel validation") {
  CHECK_THROWS_AS(Observable(ComplexMatrix(sigma_x() * sigma_z())), NotHermitian);
  CHECK_NOTHROW(Observable{sigma_y()});

  CHECK_THROWS_AS(KrausChannel({}), EmptyList);
  CHECK_THROWS_AS(KrausChannel({sigma_x(), ComplexMatrix::Identity(3, 3)}), DimMismatch);
  // sigma_x alone satisfies completeness; half of it does not
  CHECK_NOTHROW(KrausChannel({sigma_x()}));
  CHECK_THROWS_AS(KrausChannel({0.5 * sigma_x()}), KrausIncomplete);
}

TEST_CASE("skew_observable trivial zeros") {
  const DensityState mixed(0.5 * ComplexMatrix::Identity(2, 2));
  CHECK(skew_observable(mixed, Observable(sigma_z())) < 1e-15);

  const DensityState rho = bloch_qubit({std::sqrt(3.0) / 2.0, 0.0, 0.0});
  CHECK(skew_observable(rho, Observable(sigma_x())) < 1e-15);
}

TEST_CASE("skew_observable splits the Pauli sum by symmetry") {
  // r along x with t = 3/4: I(x) = 0 and I(y) = I(z) = 1/2
  const DensityState rho = bloch_qubit({std::sqrt(3.0) / 2.0, 0.0, 0.0});
  const double ix = skew_observable(rho, Observable(sigma_x()));
  const double iy = skew_observable(rho, Observable(sigma_y()));
  const double iz = skew_observable(rho, Observable(sigma_z()));
  CHECK(iy == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(iz == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ix + iy + iz == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("skew information of pure states equals the variance") {
  const std::vector<Observable> ls = spin1_observables();
  const DensityState ground = spin1_pure_state(0.0, 0.0); // |-1>
  CHECK(skew_observable(ground, ls[0]) == doctest::Approx(0.5).epsilon(1e-12));

  SeededGenerator gen(21);
  for (int d : {2, 3}) {
    for (int trial = 0; trial < 100; ++trial) {
      const DensityState psi = random_pure_state(d, gen);
      const Observable M = random_observable(d, gen);
      const double mean = (psi.matrix() * M.matrix()).trace().real();
      const double mean_sq = (psi.matrix() * M.matrix() * M.matrix()).trace().real();
      CHECK(std::abs(skew_observable(psi, M) - (mean_sq - mean * mean)) < 1e-9);
    }
  }
}

TEST_CASE("skew_operator basics and the closed-form lowering element") {
  const DensityState rho = bloch_qubit({std::sqrt(3.0) / 4.0, 0.75, 0.0});
  CHECK(skew_operator(rho, ComplexMatrix::Identity(2, 2)) == 0.0);

  const DensityState mixed(0.5 * ComplexMatrix::Identity(2, 2));
  ComplexMatrix dephase(2, 2);
  dephase << 0, 0, 0, std::sqrt(0.1);
  CHECK(skew_operator(mixed, dephase) < 1e-15);

  // K = sqrt(q)|0><1| at any radius-sqrt(3)/2 qubit: writing sqrt(rho) as
  // a I + b (rhat.sigma) with b = (sqrt(l2) - sqrt(l1))/2 = 1/(2 sqrt(2))
  // gives [rhat.sigma, K] squared norm 2q, hence I = b^2 q = q/8 = 1/80.
  ComplexMatrix lower(2, 2);
  lower << 0, std::sqrt(0.1), 0, 0;
  const double value = skew_operator(rho, lower);
  CHECK(value == doctest::Approx(0.0125).epsilon(1e-12));
  CHECK(value == doctest::Approx(skew_trace_general(rho.sqrt(), lower)).epsilon(1e-13));
}

TEST_CASE("skew_operator agrees with skew_observable on Hermitian input") {
  SeededGenerator gen(22);
  for (int d : {2, 3}) {
    for (int trial = 0; trial < 50; ++trial) {
      const DensityState rho = random_state(d, gen);
      const Observable M = random_observable(d, gen);
      const double a = skew_observable(rho, M);
      const double b = skew_operator(rho, M.matrix());
      CHECK(std::abs(a - b) <= 1e-14); // identical code path
      CHECK(std::abs(a - skew_trace_hermitian(rho.sqrt(), M.matrix())) < 1e-12);
    }
  }
}

TEST_CASE("skew_channel sums its elements") {
  const DensityState mixed(0.5 * ComplexMatrix::Identity(2, 2));
  CHECK(skew_channel(mixed, identity_channel(2)) == 0.0);
  CHECK(skew_channel(mixed, amplitude_damping(0.3)) < 1e-15);

  // phase damping at r = (sqrt(3)/2, 0, 0): diagonal elements diag(d1, d2)
  // have I = b^2 (d1 - d2)^2 with b^2 = 1/8
  const double q = 0.1;
  const DensityState rho = bloch_qubit({std::sqrt(3.0) / 2.0, 0.0, 0.0});
  const KrausChannel pd = phase_damping(q);
  const double i1 = std::pow(1.0 - std::sqrt(1.0 - q), 2) / 8.0;
  const double i2 = q / 8.0;
  CHECK(skew_operator(rho, pd[0]) == doctest::Approx(i1).epsilon(1e-11));
  CHECK(skew_operator(rho, pd[1]) == doctest::Approx(i2).epsilon(1e-11));
  CHECK(skew_channel(rho, pd) == doctest::Approx(i1 + i2).epsilon(1e-11));
}

TEST_CASE("Pauli skew sum matches 2(1 - sqrt(1-t)) on a Bloch grid") {
  const std::vector<Observable> paulis = pauli_observables();
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double t = static_cast<double>(i) / 49.0;
    for (int j = 0; j < 50; ++j) {
      const double theta = kPi * (j + 0.5) / 50.0;
      const double phi = 2.0 * kPi * std::fmod(j * 0.61803398875, 1.0);
      const double r = std::sqrt(t);
      const DensityState rho = bloch_qubit({r * std::sin(theta) * std::cos(phi),
                                            r * std::sin(theta) * std::sin(phi),
                                            r * std::cos(theta)});
      double sum = 0.0;
      for (const Observable& M : paulis) {
        sum += skew_observable(rho, M);
      }
      worst = std::max(worst, std::abs(sum - analytic::pauli_sum(t)));
    }
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("spin-1 skew sum matches its closed form on a grid") {
  const std::vector<Observable> ls = spin1_observables();
  double worst = 0.0;
  for (int i = 0; i < 30; ++i) {
    const double theta = kPi * i / 29.0;
    for (int j = 0; j < 30; ++j) {
      const double phi = 2.0 * kPi * j / 29.0;
      const DensityState rho = spin1_pure_state(theta, phi);
      double sum = 0.0;
      for (const Observable& L : ls) {
        sum += skew_observable(rho, L);
      }
      worst = std::max(worst, std::abs(sum - analytic::spin1_sum(theta, phi)));
    }
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("dimension mismatches are rejected") {
  const DensityState rho(0.5 * ComplexMatrix::Identity(2, 2));
  CHECK_THROWS_AS(skew_observable(rho, spin1_observables()[0]), DimMismatch);
  CHECK_THROWS_AS(skew_operator(rho, ComplexMatrix::Identity(3, 3)), DimMismatch);
  CHECK_THROWS_AS(skew_channel(rho, identity_channel(3)), DimMismatch);
}

} // TEST_SUITE
