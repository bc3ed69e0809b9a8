#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "excitable/rate_functions.hpp"
#include "support/oracles.hpp"

using namespace excitable;

namespace {

ColorDensities random_densities(RngStream& rng) {
  // Dirichlet-ish: three positive parts normalized
  double a = 0.05 + rng.next_unit(), b = 0.05 + rng.next_unit(), c = 0.05 + rng.next_unit();
  const double s = a + b + c;
  return ColorDensities(a / s, b / s, 1.0 - a / s - b / s);
}

}  // namespace

TEST_CASE("densities validation") {
  CHECK_THROWS(ColorDensities(0.5, 0.6, -0.1));
  CHECK_THROWS(ColorDensities(0.5, 0.1, 0.1));
  const auto u = ColorDensities::uniform();
  CHECK(u.product() == doctest::Approx(1.0 / 27.0));
}

TEST_CASE("lambda: basics and closed form") {
  RateFunction rf(DynamicsKind::CCA, ColorDensities::uniform());
  CHECK(rf.lambda(0.0) == 0.0);
  CHECK_THROWS(rf.lambda(-0.3));
  for (double t = 0.0; t <= 10.0 + 1e-9; t += 0.1)
    CHECK(std::abs(rf.lambda(t) - oracles::lambda_cca_uniform_closed(t)) < 1e-10);
}

TEST_CASE("lambda: monotone, convex, GHM scaling, asymptote") {
  RngStream rng(41, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const auto dens = random_densities(rng);
    RateFunction cca(DynamicsKind::CCA, dens);
    RateFunction ghm(DynamicsKind::GHM, dens);
    double prev = -1e-18;
    for (double t = 0.1; t <= 10.0; t += 0.1) {
      const double v = cca.lambda(t);
      CHECK(v > prev);  // strictly increasing
      prev = v;
      CHECK(std::abs(ghm.lambda(t) - cca.lambda(t / 3.0)) < 1e-12);
    }
    for (double t = 0.2; t <= 9.8; t += 0.1) {
      const double second =
          cca.lambda(t + 0.1) - 2.0 * cca.lambda(t) + cca.lambda(t - 0.1);
      CHECK(second >= -1e-9);  // convex
    }
    // Lambda(t) - t - (1/3) log(p0 p1 p2) -> 0
    CHECK(std::abs(cca.lambda(30.0) - 30.0 - std::log(dens.product()) / 3.0) < 1e-6);
  }
}

TEST_CASE("lambda agrees with the 9-state transfer-matrix eigenvalue") {
  RngStream rng(42, 0);
  for (int trial = 0; trial < 12; ++trial) {
    const auto dens = random_densities(rng);
    RateFunction cca(DynamicsKind::CCA, dens);
    RateFunction ghm(DynamicsKind::GHM, dens);
    for (double t = 0.5; t <= 6.0; t += 0.5) {
      CHECK(std::abs(cca.lambda(t) -
                     oracles::transfer_matrix_lambda(DynamicsKind::CCA, dens, t)) < 1e-8);
      CHECK(std::abs(ghm.lambda(t) -
                     oracles::transfer_matrix_lambda(DynamicsKind::GHM, dens, t)) < 1e-8);
    }
  }
}

TEST_CASE("legendre: examples and closed form") {
  RateFunction rf(DynamicsKind::CCA, ColorDensities::uniform());
  auto p0 = rf.legendre(0.0);
  CHECK(p0.value == doctest::Approx(0.0).epsilon(1e-10));
  REQUIRE(p0.argmax_t.has_value());
  CHECK(*p0.argmax_t < 1e-5);

  CHECK(rf.legendre(1.0).value == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  CHECK(std::isinf(rf.legendre(1.5).value));
  CHECK_THROWS(rf.legendre(-0.2));

  for (double u : {0.2, 0.5, 0.8})
    CHECK(std::abs(rf.legendre(u).value - oracles::legendre_cca_uniform_closed(u)) < 1e-8);
  for (double u = 0.05; u < 0.96; u += 0.05)
    CHECK(std::abs(rf.legendre(u).value - oracles::legendre_cca_uniform_closed(u)) < 1e-8);
}

TEST_CASE("legendre: GHM transform and ceiling") {
  RngStream rng(43, 0);
  for (int trial = 0; trial < 8; ++trial) {
    const auto dens = random_densities(rng);
    RateFunction cca(DynamicsKind::CCA, dens);
    RateFunction ghm(DynamicsKind::GHM, dens);
    CHECK(ghm.speed_ceiling() == doctest::Approx(1.0 / 3.0));
    for (double u = 0.02; u < 0.33; u += 0.03)
      CHECK(std::abs(ghm.legendre(u).value - cca.legendre(3.0 * u).value) < 1e-8);
    // ceiling values
    CHECK(cca.legendre(1.0).value ==
          doctest::Approx(-std::log(dens.product()) / 3.0).epsilon(1e-12));
    CHECK(ghm.legendre(1.0 / 3.0).value ==
          doctest::Approx(-std::log(dens.product()) / 3.0).epsilon(1e-12));
  }
}

TEST_CASE("legendre invariant under density permutations") {
  RngStream rng(44, 0);
  for (int trial = 0; trial < 6; ++trial) {
    const auto d = random_densities(rng);
    const double perms[6][3] = {{d.p0, d.p1, d.p2}, {d.p0, d.p2, d.p1}, {d.p1, d.p0, d.p2},
                                {d.p1, d.p2, d.p0}, {d.p2, d.p0, d.p1}, {d.p2, d.p1, d.p0}};
    for (auto kind : {DynamicsKind::CCA, DynamicsKind::GHM}) {
      const double B = kind == DynamicsKind::CCA ? 1.0 : 1.0 / 3.0;
      for (double frac : {0.15, 0.45, 0.75}) {
        const double u = frac * B;
        double ref = RateFunction(kind, d).legendre(u).value;
        for (auto& p : perms) {
          RateFunction rf(kind, ColorDensities(p[0], p[1], 1.0 - p[0] - p[1]));
          CHECK(std::abs(rf.legendre(u).value - ref) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("predict_cloud_speed") {
  RateFunction cca(DynamicsKind::CCA, ColorDensities::uniform());
  RateFunction ghm(DynamicsKind::GHM, ColorDensities::uniform());
  const double log2 = std::log(2.0);
  CHECK(std::abs(cca.predict_cloud_speed(log2, log2) - 0.86824163) < 1e-6);
  CHECK(std::abs(ghm.predict_cloud_speed(log2, log2) - 0.28941386) < 1e-6);
  CHECK(std::abs(ghm.predict_cloud_speed(log2, log2) - cca.predict_cloud_speed(log2, log2) / 3.0) <
        1e-9);
  // log d >= log 3 hits the ceiling exactly
  for (int d : {3, 4, 7}) {
    const double ld = std::log(static_cast<double>(d));
    CHECK(cca.predict_cloud_speed(ld, ld) == 1.0);
    CHECK(ghm.predict_cloud_speed(ld, ld) == 1.0 / 3.0);
  }
  CHECK_THROWS(cca.predict_cloud_speed(std::log(2.0), std::log(3.0)));
}

TEST_CASE("cycle-sum zero probabilities") {
  CHECK(cycle_sum_zero_probability_uniform(DynamicsKind::CCA, 3) == Rational(7, 9));
  for (auto kind : {DynamicsKind::CCA, DynamicsKind::GHM})
    for (int k = 3; k <= 6; ++k)
      CHECK(cycle_sum_zero_probability_uniform(kind, k) ==
            oracles::enumerate_cycle_zero_probability(kind, k));
  // double path matches the exact one for uniform densities
  for (int k = 3; k <= 10; ++k)
    CHECK(std::abs(cycle_sum_zero_probability(DynamicsKind::CCA, ColorDensities::uniform(), k) -
                   cycle_sum_zero_probability_uniform(DynamicsKind::CCA, k).to_double()) < 1e-12);
  CHECK_THROWS(cycle_sum_zero_probability_uniform(DynamicsKind::CCA, 2));
}

TEST_CASE("cycle-sum zero probability matches Monte Carlo") {
  RngStream rng(45, 0);
  for (int k = 4; k <= 8; ++k) {
    const int trials = 100000;
    int zeros = 0;
    for (int i = 0; i < trials; ++i) {
      std::int64_t s = 0;
      int first = static_cast<int>(rng.next_below(3)), prev = first;
      for (int j = 1; j < k; ++j) {
        const int c = static_cast<int>(rng.next_below(3));
        s += edge_increment(DynamicsKind::CCA, prev, c);
        prev = c;
      }
      s += edge_increment(DynamicsKind::CCA, prev, first);
      if (s == 0) ++zeros;
    }
    const double z = cycle_sum_zero_probability_uniform(DynamicsKind::CCA, k).to_double();
    const double sigma = std::sqrt(z * (1.0 - z) / trials);
    CHECK(std::abs(static_cast<double>(zeros) / trials - z) < 3.0 * sigma + 1e-12);
  }
}

TEST_CASE("tree function tau(lambda e^-lambda) = lambda") {
  for (double lam : {0.1, 0.2, 0.5, 0.8, 0.95})
    CHECK(tree_function(lam * std::exp(-lam)) == doctest::Approx(lam).epsilon(1e-12));
  CHECK(tree_function(0.0) == 0.0);
  CHECK_THROWS(tree_function(0.5));
}

TEST_CASE("er constants") {
  for (double lam : {0.2, 0.5, 0.9}) {
    const double c = er_no_cycle_probability(lam);
    CHECK(c > 0.0);
    CHECK(c < 1.0);
  }
  CHECK_THROWS(er_no_cycle_probability(1.2));

  // beta increases to 1 with the branching parameter
  double prev = 0.0;
  for (double c : {1.2, 1.5, 2.0, 4.0, 8.0, 32.0}) {
    const double b = giant_component_fraction(c);
    CHECK(b > prev);
    CHECK(b < 1.0);
    prev = b;
    // fixed point residual
    CHECK(std::abs(1.0 - std::exp(-c * b) - b) < 1e-10);
  }
  CHECK(giant_component_fraction(64.0) > 1.0 - 1e-12);
  CHECK_THROWS(giant_component_fraction(0.9));

  for (double lam : {1.5, 2.0, 4.0}) {
    const auto ec = er_constants(lam);
    REQUIRE(ec.beta.has_value());
    CHECK(er_component_deviation_rate(*ec.beta / 2.0, (1.0 + lam) / 2.0) > 0.0);
    REQUIRE(ec.oscillation_rate.has_value());
    CHECK(*ec.oscillation_rate > 0.0);
  }
  CHECK(er_constants(0.5).no_cycle_probability.has_value());
  CHECK(!er_constants(0.5).beta.has_value());
}

TEST_CASE("er_sync_constant: bracket, limit, truncation stability") {
  for (auto kind : {DynamicsKind::CCA, DynamicsKind::GHM}) {
    for (double lam : {0.3, 0.5, 0.8}) {
      const double c = er_no_cycle_probability(lam);
      const double C = er_sync_constant(kind, lam, 40);
      CHECK(C >= c - 1e-12);
      CHECK(C <= 1.0 - (2.0 / 9.0) * (1.0 - c) + 1e-12);
    }
  }
  CHECK(er_sync_constant(DynamicsKind::CCA, 0.01, 30) > 0.999998);
  // tails: sum_{k>K} nu_k (1-z_k) is ~1.2e-8 past k=20 and ~5e-15 past k=40
  CHECK(std::abs(er_sync_constant(DynamicsKind::CCA, 0.5, 20) -
                 er_sync_constant(DynamicsKind::CCA, 0.5, 40)) < 5e-8);
  CHECK(std::abs(er_sync_constant(DynamicsKind::CCA, 0.5, 40) -
                 er_sync_constant(DynamicsKind::CCA, 0.5, 60)) < 1e-10);
  CHECK_THROWS(er_sync_constant(DynamicsKind::CCA, 1.1, 20));
}
