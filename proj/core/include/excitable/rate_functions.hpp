#pragma once

#include <optional>
#include <vector>

#include "excitable/one_form.hpp"
#include "excitable/rational.hpp"

namespace excitable {

/// Marginal color probabilities (p0, p1, p2) of the product measure.
struct ColorDensities {
  double p0 = 1.0 / 3.0;
  double p1 = 1.0 / 3.0;
  double p2 = 1.0 / 3.0;

  ColorDensities() = default;
  ColorDensities(double a, double b, double c);
  static ColorDensities uniform() { return ColorDensities(); }

  double product() const { return p0 * p1 * p2; }
  double operator[](int i) const { return i == 0 ? p0 : (i == 1 ? p1 : p2); }
};

struct LegendrePoint {
  double u = 0.0;
  double value = 0.0;  // +infinity above the speed ceiling
  std::optional<double> argmax_t;

  bool finite() const;
};

/// The scaled cumulant generating function Lambda of the walk increments
/// and its Legendre transform, for one dynamics kind and one density
/// triple. Lambda(t) is the log of the largest root x >= 1 of
///   x^3 - x^2 = p0 p1 p2 (e^{3t} + e^{-3t} - 2)      (CCA),
/// and Lambda_GHM(t) = Lambda_CCA(t/3). All evaluations are pure.
class RateFunction {
public:
  RateFunction(DynamicsKind kind, ColorDensities densities);

  DynamicsKind kind() const { return kind_; }
  const ColorDensities& densities() const { return dens_; }

  /// Speed ceiling B: 1 for CCA, 1/3 for GHM.
  double speed_ceiling() const;

  /// Lambda(t) for t >= 0; root solved by safeguarded Newton to 1e-13.
  double lambda(double t) const;

  /// Legendre transform sup_{t>=0} [ut - Lambda(t)] by ternary search
  /// (Lambda is convex). Finite on [0, B]; at the ceiling the value is
  /// -(1/3) log(p0 p1 p2); +infinity beyond.
  LegendrePoint legendre(double u) const;

  /// Cloud speed on a tree with log br = volume entropy h (the operation
  /// asserts that hypothesis): B when h >= -(1/3) log(p0 p1 p2), else the
  /// unique v with Legendre(v) = h, by bisection.
  double predict_cloud_speed(double log_br, double entropy) const;

private:
  DynamicsKind kind_;
  ColorDensities dens_;
};

/// P(contour integral of dX_0 around a k-cycle is zero) under the uniform
/// product measure, as an exact rational (transfer-matrix DP with integer
/// path counts). k >= 3; exact up to k = 38.
Rational cycle_sum_zero_probability_uniform(DynamicsKind kind, int k);

/// Same probability for arbitrary densities, in double precision.
double cycle_sum_zero_probability(DynamicsKind kind, const ColorDensities& dens, int k);

/// tau(x) = sum_{s>=1} s^{s-1} x^s / s!, truncated when terms drop below
/// 1e-15 (hard cap 200 terms). tau(lambda e^-lambda) = lambda on (0,1).
double tree_function(double x);

/// Limit probability that G(n, lambda/n) has no cycle:
/// (1-lambda)^{1/2} e^{lambda/2 + lambda^2/4}. Domain lambda in (0,1).
double er_no_cycle_probability(double lambda);

/// Unique positive solution of beta = 1 - e^{-c beta}; c > 1.
double giant_component_fraction(double c);

/// Large-deviation rate A(x, lambda) for the largest-component fraction
/// falling below x: -x log(1-e^{-lambda x}) + x log x + (1-x) log(1-x)
/// + lambda x (1-x).
double er_component_deviation_rate(double x, double lambda);

/// Exponential rate D(lambda) for oscillation on the largest component,
/// lambda > 1, built from A and the beta fixed point at (lambda+1)/2.
double er_oscillation_rate(double lambda);

struct ErConstants {
  std::optional<double> no_cycle_probability;   // c(lambda), lambda in (0,1)
  std::optional<double> beta;                   // fixed point at (lambda+1)/2, lambda > 1
  std::optional<double> oscillation_rate;       // D(lambda), lambda > 1
};

ErConstants er_constants(double lambda);

/// Truncated limit constant C(lambda) = prod_{k=3}^{k_max}
/// exp(-nu_k (1 - z_k)) with nu_k = tau(lambda e^-lambda)^k / (2k) and
/// z_k the uniform cycle-sum-zero probability for the given dynamics.
/// Domain lambda in (0,1). Lies in [c(lambda), 1 - (2/9)(1-c(lambda))].
double er_sync_constant(DynamicsKind kind, double lambda, int k_max);

}  // namespace excitable
