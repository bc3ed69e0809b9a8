#include "excitable/rate_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace excitable {

ColorDensities::ColorDensities(double a, double b, double c) : p0(a), p1(b), p2(c) {
  if (!(p0 >= 0 && p0 <= 1 && p1 >= 0 && p1 <= 1 && p2 >= 0 && p2 <= 1))
    throw std::invalid_argument("ColorDensities: entries must lie in [0,1]");
  if (std::abs(p0 + p1 + p2 - 1.0) > 1e-12)
    throw std::invalid_argument("ColorDensities: must sum to 1");
}

bool LegendrePoint::finite() const { return std::isfinite(value); }

RateFunction::RateFunction(DynamicsKind kind, ColorDensities densities)
    : kind_(kind), dens_(densities) {}

double RateFunction::speed_ceiling() const {
  return kind_ == DynamicsKind::CCA ? 1.0 : 1.0 / 3.0;
}

namespace {

// Largest root x >= 1 of x^3 - x^2 = rhs, safeguarded Newton inside the
// bracket [max(1, cbrt(rhs)), 1 + cbrt(rhs)], to absolute tolerance 1e-13.
double largest_cubic_root(double rhs) {
  if (rhs == 0.0) return 1.0;
  const double c = std::cbrt(rhs);
  double lo = std::max(1.0, c), hi = 1.0 + c;
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double f = (x - 1.0) * x * x - rhs;
    if (f > 0)
      hi = x;
    else
      lo = x;
    const double df = x * (3.0 * x - 2.0);
    double nx = x - f / df;
    if (!(nx > lo && nx < hi)) nx = 0.5 * (lo + hi);
    if (std::abs(nx - x) < 1e-13) return nx;
    x = nx;
  }
  return x;
}

}  // namespace

double RateFunction::lambda(double t) const {
  if (t < 0) throw std::invalid_argument("lambda: t must be >= 0");
  const double s = kind_ == DynamicsKind::CCA ? 3.0 * t : t;
  const double rhs = dens_.product() * (std::exp(s) + std::exp(-s) - 2.0);
  return std::log(largest_cubic_root(rhs));
}

LegendrePoint RateFunction::legendre(double u) const {
  if (u < 0) throw std::invalid_argument("legendre: u must be >= 0");
  const double B = speed_ceiling();
  LegendrePoint p;
  p.u = u;
  const double P = dens_.product();
  if (P <= 0.0) {
    // A zero density makes every increment 0 along the chain's support.
    p.value = u > 1e-12 ? std::numeric_limits<double>::infinity() : 0.0;
    if (u <= 1e-12) p.argmax_t = 0.0;
    return p;
  }
  if (u > B + 1e-12) {
    p.value = std::numeric_limits<double>::infinity();
    return p;
  }
  if (u >= B - 1e-12) {
    p.value = -std::log(P) / 3.0;
    return p;
  }
  auto phi = [&](double t) { return u * t - lambda(t); };
  // Expand until the concave objective has turned over.
  double hi = 1.0;
  while (phi(hi) >= phi(hi * 0.5) && hi < 1e4) hi *= 2.0;
  double lo = 0.0;
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (phi(m1) < phi(m2))
      lo = m1;
    else
      hi = m2;
    if (hi - lo < 1e-12 * std::max(1.0, hi)) break;
  }
  const double t_star = 0.5 * (lo + hi);
  p.argmax_t = t_star;
  p.value = std::max(0.0, phi(t_star));
  return p;
}

double RateFunction::predict_cloud_speed(double log_br, double entropy) const {
  if (std::abs(log_br - entropy) > 1e-9 * std::max(1.0, std::abs(entropy)))
    throw std::invalid_argument(
        "predict_cloud_speed: hypothesis violated (log br != volume entropy)");
  const double B = speed_ceiling();
  const double P = dens_.product();
  if (P <= 0.0) return entropy > 0 ? B : 0.0;
  const double ceiling_entropy = -std::log(P) / 3.0;
  if (entropy >= ceiling_entropy) return B;
  if (entropy <= 0.0) return 0.0;
  // Legendre is 0 at 0, strictly increasing and continuous up to the
  // ceiling, so bisection pins the unique v with Legendre(v) = entropy.
  double lo = 0.0, hi = B;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (legendre(mid).value < entropy)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-11) break;
  }
  return 0.5 * (lo + hi);
}

Rational cycle_sum_zero_probability_uniform(DynamicsKind kind, int k) {
  if (k < 3) throw std::invalid_argument("cycle_sum_zero_probability: k must be >= 3");
  if (k > 38) throw std::invalid_argument("cycle_sum_zero_probability: exact counts need k <= 38");
  // Count colorings of the k-cycle with zero contour integral. DP over
  // (current color, running sum), one pass per first color.
  const int width = 2 * k + 1;
  std::int64_t zero_count = 0;
  std::vector<std::int64_t> cur(3 * width), nxt(3 * width);
  for (int f = 0; f < 3; ++f) {
    std::fill(cur.begin(), cur.end(), 0);
    cur[f * width + k] = 1;  // sum offset k
    for (int step = 0; step < k - 1; ++step) {
      std::fill(nxt.begin(), nxt.end(), 0);
      for (int c = 0; c < 3; ++c)
        for (int s = 0; s < width; ++s) {
          const std::int64_t w = cur[c * width + s];
          if (w == 0) continue;
          for (int d = 0; d < 3; ++d) {
            const int ns = s + edge_increment(kind, c, d);
            nxt[d * width + ns] += w;
          }
        }
      cur.swap(nxt);
    }
    for (int c = 0; c < 3; ++c) {
      const int need = k - edge_increment(kind, c, f);  // close the cycle
      zero_count += cur[c * width + need];
    }
  }
  std::int64_t denom = 1;
  for (int i = 0; i < k; ++i) denom *= 3;
  return Rational(zero_count, denom);
}

double cycle_sum_zero_probability(DynamicsKind kind, const ColorDensities& dens, int k) {
  if (k < 3) throw std::invalid_argument("cycle_sum_zero_probability: k must be >= 3");
  const int width = 2 * k + 1;
  double prob = 0.0;
  std::vector<double> cur(3 * width), nxt(3 * width);
  for (int f = 0; f < 3; ++f) {
    std::fill(cur.begin(), cur.end(), 0.0);
    cur[f * width + k] = dens[f];
    for (int step = 0; step < k - 1; ++step) {
      std::fill(nxt.begin(), nxt.end(), 0.0);
      for (int c = 0; c < 3; ++c)
        for (int s = 0; s < width; ++s) {
          const double w = cur[c * width + s];
          if (w == 0.0) continue;
          for (int d = 0; d < 3; ++d)
            nxt[d * width + s + edge_increment(kind, c, d)] += w * dens[d];
        }
      cur.swap(nxt);
    }
    for (int c = 0; c < 3; ++c)
      prob += cur[c * width + k - edge_increment(kind, c, f)];
  }
  return prob;
}

double tree_function(double x) {
  if (x < 0 || x > std::exp(-1.0) + 1e-12)
    throw std::invalid_argument("tree_function: x must lie in [0, 1/e]");
  if (x == 0.0) return 0.0;
  double sum = 0.0;
  // Terms decay geometrically in (xe) < 1; near x = 1/e that ratio
  // approaches 1 and the 1e-15 cutoff needs tens of thousands of terms.
  for (int s = 1; s <= 30000; ++s) {
    const double term = std::exp((s - 1) * std::log(static_cast<double>(s)) +
                                 s * std::log(x) - std::lgamma(s + 1.0));
    sum += term;
    if (term < 1e-15) break;
  }
  return sum;
}

double er_no_cycle_probability(double lambda) {
  if (!(lambda > 0 && lambda < 1))
    throw std::invalid_argument("er_no_cycle_probability: lambda must lie in (0,1)");
  return std::sqrt(1.0 - lambda) * std::exp(lambda / 2.0 + lambda * lambda / 4.0);
}

double giant_component_fraction(double c) {
  if (!(c > 1.0)) throw std::invalid_argument("giant_component_fraction: parameter must be > 1");
  double lo = 1e-12, hi = 1.0;
  // f(b) = 1 - e^{-cb} - b is positive near 0+ and negative at 1.
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f = 1.0 - std::exp(-c * mid) - mid;
    if (f > 0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-12) break;
  }
  return 0.5 * (lo + hi);
}

double er_component_deviation_rate(double x, double lambda) {
  if (!(x > 0 && x < 1))
    throw std::invalid_argument("er_component_deviation_rate: x must lie in (0,1)");
  return -x * std::log(1.0 - std::exp(-lambda * x)) + x * std::log(x) +
         (1.0 - x) * std::log(1.0 - x) + lambda * x * (1.0 - x);
}

double er_oscillation_rate(double lambda) {
  if (!(lambda > 1.0))
    throw std::invalid_argument("er_oscillation_rate: lambda must be > 1");
  const double lp = (lambda + 1.0) / 2.0;
  const double beta = giant_component_fraction(lp);
  const double a = 192.0 * er_component_deviation_rate(beta / 2.0, lp);
  const double b = beta;
  const double c = 4.0 * beta * (1.0 - std::exp(-(lambda - 1.0) * beta / 24.0)) *
                   std::log(9.0 / 7.0);
  return std::min({a, b, c}) / 384.0;
}

ErConstants er_constants(double lambda) {
  ErConstants out;
  if (lambda > 0 && lambda < 1) out.no_cycle_probability = er_no_cycle_probability(lambda);
  if (lambda > 1) {
    out.beta = giant_component_fraction((lambda + 1.0) / 2.0);
    out.oscillation_rate = er_oscillation_rate(lambda);
  }
  return out;
}

double er_sync_constant(DynamicsKind kind, double lambda, int k_max) {
  if (!(lambda > 0 && lambda < 1))
    throw std::invalid_argument("er_sync_constant: lambda must lie in (0,1)");
  if (k_max < 3) throw std::invalid_argument("er_sync_constant: k_max must be >= 3");
  const double tau = tree_function(lambda * std::exp(-lambda));
  double exponent = 0.0;
  const ColorDensities uni = ColorDensities::uniform();
  for (int k = 3; k <= k_max; ++k) {
    const double nu = std::pow(tau, k) / (2.0 * k);
    const double zk = cycle_sum_zero_probability(kind, uni, k);
    exponent += nu * (1.0 - zk);
  }
  return std::exp(-exponent);
}

}  // namespace excitable
