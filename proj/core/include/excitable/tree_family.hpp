#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "excitable/rng.hpp"

namespace excitable {

enum class TreeKind {
  DAry,          // every vertex has d children
  GaltonWatson,  // i.i.d. offspring counts
  Geometric,     // infinite ray; a depth-4^k d-ary tree hangs at ray level 4^k
  RayWithLeaves, // infinite ray; 2^{l+1}-1 leaves hang below ray level l
};

/// Lazy family of rooted, locally finite infinite trees. Vertices are keyed
/// by their path from the root, so a realization (structure and colors) is
/// a pure function of (seed, stream) and never materialized.
class TreeFamily {
public:
  static TreeFamily d_ary(int d);
  static TreeFamily galton_watson(std::vector<double> offspring_probs);
  static TreeFamily geometric(int d);
  static TreeFamily ray_with_leaves();

  TreeKind tree_kind() const { return kind_; }
  int branching() const { return d_; }
  const std::vector<double>& offspring() const { return offspring_; }

  struct ClosedForms {
    double log_br;
    double h;      // volume entropy
    double h_bar;  // reduced volume entropy
  };

  /// Known growth invariants: DAry(d): log d everywhere. Geometric(d):
  /// log_br = 0, h = h_bar = (log d)/2. RayWithLeaves: log_br = 0,
  /// h = log 2, h_bar = 0. Supercritical Galton-Watson: log of the mean
  /// offspring (a.s. values). Nullopt when the family has no closed form.
  std::optional<ClosedForms> closed_forms() const;

  /// Mean offspring (Galton-Watson only).
  double offspring_mean() const;

private:
  TreeFamily() = default;
  TreeKind kind_ = TreeKind::DAry;
  int d_ = 2;
  std::vector<double> offspring_;
};

/// Exact per-level counts of one realization truncated at `depth`:
/// a_n = #vertices at level n, a_n_m(n,m) = #level-n vertices with a
/// descendant at level m. Counts are exact integers stored as doubles
/// (closed forms for the deterministic families, enumeration for
/// Galton-Watson).
class LevelStats {
public:
  LevelStats(int depth, std::vector<double> a, std::vector<std::vector<double>> a_nm)
      : depth_(depth), a_(std::move(a)), a_nm_(std::move(a_nm)) {}

  int depth() const { return depth_; }
  double a_n(int n) const { return a_[n]; }
  double a_n_m(int n, int m) const;  // requires n <= m <= depth

private:
  int depth_;
  std::vector<double> a_;                  // index 0..depth
  std::vector<std::vector<double>> a_nm_;  // [n][m-n]
};

/// Galton-Watson realizations are conditioned on survival to `depth` by
/// rejection over derived streams.
LevelStats level_stats(const TreeFamily& family, int depth, RngStream rng,
                       std::uint64_t node_budget = 1000000000ull);

struct EntropyEstimates {
  double h_hat = 0.0;    // (1/n) log A_n at the deepest admissible n
  double h_r_hat = 0.0;  // (1/n) log A_{n, floor(rn)} likewise
  int n_used = 0;
  int n_r_used = 0;
  std::vector<double> h_series;    // (1/n) log A_n for n = 1..depth
  std::vector<double> h_r_series;  // (1/n) log A_{n, floor(rn)} while rn <= depth
};

/// Finite-depth estimators of the volume entropy and r-volume entropy,
/// with the full sequences for convergence inspection. Requires r > 1 and
/// stats deep enough that floor(r n) <= depth for some n >= 1.
EntropyEstimates entropy_estimates(const LevelStats& stats, double r);

}  // namespace excitable
