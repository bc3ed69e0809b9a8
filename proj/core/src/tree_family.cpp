#include "excitable/tree_family.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "excitable/dynamics.hpp"

namespace excitable {

TreeFamily TreeFamily::d_ary(int d) {
  if (d < 1) throw std::invalid_argument("TreeFamily: d must be >= 1");
  TreeFamily f;
  f.kind_ = TreeKind::DAry;
  f.d_ = d;
  return f;
}

TreeFamily TreeFamily::galton_watson(std::vector<double> offspring_probs) {
  if (offspring_probs.empty())
    throw std::invalid_argument("TreeFamily: empty offspring distribution");
  double s = 0.0;
  for (double p : offspring_probs) {
    if (p < 0) throw std::invalid_argument("TreeFamily: negative offspring probability");
    s += p;
  }
  if (std::abs(s - 1.0) > 1e-9)
    throw std::invalid_argument("TreeFamily: offspring probabilities must sum to 1");
  TreeFamily f;
  f.kind_ = TreeKind::GaltonWatson;
  f.offspring_ = std::move(offspring_probs);
  return f;
}

TreeFamily TreeFamily::geometric(int d) {
  if (d < 2) throw std::invalid_argument("TreeFamily: geometric tree needs d >= 2");
  TreeFamily f;
  f.kind_ = TreeKind::Geometric;
  f.d_ = d;
  return f;
}

TreeFamily TreeFamily::ray_with_leaves() {
  TreeFamily f;
  f.kind_ = TreeKind::RayWithLeaves;
  return f;
}

double TreeFamily::offspring_mean() const {
  if (kind_ != TreeKind::GaltonWatson)
    throw std::logic_error("offspring_mean: not a Galton-Watson family");
  double m = 0.0;
  for (size_t k = 0; k < offspring_.size(); ++k) m += static_cast<double>(k) * offspring_[k];
  return m;
}

std::optional<TreeFamily::ClosedForms> TreeFamily::closed_forms() const {
  switch (kind_) {
    case TreeKind::DAry: {
      const double l = std::log(static_cast<double>(d_));
      return ClosedForms{l, l, l};
    }
    case TreeKind::Geometric: {
      const double h = 0.5 * std::log(static_cast<double>(d_));
      return ClosedForms{0.0, h, h};
    }
    case TreeKind::RayWithLeaves:
      return ClosedForms{0.0, std::log(2.0), 0.0};
    case TreeKind::GaltonWatson: {
      const double m = offspring_mean();
      if (m <= 1.0) return std::nullopt;
      const double l = std::log(m);
      return ClosedForms{l, l, l};  // a.s. values on survival
    }
  }
  return std::nullopt;
}

double LevelStats::a_n_m(int n, int m) const {
  if (n < 0 || m < n || m > depth_) throw std::invalid_argument("a_n_m: need 0 <= n <= m <= depth");
  return a_nm_[n][m - n];
}

namespace {

constexpr std::uint64_t kOffspringSalt = 0xC2B2AE3D27D4EB4Full;

// Attachment level a with a < n <= 2a, if any (intervals are disjoint).
int geometric_attach_level(int n) {
  for (int a = 1; a <= n; a *= 4)
    if (a < n && n <= 2 * a) return a;
  return 0;
}

int sample_index(std::uint64_t h, const std::vector<double>& probs) {
  const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
  double acc = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u < acc) return static_cast<int>(i);
  }
  return static_cast<int>(probs.size()) - 1;
}

LevelStats galton_watson_stats(const TreeFamily& family, int depth, RngStream rng,
                               std::uint64_t node_budget) {
  struct Frame {
    std::uint64_t key;
    int level;
    int child_i;
    int nchild;
    int maxdesc;
  };
  for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
    RngStream base = rng.fork(attempt);
    const std::uint64_t root_key = base.next_u64();
    std::vector<double> a(depth + 1, 0.0);
    // a_desc[n][h-n]: vertices at level n whose deepest descendant is at h
    std::vector<std::vector<double>> a_desc(depth + 1);
    for (int n = 0; n <= depth; ++n) a_desc[n].assign(depth - n + 1, 0.0);

    std::uint64_t visited = 0;
    std::vector<Frame> stack;
    auto offspring_of = [&](std::uint64_t key) {
      return sample_index(mix64(key ^ kOffspringSalt), family.offspring());
    };
    stack.push_back({root_key, 0, 0, offspring_of(root_key), 0});
    a[0] += 1;
    ++visited;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.level == depth || f.child_i == f.nchild) {
        const int md = f.level == depth ? depth : f.maxdesc;
        a_desc[f.level][md - f.level] += 1;
        const int carry = md;
        stack.pop_back();
        if (!stack.empty())
          stack.back().maxdesc = std::max(stack.back().maxdesc, carry);
        continue;
      }
      const std::uint64_t ck = mix64(f.key ^ (kGolden * static_cast<std::uint64_t>(f.child_i + 1)));
      ++f.child_i;
      if (++visited > node_budget)
        throw BudgetExceeded("level_stats: node budget exceeded", {}, 0);
      const int lvl = f.level + 1;
      a[lvl] += 1;
      stack.push_back({ck, lvl, 0, lvl == depth ? 0 : offspring_of(ck), lvl});
    }
    if (a[depth] == 0.0) continue;  // rejected: did not survive to depth

    std::vector<std::vector<double>> a_nm(depth + 1);
    for (int n = 0; n <= depth; ++n) {
      a_nm[n].assign(depth - n + 1, 0.0);
      // A_{n,m} = #vertices at n with maxdesc >= m (suffix sums)
      double suffix = 0.0;
      for (int m = depth; m >= n; --m) {
        suffix += a_desc[n][m - n];
        a_nm[n][m - n] = suffix;
      }
    }
    return LevelStats(depth, std::move(a), std::move(a_nm));
  }
  throw std::runtime_error("level_stats: Galton-Watson realization never survived to depth");
}

}  // namespace

LevelStats level_stats(const TreeFamily& family, int depth, RngStream rng,
                       std::uint64_t node_budget) {
  if (depth < 0) throw std::invalid_argument("level_stats: negative depth");
  const int d = family.branching();
  std::vector<double> a(depth + 1, 0.0);
  std::vector<std::vector<double>> a_nm(depth + 1);
  for (int n = 0; n <= depth; ++n) a_nm[n].assign(depth - n + 1, 0.0);

  switch (family.tree_kind()) {
    case TreeKind::DAry: {
      // No leaves: every vertex has descendants at every later level.
      for (int n = 0; n <= depth; ++n) {
        a[n] = std::pow(static_cast<double>(d), n);
        for (int m = n; m <= depth; ++m) a_nm[n][m - n] = a[n];
      }
      return LevelStats(depth, std::move(a), std::move(a_nm));
    }
    case TreeKind::RayWithLeaves: {
      for (int n = 0; n <= depth; ++n) {
        a[n] = n == 0 ? 1.0 : std::pow(2.0, n);
        a_nm[n][0] = a[n];
        for (int m = n + 1; m <= depth; ++m) a_nm[n][m - n] = 1.0;  // only the ray survives
      }
      return LevelStats(depth, std::move(a), std::move(a_nm));
    }
    case TreeKind::Geometric: {
      for (int n = 0; n <= depth; ++n) {
        const int attach = geometric_attach_level(n);
        const double in_tree =
            attach > 0 ? std::pow(static_cast<double>(d), n - attach) : 0.0;
        a[n] = 1.0 + in_tree;  // the ray vertex plus the active d-ary slab
        for (int m = n; m <= depth; ++m) {
          double cnt = 1.0;  // the ray vertex reaches every level
          if (attach > 0 && m <= 2 * attach) cnt += in_tree;
          a_nm[n][m - n] = cnt;
        }
      }
      return LevelStats(depth, std::move(a), std::move(a_nm));
    }
    case TreeKind::GaltonWatson:
      return galton_watson_stats(family, depth, rng, node_budget);
  }
  throw std::logic_error("level_stats: unknown family");
}

EntropyEstimates entropy_estimates(const LevelStats& stats, double r) {
  if (!(r > 1.0)) throw std::invalid_argument("entropy_estimates: r must be > 1");
  const int depth = stats.depth();
  if (static_cast<int>(std::floor(r)) > depth)
    throw std::invalid_argument("entropy_estimates: stats not deep enough for this r");
  EntropyEstimates out;
  for (int n = 1; n <= depth; ++n)
    out.h_series.push_back(std::log(stats.a_n(n)) / n);
  out.n_used = depth;
  out.h_hat = out.h_series.empty() ? 0.0 : out.h_series.back();
  for (int n = 1; n <= depth; ++n) {
    const int m = static_cast<int>(std::floor(r * n));
    if (m > depth) break;
    out.h_r_series.push_back(std::log(stats.a_n_m(n, m)) / n);
    out.n_r_used = n;
  }
  out.h_r_hat = out.h_r_series.empty() ? 0.0 : out.h_r_series.back();
  return out;
}

}  // namespace excitable
