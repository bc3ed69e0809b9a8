#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "excitable/graph.hpp"
#include "excitable/one_form.hpp"
#include "excitable/rate_functions.hpp"
#include "excitable/rng.hpp"
#include "excitable/tree_family.hpp"

namespace excitable {

struct CloudSpeedOptions {
  /// Branch-and-bound against the running maximum. Prunes subtrees that
  /// provably cannot improve it, so running_max stays exact while
  /// per_level_max degrades to lower bounds. Required for families whose
  /// truncations are too large to enumerate (e.g. geometric trees).
  bool prune = false;
  std::uint64_t node_budget = 1000000000ull;
};

struct CloudSpeedResult {
  /// max_{|sigma|=n} S_sigma for n = 0..depth (lower bounds under pruning).
  std::vector<std::int64_t> per_level_max;
  /// max_{|sigma|<=depth} S_sigma; exact in both modes.
  std::int64_t running_max = 0;
  /// Deepest-level point estimate: per_level_max[depth] / depth.
  double speed_estimate = 0.0;
  /// running_max / depth = ne_depth(root)/depth by the walk-max identity;
  /// the meaningful estimator on trees with leaves.
  double activity_estimate = 0.0;
  std::uint64_t visited = 0;
  bool pruned = false;
};

/// Streams a depth-first traversal of one realization (O(depth) memory,
/// colors sampled on the fly from (seed, path)), accumulating S_sigma and
/// per-level maxima. Aborts with BudgetExceeded above the node budget,
/// carrying partial results in the message-side fields.
CloudSpeedResult estimate_cloud_speed(const TreeFamily& family, DynamicsKind kind,
                                      const ColorDensities& densities, int depth, RngStream rng,
                                      const CloudSpeedOptions& opts = {});

/// The truncation of one realization to `depth` as an explicit graph plus
/// the coloring the lazy generator would produce. Root is vertex 0;
/// levels[v] gives each vertex's level.
struct TruncatedTree {
  std::shared_ptr<const Graph> graph;
  Coloring coloring;
  std::vector<int> levels;
};

TruncatedTree materialize_truncation(const TreeFamily& family, const ColorDensities& densities,
                                     int depth, RngStream rng,
                                     std::uint64_t node_budget = 1u << 25);

/// Runs the actual dynamics on the materialized truncation and returns
/// ne_t(root) for t = 0..t_max. Requires t_max <= depth: the root's counts
/// only depend on the t-ball, so the truncation boundary cannot reach them
/// there. Throws a locality-violation error otherwise.
std::vector<std::int64_t> simulate_on_truncated_tree(const TreeFamily& family, DynamicsKind kind,
                                                     const ColorDensities& densities, int depth,
                                                     int t_max, RngStream rng);

}  // namespace excitable
