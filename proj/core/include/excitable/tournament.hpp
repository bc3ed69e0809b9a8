#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "excitable/graph.hpp"
#include "excitable/one_form.hpp"

namespace excitable {

/// Neighborhood-max dynamics on integer ranks. Ranks are pointwise
/// nondecreasing under stepping.
struct TournamentState {
  std::shared_ptr<const Graph> graph;
  std::vector<std::int64_t> ranks;
};

/// rk_{t+1}(x) = max over N(x) u {x} of rk_t.
TournamentState tournament_step(const TournamentState& s);

/// Initial ranking rk_0(z) = path integral of dX_0 from base to z, with
/// rk_0(base) = 0. Well defined only on trees; throws not-a-tree otherwise.
std::vector<std::int64_t> initial_ranking(const Graph& tree, const Coloring& x,
                                          DynamicsKind kind, int base);

/// Runs t tournament steps from the base-potential ranking and returns
/// rk_t(base), which equals ne_t(base) of the color dynamics.
std::int64_t tournament_expansion_on_tree(const Graph& tree, const Coloring& x,
                                          DynamicsKind kind, int base, int t);

}  // namespace excitable
