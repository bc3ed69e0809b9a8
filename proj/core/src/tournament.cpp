#include "excitable/tournament.hpp"

#include <stdexcept>

namespace excitable {

TournamentState tournament_step(const TournamentState& s) {
  const Graph& g = *s.graph;
  TournamentState out{s.graph, s.ranks};
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::int64_t m = s.ranks[v];
    for (int u : g.neighbors(v)) m = std::max(m, s.ranks[u]);
    out.ranks[v] = m;
  }
  return out;
}

std::vector<std::int64_t> initial_ranking(const Graph& tree, const Coloring& x,
                                          DynamicsKind kind, int base) {
  if (!tree.is_tree()) throw std::invalid_argument("initial_ranking: graph is not a tree");
  if (x.kappa != 3) throw std::invalid_argument("initial_ranking: kappa must be 3");
  if (base < 0 || base >= tree.vertex_count())
    throw std::invalid_argument("initial_ranking: bad base vertex");
  std::vector<std::int64_t> rk(tree.vertex_count(), 0);
  std::vector<char> seen(tree.vertex_count(), 0);
  std::vector<int> stack{base};
  seen[base] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : tree.neighbors(u))
      if (!seen[v]) {
        seen[v] = 1;
        rk[v] = rk[u] + edge_increment(kind, x.colors[u], x.colors[v]);
        stack.push_back(v);
      }
  }
  return rk;
}

std::int64_t tournament_expansion_on_tree(const Graph& tree, const Coloring& x,
                                          DynamicsKind kind, int base, int t) {
  TournamentState s{std::make_shared<Graph>(tree), initial_ranking(tree, x, kind, base)};
  for (int i = 0; i < t; ++i) s = tournament_step(s);
  return s.ranks[base];
}

}  // namespace excitable
