#include "excitable/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace excitable {

Coloring random_coloring(int n, const ColorDensities& densities, RngStream& rng) {
  if (n < 0) throw std::invalid_argument("random_coloring: negative n");
  std::vector<std::uint8_t> cols(n);
  const double c0 = densities.p0, c1 = densities.p0 + densities.p1;
  for (int v = 0; v < n; ++v) {
    const double u = rng.next_unit();
    cols[v] = u < c0 ? 0 : (u < c1 ? 1 : 2);
  }
  return Coloring(3, std::move(cols));
}

Graph erdos_renyi(int n, double p, RngStream& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("erdos_renyi: p must lie in [0,1]");
  std::vector<std::pair<int, int>> edges;
  const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (p >= 1.0) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
  }
  if (p > 0.0 && n >= 2) {
    // Geometric skips over the linearized pair index: O(n+m) expected.
    const double log1p_ = std::log(1.0 - p);
    double idx = -1.0;
    for (;;) {
      const double u = 1.0 - rng.next_unit();  // (0,1]
      idx += 1.0 + std::floor(std::log(u) / log1p_);
      if (idx >= static_cast<double>(total)) break;
      const auto k = static_cast<std::uint64_t>(idx);
      // invert k = C(u0,2)-style row mapping: find row u0 with offset
      const double uf = std::floor((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(k))) / 2.0);
      auto row = static_cast<std::uint64_t>(uf);
      while (row * (row - 1) / 2 > k) --row;
      while ((row + 1) * row / 2 <= k) ++row;
      const std::uint64_t col = k - row * (row - 1) / 2;
      edges.emplace_back(static_cast<int>(col), static_cast<int>(row));
    }
  }
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(n, edges);
}

Graph wilson_ust(const Graph& base, RngStream& rng) {
  const int n = base.vertex_count();
  if (!base.is_connected()) throw std::invalid_argument("wilson_ust: base not connected");
  if (n == 0) return Graph(0);
  std::vector<char> in_tree(n, 0);
  std::vector<int> next(n, -1);
  in_tree[0] = 1;
  for (int v = 0; v < n; ++v) {
    if (in_tree[v]) continue;
    // Random walk from v until the tree, recording successors (the walk
    // is loop-erased implicitly: next[] keeps only the last exit).
    int u = v;
    while (!in_tree[u]) {
      const auto& nb = base.neighbors(u);
      next[u] = nb[rng.next_below(nb.size())];
      u = next[u];
    }
    u = v;
    while (!in_tree[u]) {
      in_tree[u] = 1;
      u = next[u];
    }
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int v = 1; v < n; ++v) {
    const int u = next[v];
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return Graph::from_edges(n, edges);
}

Graph torus_grid(int width, int height) {
  if (width < 2 || height < 2) throw std::invalid_argument("torus_grid: sides must be >= 2");
  std::set<std::pair<int, int>> edge_set;
  auto id = [&](int x, int y) { return ((x + width) % width) + width * ((y + height) % height); };
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) {
      const int a = id(x, y);
      for (auto [dx, dy] : {std::pair{1, 0}, std::pair{0, 1}}) {
        const int b = id(x + dx, y + dy);
        if (a != b) edge_set.insert({std::min(a, b), std::max(a, b)});
      }
    }
  std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());
  return Graph::from_edges(width * height, edges);
}

Graph add_random_edges(const Graph& tree, int count, RngStream& rng) {
  const int n = tree.vertex_count();
  const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const std::uint64_t missing = total - static_cast<std::uint64_t>(tree.edge_count());
  if (count < 0 || static_cast<std::uint64_t>(count) > missing)
    throw std::invalid_argument("add_random_edges: not enough absent edges");
  auto edges = tree.edges();
  std::set<std::pair<int, int>> present(edges.begin(), edges.end());
  int added = 0;
  while (added < count) {
    int u = static_cast<int>(rng.next_below(n));
    int v = static_cast<int>(rng.next_below(n));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (present.count({u, v})) continue;
    present.insert({u, v});
    ++added;
  }
  std::vector<std::pair<int, int>> all(present.begin(), present.end());
  return Graph::from_edges(n, all);
}

bool CycleMatchingCertificate::valid(const Graph& g) const {
  if (matching_edges.size() != cycles.size()) return false;
  const int k = static_cast<int>(matching_edges.size());
  std::set<int> used;
  for (auto [u, v] : matching_edges) {
    if (!g.has_edge(u, v)) return false;
    if (used.count(u) || used.count(v)) return false;  // must be a matching
    used.insert(u);
    used.insert(v);
  }
  for (int j = 0; j < k; ++j) {
    if (!cycles[j].valid_in(g) || !cycles[j].is_cycle()) return false;
    std::set<std::pair<int, int>> cyc_edges;
    const auto& vs = cycles[j].vertices;
    for (size_t i = 0; i + 1 < vs.size(); ++i)
      cyc_edges.insert({std::min(vs[i], vs[i + 1]), std::max(vs[i], vs[i + 1])});
    for (int i = 0; i < k; ++i) {
      auto [u, v] = matching_edges[i];
      const bool inside = cyc_edges.count({std::min(u, v), std::max(u, v)}) > 0;
      if (inside != (i == j)) return false;
    }
  }
  return true;
}

CycleMatchingCertificate find_certificate(const Graph& g, RngStream& rng) {
  const int n = g.vertex_count();
  if (!g.is_connected()) throw std::invalid_argument("find_certificate: graph not connected");
  CycleMatchingCertificate cert;
  if (n == 0) return cert;

  // BFS spanning tree from 0; depth parity bipartitions the tree.
  std::vector<int> parent(n, -1), depth(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int v : g.neighbors(u))
      if (!seen[v]) {
        seen[v] = 1;
        parent[v] = u;
        depth[v] = depth[u] + 1;
        queue.push_back(v);
      }
  }
  int even = 0;
  for (int v = 0; v < n; ++v)
    if (depth[v] % 2 == 0) ++even;
  const int side = 2 * even >= n ? 0 : 1;  // larger bipartition class

  // Non-tree edges with both endpoints in S, in seed-shuffled order.
  std::vector<std::pair<int, int>> candidates;
  for (auto [u, v] : g.edges()) {
    if (parent[v] == u || parent[u] == v) continue;
    if (depth[u] % 2 == side && depth[v] % 2 == side) candidates.emplace_back(u, v);
  }
  for (size_t i = candidates.size(); i > 1; --i)
    std::swap(candidates[i - 1], candidates[rng.next_below(i)]);

  std::vector<char> matched(n, 0);
  for (auto [u, v] : candidates) {
    if (matched[u] || matched[v]) continue;
    matched[u] = matched[v] = 1;
    cert.matching_edges.emplace_back(u, v);
    // Fundamental cycle: tree path u -> v, closed by the edge (v,u).
    std::vector<int> up;
    for (int w = u; w != -1; w = parent[w]) up.push_back(w);
    std::vector<char> on_up(n, 0);
    for (int w : up) on_up[w] = 1;
    std::vector<int> down;
    int w = v;
    while (!on_up[w]) {
      down.push_back(w);
      w = parent[w];
    }
    while (up.back() != w) up.pop_back();
    Walk cycle;
    cycle.vertices = up;
    for (auto it = down.rbegin(); it != down.rend(); ++it) cycle.vertices.push_back(*it);
    cycle.vertices.push_back(u);
    cert.cycles.push_back(std::move(cycle));
  }
  return cert;
}

}  // namespace excitable
