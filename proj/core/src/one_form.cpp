#include "excitable/one_form.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace excitable {

const char* to_string(DynamicsKind k) { return k == DynamicsKind::CCA ? "cca" : "ghm"; }

int edge_increment(DynamicsKind kind, int a, int b) {
  if (kind == DynamicsKind::CCA) {
    static constexpr int diff[3] = {0, 1, -1};
    return diff[((b - a) % 3 + 3) % 3];
  }
  if (a == 0 && b == 1) return 1;
  if (a == 1 && b == 0) return -1;
  return 0;
}

bool Walk::valid_in(const Graph& g) const {
  if (vertices.empty()) return false;
  for (int v : vertices)
    if (v < 0 || v >= g.vertex_count()) return false;
  for (size_t i = 0; i + 1 < vertices.size(); ++i)
    if (!g.has_edge(vertices[i], vertices[i + 1])) return false;
  return true;
}

bool Walk::is_closed() const {
  return vertices.size() >= 2 && vertices.front() == vertices.back();
}

bool Walk::is_cycle() const {
  if (!is_closed()) return false;
  std::vector<int> inner(vertices.begin(), vertices.end() - 1);
  std::sort(inner.begin(), inner.end());
  return std::adjacent_find(inner.begin(), inner.end()) == inner.end();
}

bool Walk::is_path() const {
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

Walk Walk::reversed() const {
  Walk w = *this;
  std::reverse(w.vertices.begin(), w.vertices.end());
  return w;
}

namespace {

std::vector<std::int32_t> adjacency_offsets(const Graph& g) {
  std::vector<std::int32_t> off(g.vertex_count() + 1, 0);
  for (int v = 0; v < g.vertex_count(); ++v)
    off[v + 1] = off[v] + g.degree(v);
  return off;
}

int neighbor_slot(const Graph& g, int u, int v) {
  const auto& a = g.neighbors(u);
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it == a.end() || *it != v) return -1;
  return static_cast<int>(it - a.begin());
}

}  // namespace

OneForm OneForm::from_coloring(std::shared_ptr<const Graph> g, const Coloring& x,
                               DynamicsKind kind) {
  if (!g) throw std::invalid_argument("OneForm: null graph");
  if (x.kappa != 3) throw std::invalid_argument("OneForm: unsupported kappa (need 3)");
  if (x.size() != g->vertex_count())
    throw std::invalid_argument("OneForm: coloring size mismatch");
  OneForm f;
  f.g_ = std::move(g);
  f.kind_ = kind;
  f.off_ = adjacency_offsets(*f.g_);
  f.val_.resize(f.off_.back());
  for (int u = 0; u < f.g_->vertex_count(); ++u) {
    const auto& nb = f.g_->neighbors(u);
    for (size_t i = 0; i < nb.size(); ++i)
      f.val_[f.off_[u] + i] =
          static_cast<std::int8_t>(edge_increment(kind, x.colors[u], x.colors[nb[i]]));
  }
  return f;
}

int OneForm::value(int u, int v) const {
  const int s = neighbor_slot(*g_, u, v);
  if (s < 0) throw std::invalid_argument("OneForm: (u,v) is not an edge");
  return val_[off_[u] + s];
}

std::int64_t path_integral(const OneForm& form, const Walk& walk) {
  if (walk.vertices.empty()) throw std::invalid_argument("path_integral: empty walk");
  std::int64_t s = 0;
  for (size_t i = 0; i + 1 < walk.vertices.size(); ++i)
    s += form.value(walk.vertices[i], walk.vertices[i + 1]);  // throws on non-edge
  return s;
}

IrrotationalityResult irrotationality_check(const Graph& g, const OneForm& form) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("irrotationality_check: empty graph");
  std::vector<int> parent(n, -1);
  std::vector<std::int64_t> phi(n, 0);
  std::vector<char> seen(n, 0);
  // BFS spanning tree from 0; phi(v) = path integral along the tree path.
  std::vector<int> queue{0};
  seen[0] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int v : g.neighbors(u))
      if (!seen[v]) {
        seen[v] = 1;
        parent[v] = u;
        phi[v] = phi[u] + form.value(u, v);
        queue.push_back(v);
      }
  }
  if (static_cast<int>(queue.size()) != n)
    throw std::invalid_argument("irrotationality_check: graph not connected");

  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) {
      if (u > v) continue;
      if (parent[v] == u || parent[u] == v) continue;  // tree edge
      if (form.value(u, v) == phi[v] - phi[u]) continue;
      // Fundamental cycle of (u,v): tree path u -> v, then close with (v,u).
      std::vector<int> up, down;
      std::vector<int> depth(n, -1);
      for (int w = u; w != -1; w = parent[w]) up.push_back(w);
      {
        std::vector<char> on_up(n, 0);
        for (int w : up) on_up[w] = 1;
        int w = v;
        while (!on_up[w]) {
          down.push_back(w);
          w = parent[w];
        }
        // truncate `up` at the meeting point
        while (up.back() != w) up.pop_back();
      }
      Walk cycle;
      cycle.vertices = up;  // u ... lca
      for (auto it = down.rbegin(); it != down.rend(); ++it) cycle.vertices.push_back(*it);
      cycle.vertices.push_back(u);
      IrrotationalityResult r;
      r.witness_cycle = std::move(cycle);
      return r;
    }
  }
  IrrotationalityResult r;
  r.potential = std::move(phi);
  return r;
}

Rational max_cycle_mean(const Graph& g, const OneForm& form) {
  const int n = g.vertex_count();
  if (g.edge_count() == 0) throw std::invalid_argument("max_cycle_mean: graph has no edges");
  if (!g.is_connected()) throw std::invalid_argument("max_cycle_mean: graph not connected");
  if (n > 4000)
    throw std::invalid_argument("max_cycle_mean: refusing n > 4000 (O(n^2) table)");

  // Karp: D[k][v] = max integral over walks from vertex 0 with exactly k
  // edges. The symmetric digraph is strongly connected, so
  //   mmc = max_{v: D[n][v] finite} min_{k: D[k][v] finite} (D[n][v]-D[k][v])/(n-k).
  constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min() / 4;
  std::vector<std::vector<std::int64_t>> D(n + 1, std::vector<std::int64_t>(n, kNegInf));
  D[0][0] = 0;
  for (int k = 1; k <= n; ++k) {
    for (int v = 0; v < n; ++v) {
      const auto& nb = g.neighbors(v);
      std::int64_t best = kNegInf;
      for (size_t i = 0; i < nb.size(); ++i) {
        const int u = nb[i];
        if (D[k - 1][u] == kNegInf) continue;
        // weight of directed edge (u,v) = -value stored at v's slot for u
        const std::int64_t cand = D[k - 1][u] - form.value_at(v, static_cast<int>(i));
        best = std::max(best, cand);
      }
      D[k][v] = best;
    }
  }

  bool have = false;
  Rational best;
  for (int v = 0; v < n; ++v) {
    if (D[n][v] == kNegInf) continue;
    bool have_min = false;
    Rational vmin;
    for (int k = 0; k < n; ++k) {
      if (D[k][v] == kNegInf) continue;
      Rational frac(D[n][v] - D[k][v], n - k);
      if (!have_min || frac < vmin) {
        vmin = frac;
        have_min = true;
      }
    }
    if (have_min && (!have || best < vmin)) {
      best = vmin;
      have = true;
    }
  }
  if (!have) throw std::logic_error("max_cycle_mean: no finite walk table entry");
  return best;
}

std::int64_t walk_max_dp(const Graph& g, const OneForm& form, int start, int t) {
  const int n = g.vertex_count();
  if (start < 0 || start >= n) throw std::invalid_argument("walk_max_dp: bad start vertex");
  if (t < 0) throw std::invalid_argument("walk_max_dp: negative t");
  constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min() / 4;
  std::vector<std::int64_t> h(n, kNegInf), nh(n);
  h[start] = 0;
  for (int s = 0; s < t; ++s) {
    for (int v = 0; v < n; ++v) {
      std::int64_t best = h[v];
      const auto& nb = g.neighbors(v);
      for (size_t i = 0; i < nb.size(); ++i) {
        const int u = nb[i];
        if (h[u] == kNegInf) continue;
        // dX(u,v) = -dX(v,u), and v's slot i stores dX(v,u)
        best = std::max(best, h[u] - form.value_at(v, static_cast<int>(i)));
      }
      nh[v] = best;
    }
    h.swap(nh);
  }
  std::int64_t ans = 0;
  for (int v = 0; v < n; ++v) ans = std::max(ans, h[v]);
  return ans;
}

}  // namespace excitable
