#include "excitable/particles.hpp"

#include <algorithm>
#include <stdexcept>

namespace excitable {

namespace {

std::vector<std::int32_t> adjacency_offsets(const Graph& g) {
  std::vector<std::int32_t> off(g.vertex_count() + 1, 0);
  for (int v = 0; v < g.vertex_count(); ++v) off[v + 1] = off[v] + g.degree(v);
  return off;
}

int neighbor_slot(const Graph& g, int u, int v) {
  const auto& a = g.neighbors(u);
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it == a.end() || *it != v) return -1;
  return static_cast<int>(it - a.begin());
}

}  // namespace

ParticleConfig ParticleConfig::from_coloring(std::shared_ptr<const Graph> tree,
                                             const Coloring& x, DynamicsKind kind) {
  if (!tree) throw std::invalid_argument("ParticleConfig: null graph");
  if (!tree->is_tree()) throw std::invalid_argument("ParticleConfig: graph is not a tree");
  if (x.kappa != 3) throw std::invalid_argument("ParticleConfig: kappa must be 3");
  ParticleConfig c;
  c.g_ = std::move(tree);
  c.off_ = adjacency_offsets(*c.g_);
  c.val_.resize(c.off_.back());
  for (int u = 0; u < c.g_->vertex_count(); ++u) {
    const auto& nb = c.g_->neighbors(u);
    for (size_t i = 0; i < nb.size(); ++i)
      c.val_[c.off_[u] + i] =
          static_cast<std::int8_t>(-edge_increment(kind, x.colors[u], x.colors[nb[i]]));
  }
  return c;
}

int ParticleConfig::value(int u, int v) const {
  const int s = neighbor_slot(*g_, u, v);
  if (s < 0) throw std::invalid_argument("ParticleConfig: (u,v) is not an edge");
  return val_[off_[u] + s];
}

int ParticleConfig::particle_count() const {
  int c = 0;
  for (auto v : val_)
    if (v == 1) ++c;
  return c;
}

ParticleConfig particle_step(const ParticleConfig& cfg) {
  const Graph& g = *cfg.g_;
  // potential[slot of (v,w)] = a branched particle wants to enter edge vw
  std::vector<std::int8_t> pot(cfg.val_.size(), 0);
  for (int u = 0; u < g.vertex_count(); ++u) {
    const auto& nb = g.neighbors(u);
    for (size_t i = 0; i < nb.size(); ++i) {
      if (cfg.val_[cfg.off_[u] + i] != 1) continue;  // particle u -> v
      const int v = nb[i];
      const auto& nb2 = g.neighbors(v);
      for (size_t j = 0; j < nb2.size(); ++j) {
        const int w = nb2[j];
        // blocked if a particle w -> v exists (covers w == u)
        const int slot_wv = neighbor_slot(g, w, v);
        if (cfg.val_[cfg.off_[w] + slot_wv] == 1) continue;
        pot[cfg.off_[v] + j] = 1;
      }
    }
  }
  ParticleConfig out;
  out.g_ = cfg.g_;
  out.off_ = cfg.off_;
  out.val_.assign(cfg.val_.size(), 0);
  for (int a = 0; a < g.vertex_count(); ++a) {
    const auto& nb = g.neighbors(a);
    for (size_t i = 0; i < nb.size(); ++i) {
      const int b = nb[i];
      if (a > b) continue;
      const int slot_ba = neighbor_slot(g, b, a);
      const bool fwd = pot[cfg.off_[a] + i] == 1;   // a -> b
      const bool bwd = pot[cfg.off_[b] + slot_ba] == 1;  // b -> a
      if (fwd == bwd) continue;  // annihilated or empty
      out.val_[cfg.off_[a] + i] = fwd ? 1 : -1;
      out.val_[cfg.off_[b] + slot_ba] = fwd ? -1 : 1;
    }
  }
  return out;
}

}  // namespace excitable
