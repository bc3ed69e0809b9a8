#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "excitable/graph.hpp"
#include "excitable/one_form.hpp"

namespace excitable {

/// Branching/annihilating/coalescing edge particles on a tree. The
/// configuration xi is an antisymmetric edge map; xi(u,v) = +1 means a
/// single particle on edge uv heading to v. On trees xi_t = -dX_t.
class ParticleConfig {
public:
  /// xi_0 = -dX_0. Requires a tree and kappa == 3.
  static ParticleConfig from_coloring(std::shared_ptr<const Graph> tree, const Coloring& x,
                                      DynamicsKind kind);

  const Graph& graph() const { return *g_; }
  std::shared_ptr<const Graph> graph_ptr() const { return g_; }

  /// xi(u,v); throws if (u,v) is not an edge.
  int value(int u, int v) const;
  int value_at(int u, int slot) const { return val_[off_[u] + slot]; }

  int particle_count() const;

  friend ParticleConfig particle_step(const ParticleConfig& cfg);

private:
  ParticleConfig() = default;
  std::shared_ptr<const Graph> g_;
  std::vector<std::int32_t> off_;
  std::vector<std::int8_t> val_;
};

/// One three-phase update: every particle u->v branches into each incident
/// edge vw lacking a particle w->v, opposing potential particles on an edge
/// annihilate, and remaining same-direction potentials coalesce to one.
ParticleConfig particle_step(const ParticleConfig& cfg);

}  // namespace excitable
