#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "excitable/graph.hpp"
#include "excitable/rational.hpp"

namespace excitable {

enum class DynamicsKind { CCA, GHM };

const char* to_string(DynamicsKind k);

/// Increment induced on the directed edge (a-colored -> b-colored) vertex
/// pair. CCA: the Z_3 difference b-a represented in {-1,0,+1} (2 -> -1).
/// GHM: +1 on (0,1), -1 on (1,0), else 0. Colors must be in {0,1,2}.
int edge_increment(DynamicsKind kind, int a, int b);

/// A walk: nonempty vertex sequence with consecutive pairs adjacent.
struct Walk {
  std::vector<int> vertices;

  bool valid_in(const Graph& g) const;
  bool is_closed() const;
  /// Closed and only the first/last vertex repeats.
  bool is_cycle() const;
  /// All vertices distinct.
  bool is_path() const;
  Walk reversed() const;
};

/// The antisymmetric discrete 1-form dX induced by a 3-coloring, defined on
/// both orientations of every edge. Values are stored per directed slot of
/// the adjacency structure and are immutable after construction.
class OneForm {
public:
  /// Requires kappa == 3 (unsupported-kappa error otherwise).
  static OneForm from_coloring(std::shared_ptr<const Graph> g, const Coloring& x,
                               DynamicsKind kind);

  DynamicsKind kind() const { return kind_; }
  const Graph& graph() const { return *g_; }
  std::shared_ptr<const Graph> graph_ptr() const { return g_; }

  /// dX(u,v); throws if (u,v) is not an edge.
  int value(int u, int v) const;

  /// Value by position in u's neighbor list (no lookup).
  int value_at(int u, int slot) const { return val_[off_[u] + slot]; }

private:
  OneForm() = default;
  std::shared_ptr<const Graph> g_;
  DynamicsKind kind_ = DynamicsKind::CCA;
  std::vector<std::int32_t> off_;
  std::vector<std::int8_t> val_;
};

/// Sum of dX over consecutive pairs; reversing the walk negates it.
/// Throws invalid-walk if the walk uses a non-edge.
std::int64_t path_integral(const OneForm& form, const Walk& walk);

struct IrrotationalityResult {
  /// Present iff the form is irrotational: phi with dX(u,v) = phi(v)-phi(u).
  std::optional<std::vector<std::int64_t>> potential;
  /// Present otherwise: a directed cycle with nonzero contour integral.
  std::optional<Walk> witness_cycle;

  bool irrotational() const { return potential.has_value(); }
};

/// Tests Eq-over-cycle-basis via spanning-tree potentials in O(V+E):
/// assigns phi along a BFS tree from vertex 0 and checks every non-tree
/// edge. Requires a connected graph.
IrrotationalityResult irrotationality_check(const Graph& g, const OneForm& form);

/// Maximum over directed cycles of (contour integral)/(cycle length), as an
/// exact rational, via Karp's algorithm on the symmetric digraph. Always
/// >= 0 (each edge gives a zero-mean 2-cycle); equals 0 iff irrotational.
/// Requires a connected graph with at least one edge.
Rational max_cycle_mean(const Graph& g, const OneForm& form);

/// Max path integral over walks from `start` with at most `t` edges, by the
/// dynamic program h_{s+1}(v) = max(h_s(v), max_u h_s(u) + dX(u,v)).
/// Always >= 0 (the empty walk); bounded above by t.
std::int64_t walk_max_dp(const Graph& g, const OneForm& form, int start, int t);

}  // namespace excitable
