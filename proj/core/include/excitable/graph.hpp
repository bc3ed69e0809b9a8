#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace excitable {

/// Immutable simple undirected graph over dense 0-based vertex ids.
/// Neighbor lists are sorted; adjacency is symmetric by construction.
/// Safe to share across threads once built.
class Graph {
public:
  explicit Graph(int n = 0) : adj_(n) {}

  /// Builds from an edge list. Rejects self-loops, duplicate edges and
  /// out-of-range endpoints.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  /// Edge-list text format: first line "n m", then m lines "u v" with
  /// 0 <= u < v < n. '#' starts a comment; blank lines are ignored.
  static Graph parse_edge_list(std::istream& in);
  static Graph load_edge_list(const std::string& path);
  void write_edge_list(std::ostream& out) const;

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return m_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;

  bool is_connected() const;
  bool is_tree() const;

  /// Connected components as sorted vertex sets.
  std::vector<std::vector<int>> components() const;

  /// Induced subgraph on `vertices` (relabeled densely, in the given order).
  Graph induced_subgraph(const std::vector<int>& vertices) const;

  /// BFS distances from `source`; -1 for unreachable vertices.
  std::vector<int> bfs_distances(int source) const;

  /// Exact diameter by BFS from every vertex. Throws if disconnected.
  int diameter() const;

  /// All edges as (u,v) pairs with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

private:
  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

/// A kappa-coloring of the vertices; the full dynamical state.
struct Coloring {
  int kappa = 3;
  std::vector<std::uint8_t> colors;

  Coloring() = default;
  Coloring(int kappa_, std::vector<std::uint8_t> colors_);

  int size() const { return static_cast<int>(colors.size()); }

  /// Coloring file: one digit per line, n lines.
  static Coloring parse(std::istream& in, int kappa);
  static Coloring load(const std::string& path, int kappa);
  void write(std::ostream& out) const;
};

/// Coloring with every color shifted by `shift` mod kappa.
Coloring shift_coloring(const Coloring& c, int shift);

}  // namespace excitable
