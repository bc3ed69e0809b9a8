#include "excitable/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace excitable {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("Graph: endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& a = g.adj_[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      throw std::invalid_argument("Graph: duplicate edge");
  }
  g.m_ = static_cast<int>(edges.size());
  return g;
}

namespace {

// Strips '#' comments, returns the next line with any tokens.
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) return true;
  }
  return false;
}

}  // namespace

Graph Graph::parse_edge_list(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw std::invalid_argument("edge list: empty input");
  std::istringstream head(line);
  long long n = -1, m = -1;
  if (!(head >> n >> m) || n < 0 || m < 0)
    throw std::invalid_argument("edge list: malformed header, expected \"n m\"");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line))
      throw std::invalid_argument("edge list: fewer edges than declared");
    std::istringstream es(line);
    long long u, v;
    if (!(es >> u >> v)) throw std::invalid_argument("edge list: malformed edge line");
    if (!(0 <= u && u < v && v < n))
      throw std::invalid_argument("edge list: edge must satisfy 0 <= u < v < n");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return from_edges(static_cast<int>(n), edges);
}

Graph Graph::load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  return parse_edge_list(in);
}

void Graph::write_edge_list(std::ostream& out) const {
  out << vertex_count() << ' ' << m_ << '\n';
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out << u << ' ' << v << '\n';
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<int> Graph::bfs_distances(int source) const {
  std::vector<int> dist(vertex_count(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj_[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

bool Graph::is_connected() const {
  if (vertex_count() == 0) return true;
  auto d = bfs_distances(0);
  return std::find(d.begin(), d.end(), -1) == d.end();
}

bool Graph::is_tree() const {
  return vertex_count() > 0 && m_ == vertex_count() - 1 && is_connected();
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(vertex_count(), 0);
  for (int s = 0; s < vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    seen[s] = 1;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(u);
      for (int v : adj_[u])
        if (!seen[v]) {
          seen[v] = 1;
          q.push(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

Graph Graph::induced_subgraph(const std::vector<int>& vertices) const {
  std::vector<int> label(vertex_count(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) label[vertices[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (int u : vertices)
    for (int v : adj_[u])
      if (u < v && label[v] >= 0) edges.emplace_back(label[u], label[v]);
  return from_edges(static_cast<int>(vertices.size()), edges);
}

int Graph::diameter() const {
  if (!is_connected()) throw std::invalid_argument("diameter: graph not connected");
  int d = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    auto dist = bfs_distances(v);
    d = std::max(d, *std::max_element(dist.begin(), dist.end()));
  }
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Coloring::Coloring(int kappa_, std::vector<std::uint8_t> colors_)
    : kappa(kappa_), colors(std::move(colors_)) {
  if (kappa < 2) throw std::invalid_argument("Coloring: kappa must be >= 2");
  for (auto c : colors)
    if (c >= kappa) throw std::invalid_argument("Coloring: color out of range");
}

Coloring Coloring::parse(std::istream& in, int kappa) {
  std::vector<std::uint8_t> cols;
  std::string line;
  while (std::getline(in, line)) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    for (char ch : line) {
      if (ch == ' ' || ch == '\t' || ch == '\r') continue;
      if (ch < '0' || ch > '9') throw std::invalid_argument("coloring file: expected digits");
      cols.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
  }
  return Coloring(kappa, std::move(cols));
}

Coloring Coloring::load(const std::string& path, int kappa) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open coloring file: " + path);
  return parse(in, kappa);
}

void Coloring::write(std::ostream& out) const {
  for (auto c : colors) out << static_cast<int>(c) << '\n';
}

Coloring shift_coloring(const Coloring& c, int shift) {
  Coloring out = c;
  const int k = c.kappa;
  const int s = ((shift % k) + k) % k;
  for (auto& col : out.colors) col = static_cast<std::uint8_t>((col + s) % k);
  return out;
}

}  // namespace excitable
