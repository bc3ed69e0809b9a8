#include "excitable/cloud_speed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "excitable/dynamics.hpp"

namespace excitable {

namespace {

constexpr std::uint64_t kOffspringSalt = 0xC2B2AE3D27D4EB4Full;
constexpr std::uint64_t kColorSalt = 0x165667B19E3779F9ull;

bool is_power_of_4(int x) {
  if (x < 1) return false;
  if (x & (x - 1)) return false;
  return (x & 0x55555555) != 0;
}

std::uint64_t child_key(std::uint64_t parent_key, std::uint64_t slot) {
  return mix64(parent_key ^ (kGolden * (slot + 1)));
}

int color_of(std::uint64_t key, const ColorDensities& dens) {
  const double u = static_cast<double>(mix64(key ^ kColorSalt) >> 11) * 0x1.0p-53;
  return u < dens.p0 ? 0 : (u < dens.p0 + dens.p1 ? 1 : 2);
}

int offspring_of(std::uint64_t key, const std::vector<double>& probs) {
  const double u = static_cast<double>(mix64(key ^ kOffspringSalt) >> 11) * 0x1.0p-53;
  double acc = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u < acc) return static_cast<int>(i);
  }
  return static_cast<int>(probs.size()) - 1;
}

// Structural role of a node. attach == 0 means "on the spine" (the ray for
// the ray-based families; every vertex for d-ary / Galton-Watson);
// attach == a > 0 means inside the d-ary slab hanging at ray level a.
struct NodeShape {
  int attach = 0;
  bool leaf_slot = false;  // RayWithLeaves leaf
};

// Number of child slots of a node at `level` (before the depth cut).
std::uint64_t child_slots(const TreeFamily& fam, const NodeShape& sh, int level,
                          std::uint64_t key) {
  switch (fam.tree_kind()) {
    case TreeKind::DAry:
      return static_cast<std::uint64_t>(fam.branching());
    case TreeKind::GaltonWatson:
      return static_cast<std::uint64_t>(offspring_of(key, fam.offspring()));
    case TreeKind::Geometric:
      if (sh.attach > 0)
        return level < 2 * sh.attach ? static_cast<std::uint64_t>(fam.branching()) : 0;
      // ray vertex: the ray continues; a d-ary slab roots here at levels 4^k
      return 1ull + (is_power_of_4(level) ? static_cast<std::uint64_t>(fam.branching()) : 0ull);
    case TreeKind::RayWithLeaves:
      if (sh.leaf_slot) return 0;
      if (level >= 62) throw std::invalid_argument("ray_with_leaves: depth too large");
      return 1ull + ((1ull << (level + 1)) - 1);
  }
  return 0;
}

NodeShape child_shape(const TreeFamily& fam, const NodeShape& sh, int level, std::uint64_t slot) {
  NodeShape c;
  switch (fam.tree_kind()) {
    case TreeKind::DAry:
    case TreeKind::GaltonWatson:
      return c;
    case TreeKind::Geometric:
      if (sh.attach > 0) {
        c.attach = sh.attach;
      } else if (slot > 0) {
        c.attach = level;  // first slab level below the ray vertex at 4^k
      }
      return c;
    case TreeKind::RayWithLeaves:
      c.leaf_slot = slot > 0;
      return c;
  }
  return c;
}

// Deepest level any descendant can reach (structure only, before depth cut).
int max_descendant_level(const TreeFamily& fam, const NodeShape& sh, int level, int depth) {
  switch (fam.tree_kind()) {
    case TreeKind::Geometric:
      return sh.attach > 0 ? std::min(2 * sh.attach, depth) : depth;
    case TreeKind::RayWithLeaves:
      return sh.leaf_slot ? level : depth;
    default:
      (void)sh;
      (void)level;
      return depth;
  }
}

std::uint64_t root_key_of(RngStream rng) { return rng.next_u64(); }

struct ChildRec {
  std::uint64_t key;
  NodeShape shape;
  std::int8_t inc;
  std::int8_t color;
};

ChildRec make_child(const TreeFamily& fam, DynamicsKind kind, const ColorDensities& dens,
                    std::uint64_t pkey, const NodeShape& pshape, int plevel, int pcolor,
                    std::uint64_t slot) {
  ChildRec c;
  c.key = child_key(pkey, slot);
  c.shape = child_shape(fam, pshape, plevel, slot);
  c.color = static_cast<std::int8_t>(color_of(c.key, dens));
  c.inc = static_cast<std::int8_t>(edge_increment(kind, pcolor, c.color));
  return c;
}

// Sorting fanouts beyond this is not worth the memory (and RayWithLeaves
// fanouts are exponential); pruning itself still applies per child.
constexpr std::uint64_t kSortFanoutCap = 4096;

}  // namespace

CloudSpeedResult estimate_cloud_speed(const TreeFamily& family, DynamicsKind kind,
                                      const ColorDensities& densities, int depth, RngStream rng,
                                      const CloudSpeedOptions& opts) {
  if (depth < 1) throw std::invalid_argument("estimate_cloud_speed: depth must be >= 1");
  constexpr std::int64_t kUnseen = std::numeric_limits<std::int64_t>::min();
  CloudSpeedResult res;
  res.per_level_max.assign(depth + 1, kUnseen);
  res.per_level_max[0] = 0;
  res.pruned = opts.prune;

  struct Frame {
    std::uint64_t key;
    std::int64_t S;
    int level;
    NodeShape shape;
    int color;
    std::uint64_t next_slot;
    std::uint64_t nslots;
    std::vector<ChildRec> sorted;  // filled only for small fanouts in prune mode
  };

  std::vector<Frame> stack;
  const std::uint64_t rk = root_key_of(rng);
  stack.push_back({rk, 0, 0, NodeShape{}, color_of(rk, densities), 0,
                   child_slots(family, NodeShape{}, 0, rk), {}});
  res.visited = 1;

  auto finish = [&](CloudSpeedResult& r) {
    for (int n = 1; n <= depth; ++n)
      if (r.per_level_max[n] == kUnseen) r.per_level_max[n] = 0;  // level not reached
    r.speed_estimate = static_cast<double>(r.per_level_max[depth]) / depth;
    r.activity_estimate = static_cast<double>(r.running_max) / depth;
  };

  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.level == depth || f.next_slot == f.nslots) {
      stack.pop_back();
      continue;
    }

    if (opts.prune && f.sorted.empty() && f.nslots > 1 && f.nslots <= kSortFanoutCap) {
      // Explore promising increments first so the bound tightens quickly.
      f.sorted.reserve(f.nslots);
      for (std::uint64_t s = 0; s < f.nslots; ++s)
        f.sorted.push_back(
            make_child(family, kind, densities, f.key, f.shape, f.level, f.color, s));
      std::stable_sort(f.sorted.begin(), f.sorted.end(),
                       [](const ChildRec& a, const ChildRec& b) { return a.inc > b.inc; });
    }

    const ChildRec c =
        !f.sorted.empty()
            ? f.sorted[f.next_slot]
            : make_child(family, kind, densities, f.key, f.shape, f.level, f.color, f.next_slot);
    ++f.next_slot;

    const int clevel = f.level + 1;
    const std::int64_t cS = f.S + c.inc;
    if (++res.visited > opts.node_budget) {
      finish(res);
      throw BudgetExceeded("estimate_cloud_speed: node budget exceeded", res.per_level_max,
                           static_cast<std::int64_t>(res.visited));
    }
    res.per_level_max[clevel] = std::max(res.per_level_max[clevel], cS);
    res.running_max = std::max(res.running_max, cS);

    if (clevel == depth) continue;
    if (opts.prune) {
      // Increments are at most +1 per edge, so nothing below c can improve
      // the running maximum if cS plus the reachable depth cannot.
      const int reach = max_descendant_level(family, c.shape, clevel, depth);
      if (cS + (reach - clevel) <= res.running_max) continue;
    }
    const std::uint64_t slots = child_slots(family, c.shape, clevel, c.key);
    if (slots == 0) continue;
    stack.push_back({c.key, cS, clevel, c.shape, c.color, 0, slots, {}});
  }

  finish(res);
  return res;
}

TruncatedTree materialize_truncation(const TreeFamily& family, const ColorDensities& densities,
                                     int depth, RngStream rng, std::uint64_t node_budget) {
  if (depth < 0) throw std::invalid_argument("materialize_truncation: negative depth");
  struct Item {
    std::uint64_t key;
    NodeShape shape;
    int level;
    int id;
  };
  std::vector<std::pair<int, int>> edges;
  std::vector<std::uint8_t> colors;
  std::vector<int> levels;
  std::vector<Item> queue;
  const std::uint64_t rk = root_key_of(rng);
  queue.push_back({rk, NodeShape{}, 0, 0});
  colors.push_back(static_cast<std::uint8_t>(color_of(rk, densities)));
  levels.push_back(0);
  for (size_t head = 0; head < queue.size(); ++head) {
    const Item it = queue[head];
    if (it.level == depth) continue;
    const std::uint64_t slots = child_slots(family, it.shape, it.level, it.key);
    for (std::uint64_t s = 0; s < slots; ++s) {
      const std::uint64_t ck = child_key(it.key, s);
      if (colors.size() + 1 > node_budget)
        throw BudgetExceeded("materialize_truncation: node budget exceeded", {},
                             static_cast<std::int64_t>(colors.size()));
      const int cid = static_cast<int>(colors.size());
      colors.push_back(static_cast<std::uint8_t>(color_of(ck, densities)));
      levels.push_back(it.level + 1);
      edges.emplace_back(it.id, cid);
      queue.push_back({ck, child_shape(family, it.shape, it.level, s), it.level + 1, cid});
    }
  }
  TruncatedTree out;
  out.graph =
      std::make_shared<Graph>(Graph::from_edges(static_cast<int>(colors.size()), edges));
  out.coloring = Coloring(3, std::move(colors));
  out.levels = std::move(levels);
  return out;
}

std::vector<std::int64_t> simulate_on_truncated_tree(const TreeFamily& family, DynamicsKind kind,
                                                     const ColorDensities& densities, int depth,
                                                     int t_max, RngStream rng) {
  if (t_max > depth)
    throw std::invalid_argument(
        "simulate_on_truncated_tree: t_max exceeds depth (locality violation)");
  auto tt = materialize_truncation(family, densities, depth, rng);
  Trajectory traj(tt.graph, tt.coloring, kind);
  std::vector<std::int64_t> ne_root(t_max + 1, 0);
  for (int t = 1; t <= t_max; ++t) {
    traj.step();
    ne_root[t] = traj.excitation_counts()[0];
  }
  return ne_root;
}

}  // namespace excitable
