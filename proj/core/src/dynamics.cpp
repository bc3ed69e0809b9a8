#include "excitable/dynamics.hpp"

#include <algorithm>
#include <stdexcept>

namespace excitable {

Trajectory::Trajectory(std::shared_ptr<const Graph> g, Coloring initial, DynamicsKind kind)
    : g_(std::move(g)), kind_(kind), kappa_(initial.kappa) {
  if (!g_) throw std::invalid_argument("Trajectory: null graph");
  if (initial.size() != g_->vertex_count())
    throw std::invalid_argument("Trajectory: coloring size mismatch");
  colors_ = std::move(initial.colors);
  buf_.resize(colors_.size());
  ne_.assign(colors_.size(), 0);
}

void Trajectory::step() {
  const int n = g_->vertex_count();
  const int k = kappa_;
  if (kind_ == DynamicsKind::CCA) {
    for (int v = 0; v < n; ++v) {
      const std::uint8_t succ = static_cast<std::uint8_t>((colors_[v] + 1) % k);
      bool adv = false;
      for (int u : g_->neighbors(v))
        if (colors_[u] == succ) {
          adv = true;
          break;
        }
      buf_[v] = adv ? succ : colors_[v];
      if (adv) ++ne_[v];
    }
  } else {
    for (int v = 0; v < n; ++v) {
      if (colors_[v] == 0) {
        bool adv = false;
        for (int u : g_->neighbors(v))
          if (colors_[u] == 1) {
            adv = true;
            break;
          }
        buf_[v] = adv ? 1 : 0;
        if (adv) ++ne_[v];
      } else {
        buf_[v] = static_cast<std::uint8_t>((colors_[v] + 1) % k);
      }
    }
  }
  colors_.swap(buf_);
  ++step_;
}

void Trajectory::step_n(std::int64_t n) {
  for (std::int64_t i = 0; i < n; ++i) step();
}

bool Trajectory::monochromatic() const {
  return std::adjacent_find(colors_.begin(), colors_.end(), std::not_equal_to<>()) ==
         colors_.end();
}

namespace {

// Pure successor map on bare color vectors, for cycle detection.
void apply_step(const Graph& g, DynamicsKind kind, int kappa,
                const std::vector<std::uint8_t>& in, std::vector<std::uint8_t>& out) {
  const int n = g.vertex_count();
  if (kind == DynamicsKind::CCA) {
    for (int v = 0; v < n; ++v) {
      const std::uint8_t succ = static_cast<std::uint8_t>((in[v] + 1) % kappa);
      bool adv = false;
      for (int u : g.neighbors(v))
        if (in[u] == succ) {
          adv = true;
          break;
        }
      out[v] = adv ? succ : in[v];
    }
  } else {
    for (int v = 0; v < n; ++v) {
      if (in[v] == 0) {
        bool adv = false;
        for (int u : g.neighbors(v))
          if (in[u] == 1) {
            adv = true;
            break;
          }
        out[v] = adv ? 1 : 0;
      } else {
        out[v] = static_cast<std::uint8_t>((in[v] + 1) % kappa);
      }
    }
  }
}

}  // namespace

LimitCycleReport run_to_limit_cycle(const Graph& g, const Coloring& initial, DynamicsKind kind,
                                    std::int64_t max_steps) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("run_to_limit_cycle: empty graph");
  if (initial.size() != n) throw std::invalid_argument("run_to_limit_cycle: size mismatch");
  const std::int64_t budget =
      max_steps < 0 ? 4ll * n * initial.kappa : max_steps;

  auto partial_error = [&](const char* what) -> BudgetExceeded {
    Trajectory t(std::make_shared<Graph>(g), initial, kind);
    t.step_n(budget);
    return BudgetExceeded(what, t.excitation_counts(), budget);
  };

  // Brent's cycle detection on the deterministic state sequence.
  std::vector<std::uint8_t> tortoise = initial.colors, hare = initial.colors, tmp(n);
  std::int64_t power = 1, lam = 0;
  apply_step(g, kind, initial.kappa, hare, tmp);
  hare.swap(tmp);
  lam = 1;
  std::int64_t applications = 1;
  while (tortoise != hare) {
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
    apply_step(g, kind, initial.kappa, hare, tmp);
    hare.swap(tmp);
    ++lam;
    if (++applications > 4 * budget + 8)
      throw partial_error("run_to_limit_cycle: step budget exceeded before periodicity");
  }

  // Preperiod: advance hare lam steps from the start, then move both.
  tortoise = initial.colors;
  hare = initial.colors;
  for (std::int64_t i = 0; i < lam; ++i) {
    apply_step(g, kind, initial.kappa, hare, tmp);
    hare.swap(tmp);
  }
  std::int64_t mu = 0;
  while (tortoise != hare) {
    apply_step(g, kind, initial.kappa, tortoise, tmp);
    tortoise.swap(tmp);
    apply_step(g, kind, initial.kappa, hare, tmp);
    hare.swap(tmp);
    ++mu;
  }
  if (mu + lam > budget)
    throw partial_error("run_to_limit_cycle: preperiod+period exceeds step budget");

  // Excitations within one period, from a fresh run.
  Trajectory traj(std::make_shared<Graph>(g), initial, kind);
  traj.step_n(mu);
  std::vector<std::int64_t> at_mu = traj.excitation_counts();
  traj.step_n(lam);
  LimitCycleReport rep;
  rep.preperiod = mu;
  rep.period = lam;
  rep.excitations_per_period.resize(n);
  for (int v = 0; v < n; ++v)
    rep.excitations_per_period[v] = traj.excitation_counts()[v] - at_mu[v];
  rep.activity = Rational(rep.excitations_per_period.empty() ? 0 : rep.excitations_per_period[0],
                          lam);
  for (int v = 0; v < n; ++v)
    if (Rational(rep.excitations_per_period[v], lam) != rep.activity)
      throw std::logic_error("run_to_limit_cycle: per-vertex activity mismatch");
  return rep;
}

std::optional<std::int64_t> synchronization_time(const Graph& g, const Coloring& initial,
                                                 DynamicsKind kind, bool verify_by_simulation) {
  if (initial.kappa != 3)
    throw std::invalid_argument("synchronization_time: kappa must be 3");
  auto gp = std::make_shared<Graph>(g);
  const auto form = OneForm::from_coloring(gp, initial, kind);
  const auto irr = irrotationality_check(g, form);
  if (!irr.irrotational()) {
    if (verify_by_simulation) {
      const auto rep = run_to_limit_cycle(g, initial, kind);
      if (rep.activity.is_zero())
        throw std::logic_error("synchronization_time: oscillation predicted but activity is 0");
    }
    return std::nullopt;
  }
  // All colors agree from the diameter onward; find the first such step.
  Trajectory traj(gp, initial, kind);
  const std::int64_t cap = 2ll * g.vertex_count() + 4;
  for (std::int64_t t = 0; t <= cap; ++t) {
    if (traj.monochromatic()) return t;
    traj.step();
  }
  throw std::logic_error("synchronization_time: irrotational form failed to synchronize");
}

std::vector<int> excited_set(const Trajectory& traj) {
  if (traj.kappa() != 3) throw std::invalid_argument("excited_set: kappa must be 3");
  const Graph& g = traj.graph();
  const auto& x = traj.colors();
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    // excited iff dX(v,y) = +1 for some neighbor y
    bool ex = false;
    for (int y : g.neighbors(v))
      if (edge_increment(traj.kind(), x[v], x[y]) == 1) {
        ex = true;
        break;
      }
    if (ex) out.push_back(v);
  }
  return out;
}

}  // namespace excitable
