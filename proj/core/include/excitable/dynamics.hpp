#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "excitable/graph.hpp"
#include "excitable/one_form.hpp"
#include "excitable/rational.hpp"

namespace excitable {

/// Thrown when a detection budget runs out; carries whatever was computed.
struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(std::string msg, std::vector<std::int64_t> partial, std::int64_t steps)
      : std::runtime_error(std::move(msg)),
        partial_excitations(std::move(partial)),
        steps_taken(steps) {}
  std::vector<std::int64_t> partial_excitations;
  std::int64_t steps_taken = 0;
};

/// One synchronous CCA/GHM trajectory. Single-owner mutable state; stepping
/// is double-buffered so X_{t+1} is computed entirely from X_t. Distinct
/// trajectories may run in parallel.
class Trajectory {
public:
  Trajectory(std::shared_ptr<const Graph> g, Coloring initial, DynamicsKind kind);

  void step();
  void step_n(std::int64_t n);

  DynamicsKind kind() const { return kind_; }
  int kappa() const { return kappa_; }
  const Graph& graph() const { return *g_; }
  std::shared_ptr<const Graph> graph_ptr() const { return g_; }
  std::int64_t step_index() const { return step_; }
  const std::vector<std::uint8_t>& colors() const { return colors_; }
  Coloring coloring() const { return Coloring(kappa_, colors_); }

  /// ne_t(v): number of excitations v has undergone so far. Excited means
  /// advanced for CCA; advanced from 0 to 1 for GHM.
  const std::vector<std::int64_t>& excitation_counts() const { return ne_; }

  bool monochromatic() const;

private:
  std::shared_ptr<const Graph> g_;
  DynamicsKind kind_;
  int kappa_;
  std::vector<std::uint8_t> colors_;
  std::vector<std::uint8_t> buf_;
  std::vector<std::int64_t> ne_;
  std::int64_t step_ = 0;
};

struct LimitCycleReport {
  std::int64_t preperiod = 0;
  std::int64_t period = 1;
  std::vector<std::int64_t> excitations_per_period;
  /// excitations_per_period(v)/period; identical for every vertex.
  Rational activity;

  bool fixates() const { return activity.is_zero(); }
};

/// Detects the eventual limit cycle of the deterministic dynamics (Brent's
/// cycle finding, O(state) memory) and reports exact preperiod, period,
/// per-vertex excitations within one period and the rational activity.
/// max_steps < 0 means the default budget 4*n*kappa. If preperiod+period
/// exceeds the budget, throws BudgetExceeded with partial counts.
LimitCycleReport run_to_limit_cycle(const Graph& g, const Coloring& initial, DynamicsKind kind,
                                    std::int64_t max_steps = -1);

/// First step at which all colors agree (and hence stay equal), or nullopt
/// if the trajectory never synchronizes. Decided via irrotationality of
/// dX_0; with verify_by_simulation the decision is cross-checked against
/// the dynamics. kappa must be 3.
std::optional<std::int64_t> synchronization_time(const Graph& g, const Coloring& initial,
                                                 DynamicsKind kind,
                                                 bool verify_by_simulation = true);

/// Vertices excited at the trajectory's current step (kappa == 3).
std::vector<int> excited_set(const Trajectory& traj);

}  // namespace excitable
