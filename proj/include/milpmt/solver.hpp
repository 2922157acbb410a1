#pragma once

#include <functional>
#include <optional>

#include "milpmt/config.hpp"
#include "milpmt/lp.hpp"
#include "milpmt/milp.hpp"

namespace milpmt {

struct BranchPriorities {
  std::vector<int> priority;  // per variable, >= 0, default 0

  static BranchPriorities none(int num_vars) { return {std::vector<int>(num_vars, 0)}; }
  static BranchPriorities from_set(int num_vars, const std::vector<int>& vars) {
    BranchPriorities p = none(num_vars);
    for (int j : vars) p.priority.at(j) = 1;
    return p;
  }
};

struct SolveBudget {
  std::int64_t node_limit = -1;  // < 0 means unlimited
  std::int64_t work_limit = -1;  // LP pivots
  double wall_limit = -1.0;      // seconds

  bool any_finite() const { return node_limit >= 0 || work_limit >= 0 || wall_limit >= 0; }
  static SolveBudget nodes(std::int64_t n) { return {n, -1, -1.0}; }
  static SolveBudget work(std::int64_t w) { return {-1, w, -1.0}; }
};

enum class SolveStatus { Optimal, Feasible, Infeasible, BudgetExhausted };

const char* status_name(SolveStatus s);

struct TraceEvent {
  std::int64_t work_units = 0;  // cumulative pivots when the incumbent landed
  std::int64_t node_index = 0;
  double incumbent_obj = 0.0;  // canonical (minimization) objective
};

struct SolveTrace {
  std::vector<TraceEvent> events;  // strictly improving incumbents
  SolveStatus final_status = SolveStatus::BudgetExhausted;
  std::int64_t nodes_processed = 0;
  std::int64_t total_work = 0;
  double wall_seconds = 0.0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::BudgetExhausted;
  std::optional<Assignment> best_assignment;
  std::optional<double> best_obj;  // reported (original-sense) objective
  double dual_bound = -kInf;       // reported sense
  SolveTrace trace;
};

struct SolveHooks {
  // Fires on every strictly improving incumbent.
  std::function<void(const Assignment&, double reported_obj)> on_incumbent;
};

SolveResult solve(const MilpInstance& inst, const SolverConfig& config,
                  const BranchPriorities* priorities, const SolveBudget& budget,
                  std::uint64_t seed, const SolveHooks* hooks = nullptr);

// Bound propagation plus redundant-row removal; optimum-preserving.
// Throws DetectedInfeasible when propagation proves emptiness.
MilpInstance presolve_pass(const MilpInstance& inst, int rounds);

void write_trace_csv(const SolveTrace& trace, const std::string& path);

}  // namespace milpmt
