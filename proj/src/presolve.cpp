#include <algorithm>
#include <cmath>

#include "milpmt/solver.hpp"

namespace milpmt {

// Activity-based bound tightening on <= rows. Binary bounds tighten to
// {0,1} fixings only; continuous bounds tighten fractionally.
MilpInstance presolve_pass(const MilpInstance& inst, int rounds) {
  MilpInstance out = inst;
  std::vector<std::vector<std::pair<int, double>>> rows(out.num_cons);
  for (const auto& e : out.cons_matrix) rows[e.row].push_back({e.col, e.coeff});

  std::vector<char> redundant(out.num_cons, 0);
  for (int pass = 0; pass < rounds; ++pass) {
    bool changed = false;
    for (int i = 0; i < out.num_cons; ++i) {
      if (redundant[i]) continue;
      double min_act = 0.0, max_act = 0.0;
      bool min_finite = true, max_finite = true;
      for (auto [j, a] : rows[i]) {
        double lo = a > 0 ? out.var_lb[j] : out.var_ub[j];
        double hi = a > 0 ? out.var_ub[j] : out.var_lb[j];
        if (std::isinf(lo)) min_finite = false; else min_act += a * lo;
        if (std::isinf(hi)) max_finite = false; else max_act += a * hi;
      }
      if (min_finite && min_act > out.rhs[i] + kTolFeas)
        fail("DetectedInfeasible", "row " + std::to_string(i) + " cannot be satisfied");
      if (max_finite && max_act <= out.rhs[i] + kTolFeas) {
        redundant[i] = 1;
        changed = true;
        continue;
      }
      if (!min_finite) continue;
      for (auto [j, a] : rows[i]) {
        // residual capacity with x_j removed from the minimum activity
        double contrib = a > 0 ? a * out.var_lb[j] : a * out.var_ub[j];
        if (std::isinf(contrib)) continue;
        double slack = out.rhs[i] - (min_act - contrib);
        if (a > 0) {
          double new_ub = slack / a;
          if (out.is_binary(j)) new_ub = std::floor(new_ub + kTolInt);
          if (new_ub < out.var_ub[j] - kTolFeas) {
            require(new_ub >= out.var_lb[j] - kTolFeas, "DetectedInfeasible",
                    "variable bound collapse");
            out.var_ub[j] = std::max(new_ub, out.var_lb[j]);
            changed = true;
          }
        } else {
          double new_lb = slack / a;
          if (out.is_binary(j)) new_lb = std::ceil(new_lb - kTolInt);
          if (new_lb > out.var_lb[j] + kTolFeas) {
            require(new_lb <= out.var_ub[j] + kTolFeas, "DetectedInfeasible",
                    "variable bound collapse");
            out.var_lb[j] = std::min(new_lb, out.var_ub[j]);
            changed = true;
          }
        }
      }
    }
    if (!changed) break;
  }

  if (std::any_of(redundant.begin(), redundant.end(), [](char c) { return c != 0; })) {
    std::vector<int> new_row(out.num_cons, -1);
    int next = 0;
    for (int i = 0; i < out.num_cons; ++i)
      if (!redundant[i]) new_row[i] = next++;
    std::vector<SparseEntry> kept;
    kept.reserve(out.cons_matrix.size());
    for (const auto& e : out.cons_matrix)
      if (new_row[e.row] >= 0) kept.push_back({new_row[e.row], e.col, e.coeff});
    std::vector<double> rhs_kept;
    rhs_kept.reserve(next);
    for (int i = 0; i < out.num_cons; ++i)
      if (!redundant[i]) rhs_kept.push_back(out.rhs[i]);
    // Never drop to zero rows; keep one redundant row if all vanished.
    if (next == 0) {
      new_row[0] = 0;
      for (const auto& e : out.cons_matrix)
        if (e.row == 0) kept.push_back(e);
      rhs_kept.push_back(out.rhs[0]);
      next = 1;
    }
    out.cons_matrix = std::move(kept);
    out.rhs = std::move(rhs_kept);
    out.num_cons = next;
  }
  return out;
}

}  // namespace milpmt
