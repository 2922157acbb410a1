#pragma once

#include <optional>
#include <vector>

#include "milpmt/milp.hpp"

namespace milpmt {

enum class LpStatus { Optimal, Infeasible, Unbounded };
enum class Pricing { Bland, Dantzig };
enum class BasisFlag { Basic, AtLower, AtUpper };

struct LpSolution {
  LpStatus status = LpStatus::Optimal;
  std::vector<double> x;              // structural values, length n
  double obj = 0.0;                   // canonical (minimization) objective
  std::vector<double> reduced_costs;  // length n, zero for basic columns
  std::vector<double> duals;          // length m
  std::vector<BasisFlag> basis_flags; // length n
  int pivots = 0;                     // iterations spent, bound flips included
};

struct SimplexOptions {
  Pricing pricing = Pricing::Dantzig;
  int pivot_limit = 50000;
  // Consecutive degenerate pivots tolerated under Dantzig before the solve
  // falls back to Bland's rule for the remainder.
  int degenerate_switch = 1000;
};

// Reusable solver: column storage is built once, repeated calls pass bound
// overrides (branch-and-bound fixings). Stateless between calls.
class SimplexSolver {
 public:
  explicit SimplexSolver(const MilpInstance& inst);

  LpSolution solve(const SimplexOptions& opts,
                   const std::vector<double>* lb_override = nullptr,
                   const std::vector<double>* ub_override = nullptr) const;

 private:
  const MilpInstance& inst_;
  // CSC of A
  std::vector<int> col_start_;
  std::vector<int> col_row_;
  std::vector<double> col_val_;
  std::vector<double> col_pressure_;  // per-column coefficient sum
};

LpSolution solve_lp_relaxation(const MilpInstance& inst,
                               Pricing pricing = Pricing::Dantzig,
                               const std::vector<double>* lb_override = nullptr,
                               const std::vector<double>* ub_override = nullptr);

}  // namespace milpmt
