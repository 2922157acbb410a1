#include <algorithm>
#include <cmath>

#include "milpmt/lp.hpp"

namespace milpmt {

namespace {

constexpr double kDjTol = 1e-9;     // reduced-cost optimality tolerance
constexpr double kPivTol = 1e-9;    // minimum usable pivot magnitude
constexpr double kRatioTol = 1e-9;  // degeneracy threshold on step length
constexpr double kFeasTol = 1e-8;   // phase-1 residual tolerance
constexpr int kRefactorEvery = 256;

enum NbState : unsigned char { kAtLower, kAtUpper, kFreeZero };

// Columns are indexed 0..n-1 structural, n..n+m-1 slack, then one artificial
// per initially violated row. The basis inverse is kept dense and updated in
// product form with periodic rebuilds.
struct Work {
  int n = 0, m = 0;
  const int* col_start = nullptr;  // CSC view of A, owned by SimplexSolver
  const int* col_row = nullptr;
  const double* col_val = nullptr;
  std::vector<double> lb, ub;    // per column
  std::vector<double> cost;      // phase-2 cost per column
  std::vector<int> art_row;      // row of each artificial column
  std::vector<int> basis;        // column in basis position i
  std::vector<int> pos_of;       // basis position of column, -1 if nonbasic
  std::vector<NbState> nb_state; // meaningful for nonbasic columns
  std::vector<double> value;     // current value per column
  std::vector<double> binv;      // m*m row-major
  std::vector<double> beta;      // basic values by position
  std::vector<double> y;         // duals work vector
  std::vector<double> w;         // ftran result

  int total_cols() const { return n + m + (int)art_row.size(); }

  template <typename Fn>
  void for_col(int c, Fn&& fn) const {
    if (c < n) {
      for (int k = col_start[c]; k < col_start[c + 1]; ++k) fn(col_row[k], col_val[k]);
    } else if (c < n + m) {
      fn(c - n, 1.0);
    } else {
      fn(art_row[c - n - m], -1.0);
    }
  }
};

}  // namespace

SimplexSolver::SimplexSolver(const MilpInstance& inst) : inst_(inst) {
  const int n = inst.num_vars;
  std::vector<int> count(n, 0);
  for (const auto& e : inst.cons_matrix) ++count[e.col];
  col_start_.assign(n + 1, 0);
  for (int j = 0; j < n; ++j) col_start_[j + 1] = col_start_[j] + count[j];
  col_row_.resize(inst.cons_matrix.size());
  col_val_.resize(inst.cons_matrix.size());
  std::vector<int> fill(col_start_.begin(), col_start_.end() - 1);
  for (const auto& e : inst.cons_matrix) {
    col_row_[fill[e.col]] = e.row;
    col_val_[fill[e.col]] = e.coeff;
    ++fill[e.col];
  }
  col_pressure_.assign(n, 0.0);
  for (const auto& e : inst.cons_matrix) col_pressure_[e.col] += e.coeff;
}

namespace {

struct Engine {
  Work wk;
  const SimplexOptions* opts;
  int pivots = 0;
  int degenerate_run = 0;
  bool bland_mode = false;
  int since_refactor = 0;

  void ftran(int col) {
    const int m = wk.m;
    std::fill(wk.w.begin(), wk.w.end(), 0.0);
    wk.for_col(col, [&](int r, double a) {
      const double* binv_col = wk.binv.data() + r;  // column r, strided
      for (int i = 0; i < m; ++i) wk.w[i] += a * binv_col[(std::size_t)i * m];
    });
  }

  void compute_duals(const std::vector<double>& cost) {
    const int m = wk.m;
    for (int r = 0; r < m; ++r) {
      double acc = 0.0;
      for (int i = 0; i < m; ++i) {
        double cb = cost[wk.basis[i]];
        if (cb != 0.0) acc += cb * wk.binv[(std::size_t)i * m + r];
      }
      wk.y[r] = acc;
    }
  }

  double reduced_cost(int c, const std::vector<double>& cost) const {
    double d = cost[c];
    wk.for_col(c, [&](int r, double a) { d -= wk.y[r] * a; });
    return d;
  }

  void rebuild_binv() {
    const int m = wk.m;
    // Gauss-Jordan on [B | I] with partial pivoting.
    std::vector<double> mat((std::size_t)m * m, 0.0);
    for (int i = 0; i < m; ++i)
      wk.for_col(wk.basis[i], [&](int r, double a) { mat[(std::size_t)r * m + i] = a; });
    std::vector<double>& inv = wk.binv;
    std::fill(inv.begin(), inv.end(), 0.0);
    for (int i = 0; i < m; ++i) inv[(std::size_t)i * m + i] = 1.0;
    std::vector<int> rowperm(m);
    for (int i = 0; i < m; ++i) rowperm[i] = i;
    for (int k = 0; k < m; ++k) {
      int piv = k;
      double best = std::fabs(mat[(std::size_t)rowperm[k] * m + k]);
      for (int i = k + 1; i < m; ++i) {
        double v = std::fabs(mat[(std::size_t)rowperm[i] * m + k]);
        if (v > best) { best = v; piv = i; }
      }
      require(best > 1e-12, "IterationLimit", "singular basis during refactorization");
      std::swap(rowperm[k], rowperm[piv]);
      double* prow = mat.data() + (std::size_t)rowperm[k] * m;
      double* pinv = inv.data() + (std::size_t)rowperm[k] * m;
      double scale = 1.0 / prow[k];
      for (int j = 0; j < m; ++j) { prow[j] *= scale; pinv[j] *= scale; }
      for (int i = 0; i < m; ++i) {
        if (rowperm[i] == rowperm[k]) continue;
        double* row = mat.data() + (std::size_t)rowperm[i] * m;
        double* rinv = inv.data() + (std::size_t)rowperm[i] * m;
        double f = row[k];
        if (f == 0.0) continue;
        for (int j = 0; j < m; ++j) { row[j] -= f * prow[j]; rinv[j] -= f * pinv[j]; }
      }
    }
    // Undo the row permutation: binv rows follow basis positions.
    std::vector<double> out((std::size_t)m * m);
    for (int k = 0; k < m; ++k)
      std::copy_n(inv.data() + (std::size_t)rowperm[k] * m, m, out.data() + (std::size_t)k * m);
    wk.binv = std::move(out);
    since_refactor = 0;
  }

  void recompute_beta(const std::vector<double>& rhs) {
    const int m = wk.m;
    std::vector<double> r = rhs;
    for (int c = 0; c < wk.total_cols(); ++c) {
      if (wk.pos_of[c] >= 0) continue;
      double v = wk.value[c];
      if (v != 0.0) wk.for_col(c, [&](int row, double a) { r[row] -= a * v; });
    }
    for (int i = 0; i < m; ++i) {
      double acc = 0.0;
      const double* row = wk.binv.data() + (std::size_t)i * m;
      for (int j = 0; j < m; ++j) acc += row[j] * r[j];
      wk.beta[i] = acc;
      wk.value[wk.basis[i]] = acc;
    }
  }

  // One simplex phase over the given cost vector. Returns true when optimal
  // for that cost, false when unbounded.
  bool iterate(const std::vector<double>& cost, const std::vector<double>& rhs) {
    const int m = wk.m;
    while (true) {
      require(pivots < opts->pivot_limit, "IterationLimit",
              "pivot cap exceeded (" + std::to_string(opts->pivot_limit) + ")");
      compute_duals(cost);

      // Pricing: Bland takes the lowest eligible index, Dantzig the most
      // negative violation (ties to the lowest index).
      int enter = -1;
      int dir = 0;
      double best_score = kDjTol;
      const bool use_bland = bland_mode || opts->pricing == Pricing::Bland;
      for (int c = 0; c < wk.total_cols(); ++c) {
        if (wk.pos_of[c] >= 0) continue;
        if (wk.ub[c] - wk.lb[c] < kPivTol && wk.nb_state[c] != kFreeZero) continue;
        double d = reduced_cost(c, cost);
        int cand_dir = 0;
        double score = 0.0;
        switch (wk.nb_state[c]) {
          case kAtLower:
            if (d < -kDjTol) { cand_dir = +1; score = -d; }
            break;
          case kAtUpper:
            if (d > kDjTol) { cand_dir = -1; score = d; }
            break;
          case kFreeZero:
            if (d < -kDjTol) { cand_dir = +1; score = -d; }
            else if (d > kDjTol) { cand_dir = -1; score = d; }
            break;
        }
        if (cand_dir == 0) continue;
        if (use_bland) { enter = c; dir = cand_dir; break; }
        if (score > best_score) { best_score = score; enter = c; dir = cand_dir; }
      }
      if (enter < 0) return true;  // optimal for this cost

      ftran(enter);

      // Ratio test. The entering column moves by theta * dir; basic value i
      // changes by -dir * theta * w[i]. Its own opposite bound also limits.
      double theta = wk.ub[enter] - wk.lb[enter];  // +inf when unbounded range
      if (wk.nb_state[enter] == kFreeZero) theta = kInf;
      int leave_pos = -1;       // -1 with finite theta => bound flip
      double leave_to_upper = false;
      double best_piv = 0.0;
      for (int i = 0; i < m; ++i) {
        double delta = -dir * wk.w[i];
        if (std::fabs(delta) <= kPivTol) continue;
        int bc = wk.basis[i];
        double limit, to_upper;
        if (delta < 0.0) {  // basic value decreases toward lb
          if (wk.lb[bc] == -kInf) continue;
          limit = (wk.lb[bc] - wk.beta[i]) / delta;
          to_upper = false;
        } else {  // increases toward ub
          if (wk.ub[bc] == kInf) continue;
          limit = (wk.ub[bc] - wk.beta[i]) / delta;
          to_upper = true;
        }
        if (limit < 0.0) limit = 0.0;
        double apiv = std::fabs(wk.w[i]);
        bool better;
        if (limit < theta - kRatioTol) better = true;
        else if (limit > theta + kRatioTol) better = false;
        else if (leave_pos < 0) better = true;
        else if (use_bland) better = wk.basis[i] < wk.basis[leave_pos];
        else better = apiv > best_piv ||
                      (apiv == best_piv && wk.basis[i] < wk.basis[leave_pos]);
        if (better) {
          theta = std::min(theta, limit);
          leave_pos = i;
          leave_to_upper = to_upper;
          best_piv = apiv;
        }
      }

      if (theta == kInf) return false;  // unbounded direction

      ++pivots;
      if (theta <= kRatioTol) {
        if (!bland_mode && opts->pricing == Pricing::Dantzig &&
            ++degenerate_run >= opts->degenerate_switch)
          bland_mode = true;
      } else {
        degenerate_run = 0;
      }

      // Apply the step.
      for (int i = 0; i < m; ++i) {
        wk.beta[i] -= dir * theta * wk.w[i];
        wk.value[wk.basis[i]] = wk.beta[i];
      }
      double enter_from = wk.value[enter];
      double enter_val = enter_from + dir * theta;

      if (leave_pos < 0) {
        // Bound flip: entering stays nonbasic at its other bound.
        wk.nb_state[enter] = dir > 0 ? kAtUpper : kAtLower;
        wk.value[enter] = dir > 0 ? wk.ub[enter] : wk.lb[enter];
        continue;
      }

      int leave_col = wk.basis[leave_pos];
      wk.basis[leave_pos] = enter;
      wk.pos_of[enter] = leave_pos;
      wk.pos_of[leave_col] = -1;
      wk.nb_state[leave_col] = leave_to_upper ? kAtUpper : kAtLower;
      wk.value[leave_col] = leave_to_upper ? wk.ub[leave_col] : wk.lb[leave_col];
      wk.value[enter] = enter_val;
      wk.beta[leave_pos] = enter_val;

      // Product-form update of the dense inverse.
      double piv = wk.w[leave_pos];
      double* prow = wk.binv.data() + (std::size_t)leave_pos * m;
      double inv_piv = 1.0 / piv;
      for (int j = 0; j < m; ++j) prow[j] *= inv_piv;
      for (int i = 0; i < m; ++i) {
        if (i == leave_pos) continue;
        double f = wk.w[i];
        if (f == 0.0) continue;
        double* row = wk.binv.data() + (std::size_t)i * m;
        for (int j = 0; j < m; ++j) row[j] -= f * prow[j];
      }

      if (++since_refactor >= kRefactorEvery) {
        rebuild_binv();
        recompute_beta(rhs);
      }
    }
  }
};

}  // namespace

LpSolution SimplexSolver::solve(const SimplexOptions& opts,
                                const std::vector<double>* lb_override,
                                const std::vector<double>* ub_override) const {
  const int n = inst_.num_vars;
  const int m = inst_.num_cons;

  Engine eng;
  eng.opts = &opts;
  Work& wk = eng.wk;
  wk.col_start = col_start_.data();
  wk.col_row = col_row_.data();
  wk.col_val = col_val_.data();
  wk.n = n;
  wk.m = m;
  wk.lb.assign(n + m, 0.0);
  wk.ub.assign(n + m, 0.0);
  for (int j = 0; j < n; ++j) {
    wk.lb[j] = lb_override ? (*lb_override)[j] : inst_.var_lb[j];
    wk.ub[j] = ub_override ? (*ub_override)[j] : inst_.var_ub[j];
    if (wk.lb[j] > wk.ub[j]) {
      LpSolution sol;
      sol.status = LpStatus::Infeasible;
      return sol;
    }
  }
  for (int i = 0; i < m; ++i) {
    wk.lb[n + i] = 0.0;
    wk.ub[n + i] = kInf;
  }
  wk.cost.assign(n + m, 0.0);
  for (int j = 0; j < n; ++j) wk.cost[j] = inst_.obj[j];

  // Nonbasic start: each structural column sits at the bound its coefficient
  // pressure favors, which keeps the all-slack basis feasible for the
  // generated families and skips phase 1 entirely.
  wk.value.assign(n + m, 0.0);
  wk.nb_state.assign(n + m, kAtLower);
  wk.pos_of.assign(n + m, -1);
  for (int j = 0; j < n; ++j) {
    bool lb_fin = wk.lb[j] != -kInf;
    bool ub_fin = wk.ub[j] != kInf;
    if (lb_fin && (col_pressure_[j] >= 0.0 || !ub_fin)) {
      wk.nb_state[j] = kAtLower;
      wk.value[j] = wk.lb[j];
    } else if (ub_fin) {
      wk.nb_state[j] = kAtUpper;
      wk.value[j] = wk.ub[j];
    } else {
      wk.nb_state[j] = kFreeZero;
      wk.value[j] = 0.0;
    }
  }

  std::vector<double> resid = inst_.rhs;
  for (int j = 0; j < n; ++j) {
    double v = wk.value[j];
    if (v != 0.0) wk.for_col(j, [&](int r, double a) { resid[r] -= a * v; });
  }

  wk.basis.resize(m);
  std::vector<double> art_cost;
  for (int i = 0; i < m; ++i) {
    if (resid[i] >= -kFeasTol) {
      wk.basis[i] = n + i;
      wk.pos_of[n + i] = i;
      wk.value[n + i] = std::max(resid[i], 0.0);
    } else {
      int ac = n + m + (int)wk.art_row.size();
      wk.art_row.push_back(i);
      wk.lb.push_back(0.0);
      wk.ub.push_back(kInf);
      wk.cost.push_back(0.0);
      wk.value.push_back(-resid[i]);
      wk.nb_state.push_back(kAtLower);
      wk.pos_of.push_back(i);
      wk.basis[i] = ac;
      // slack of this row stays nonbasic at zero
      wk.value[n + i] = 0.0;
    }
  }
  wk.binv.assign((std::size_t)m * m, 0.0);
  for (int i = 0; i < m; ++i)
    wk.binv[(std::size_t)i * m + i] = wk.basis[i] < n + m ? 1.0 : -1.0;
  wk.beta.resize(m);
  for (int i = 0; i < m; ++i) wk.beta[i] = wk.value[wk.basis[i]];
  wk.y.resize(m);
  wk.w.resize(m);

  LpSolution sol;

  if (!wk.art_row.empty()) {
    std::vector<double> phase1_cost(wk.total_cols(), 0.0);
    for (int t = 0; t < (int)wk.art_row.size(); ++t) phase1_cost[n + m + t] = 1.0;
    bool ok = eng.iterate(phase1_cost, inst_.rhs);
    require(ok, "IterationLimit", "phase 1 reported unbounded");
    double infeas = 0.0;
    for (int t = 0; t < (int)wk.art_row.size(); ++t) infeas += wk.value[n + m + t];
    if (infeas > kFeasTol * (1.0 + std::fabs(infeas))) {
      sol.status = LpStatus::Infeasible;
      sol.pivots = eng.pivots;
      return sol;
    }
    // Pin artificials at zero; basic ones stay as degenerate rows.
    for (int t = 0; t < (int)wk.art_row.size(); ++t) {
      int ac = n + m + t;
      wk.ub[ac] = 0.0;
      if (wk.pos_of[ac] < 0) {
        wk.nb_state[ac] = kAtLower;
        wk.value[ac] = 0.0;
      }
    }
    eng.degenerate_run = 0;
  }

  std::vector<double> full_cost = wk.cost;
  full_cost.resize(wk.total_cols(), 0.0);
  bool ok = eng.iterate(full_cost, inst_.rhs);
  sol.pivots = eng.pivots;
  if (!ok) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }

  sol.status = LpStatus::Optimal;
  sol.x.resize(n);
  sol.basis_flags.assign(n, BasisFlag::AtLower);
  for (int j = 0; j < n; ++j) {
    sol.x[j] = wk.value[j];
    if (wk.pos_of[j] >= 0) sol.basis_flags[j] = BasisFlag::Basic;
    else if (wk.nb_state[j] == kAtUpper) sol.basis_flags[j] = BasisFlag::AtUpper;
  }
  sol.obj = 0.0;
  for (int j = 0; j < n; ++j) sol.obj += inst_.obj[j] * sol.x[j];
  eng.compute_duals(full_cost);
  sol.duals = wk.y;
  sol.reduced_costs.resize(n);
  for (int j = 0; j < n; ++j)
    sol.reduced_costs[j] = wk.pos_of[j] >= 0 ? 0.0 : eng.reduced_cost(j, full_cost);
  return sol;
}

LpSolution solve_lp_relaxation(const MilpInstance& inst, Pricing pricing,
                               const std::vector<double>* lb_override,
                               const std::vector<double>* ub_override) {
  SimplexSolver solver(inst);
  SimplexOptions opts;
  opts.pricing = pricing;
  return solver.solve(opts, lb_override, ub_override);
}

}  // namespace milpmt
