#include "milpmt/milp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace milpmt {

double MilpInstance::canonical_obj(const std::vector<double>& x) const {
  double v = 0.0;
  for (int j = 0; j < num_vars; ++j) v += obj[j] * x[j];
  return v;
}

namespace {

void sort_and_merge_entries(std::vector<SparseEntry>& entries) {
  std::sort(entries.begin(), entries.end(), [](const SparseEntry& a, const SparseEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  std::vector<SparseEntry> merged;
  merged.reserve(entries.size());
  for (const auto& e : entries) {
    if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col) {
      merged.back().coeff += e.coeff;
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const SparseEntry& e) { return e.coeff == 0.0; });
  entries = std::move(merged);
}

}  // namespace

MilpInstance canonicalize(const RawInstance& raw) {
  require(raw.num_vars > 0 && !raw.rows.empty(), "EmptyInstance",
          "instance needs at least one variable and one constraint");
  require((int)raw.obj.size() == raw.num_vars, "EmptyInstance", "objective length mismatch");

  MilpInstance inst;
  inst.name = raw.name;
  inst.num_vars = raw.num_vars;
  inst.maximize_input = raw.sense == ObjSense::Maximize;
  inst.obj = raw.obj;
  if (inst.maximize_input)
    for (double& c : inst.obj) c = -c;

  inst.var_lb = raw.var_lb.empty() ? std::vector<double>(raw.num_vars, -kInf) : raw.var_lb;
  inst.var_ub = raw.var_ub.empty() ? std::vector<double>(raw.num_vars, kInf) : raw.var_ub;
  require((int)inst.var_lb.size() == raw.num_vars && (int)inst.var_ub.size() == raw.num_vars,
          "BadBounds", "bound vector length mismatch");

  inst.binary_set = raw.binary_vars;
  std::sort(inst.binary_set.begin(), inst.binary_set.end());
  inst.binary_set.erase(std::unique(inst.binary_set.begin(), inst.binary_set.end()),
                        inst.binary_set.end());
  for (int j : inst.binary_set) {
    require(j >= 0 && j < raw.num_vars, "BadBounds", "binary index out of range");
    inst.var_lb[j] = 0.0;
    inst.var_ub[j] = 1.0;
  }
  for (int j = 0; j < raw.num_vars; ++j) {
    require(!std::isnan(inst.var_lb[j]) && !std::isnan(inst.var_ub[j]), "BadBounds",
            "NaN bound");
    require(inst.var_lb[j] <= inst.var_ub[j], "BadBounds",
            "lb > ub on variable " + std::to_string(j));
  }
  for (double c : inst.obj)
    require(std::isfinite(c), "EmptyInstance", "objective coefficient not finite");

  // >= rows are negated, = rows split into <= plus negated >=.
  int out_row = 0;
  auto push_row = [&](const RawInstance::Row& r, double sign) {
    for (const auto& [col, coeff] : r.entries) {
      require(col >= 0 && col < raw.num_vars, "BadBounds", "column index out of range");
      require(std::isfinite(coeff), "BadBounds", "constraint coefficient not finite");
      if (coeff != 0.0) inst.cons_matrix.push_back({out_row, col, sign * coeff});
    }
    require(std::isfinite(r.rhs), "BadBounds", "rhs not finite");
    inst.rhs.push_back(sign * r.rhs);
    ++out_row;
  };
  for (const auto& r : raw.rows) {
    switch (r.sense) {
      case RowSense::LessEqual: push_row(r, 1.0); break;
      case RowSense::GreaterEqual: push_row(r, -1.0); break;
      case RowSense::Equal:
        push_row(r, 1.0);
        push_row(r, -1.0);
        break;
    }
  }
  inst.num_cons = out_row;
  sort_and_merge_entries(inst.cons_matrix);
  return inst;
}

bool check_feasible(const MilpInstance& inst, const Assignment& a, double tol_feas) {
  require((int)a.values.size() == inst.num_vars, "BadBounds", "assignment length mismatch");
  const auto& x = a.values;
  for (int j = 0; j < inst.num_vars; ++j) {
    if (!std::isfinite(x[j])) return false;
    if (x[j] < inst.var_lb[j] - tol_feas || x[j] > inst.var_ub[j] + tol_feas) return false;
  }
  for (int j : inst.binary_set)
    if (std::fabs(x[j] - std::round(x[j])) > kTolInt) return false;
  std::vector<double> act(inst.num_cons, 0.0);
  for (const auto& e : inst.cons_matrix) act[e.row] += e.coeff * x[e.col];
  for (int i = 0; i < inst.num_cons; ++i)
    if (act[i] > inst.rhs[i] + tol_feas) return false;
  return true;
}

double objective_value(const MilpInstance& inst, const Assignment& a) {
  require((int)a.values.size() == inst.num_vars, "BadBounds", "assignment length mismatch");
  return inst.reported_obj(inst.canonical_obj(a.values));
}

BruteForceResult brute_force_optimum(const MilpInstance& inst) {
  require((int)inst.binary_set.size() == inst.num_vars, "TooLarge",
          "brute force requires an all-binary instance");
  const int n = inst.num_vars;
  require(n <= 22, "TooLarge", "brute force capped at n <= 22");

  // Gray-code walk: flip one variable per step, update row activities and
  // objective incrementally.
  std::vector<std::vector<std::pair<int, double>>> col_entries(n);
  for (const auto& e : inst.cons_matrix) col_entries[e.col].push_back({e.row, e.coeff});

  std::vector<double> x(n, 0.0);
  std::vector<double> act(inst.num_cons, 0.0);
  double obj = 0.0;

  // Bounds may be tighter than {0,1} on presolved instances.
  auto in_bounds = [&](int j, double v) {
    return v >= inst.var_lb[j] - kTolInt && v <= inst.var_ub[j] + kTolInt;
  };
  int bound_viol = 0;
  for (int j = 0; j < n; ++j)
    if (!in_bounds(j, 0.0)) ++bound_viol;

  double best = kInf;
  std::vector<std::vector<double>> optima;
  auto consider = [&]() {
    if (bound_viol > 0) return;
    for (int i = 0; i < inst.num_cons; ++i)
      if (act[i] > inst.rhs[i] + kTolFeas) return;
    if (obj < best - kTolFeas) {
      best = obj;
      optima.clear();
      optima.push_back(x);
    } else if (obj <= best + kTolFeas) {
      optima.push_back(x);
    }
  };

  consider();
  const std::uint64_t total = 1ull << n;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < total; ++k) {
    std::uint64_t next_gray = k ^ (k >> 1);
    int bit = std::countr_zero(gray ^ next_gray);
    gray = next_gray;
    double delta = (x[bit] == 0.0) ? 1.0 : -1.0;
    if (!in_bounds(bit, x[bit])) --bound_viol;
    x[bit] += delta;
    if (!in_bounds(bit, x[bit])) ++bound_viol;
    obj += delta * inst.obj[bit];
    for (const auto& [row, coeff] : col_entries[bit]) act[row] += delta * coeff;
    consider();
  }
  require(std::isfinite(best), "Infeasible", "no feasible assignment");

  std::sort(optima.begin(), optima.end());
  optima.erase(std::unique(optima.begin(), optima.end()), optima.end());
  return {inst.reported_obj(best), std::move(optima)};
}

MilpInstance add_neighborhood_constraint(const MilpInstance& inst,
                                         const std::vector<int>& x0,
                                         const std::vector<int>& x1, int delta) {
  require(delta >= 0, "Overlap", "delta must be non-negative");
  std::set<int> s0(x0.begin(), x0.end());
  for (int j : x1)
    require(!s0.count(j), "Overlap", "X0 and X1 overlap at variable " + std::to_string(j));
  for (int j : x0)
    require(inst.is_binary(j), "Overlap", "X0 contains non-binary variable");
  for (int j : x1)
    require(inst.is_binary(j), "Overlap", "X1 contains non-binary variable");

  MilpInstance out = inst;
  int row = out.num_cons++;
  for (int j : x0) out.cons_matrix.push_back({row, j, 1.0});
  for (int j : x1) out.cons_matrix.push_back({row, j, -1.0});
  out.rhs.push_back(double(delta) - double(x1.size()));
  sort_and_merge_entries(out.cons_matrix);
  return out;
}

MilpInstance add_exclusion_constraint(const MilpInstance& inst, const Assignment& a) {
  require((int)a.values.size() == inst.num_vars, "BadBounds", "assignment length mismatch");
  // Hamming distance >= 1 from the pattern of `a` over binaries:
  //   sum_{a_j=1} x_j - sum_{a_j=0} x_j <= |ones| - 1
  MilpInstance out = inst;
  int row = out.num_cons++;
  int ones = 0;
  for (int j : inst.binary_set) {
    if (std::round(a.values[j]) >= 0.5) {
      out.cons_matrix.push_back({row, j, 1.0});
      ++ones;
    } else {
      out.cons_matrix.push_back({row, j, -1.0});
    }
  }
  out.rhs.push_back(double(ones) - 1.0);
  sort_and_merge_entries(out.cons_matrix);
  return out;
}

namespace {

void check_permutation(const std::vector<int>& perm, int n) {
  require((int)perm.size() == n, "BadPermutation", "permutation length mismatch");
  std::vector<char> seen(n, 0);
  for (int p : perm) {
    require(p >= 0 && p < n && !seen[p], "BadPermutation", "not a bijection");
    seen[p] = 1;
  }
}

}  // namespace

MilpInstance permute(const MilpInstance& inst, const std::vector<int>& var_perm,
                     const std::vector<int>& con_perm) {
  check_permutation(var_perm, inst.num_vars);
  check_permutation(con_perm, inst.num_cons);

  MilpInstance out;
  out.name = inst.name;
  out.num_vars = inst.num_vars;
  out.num_cons = inst.num_cons;
  out.maximize_input = inst.maximize_input;
  out.obj.resize(inst.num_vars);
  out.var_lb.resize(inst.num_vars);
  out.var_ub.resize(inst.num_vars);
  out.rhs.resize(inst.num_cons);
  for (int j = 0; j < inst.num_vars; ++j) {
    out.obj[var_perm[j]] = inst.obj[j];
    out.var_lb[var_perm[j]] = inst.var_lb[j];
    out.var_ub[var_perm[j]] = inst.var_ub[j];
  }
  for (int i = 0; i < inst.num_cons; ++i) out.rhs[con_perm[i]] = inst.rhs[i];
  out.cons_matrix.reserve(inst.cons_matrix.size());
  for (const auto& e : inst.cons_matrix)
    out.cons_matrix.push_back({con_perm[e.row], var_perm[e.col], e.coeff});
  sort_and_merge_entries(out.cons_matrix);
  out.binary_set.reserve(inst.binary_set.size());
  for (int j : inst.binary_set) out.binary_set.push_back(var_perm[j]);
  std::sort(out.binary_set.begin(), out.binary_set.end());
  return out;
}

}  // namespace milpmt
