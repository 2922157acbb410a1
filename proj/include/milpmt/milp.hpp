#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "milpmt/common.hpp"

namespace milpmt {

struct SparseEntry {
  int row = 0;
  int col = 0;
  double coeff = 0.0;
};

enum class RowSense { LessEqual, GreaterEqual, Equal };
enum class ObjSense { Minimize, Maximize };

// As-authored problem, before canonicalization.
struct RawInstance {
  std::string name;
  int num_vars = 0;
  ObjSense sense = ObjSense::Minimize;
  std::vector<double> obj;       // length num_vars
  std::vector<double> var_lb;    // length num_vars, may be -inf
  std::vector<double> var_ub;    // length num_vars, may be +inf
  std::vector<int> binary_vars;  // indices into [0, num_vars)
  struct Row {
    RowSense sense = RowSense::LessEqual;
    double rhs = 0.0;
    std::vector<std::pair<int, double>> entries;  // (col, coeff)
  };
  std::vector<Row> rows;
};

// Canonical minimization MILP: every row stored as a.x <= rhs.
// `maximize_input` records that the original objective was max c.x; `obj`
// then holds the negated coefficients and reported objectives are
// un-negated on the way out.
struct MilpInstance {
  std::string name;
  int num_vars = 0;
  int num_cons = 0;
  bool maximize_input = false;
  std::vector<double> obj;
  std::vector<SparseEntry> cons_matrix;  // sorted by (row, col), no dups
  std::vector<double> rhs;
  std::vector<double> var_lb;
  std::vector<double> var_ub;
  std::vector<int> binary_set;  // sorted ascending

  bool is_binary(int j) const {
    return std::binary_search(binary_set.begin(), binary_set.end(), j);
  }
  // Internal objective value, canonical (minimization) sense.
  double canonical_obj(const std::vector<double>& x) const;
  // Objective in the sense the instance was authored in.
  double reported_obj(double canonical) const {
    return maximize_input ? -canonical : canonical;
  }
};

struct Assignment {
  std::vector<double> values;
};

MilpInstance canonicalize(const RawInstance& raw);

bool check_feasible(const MilpInstance& inst, const Assignment& a,
                    double tol_feas = kTolFeas);

// c.x in the original authored sense.
double objective_value(const MilpInstance& inst, const Assignment& a);

struct BruteForceResult {
  double best_obj = 0.0;  // reported (original-sense) objective
  std::vector<std::vector<double>> optima;
};

// Exhaustive enumeration over all-binary instances, n <= 22.
BruteForceResult brute_force_optimum(const MilpInstance& inst);

// Appends the row  sum_{X0} x_i - sum_{X1} x_i <= delta - |X1|,
// i.e. at most `delta` of the indicated fixings may be flipped.
MilpInstance add_neighborhood_constraint(const MilpInstance& inst,
                                         const std::vector<int>& x0,
                                         const std::vector<int>& x1, int delta);

// Appends a row excluding the binary pattern of `a` (Hamming distance >= 1
// over binary_set). Used when harvesting alternative optima.
MilpInstance add_exclusion_constraint(const MilpInstance& inst, const Assignment& a);

// var_perm[j] / con_perm[i] give the new index of old var j / old row i.
MilpInstance permute(const MilpInstance& inst, const std::vector<int>& var_perm,
                     const std::vector<int>& con_perm);

// Line-oriented "MILP v1" text format; write(read(f)) is byte-identical.
std::string write_instance_text(const MilpInstance& inst);
MilpInstance read_instance_text(const std::string& text);
void write_instance_file(const MilpInstance& inst, const std::string& path);
MilpInstance read_instance_file(const std::string& path);

}  // namespace milpmt
