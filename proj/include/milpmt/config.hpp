#pragma once

#include <array>
#include <string>
#include <vector>

#include "milpmt/common.hpp"
#include "milpmt/rng.hpp"

namespace milpmt {

enum class NodeSelection { BestBound, Dfs, Hybrid };
enum class BranchingRule { MostInfeasible, Pseudocost, Random };
enum class DivingMode { Off, Fractional, Coefficient };
enum class LpPricingOpt { Bland, Dantzig };

// Twelve tunable solver parameters. The numeric fields live in [0,1] and are
// mapped onto concrete levers inside the solver:
//   rounding_freq f: f = 0 disables rounding, f > 0 runs it every
//     floor(1 + 9*(1-f)) nodes; diving_freq uses the same mapping.
//   propagation_rounds f -> round(5 f) propagation sweeps per node.
//   plunge_depth f -> round(8 f) consecutive depth-first child visits.
struct SolverConfig {
  NodeSelection node_selection = NodeSelection::BestBound;
  BranchingRule branching_rule = BranchingRule::MostInfeasible;
  double branch_direction_bias = 0.5;  // P(explore the ceil child first)
  double rounding_freq = 0.5;
  DivingMode diving_mode = DivingMode::Off;
  double diving_freq = 0.5;
  bool presolve = true;
  double propagation_rounds = 0.4;
  LpPricingOpt lp_pricing = LpPricingOpt::Dantzig;
  double pseudocost_init = 0.5;
  double plunge_depth = 0.25;
  bool cutoff_tightening = true;

  int rounding_period() const {
    return rounding_freq <= 0.0 ? 0 : (int)(1.0 + 9.0 * (1.0 - rounding_freq));
  }
  int diving_period() const {
    return diving_freq <= 0.0 ? 0 : (int)(1.0 + 9.0 * (1.0 - diving_freq));
  }
  int propagation_round_count() const { return (int)std::lround(5.0 * propagation_rounds); }
  int plunge_depth_count() const { return (int)std::lround(8.0 * plunge_depth); }

  bool operator==(const SolverConfig&) const = default;
};

// Fixed-order 19-entry vector:
//   [0..2]   node_selection one-hot   (best_bound, dfs, hybrid)
//   [3..5]   branching_rule one-hot   (most_infeasible, pseudocost, random)
//   [6..8]   diving_mode one-hot      (off, fractional, coefficient)
//   [9..10]  lp_pricing one-hot       (bland, dantzig)
//   [11]     presolve flag            (>= 0.5 decodes to on)
//   [12]     cutoff_tightening flag   (>= 0.5 decodes to on)
//   [13..18] branch_direction_bias, rounding_freq, diving_freq,
//            propagation_rounds, pseudocost_init, plunge_depth
inline constexpr int kConfigVectorLen = 19;

// Softmax groups of the categorical one-hot blocks, used by the config head.
inline constexpr std::array<std::pair<int, int>, 4> kConfigCategoricalGroups = {
    {{0, 3}, {3, 3}, {6, 3}, {9, 2}}};

std::vector<double> encode_config(const SolverConfig& cfg);
// Accepts any scores in [0,1]: argmax per one-hot group (ties to the first
// option), thresholded flags, clamped numerics.
SolverConfig decode_config(const std::vector<double>& vec);

SolverConfig default_config();
SolverConfig random_config(Rng& rng);
// Resamples exactly one of the twelve fields.
SolverConfig perturb_config(const SolverConfig& base, Rng& rng);

std::string config_to_text(const SolverConfig& cfg);
SolverConfig config_from_text(const std::string& text);
SolverConfig read_config_file(const std::string& path);

}  // namespace milpmt
