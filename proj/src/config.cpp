#include "milpmt/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace milpmt {

namespace {

int argmax_group(const std::vector<double>& v, int start, int len) {
  int best = 0;
  for (int k = 1; k < len; ++k)
    if (v[start + k] > v[start + best]) best = k;
  return best;
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

const char* node_sel_names[] = {"best_bound", "dfs", "hybrid"};
const char* branch_names[] = {"most_infeasible", "pseudocost", "random"};
const char* diving_names[] = {"off", "fractional", "coefficient"};
const char* pricing_names[] = {"bland", "dantzig"};

template <typename E>
E enum_from(const std::string& s, const char* const* names, int count, const char* what) {
  for (int i = 0; i < count; ++i)
    if (s == names[i]) return (E)i;
  fail("ParseError", std::string("bad ") + what + " '" + s + "'");
}

}  // namespace

std::vector<double> encode_config(const SolverConfig& cfg) {
  std::vector<double> v(kConfigVectorLen, 0.0);
  v[(int)cfg.node_selection] = 1.0;
  v[3 + (int)cfg.branching_rule] = 1.0;
  v[6 + (int)cfg.diving_mode] = 1.0;
  v[9 + (int)cfg.lp_pricing] = 1.0;
  v[11] = cfg.presolve ? 1.0 : 0.0;
  v[12] = cfg.cutoff_tightening ? 1.0 : 0.0;
  v[13] = cfg.branch_direction_bias;
  v[14] = cfg.rounding_freq;
  v[15] = cfg.diving_freq;
  v[16] = cfg.propagation_rounds;
  v[17] = cfg.pseudocost_init;
  v[18] = cfg.plunge_depth;
  return v;
}

SolverConfig decode_config(const std::vector<double>& vec) {
  require((int)vec.size() == kConfigVectorLen, "ParseError",
          "config vector must have 19 entries");
  SolverConfig cfg;
  cfg.node_selection = (NodeSelection)argmax_group(vec, 0, 3);
  cfg.branching_rule = (BranchingRule)argmax_group(vec, 3, 3);
  cfg.diving_mode = (DivingMode)argmax_group(vec, 6, 3);
  cfg.lp_pricing = (LpPricingOpt)argmax_group(vec, 9, 2);
  cfg.presolve = vec[11] >= 0.5;
  cfg.cutoff_tightening = vec[12] >= 0.5;
  cfg.branch_direction_bias = clamp01(vec[13]);
  cfg.rounding_freq = clamp01(vec[14]);
  cfg.diving_freq = clamp01(vec[15]);
  cfg.propagation_rounds = clamp01(vec[16]);
  cfg.pseudocost_init = clamp01(vec[17]);
  cfg.plunge_depth = clamp01(vec[18]);
  return cfg;
}

SolverConfig default_config() { return SolverConfig{}; }

SolverConfig random_config(Rng& rng) {
  SolverConfig cfg;
  cfg.node_selection = (NodeSelection)rng.next_below(3);
  cfg.branching_rule = (BranchingRule)rng.next_below(3);
  cfg.diving_mode = (DivingMode)rng.next_below(3);
  cfg.lp_pricing = (LpPricingOpt)rng.next_below(2);
  cfg.presolve = rng.next_below(2) == 0;
  cfg.cutoff_tightening = rng.next_below(2) == 0;
  cfg.branch_direction_bias = rng.next_double();
  cfg.rounding_freq = rng.next_double();
  cfg.diving_freq = rng.next_double();
  cfg.propagation_rounds = rng.next_double();
  cfg.pseudocost_init = rng.next_double();
  cfg.plunge_depth = rng.next_double();
  return cfg;
}

SolverConfig perturb_config(const SolverConfig& base, Rng& rng) {
  SolverConfig cfg = base;
  switch (rng.next_below(12)) {
    case 0: cfg.node_selection = (NodeSelection)rng.next_below(3); break;
    case 1: cfg.branching_rule = (BranchingRule)rng.next_below(3); break;
    case 2: cfg.diving_mode = (DivingMode)rng.next_below(3); break;
    case 3: cfg.lp_pricing = (LpPricingOpt)rng.next_below(2); break;
    case 4: cfg.presolve = rng.next_below(2) == 0; break;
    case 5: cfg.cutoff_tightening = rng.next_below(2) == 0; break;
    case 6: cfg.branch_direction_bias = rng.next_double(); break;
    case 7: cfg.rounding_freq = rng.next_double(); break;
    case 8: cfg.diving_freq = rng.next_double(); break;
    case 9: cfg.propagation_rounds = rng.next_double(); break;
    case 10: cfg.pseudocost_init = rng.next_double(); break;
    case 11: cfg.plunge_depth = rng.next_double(); break;
  }
  return cfg;
}

std::string config_to_text(const SolverConfig& cfg) {
  std::ostringstream os;
  os << "node_selection " << node_sel_names[(int)cfg.node_selection] << "\n";
  os << "branching_rule " << branch_names[(int)cfg.branching_rule] << "\n";
  os << "branch_direction_bias " << fmt_double(cfg.branch_direction_bias) << "\n";
  os << "rounding_freq " << fmt_double(cfg.rounding_freq) << "\n";
  os << "diving_mode " << diving_names[(int)cfg.diving_mode] << "\n";
  os << "diving_freq " << fmt_double(cfg.diving_freq) << "\n";
  os << "presolve " << (cfg.presolve ? "on" : "off") << "\n";
  os << "propagation_rounds " << fmt_double(cfg.propagation_rounds) << "\n";
  os << "lp_pricing " << pricing_names[(int)cfg.lp_pricing] << "\n";
  os << "pseudocost_init " << fmt_double(cfg.pseudocost_init) << "\n";
  os << "plunge_depth " << fmt_double(cfg.plunge_depth) << "\n";
  os << "cutoff_tightening " << (cfg.cutoff_tightening ? "on" : "off") << "\n";
  return os.str();
}

SolverConfig config_from_text(const std::string& text) {
  SolverConfig cfg;
  std::istringstream is(text);
  std::string key, val;
  while (is >> key >> val) {
    if (key[0] == '#') { std::getline(is, key); continue; }
    if (key == "node_selection")
      cfg.node_selection = enum_from<NodeSelection>(val, node_sel_names, 3, "node_selection");
    else if (key == "branching_rule")
      cfg.branching_rule = enum_from<BranchingRule>(val, branch_names, 3, "branching_rule");
    else if (key == "branch_direction_bias") cfg.branch_direction_bias = parse_double(val);
    else if (key == "rounding_freq") cfg.rounding_freq = parse_double(val);
    else if (key == "diving_mode")
      cfg.diving_mode = enum_from<DivingMode>(val, diving_names, 3, "diving_mode");
    else if (key == "diving_freq") cfg.diving_freq = parse_double(val);
    else if (key == "presolve") cfg.presolve = val == "on";
    else if (key == "propagation_rounds") cfg.propagation_rounds = parse_double(val);
    else if (key == "lp_pricing")
      cfg.lp_pricing = enum_from<LpPricingOpt>(val, pricing_names, 2, "lp_pricing");
    else if (key == "pseudocost_init") cfg.pseudocost_init = parse_double(val);
    else if (key == "plunge_depth") cfg.plunge_depth = parse_double(val);
    else if (key == "cutoff_tightening") cfg.cutoff_tightening = val == "on";
    else fail("ParseError", "unknown config key '" + key + "'");
  }
  for (double f : {cfg.branch_direction_bias, cfg.rounding_freq, cfg.diving_freq,
                   cfg.propagation_rounds, cfg.pseudocost_init, cfg.plunge_depth})
    require(f >= 0.0 && f <= 1.0, "ParseError", "numeric config fields must be in [0,1]");
  return cfg;
}

SolverConfig read_config_file(const std::string& path) {
  std::ifstream f(path);
  require(f.good(), "ParseError", "cannot open config file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return config_from_text(ss.str());
}

}  // namespace milpmt
