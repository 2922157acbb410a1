#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "milpmt/milp.hpp"

namespace milpmt {

struct Graph {
  int num_nodes = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted, unique
};

enum class Family { CA, MIS, MVC };

const char* family_name(Family f);
Family family_from_name(const std::string& s);

struct GenSpec {
  Family family = Family::MVC;
  // CA sizing
  int items = 0;
  int bids = 0;
  // MIS/MVC sizing
  int attach = 0;  // Barabasi-Albert attachment count, avg degree ~ 2*attach
  int nodes = 0;
  std::uint64_t seed = 0;
};

// Presets: "desk" is the default working scale, "S"/"L" mirror the
// published benchmark sizes for the given task column.
GenSpec preset_spec(Family family, const std::string& preset, const std::string& task,
                    std::uint64_t seed);

Graph gen_ba_graph(int nodes, int attach, std::uint64_t seed);

MilpInstance gen_mvc(const Graph& g);
MilpInstance gen_mis(const Graph& g);

// Deterministic formulation helper shared by gen_ca and tests.
MilpInstance ca_formulation(int items, const std::vector<std::vector<int>>& bundles,
                            const std::vector<double>& prices);

MilpInstance gen_ca(int items, int bids, std::uint64_t seed);

MilpInstance gen_instance(const GenSpec& spec);

// Generates `count` instances with per-index seeds spec.seed + k and ids
// "<family>-<seed>-<k>". When out_dir is nonempty, writes "<id>.milp" files.
std::vector<MilpInstance> gen_suite(const GenSpec& spec, int count,
                                    const std::string& out_dir = "");

}  // namespace milpmt
