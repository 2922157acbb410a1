#include "milpmt/generators.hpp"

#include <algorithm>
#include <filesystem>

#include "milpmt/rng.hpp"

namespace milpmt {

const char* family_name(Family f) {
  switch (f) {
    case Family::CA: return "ca";
    case Family::MIS: return "mis";
    case Family::MVC: return "mvc";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  if (s == "ca") return Family::CA;
  if (s == "mis") return Family::MIS;
  if (s == "mvc") return Family::MVC;
  fail("BadParams", "unknown family '" + s + "'");
}

GenSpec preset_spec(Family family, const std::string& preset, const std::string& task,
                    std::uint64_t seed) {
  GenSpec s;
  s.family = family;
  s.seed = seed;
  auto pick = [&](int backdoor, int pas, int config) {
    if (task == "pas") return pas;
    if (task == "config") return config;
    return backdoor;
  };
  if (preset == "desk") {
    switch (family) {
      case Family::CA: s.items = 40; s.bids = 200; break;
      case Family::MIS: s.attach = 3; s.nodes = 180; break;
      case Family::MVC: s.attach = 2; s.nodes = 150; break;
    }
  } else if (preset == "S" || preset == "L") {
    // Benchmark sizes; MIS/MVC tables specify average degree, and the BA
    // process gives avg degree ~ 2*attach, so attach = round(degree / 2).
    const bool large = preset == "L";
    auto attach_for = [](int degree) { return std::max(1, (degree + 1) / 2); };
    switch (family) {
      case Family::CA:
        s.items = large ? pick(200, 3000, 3000) : pick(175, 2000, 2000);
        s.bids = large ? pick(1000, 6000, 6000) : pick(850, 4000, 4000);
        break;
      case Family::MIS:
        s.attach = attach_for(large ? pick(4, 5, 5) : pick(4, 5, 4));
        s.nodes = large ? pick(1500, 9000, 6000) : pick(1250, 6000, 3000);
        break;
      case Family::MVC:
        s.attach = attach_for(large ? pick(5, 5, 5) : pick(5, 5, 4));
        s.nodes = large ? pick(2000, 9000, 6000) : pick(1500, 6000, 3000);
        break;
    }
  } else {
    fail("BadParams", "unknown preset '" + preset + "'");
  }
  return s;
}

Graph gen_ba_graph(int nodes, int attach, std::uint64_t seed) {
  require(nodes > attach && attach >= 1, "BadParams",
          "need nodes > attach >= 1 for a Barabasi-Albert graph");
  Rng rng(seed);
  Graph g;
  g.num_nodes = nodes;
  std::vector<int> degree(nodes, 0);
  auto add_edge = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    g.edges.push_back({u, v});
    ++degree[u];
    ++degree[v];
  };
  // Seed clique on the first attach+1 nodes, then degree-proportional
  // attachment without replacement for each later node.
  for (int u = 0; u <= attach; ++u)
    for (int v = u + 1; v <= attach; ++v) add_edge(u, v);
  std::vector<int> chosen;
  for (int v = attach + 1; v < nodes; ++v) {
    chosen.clear();
    double total = 0.0;
    for (int u = 0; u < v; ++u) total += degree[u];
    for (int pick = 0; pick < attach; ++pick) {
      double r = rng.next_double() * total;
      double acc = 0.0;
      int sel = -1;
      for (int u = 0; u < v; ++u) {
        if (std::find(chosen.begin(), chosen.end(), u) != chosen.end()) continue;
        acc += degree[u];
        if (r < acc) { sel = u; break; }
      }
      if (sel < 0) {  // numerical tail: last eligible node
        for (int u = v - 1; u >= 0; --u)
          if (std::find(chosen.begin(), chosen.end(), u) == chosen.end()) { sel = u; break; }
      }
      chosen.push_back(sel);
      total -= degree[sel];
    }
    for (int u : chosen) add_edge(u, v);
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

MilpInstance gen_mvc(const Graph& g) {
  require(g.num_nodes > 0, "BadParams", "empty graph");
  RawInstance raw;
  raw.name = "mvc";
  raw.num_vars = g.num_nodes;
  raw.sense = ObjSense::Minimize;
  raw.obj.assign(g.num_nodes, 1.0);
  for (int v = 0; v < g.num_nodes; ++v) raw.binary_vars.push_back(v);
  if (g.edges.empty()) {
    // Edgeless graphs still need one row; 0 <= sum x is vacuous.
    RawInstance::Row r;
    r.sense = RowSense::GreaterEqual;
    r.rhs = 0.0;
    for (int v = 0; v < g.num_nodes; ++v) r.entries.push_back({v, 1.0});
    raw.rows.push_back(std::move(r));
  }
  for (auto [u, v] : g.edges) {
    RawInstance::Row r;
    r.sense = RowSense::GreaterEqual;
    r.rhs = 1.0;
    r.entries = {{u, 1.0}, {v, 1.0}};
    raw.rows.push_back(std::move(r));
  }
  return canonicalize(raw);
}

MilpInstance gen_mis(const Graph& g) {
  require(g.num_nodes > 0, "BadParams", "empty graph");
  RawInstance raw;
  raw.name = "mis";
  raw.num_vars = g.num_nodes;
  raw.sense = ObjSense::Maximize;
  raw.obj.assign(g.num_nodes, 1.0);
  for (int v = 0; v < g.num_nodes; ++v) raw.binary_vars.push_back(v);
  if (g.edges.empty()) {
    RawInstance::Row r;
    r.sense = RowSense::LessEqual;
    r.rhs = double(g.num_nodes);
    for (int v = 0; v < g.num_nodes; ++v) r.entries.push_back({v, 1.0});
    raw.rows.push_back(std::move(r));
  }
  for (auto [u, v] : g.edges) {
    RawInstance::Row r;
    r.sense = RowSense::LessEqual;
    r.rhs = 1.0;
    r.entries = {{u, 1.0}, {v, 1.0}};
    raw.rows.push_back(std::move(r));
  }
  return canonicalize(raw);
}

MilpInstance ca_formulation(int items, const std::vector<std::vector<int>>& bundles,
                            const std::vector<double>& prices) {
  require(items >= 1 && !bundles.empty() && bundles.size() == prices.size(), "BadParams",
          "bad CA formulation inputs");
  RawInstance raw;
  raw.name = "ca";
  raw.num_vars = (int)bundles.size();
  raw.sense = ObjSense::Maximize;
  raw.obj = prices;
  for (int b = 0; b < raw.num_vars; ++b) raw.binary_vars.push_back(b);
  // One packing row per item that appears in at least one bundle.
  std::vector<std::vector<int>> item_bids(items);
  for (int b = 0; b < (int)bundles.size(); ++b) {
    require(!bundles[b].empty(), "BadParams", "empty bundle");
    for (int it : bundles[b]) {
      require(it >= 0 && it < items, "BadParams", "item index out of range");
      item_bids[it].push_back(b);
    }
  }
  for (int it = 0; it < items; ++it) {
    if (item_bids[it].empty()) continue;
    RawInstance::Row r;
    r.sense = RowSense::LessEqual;
    r.rhs = 1.0;
    for (int b : item_bids[it]) r.entries.push_back({b, 1.0});
    raw.rows.push_back(std::move(r));
  }
  return canonicalize(raw);
}

MilpInstance gen_ca(int items, int bids, std::uint64_t seed) {
  require(items >= 2 && bids >= 1, "BadParams", "need items >= 2, bids >= 1");
  Rng rng(seed);
  std::vector<double> value(items);
  for (double& v : value) v = rng.uniform(1.0, 100.0);
  // Pairwise compatibility weights steer the bundle random walk.
  std::vector<double> compat((std::size_t)items * items, 0.0);
  for (int i = 0; i < items; ++i)
    for (int k = i + 1; k < items; ++k)
      compat[(std::size_t)i * items + k] = compat[(std::size_t)k * items + i] =
          rng.next_double();

  constexpr double kGrowProb = 0.75;
  std::vector<std::vector<int>> bundles(bids);
  std::vector<double> prices(bids);
  std::vector<char> used(items, 0);
  for (int b = 0; b < bids; ++b) {
    std::fill(used.begin(), used.end(), 0);
    int cur = (int)rng.next_below(items);
    std::vector<int>& bundle = bundles[b];
    bundle.push_back(cur);
    used[cur] = 1;
    while ((int)bundle.size() < items && rng.next_double() < kGrowProb) {
      double total = 0.0;
      for (int k = 0; k < items; ++k)
        if (!used[k]) total += compat[(std::size_t)cur * items + k];
      if (total <= 0.0) break;
      double r = rng.next_double() * total;
      double acc = 0.0;
      int sel = -1;
      for (int k = 0; k < items; ++k) {
        if (used[k]) continue;
        acc += compat[(std::size_t)cur * items + k];
        if (r < acc) { sel = k; break; }
      }
      if (sel < 0) break;
      bundle.push_back(sel);
      used[sel] = 1;
      cur = sel;
    }
    std::sort(bundle.begin(), bundle.end());
    double base = 0.0;
    for (int it : bundle) base += value[it];
    prices[b] = std::max(base * (1.0 + rng.uniform(-0.2, 0.2)), 1e-6);
  }
  return ca_formulation(items, bundles, prices);
}

MilpInstance gen_instance(const GenSpec& spec) {
  switch (spec.family) {
    case Family::CA: return gen_ca(spec.items, spec.bids, spec.seed);
    case Family::MIS: return gen_mis(gen_ba_graph(spec.nodes, spec.attach, spec.seed));
    case Family::MVC: return gen_mvc(gen_ba_graph(spec.nodes, spec.attach, spec.seed));
  }
  fail("BadParams", "bad family");
}

std::vector<MilpInstance> gen_suite(const GenSpec& spec, int count,
                                    const std::string& out_dir) {
  require(count >= 0, "BadParams", "negative count");
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  std::vector<MilpInstance> result;
  result.reserve(count);
  for (int k = 0; k < count; ++k) {
    GenSpec one = spec;
    one.seed = spec.seed + (std::uint64_t)k;
    MilpInstance inst = gen_instance(one);
    inst.name = std::string(family_name(spec.family)) + "-" + std::to_string(spec.seed) +
                "-" + std::to_string(k);
    if (!out_dir.empty())
      write_instance_file(inst, out_dir + "/" + inst.name + ".milp");
    result.push_back(std::move(inst));
  }
  return result;
}

}  // namespace milpmt
