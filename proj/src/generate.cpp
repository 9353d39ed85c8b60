#include "gridfary/generate.h"

#include <algorithm>

namespace gridfary {

const char* to_string(GenKind kind) {
  switch (kind) {
    case GenKind::Tree: return "tree";
    case GenKind::Cactus: return "cactus";
    case GenKind::Star: return "star";
    case GenKind::Path: return "path";
    case GenKind::Balanced: return "balanced";
  }
  return "?";
}

std::optional<GenKind> gen_kind_from_string(const std::string& name) {
  if (name == "tree") return GenKind::Tree;
  if (name == "cactus") return GenKind::Cactus;
  if (name == "star") return GenKind::Star;
  if (name == "path") return GenKind::Path;
  if (name == "balanced") return GenKind::Balanced;
  return std::nullopt;
}

namespace {

void finish_stats(const InputGraph& g, GenStats* stats) {
  if (!stats) return;
  std::vector<int> degree(g.n, 0);
  for (auto [u, v] : g.edges) {
    ++degree[u];
    ++degree[v];
  }
  stats->degree_one = std::count(degree.begin(), degree.end(), 1);
}

InputGraph random_tree(int n, uint64_t seed, const GenParams& params) {
  InputGraph g;
  g.n = n;
  SplitMix64 rng(seed);
  std::vector<int> depth(n, 0);
  std::vector<int> eligible{0};
  for (int v = 1; v < n; ++v) {
    int parent = eligible[rng.below(eligible.size())];
    g.edges.push_back({parent, v});
    depth[v] = depth[parent] + 1;
    if (params.depth_cap <= 0 || depth[v] < params.depth_cap)
      eligible.push_back(v);
  }
  return g;
}

InputGraph random_cactus(int n, uint64_t seed, const GenParams& params,
                         GenStats* stats) {
  if (params.cycle_target >= 0 && 1 + 2 * params.cycle_target > n)
    throw GraphError("generate_random: cycle target does not fit in n vertices");
  InputGraph g;
  g.n = n;
  SplitMix64 rng(seed);
  int built = 1;  // vertex 0 exists
  long long cycles_left = params.cycle_target;
  while (built < n) {
    const int room = n - built;
    // A cycle of length c consumes c-1 new vertices; keep enough room
    // for any cycles still owed.
    const long long owed = cycles_left > 0 ? cycles_left : 0;
    const bool must_cycle = owed > 0 && room <= 2 * owed;
    const bool may_cycle =
        room >= 2 && (params.cycle_target < 0 ? true : cycles_left > 0);
    const bool do_cycle =
        may_cycle && (must_cycle || rng.unit() < params.cycle_prob);
    const int attach = static_cast<int>(rng.below(built));
    if (!do_cycle) {
      g.edges.push_back({attach, built});
      ++built;
      continue;
    }
    int max_len = std::min<long long>(params.max_cycle_len, room + 1);
    if (owed > 1) {
      max_len = std::min<long long>(max_len, room + 1 - 2 * (owed - 1));
    }
    int len;
    if (max_len < 4 || rng.unit() < params.triangle_frac) {
      len = 3;
    } else {
      len = 4 + static_cast<int>(rng.below(max_len - 3));
    }
    int prev = attach;
    for (int i = 0; i < len - 1; ++i) {
      g.edges.push_back({prev, built});
      prev = built;
      ++built;
    }
    g.edges.push_back({prev, attach});
    if (stats) {
      ++stats->cycles;
      if (len == 3) ++stats->triangles;
    }
    if (cycles_left > 0) --cycles_left;
  }
  if (params.cycle_target > 0 && cycles_left != 0)
    throw std::logic_error("generate_random: cycle target not met");
  return g;
}

}  // namespace

InputGraph generate_random(GenKind kind, int n, uint64_t seed,
                           const GenParams& params, GenStats* stats) {
  if (n < 1) throw GraphError("generate_random: n must be at least 1");
  if (stats) *stats = {};
  InputGraph g;
  switch (kind) {
    case GenKind::Tree:
      g = random_tree(n, seed, params);
      break;
    case GenKind::Cactus:
      g = random_cactus(n, seed, params, stats);
      break;
    case GenKind::Star: {
      g.n = n;
      for (int v = 1; v < n; ++v) g.edges.push_back({0, v});
      break;
    }
    case GenKind::Path: {
      g.n = n;
      for (int v = 1; v < n; ++v) g.edges.push_back({v - 1, v});
      break;
    }
    case GenKind::Balanced: {
      g.n = n;
      for (int v = 1; v < n; ++v) g.edges.push_back({(v - 1) / 2, v});
      break;
    }
  }
  finish_stats(g, stats);
  return g;
}

}  // namespace gridfary
