#include "gridfary/decompose.h"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace gridfary {

namespace {

std::vector<int> bfs_levels(const std::vector<std::vector<int>>& adj, int source) {
  std::vector<int> level(adj.size(), -1);
  std::queue<int> q;
  q.push(source);
  level[source] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v]) {
      if (level[w] == -1) {
        level[w] = level[v] + 1;
        q.push(w);
      }
    }
  }
  return level;
}

// Neighbors of v in drawing order: the rotation list cut at the parent
// edge when a rotation system is given, ascending ids otherwise.
std::vector<int> ordered_neighbors(const InputGraph& g,
                                   const std::vector<std::vector<int>>& adj,
                                   int v, int parent) {
  const auto& list = adj[v];
  std::vector<int> out;
  out.reserve(list.size());
  if (!g.has_rotation() || parent < 0) {
    for (int w : list)
      if (w != parent) out.push_back(w);
    return out;
  }
  size_t start = 0;
  while (start < list.size() && list[start] != parent) ++start;
  for (size_t i = 1; i <= list.size(); ++i) {
    int w = list[(start + i) % list.size()];
    if (w != parent) out.push_back(w);
  }
  return out;
}

}  // namespace

int pick_root(const InputGraph& g) {
  if (g.root) return *g.root;
  if (g.n == 1) return 0;
  auto adj = neighbor_lists(g);
  if (static_cast<int>(g.edges.size()) == g.n - 1) {
    // Tree: every vertex's farthest vertex is a diameter endpoint.
    auto d0 = bfs_levels(adj, 0);
    int a = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
    auto da = bfs_levels(adj, a);
    int b = static_cast<int>(std::max_element(da.begin(), da.end()) - da.begin());
    auto db = bfs_levels(adj, b);
    int best = 0;
    int best_ecc = std::max(da[0], db[0]);
    for (int v = 1; v < g.n; ++v) {
      int ecc = std::max(da[v], db[v]);
      if (ecc < best_ecc) {
        best = v;
        best_ecc = ecc;
      }
    }
    return best;
  }
  int best = 0;
  long long best_ecc = -1;
  for (int v = 0; v < g.n; ++v) {
    auto d = bfs_levels(adj, v);
    long long ecc = *std::max_element(d.begin(), d.end());
    if (best_ecc < 0 || ecc < best_ecc) {
      best = v;
      best_ecc = ecc;
    }
  }
  return best;
}

RootedTree build_rooted_tree(const InputGraph& g) {
  validate_graph(g);
  if (static_cast<int>(g.edges.size()) != g.n - 1)
    throw GraphError("build_rooted_tree: input is not a tree");
  auto adj = neighbor_lists(g);
  RootedTree tree;
  tree.root = pick_root(g);
  tree.parent.assign(g.n, -1);
  tree.children.assign(g.n, {});
  std::vector<int> order;
  order.reserve(g.n);
  std::queue<int> q;
  q.push(tree.root);
  std::vector<char> visited(g.n, 0);
  visited[tree.root] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    order.push_back(v);
    for (int w : ordered_neighbors(g, adj, v, tree.parent[v])) {
      if (visited[w]) continue;
      visited[w] = 1;
      tree.parent[w] = v;
      tree.children[v].push_back(w);
      q.push(w);
    }
  }
  tree.leaf_count.assign(g.n, 0);
  tree.depth.assign(g.n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (tree.children[v].empty()) {
      tree.leaf_count[v] = 1;
      tree.depth[v] = 0;
      continue;
    }
    for (int w : tree.children[v]) {
      tree.leaf_count[v] += tree.leaf_count[w];
      tree.depth[v] = std::max(tree.depth[v], 1 + tree.depth[w]);
    }
  }
  return tree;
}

CactusDecomposition build_cactus_decomposition(const InputGraph& g) {
  validate_graph(g);
  auto adj = neighbor_lists(g);
  CactusDecomposition d;
  d.root = pick_root(g);
  d.level = bfs_levels(adj, d.root);

  // Edge lookup and cycle membership.
  std::map<std::pair<int, int>, int> edge_id;
  for (size_t i = 0; i < g.edges.size(); ++i) {
    auto [u, v] = g.edges[i];
    edge_id[std::minmax(u, v)] = static_cast<int>(i);
  }
  std::vector<int> cycle_of_edge(g.edges.size(), -1);

  // BFS parents along ordered neighbors (used to linearize rotations).
  std::vector<int> parent(g.n, -1);
  {
    std::queue<int> q;
    q.push(d.root);
    std::vector<char> visited(g.n, 0);
    visited[d.root] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v]) {
        if (!visited[w]) {
          visited[w] = 1;
          parent[w] = v;
          q.push(w);
        }
      }
    }
  }

  // Cycles from biconnected components with >= 3 edges.
  struct WalkedCycle {
    std::vector<int> vertices;  // circular order starting at the origin
  };
  auto comps = biconnected_components(g);
  for (const auto& comp : comps) {
    if (comp.size() < 3) continue;
    // Per-vertex cycle neighbors.
    std::map<int, std::vector<int>> ring;
    for (int eid : comp) {
      auto [u, v] = g.edges[eid];
      ring[u].push_back(v);
      ring[v].push_back(u);
    }
    int origin = -1;
    for (const auto& [v, _] : ring) {
      if (origin == -1 || d.level[v] < d.level[origin]) origin = v;
    }
    for (const auto& [v, _] : ring) {
      if (v != origin && d.level[v] == d.level[origin])
        throw std::logic_error("cycle origin is not unique");
    }
    // Of the two cycle edges at the origin, the one met first in the
    // linearized rotation starts the right path; the other, which
    // precedes it clockwise, starts the left path.
    const auto& pair = ring[origin];
    int first_dir = -1, second_dir = -1;
    for (int w : ordered_neighbors(g, adj, origin, parent[origin])) {
      if (w != pair[0] && w != pair[1]) continue;
      if (first_dir == -1) {
        first_dir = w;
      } else if (w != first_dir) {
        second_dir = w;
        break;
      }
    }
    if (first_dir == -1 || second_dir == -1)
      throw std::logic_error("cycle edges not found in rotation at origin");

    const int len = static_cast<int>(comp.size());
    const int right_len = len / 2;
    const int left_len = len - right_len;
    auto walk = [&](int start_neighbor, int steps) {
      std::vector<int> path{origin, start_neighbor};
      while (static_cast<int>(path.size()) <= steps) {
        int cur = path.back();
        int prev = path[path.size() - 2];
        const auto& two = ring[cur];
        path.push_back(two[0] == prev ? two[1] : two[0]);
      }
      return path;
    };
    CycleInfo cycle;
    cycle.origin = origin;
    cycle.right_path = walk(first_dir, right_len);
    cycle.left_path = walk(second_dir, left_len);
    cycle.terminal = cycle.right_path.back();
    if (cycle.left_path.back() != cycle.terminal)
      throw std::logic_error("cycle paths do not meet at a terminal");
    int cidx = static_cast<int>(d.cycles.size());
    for (int eid : comp) cycle_of_edge[eid] = cidx;
    d.cycles.push_back(std::move(cycle));
  }

  // Successor components per vertex, in rotation order.
  d.successors.assign(g.n, {});
  std::vector<char> cycle_registered(d.cycles.size(), 0);
  for (int v = 0; v < g.n; ++v) {
    std::fill(cycle_registered.begin(), cycle_registered.end(), 0);
    for (int w : ordered_neighbors(g, adj, v, parent[v])) {
      int eid = edge_id.at(std::minmax(v, w));
      int cidx = cycle_of_edge[eid];
      if (cidx == -1) {
        if (d.level[w] == d.level[v] + 1 && parent[w] == v)
          d.successors[v].push_back({false, w});
      } else if (d.cycles[cidx].origin == v && !cycle_registered[cidx]) {
        cycle_registered[cidx] = 1;
        d.successors[v].push_back({true, cidx});
      }
    }
  }

  // Subcactus statistics, deepest vertices first.
  d.leaf_count.assign(g.n, 0);
  d.cycle_count.assign(g.n, 0);
  d.triangle_count.assign(g.n, 0);
  d.height.assign(g.n, 0);
  std::vector<int> by_level(g.n);
  for (int v = 0; v < g.n; ++v) by_level[v] = v;
  std::sort(by_level.begin(), by_level.end(), [&](int a, int b) {
    return d.level[a] != d.level[b] ? d.level[a] > d.level[b] : a < b;
  });
  std::vector<int> degree(g.n, 0);
  for (auto [u, v] : g.edges) {
    ++degree[u];
    ++degree[v];
  }
  // Graph distance from a cycle's origin to the vertex at position pos
  // along either path: the shorter way around.
  auto cycle_distance = [](const CycleInfo& c, int pos) {
    return std::min(pos, c.length() - pos);
  };
  for (int v : by_level) {
    if (d.successors[v].empty()) {
      d.leaf_count[v] = (degree[v] == 1 && v != d.root) ? 1 : 0;
      continue;
    }
    for (const Successor& s : d.successors[v]) {
      if (!s.is_cycle) {
        d.leaf_count[v] += d.leaf_count[s.id];
        d.cycle_count[v] += d.cycle_count[s.id];
        d.triangle_count[v] += d.triangle_count[s.id];
        d.height[v] = std::max(d.height[v], 1 + d.height[s.id]);
        continue;
      }
      CycleInfo& c = d.cycles[s.id];
      auto accumulate = [&](int w, long long& leaves, long long& cycles,
                            long long& triangles, std::vector<int>& cuts) {
        if (d.successors[w].empty()) return;
        leaves += d.leaf_count[w];
        cycles += d.cycle_count[w];
        triangles += d.triangle_count[w];
        cuts.push_back(w);
      };
      for (size_t pos = 1; pos + 1 < c.right_path.size(); ++pos) {
        accumulate(c.right_path[pos], c.leaves_right, c.cycles_right,
                   c.triangles_right, c.right_cuts);
      }
      for (size_t pos = 1; pos < c.left_path.size(); ++pos) {
        accumulate(c.left_path[pos], c.leaves_left, c.cycles_left,
                   c.triangles_left, c.left_cuts);
      }
      c.leaves_total = c.leaves_right + c.leaves_left;
      c.cycles_total = 1 + c.cycles_right + c.cycles_left;
      c.triangles_total =
          (c.is_triangle() ? 1 : 0) + c.triangles_right + c.triangles_left;

      d.leaf_count[v] += c.leaves_total;
      d.cycle_count[v] += c.cycles_total;
      d.triangle_count[v] += c.triangles_total;
      for (size_t pos = 1; pos < c.right_path.size(); ++pos) {
        int w = c.right_path[pos];
        int dist = cycle_distance(c, static_cast<int>(pos));
        int below = d.successors[w].empty() ? 0 : d.height[w];
        d.height[v] = std::max(d.height[v], dist + below);
      }
      for (size_t pos = 1; pos + 1 < c.left_path.size(); ++pos) {
        int w = c.left_path[pos];
        int dist = cycle_distance(c, static_cast<int>(pos));
        int below = d.successors[w].empty() ? 0 : d.height[w];
        d.height[v] = std::max(d.height[v], dist + below);
      }
    }
  }
  return d;
}

std::variant<RootedTree, CactusDecomposition> root_and_orient(const InputGraph& g) {
  GraphClass cls = classify(g);
  if (cls == GraphClass::Unsupported)
    throw GraphError("root_and_orient: graph is not a star, tree or cactus");
  if (cls == GraphClass::Cactus) return build_cactus_decomposition(g);
  return build_rooted_tree(g);
}

TripleAssignment assign_triples(const RootedTree& tree, const TripleSequence& seq) {
  const int budget = tree.size() == 1 ? 0 : tree.leaves();
  if (seq.size() < budget)
    throw std::invalid_argument("assign_triples: sequence smaller than leaf count");
  TripleAssignment out;
  out.angle_order = seq.angle_sorted();
  out.vertex_block.assign(tree.size(), {0, 0});
  out.vertex_block[tree.root] = {0, budget};
  // Depth-first in child order; each child takes the next contiguous
  // block of size leaf_count.
  int cursor = 0;
  std::vector<std::pair<int, size_t>> frames{{tree.root, 0}};
  while (!frames.empty()) {
    auto& [v, next] = frames.back();
    if (next >= tree.children[v].size()) {
      frames.pop_back();
      continue;
    }
    int w = tree.children[v][next++];
    out.vertex_block[w] = {cursor, cursor + tree.leaf_count[w]};
    if (tree.children[w].empty()) cursor += tree.leaf_count[w];
    frames.push_back({w, 0});
  }
  if (cursor != budget)
    throw std::logic_error("assign_triples: tree blocks do not cover the budget");
  return out;
}

TripleAssignment assign_triples(const CactusDecomposition& decomp,
                                const TripleSequence& seq) {
  const long long budget = decomp.budget();
  if (seq.size() < budget)
    throw std::invalid_argument("assign_triples: sequence smaller than the triple budget");
  TripleAssignment out;
  out.angle_order = seq.angle_sorted();
  out.vertex_block.assign(decomp.size(), {0, 0});
  out.cycle_ranks.assign(decomp.cycles.size(), {-1, -1});

  int cursor = 0;
  // Recursive block layout over successor components. The incoming
  // block of a vertex spans everything its components consume; a
  // leaf's singleton block is consumed by the edge that reaches it.
  auto block_size = [&](int v) {
    return decomp.leaf_count[v] + 2 * decomp.cycle_count[v];
  };
  auto lay_out = [&](auto&& self, int v) -> void {
    for (const Successor& s : decomp.successors[v]) {
      if (!s.is_cycle) {
        int w = s.id;
        out.vertex_block[w] = {cursor, cursor + static_cast<int>(block_size(w))};
        if (decomp.successors[w].empty()) {
          cursor += static_cast<int>(block_size(w));
        } else {
          self(self, w);
        }
        continue;
      }
      const CycleInfo& c = decomp.cycles[s.id];
      for (int w : c.right_cuts) {
        out.vertex_block[w] = {cursor, cursor + static_cast<int>(block_size(w))};
        if (decomp.successors[w].empty()) {
          cursor += static_cast<int>(block_size(w));
        } else {
          self(self, w);
        }
      }
      out.cycle_ranks[s.id] = {cursor, cursor + 1};
      cursor += 2;
      for (auto it = c.left_cuts.rbegin(); it != c.left_cuts.rend(); ++it) {
        int w = *it;
        out.vertex_block[w] = {cursor, cursor + static_cast<int>(block_size(w))};
        if (decomp.successors[w].empty()) {
          cursor += static_cast<int>(block_size(w));
        } else {
          self(self, w);
        }
      }
    }
  };
  out.vertex_block[decomp.root] = {0, static_cast<int>(budget)};
  lay_out(lay_out, decomp.root);
  if (cursor != budget)
    throw std::logic_error("assign_triples: cactus blocks do not cover the budget");
  return out;
}

}  // namespace gridfary
