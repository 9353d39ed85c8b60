#include <doctest.h>

#include <algorithm>
#include <queue>
#include <set>

#include "gridfary/decompose.h"
#include "gridfary/generate.h"
#include "gridfary/graph.h"

using namespace gridfary;

namespace {

InputGraph cycle_graph(int n) {
  InputGraph g;
  g.n = n;
  for (int v = 0; v < n; ++v) g.edges.push_back({v, (v + 1) % n});
  return g;
}

// Independent view of the subcactus below v: remove v, everything the
// root can no longer reach (plus v itself) belongs to it.
std::vector<int> subcactus_members_oracle(const InputGraph& g, int root, int v) {
  std::vector<std::vector<int>> adj(g.n);
  for (auto [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> reach(g.n, 0);
  if (root != v) {
    std::queue<int> q;
    q.push(root);
    reach[root] = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int w : adj[x]) {
        if (w == v || reach[w]) continue;
        reach[w] = 1;
        q.push(w);
      }
    }
  }
  std::vector<int> members;
  for (int x = 0; x < g.n; ++x) {
    if (!reach[x]) members.push_back(x);
  }
  return members;
}

struct OracleStats {
  long long leaves = 0, cycles = 0, triangles = 0;
  int height = 0;
};

OracleStats subcactus_stats_oracle(const InputGraph& g, int root, int v) {
  auto members = subcactus_members_oracle(g, root, v);
  std::set<int> inside(members.begin(), members.end());
  std::vector<int> degree(g.n, 0);
  for (auto [a, b] : g.edges) {
    ++degree[a];
    ++degree[b];
  }
  OracleStats stats;
  for (int x : members) {
    if (degree[x] == 1 && x != root) ++stats.leaves;
  }
  for (const auto& comp : biconnected_components(g)) {
    if (comp.size() < 3) continue;
    bool all_in = true;
    for (int eid : comp) {
      if (!inside.count(g.edges[eid].first) || !inside.count(g.edges[eid].second))
        all_in = false;
    }
    if (all_in) {
      ++stats.cycles;
      if (comp.size() == 3) ++stats.triangles;
    }
  }
  // Height of v within the induced subgraph.
  std::vector<int> dist(g.n, -1);
  std::vector<std::vector<int>> adj(g.n);
  for (auto [a, b] : g.edges) {
    if (inside.count(a) && inside.count(b)) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }
  std::queue<int> q;
  q.push(v);
  dist[v] = 0;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    stats.height = std::max(stats.height, dist[x]);
    for (int w : adj[x]) {
      if (dist[w] == -1) {
        dist[w] = dist[x] + 1;
        q.push(w);
      }
    }
  }
  return stats;
}

}  // namespace

TEST_CASE("path rooting picks the center") {
  InputGraph g = generate_random(GenKind::Path, 3, 0);
  RootedTree tree = build_rooted_tree(g);
  CHECK(tree.root == 1);
  CHECK(tree.children[1] == std::vector<int>{0, 2});
  CHECK(tree.leaves() == 2);
  CHECK(tree.height() == 1);
}

TEST_CASE("triangle split honors the clockwise convention") {
  InputGraph g = cycle_graph(3);
  g.root = 0;
  g.rotation = {{0, {1, 2}}, {1, {2, 0}}, {2, {0, 1}}};
  CactusDecomposition d = build_cactus_decomposition(g);
  REQUIRE(d.cycles.size() == 1);
  const CycleInfo& c = d.cycles[0];
  CHECK(c.origin == 0);
  CHECK(c.left_edges() == 2);
  CHECK(c.right_edges() == 1);
  // Terminal is the origin's second clockwise neighbor, i.e. the first
  // neighbor of the counterclockwise rotation list.
  CHECK(c.terminal == 1);
  CHECK(c.left_path == std::vector<int>{0, 2, 1});
  CHECK(c.right_path == std::vector<int>{0, 1});
}

TEST_CASE("five-cycle split is 3 + 2") {
  InputGraph g = cycle_graph(5);
  g.root = 0;
  CactusDecomposition d = build_cactus_decomposition(g);
  REQUIRE(d.cycles.size() == 1);
  CHECK(d.cycles[0].left_edges() == 3);
  CHECK(d.cycles[0].right_edges() == 2);
  CHECK(d.cycles[0].terminal == d.cycles[0].left_path.back());
  CHECK(d.root_height() == 2);
  CHECK(d.leaves() == 0);
  CHECK(d.cycles_total() == 1);
  CHECK(d.budget() == 2);
}

TEST_CASE("tree blocks are contiguous in rotation order") {
  // Root 0 with child 1 (two leaves below) and leaf 4.
  InputGraph g;
  g.n = 5;
  g.edges = {{0, 1}, {1, 2}, {1, 3}, {0, 4}};
  g.root = 0;
  RootedTree tree = build_rooted_tree(g);
  CHECK(tree.leaves() == 3);
  auto assignment = assign_triples(tree, first_primitive_triples(3));
  CHECK(assignment.vertex_block[1] == std::pair<int, int>{0, 2});
  CHECK(assignment.vertex_block[2] == std::pair<int, int>{0, 1});
  CHECK(assignment.vertex_block[3] == std::pair<int, int>{1, 2});
  CHECK(assignment.vertex_block[4] == std::pair<int, int>{2, 3});
  CHECK(assignment.vertex_block[0] == std::pair<int, int>{0, 3});
}

TEST_CASE("triangle assignment reserves exactly the two cycle triples") {
  InputGraph g = cycle_graph(3);
  g.root = 0;
  CactusDecomposition d = build_cactus_decomposition(g);
  auto assignment = assign_triples(d, first_primitive_triples(2));
  CHECK(assignment.cycle_ranks[0] == std::pair<int, int>{0, 1});
  CHECK(assignment.angle_order[0] == PythTriple{4, 3, 5});
  CHECK(assignment.angle_order[1] == PythTriple{3, 4, 5});
}

TEST_CASE("decomposition stats agree with the removal oracle") {
  for (uint64_t seed : {7ULL, 8ULL, 9ULL, 10ULL}) {
    GenParams params;
    params.triangle_frac = 0.4;
    InputGraph g = generate_random(GenKind::Cactus, 60, seed, params);
    CactusDecomposition d = build_cactus_decomposition(g);
    const int root = d.root;
    for (int v = 0; v < g.n; ++v) {
      const bool checked = v == root || !d.successors[v].empty() ||
                           d.leaf_count[v] == 1;
      if (!checked) continue;
      OracleStats oracle = subcactus_stats_oracle(g, root, v);
      CHECK(d.leaf_count[v] == oracle.leaves);
      CHECK(d.cycle_count[v] == oracle.cycles);
      CHECK(d.triangle_count[v] == oracle.triangles);
      if (v == root || !d.successors[v].empty()) {
        CHECK(d.height[v] == oracle.height);
      }
    }
  }
}

TEST_CASE("budget exactness over random inputs") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    InputGraph tg = generate_random(GenKind::Tree, 40, seed);
    RootedTree tree = build_rooted_tree(tg);
    auto ta = assign_triples(tree, first_primitive_triples(tree.leaves()));
    // Every rank 0..t-1 is some leaf's singleton block.
    std::vector<char> used(tree.leaves(), 0);
    for (int v = 0; v < tree.size(); ++v) {
      if (!tree.children[v].empty() || v == tree.root) continue;
      auto [lo, hi] = ta.vertex_block[v];
      if (hi - lo == 1) used[lo] = 1;
    }
    CHECK(std::count(used.begin(), used.end(), 1) == tree.leaves());

    InputGraph cg = generate_random(GenKind::Cactus, 40, seed);
    CactusDecomposition d = build_cactus_decomposition(cg);
    CHECK_NOTHROW(assign_triples(d, first_primitive_triples(
                                        static_cast<int>(d.budget()))));
  }
}

TEST_CASE("block disjointness and angle ordering") {
  InputGraph g = generate_random(GenKind::Tree, 64, 42);
  RootedTree tree = build_rooted_tree(g);
  auto assignment = assign_triples(tree, first_primitive_triples(tree.leaves()));
  for (int v = 0; v < tree.size(); ++v) {
    const auto& kids = tree.children[v];
    for (size_t i = 1; i < kids.size(); ++i) {
      auto [alo, ahi] = assignment.vertex_block[kids[i - 1]];
      auto [blo, bhi] = assignment.vertex_block[kids[i]];
      CHECK(ahi == blo);  // contiguous
      CHECK(slope_compare(assignment.angle_order[ahi - 1],
                          assignment.angle_order[blo]) ==
            std::strong_ordering::less);
    }
  }
}

TEST_CASE("orientation is an acyclic single-source order") {
  InputGraph g = generate_random(GenKind::Cactus, 80, 5);
  CactusDecomposition d = build_cactus_decomposition(g);
  int with_parentless = 0;
  for (int v = 0; v < d.size(); ++v) {
    if (d.level[v] == 0) ++with_parentless;
    for (const Successor& s : d.successors[v]) {
      if (!s.is_cycle) CHECK(d.level[s.id] == d.level[v] + 1);
      else CHECK(d.level[d.cycles[s.id].origin] == d.level[v]);
    }
  }
  CHECK(with_parentless == 1);
}

TEST_CASE("root_and_orient dispatches by class") {
  auto tree_like = root_and_orient(generate_random(GenKind::Path, 12, 0));
  CHECK(std::holds_alternative<RootedTree>(tree_like));
  auto cactus_like = root_and_orient(cycle_graph(12));
  CHECK(std::holds_alternative<CactusDecomposition>(cactus_like));
  InputGraph k4;
  k4.n = 4;
  k4.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  CHECK_THROWS_AS(root_and_orient(k4), GraphError);
}
