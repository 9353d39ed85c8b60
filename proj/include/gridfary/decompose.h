#ifndef GRIDFARY_DECOMPOSE_H
#define GRIDFARY_DECOMPOSE_H

#include <utility>
#include <variant>
#include <vector>

#include "gridfary/graph.h"
#include "gridfary/pythagorean.h"

// Rooting, orientation and the statistics that drive triple assignment.

namespace gridfary {

/// Rooted tree with children in rotation order and per-subtree stats.
struct RootedTree {
  int root = 0;
  std::vector<int> parent;                 // -1 at the root
  std::vector<std::vector<int>> children;  // rotation order
  std::vector<int> leaf_count;             // leaves in the subtree (1 at leaves)
  std::vector<int> depth;                  // subtree depth (0 at leaves)

  int leaves() const { return leaf_count[root]; }
  int height() const { return depth[root]; }
  int size() const { return static_cast<int>(parent.size()); }
};

/// One cycle of a cactus, split at its origin into the two
/// origin-to-terminal paths. The left path is the longer one when the
/// cycle is odd; its first edge precedes the right path's first edge
/// in clockwise order around the origin.
struct CycleInfo {
  int origin = -1;
  int terminal = -1;
  std::vector<int> left_path;   // origin .. terminal
  std::vector<int> right_path;  // origin .. terminal

  int left_edges() const { return static_cast<int>(left_path.size()) - 1; }
  int right_edges() const { return static_cast<int>(right_path.size()) - 1; }
  int length() const { return left_edges() + right_edges(); }
  bool is_triangle() const { return length() == 3; }

  // Cut vertices owning subcacti, in path order. right_cuts are
  // interior right-path vertices; left_cuts are interior left-path
  // vertices plus the terminal when it has successors.
  std::vector<int> right_cuts;
  std::vector<int> left_cuts;

  // Directional subcactus totals over those cut vertices.
  long long leaves_right = 0, cycles_right = 0, triangles_right = 0;
  long long leaves_left = 0, cycles_left = 0, triangles_left = 0;
  // Totals for the whole cycle component (including the cycle itself).
  long long leaves_total = 0, cycles_total = 0, triangles_total = 0;
};

struct Successor {
  bool is_cycle = false;
  int id = -1;  // child vertex id, or index into cycles
  friend bool operator==(const Successor&, const Successor&) = default;
};

/// BFS-oriented cactus with per-vertex subcactus statistics. Also
/// valid for plain trees (no cycles), where it coincides with
/// RootedTree's structure.
struct CactusDecomposition {
  int root = 0;
  std::vector<int> level;   // BFS distance from the root
  std::vector<std::vector<Successor>> successors;  // rotation order
  std::vector<CycleInfo> cycles;

  // Per-vertex subcactus stats (meaningful for the root, cut vertices
  // and leaves; zero elsewhere).
  std::vector<long long> leaf_count;
  std::vector<long long> cycle_count;
  std::vector<long long> triangle_count;
  std::vector<int> height;  // eccentricity of v within its subcactus

  long long leaves() const { return leaf_count[root]; }
  long long cycles_total() const { return cycle_count[root]; }
  long long triangles_total() const { return triangle_count[root]; }
  int root_height() const { return height[root]; }
  long long budget() const { return leaves() + 2 * cycles_total(); }
  int size() const { return static_cast<int>(level.size()); }
};

/// Root choice when the input does not fix one: the vertex of minimum
/// eccentricity, smallest id on ties.
int pick_root(const InputGraph& g);

/// Requires an acyclic input.
RootedTree build_rooted_tree(const InputGraph& g);

/// Works for any star, tree or cactus input.
CactusDecomposition build_cactus_decomposition(const InputGraph& g);

/// Dispatch on the classification: trees (and stars) produce a
/// RootedTree, cacti a CactusDecomposition.
std::variant<RootedTree, CactusDecomposition> root_and_orient(const InputGraph& g);

/// Contiguous blocks of angle-sorted triples per vertex, plus the two
/// reserved ranks per cycle (flat, steep).
struct TripleAssignment {
  std::vector<PythTriple> angle_order;            // flattest first
  std::vector<std::pair<int, int>> vertex_block;  // [lo, hi) ranks; (0,0) if none
  std::vector<std::pair<int, int>> cycle_ranks;   // per cycle (flat, steep)

  bool has_block(int v) const {
    return vertex_block[v].second > vertex_block[v].first;
  }
  const PythTriple& first_of(int v) const {
    return angle_order[vertex_block[v].first];
  }
};

TripleAssignment assign_triples(const RootedTree& tree, const TripleSequence& seq);
TripleAssignment assign_triples(const CactusDecomposition& decomp,
                                const TripleSequence& seq);

}  // namespace gridfary

#endif
