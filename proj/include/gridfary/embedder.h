#ifndef GRIDFARY_EMBEDDER_H
#define GRIDFARY_EMBEDDER_H

#include "gridfary/decompose.h"
#include "gridfary/drawing.h"
#include "gridfary/graph.h"
#include "gridfary/pythagorean.h"

// Straight-line drawings on the integer grid with integer edge lengths.

namespace gridfary {

/// Star drawing: hub at the origin, leaves split into four quadrant
/// groups of ceil((n-1)/4); group q places its leaves at the
/// angle-sorted triples rotated by q * 90 degrees.
/// seq must hold at least ceil((n-1)/4) triples.
Drawing draw_star(const InputGraph& g, const TripleSequence& seq);

/// Tree drawing in the first quadrant: root at the origin, each child
/// placed at the first triple of its block, subtrees translated
/// recursively.
Drawing draw_tree(const RootedTree& tree, const TripleAssignment& assignment);

/// Canonical drawing of one cycle with the origin at (0, 0), using one
/// flat and one steep triple. Local coordinates along both paths.
struct CanonicalCycleLayout {
  std::vector<Point> left;   // positions of left_path vertices
  std::vector<Point> right;  // positions of right_path vertices
  std::vector<long long> left_lengths;
  std::vector<long long> right_lengths;
};
CanonicalCycleLayout draw_cycle_canonical(int left_edges, int right_edges,
                                          const PythTriple& flat,
                                          const PythTriple& steep);

/// Cactus drawing: child vertices as in trees, child cycles drawn
/// canonically with the two reserved triples, subcacti translated to
/// their cut vertices.
Drawing draw_cactus(const CactusDecomposition& decomp,
                    const TripleAssignment& assignment);

}  // namespace gridfary

#endif
