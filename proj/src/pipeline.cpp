#include "gridfary/pipeline.h"

#include <algorithm>
#include <cstdlib>

#include "gridfary/embedder.h"

namespace gridfary {

int max_coord_bits_from_env() {
  const char* raw = std::getenv("GRIDFARY_MAX_COORD_BITS");
  if (!raw) return 62;
  int bits = std::atoi(raw);
  return std::clamp(bits, 16, 62);
}

namespace {

void refuse_if_oversized(const BigRatio& bound, int max_bits) {
  const int needed = bit_width_128(bound.ceil_value());
  if (needed > max_bits) throw OverflowRefusal(needed, max_bits);
}

BigRatio star_bound(int n) {
  return {static_cast<uint128>(kPi2Num) * (n + 2) + static_cast<uint128>(3) * kPi2Den,
          static_cast<uint128>(3) * kPi2Den};
}

BigRatio tree_bound(const RootedTree& tree) {
  return {static_cast<uint128>(2) * kPi2Num * tree.leaves() * tree.height(),
          static_cast<uint128>(3) * kPi2Den};
}

BigRatio cactus_bound(const CactusDecomposition& decomp) {
  const uint128 k = decomp.budget();
  const uint128 lin_den = static_cast<uint128>(3) * kPi2Den;
  const uint128 lin_num = static_cast<uint128>(2) * kPi2Num *
                          (decomp.root_height() + decomp.cycles_total()) * k;
  const uint128 quad_num = static_cast<uint128>(2) * decomp.triangles_total() *
                           (static_cast<uint128>(kPi2Num) * k) *
                           (static_cast<uint128>(kPi2Num) * k);
  return {lin_num * lin_den + quad_num, lin_den * lin_den};
}

}  // namespace

PipelineResult run_pipeline(const InputGraph& g, const PipelineOptions& options) {
  PipelineResult result;
  result.cls = classify(g);
  if (result.cls == GraphClass::Unsupported)
    throw UnsupportedGraph("input is not a star, tree or cactus");

  std::string algorithm = options.algorithm;
  if (algorithm == "auto") algorithm = to_string(result.cls);
  if (algorithm == "star" && result.cls != GraphClass::Star)
    throw GraphError("star algorithm requires a star input");
  if (algorithm == "tree" && result.cls == GraphClass::Cactus)
    throw GraphError("tree algorithm cannot draw graphs with cycles");
  result.algorithm = algorithm;

  if (algorithm == "star") {
    result.t = g.n == 1 ? 0 : g.n - 1;
    result.grid_bound = star_bound(g.n);
    refuse_if_oversized(result.grid_bound, options.max_coord_bits);
    auto seq = first_primitive_triples(g.n == 1 ? 0 : (g.n + 2) / 4);
    result.drawing = draw_star(g, seq);
  } else if (algorithm == "tree") {
    RootedTree tree = build_rooted_tree(g);
    result.t = tree.size() == 1 ? 0 : tree.leaves();
    result.d = tree.height();
    result.grid_bound = tree_bound(tree);
    refuse_if_oversized(result.grid_bound, options.max_coord_bits);
    auto seq = first_primitive_triples(static_cast<int>(
        tree.size() == 1 ? 0 : tree.leaves()));
    result.drawing = draw_tree(tree, assign_triples(tree, seq));
  } else {
    CactusDecomposition decomp = build_cactus_decomposition(g);
    result.t = decomp.leaves();
    result.o = decomp.cycles_total();
    result.delta = decomp.triangles_total();
    result.d = decomp.root_height();
    result.grid_bound = cactus_bound(decomp);
    refuse_if_oversized(result.grid_bound, options.max_coord_bits);
    auto seq = first_primitive_triples(static_cast<int>(decomp.budget()));
    result.drawing = draw_cactus(decomp, assign_triples(decomp, seq));
  }

  if (options.self_verify) {
    result.report = verify_drawing(result.drawing, &g, result.algorithm);
  }
  return result;
}

}  // namespace gridfary
