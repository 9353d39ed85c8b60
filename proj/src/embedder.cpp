#include "gridfary/embedder.h"

#include <numeric>
#include <stdexcept>

namespace gridfary {

namespace {

Point rotate_quadrant(Point p, int quadrant) {
  for (int i = 0; i < quadrant; ++i) p = {-p.y, p.x};
  return p;
}

}  // namespace

Drawing draw_star(const InputGraph& g, const TripleSequence& seq) {
  Drawing d;
  d.algorithm = "star";
  d.positions.assign(g.n, {});
  if (g.n == 1) {
    d.recompute_bbox();
    return d;
  }
  const int center = star_center(g);
  const int leaves = g.n - 1;
  const int per_quadrant = (leaves + 3) / 4;
  if (seq.size() < per_quadrant)
    throw std::invalid_argument("draw_star: not enough triples");

  std::vector<int> leaf_order;
  if (g.has_rotation()) {
    leaf_order = g.rotation.at(center);
  } else {
    for (int v = 0; v < g.n; ++v)
      if (v != center) leaf_order.push_back(v);
  }

  for (int i = 0; i < leaves; ++i) {
    const int quadrant = i / per_quadrant;
    const int rank = i % per_quadrant;
    const PythTriple& t = seq.by_angle_rank(rank);
    Point p = rotate_quadrant({t.x, t.y}, quadrant);
    int leaf = leaf_order[i];
    d.positions[leaf] = p;
    d.edges.push_back({center, leaf, p.x, p.y, t.ell});
  }
  d.triples_used = per_quadrant;
  d.recompute_bbox();
  return d;
}

Drawing draw_tree(const RootedTree& tree, const TripleAssignment& assignment) {
  Drawing d;
  d.algorithm = "tree";
  d.positions.assign(tree.size(), {});
  auto place = [&](auto&& self, int v) -> void {
    for (int w : tree.children[v]) {
      const PythTriple& t = assignment.first_of(w);
      d.positions[w] = d.positions[v] + Point{t.x, t.y};
      d.edges.push_back({v, w, t.x, t.y, t.ell});
      self(self, w);
    }
  };
  place(place, tree.root);
  d.triples_used = tree.size() == 1 ? 0 : tree.leaves();
  d.recompute_bbox();
  return d;
}

CanonicalCycleLayout draw_cycle_canonical(int left_edges, int right_edges,
                                          const PythTriple& flat,
                                          const PythTriple& steep) {
  if (slope_compare(flat, steep) != std::strong_ordering::less)
    throw std::logic_error("draw_cycle_canonical: triples not angle-ordered");
  const int i = left_edges;
  const int j = right_edges;
  if (i + j < 3 || (i != j && i != j + 1))
    throw std::logic_error("draw_cycle_canonical: invalid path lengths");

  CanonicalCycleLayout out;
  const Point f{flat.x, flat.y};
  const Point s{steep.x, steep.y};
  auto push = [](std::vector<Point>& path, std::vector<long long>& lengths,
                 Point step, long long len) {
    path.push_back(path.back() + step);
    lengths.push_back(len);
  };
  out.left.push_back({0, 0});
  out.right.push_back({0, 0});

  if (i == j) {
    for (int k = 1; k < j; ++k) push(out.right, out.right_lengths, f, flat.ell);
    push(out.right, out.right_lengths, s, steep.ell);
    push(out.left, out.left_lengths, s, steep.ell);
    for (int k = 2; k <= i; ++k) push(out.left, out.left_lengths, f, flat.ell);
  } else if (j > 1) {  // i == j + 1, odd cycle of length >= 5
    for (int k = 1; k < j; ++k) push(out.right, out.right_lengths, f, flat.ell);
    push(out.right, out.right_lengths, {2 * s.x, 2 * s.y}, 2 * steep.ell);
    push(out.left, out.left_lengths, s, steep.ell);
    push(out.left, out.left_lengths, s, steep.ell);
    for (int k = 3; k <= i; ++k) push(out.left, out.left_lengths, f, flat.ell);
  } else {  // i == 2, j == 1: triangle with one horizontal edge
    const long long common = std::lcm(steep.y, flat.y);
    const long long scale_left = common / steep.y;
    const long long scale_right = common / flat.y;
    Point apex{scale_left * s.x, scale_left * s.y};
    Point terminal{scale_right * f.x, scale_right * f.y};
    push(out.left, out.left_lengths, apex, scale_left * steep.ell);
    push(out.left, out.left_lengths, terminal - apex, terminal.x - apex.x);
    push(out.right, out.right_lengths, terminal, scale_right * flat.ell);
  }
  if (!(out.left.back() == out.right.back()))
    throw std::logic_error("draw_cycle_canonical: paths do not meet");
  return out;
}

Drawing draw_cactus(const CactusDecomposition& decomp,
                    const TripleAssignment& assignment) {
  Drawing d;
  d.algorithm = "cactus";
  d.positions.assign(decomp.size(), {});
  auto place = [&](auto&& self, int v) -> void {
    for (const Successor& s : decomp.successors[v]) {
      if (!s.is_cycle) {
        int w = s.id;
        const PythTriple& t = assignment.first_of(w);
        d.positions[w] = d.positions[v] + Point{t.x, t.y};
        d.edges.push_back({v, w, t.x, t.y, t.ell});
        self(self, w);
        continue;
      }
      const CycleInfo& c = decomp.cycles[s.id];
      auto [flat_rank, steep_rank] = assignment.cycle_ranks[s.id];
      const PythTriple& flat = assignment.angle_order[flat_rank];
      const PythTriple& steep = assignment.angle_order[steep_rank];
      CanonicalCycleLayout layout =
          draw_cycle_canonical(c.left_edges(), c.right_edges(), flat, steep);
      const Point base = d.positions[v];
      auto lay_path = [&](const std::vector<int>& path,
                          const std::vector<Point>& pts,
                          const std::vector<long long>& lengths) {
        for (size_t pos = 1; pos < path.size(); ++pos) {
          d.positions[path[pos]] = base + pts[pos];
          Point delta = pts[pos] - pts[pos - 1];
          d.edges.push_back({path[pos - 1], path[pos], delta.x, delta.y,
                             lengths[pos - 1]});
        }
      };
      lay_path(c.right_path, layout.right, layout.right_lengths);
      lay_path(c.left_path, layout.left, layout.left_lengths);
      for (int w : c.right_cuts) self(self, w);
      for (int w : c.left_cuts) self(self, w);
    }
  };
  place(place, decomp.root);
  d.triples_used = decomp.budget();
  d.recompute_bbox();
  return d;
}

}  // namespace gridfary
