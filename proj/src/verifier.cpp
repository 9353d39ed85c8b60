#include "gridfary/verifier.h"

#include <algorithm>
#include <set>
#include <sstream>

namespace gridfary {

namespace {

constexpr long long kMarginalScale = 1000000000LL;  // 1e9

std::string point_str(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

// Exact test a <= num / den for nonnegative integers (linear bound).
bool le_ratio(uint128 a, uint128 num, uint128 den) {
  return BigUint::cmp(BigUint::from(a) * BigUint::from(den),
                      BigUint::from(num)) <= 0;
}

// Exceeded by a relative margin below 1e-9?
bool is_marginal_linear(uint128 a, uint128 num, uint128 den) {
  BigUint lhs = BigUint::from(a) * BigUint::from(den) * BigUint::from(kMarginalScale);
  BigUint rhs = BigUint::from(num) * BigUint::from(kMarginalScale + 1);
  return BigUint::cmp(lhs, rhs) <= 0;
}

// Exact test dist2 <= (num / den)^2.
bool le_ratio_squared(uint128 dist2, uint128 num, uint128 den) {
  const int lb = bit_width_128(dist2) + 2 * bit_width_128(den);
  const int rb = 2 * bit_width_128(num);
  if (lb <= 126 && rb <= 126) {
    return dist2 * den * den <= num * num;
  }
  BigUint lhs = BigUint::from(dist2) * BigUint::from(den) * BigUint::from(den);
  BigUint rhs = BigUint::from(num) * BigUint::from(num);
  return BigUint::cmp(lhs, rhs) <= 0;
}

bool is_marginal_squared(uint128 dist2, uint128 num, uint128 den) {
  // dist2 * den^2 <= num^2 * (1 + 1e-9)^2 is implied by
  // dist2 * den^2 * 1e9 <= num^2 * (1e9 + 2).
  BigUint lhs = BigUint::from(dist2) * BigUint::from(den) * BigUint::from(den) *
                BigUint::from(kMarginalScale);
  BigUint rhs = BigUint::from(num) * BigUint::from(num) *
                BigUint::from(kMarginalScale + 2);
  return BigUint::cmp(lhs, rhs) <= 0;
}

double ratio_approx(uint128 a, uint128 num, uint128 den) {
  if (num == 0) return a == 0 ? 0.0 : 1e300;
  return static_cast<double>(static_cast<long double>(a) *
                             static_cast<long double>(den) /
                             static_cast<long double>(num));
}

struct SharedEndpoint {
  int vertex;      // shared vertex id
  Point a, b;      // the two far endpoints
  Point base;      // position of the shared vertex
};

std::optional<SharedEndpoint> shared_endpoint(const Drawing& d,
                                              const EdgeRecord& e1,
                                              const EdgeRecord& e2) {
  int s = -1, a = -1, b = -1;
  if (e1.u == e2.u) s = e1.u, a = e1.v, b = e2.v;
  else if (e1.u == e2.v) s = e1.u, a = e1.v, b = e2.u;
  else if (e1.v == e2.u) s = e1.v, a = e1.u, b = e2.v;
  else if (e1.v == e2.v) s = e1.v, a = e1.u, b = e2.u;
  if (s < 0) return std::nullopt;
  return SharedEndpoint{s, d.positions[a], d.positions[b], d.positions[s]};
}

}  // namespace

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NonIntegerLength: return "NonIntegerLength";
    case ViolationKind::Crossing: return "Crossing";
    case ViolationKind::CollinearOverlap: return "CollinearOverlap";
    case ViolationKind::ConeBreach: return "ConeBreach";
    case ViolationKind::DistanceBound: return "DistanceBound";
    case ViolationKind::GridBound: return "GridBound";
    case ViolationKind::BudgetMismatch: return "BudgetMismatch";
  }
  return "?";
}

std::vector<Violation> check_integrality(const Drawing& d) {
  std::vector<Violation> out;
  for (size_t i = 0; i < d.edges.size(); ++i) {
    const EdgeRecord& e = d.edges[i];
    const Point pu = d.positions[e.u];
    const Point pv = d.positions[e.v];
    const long long dx = pv.x - pu.x;
    const long long dy = pv.y - pu.y;
    if (dx != e.dx || dy != e.dy) {
      out.push_back({ViolationKind::NonIntegerLength,
                     "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                         ": recorded displacement does not match positions",
                     {e.u, e.v}});
      continue;
    }
    const uint128 sq = static_cast<uint128>(static_cast<int128>(dx) * dx) +
                       static_cast<uint128>(static_cast<int128>(dy) * dy);
    uint64_t root = 0;
    const bool square = is_perfect_square(sq, &root);
    if (!square || e.length <= 0 ||
        static_cast<uint64_t>(e.length) != root) {
      out.push_back({ViolationKind::NonIntegerLength,
                     "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                         ": dx^2+dy^2 = " + to_string_128(static_cast<uint128>(sq)) +
                         " is not length^2 for recorded length " +
                         std::to_string(e.length),
                     {e.u, e.v, e.length}});
    }
  }
  return out;
}

std::vector<Violation> check_planarity(const Drawing& d, long long* pair_tests) {
  std::vector<Violation> out;
  long long tests = 0;
  const auto& edges = d.edges;
  for (size_t i = 0; i < edges.size(); ++i) {
    const Point a1 = d.positions[edges[i].u];
    const Point a2 = d.positions[edges[i].v];
    for (size_t j = i + 1; j < edges.size(); ++j) {
      ++tests;
      const Point b1 = d.positions[edges[j].u];
      const Point b2 = d.positions[edges[j].v];
      if (auto shared = shared_endpoint(d, edges[i], edges[j])) {
        const Point da = shared->a - shared->base;
        const Point db = shared->b - shared->base;
        const int128 cr = cross_128(da.x, da.y, db.x, db.y);
        const int128 dot = static_cast<int128>(da.x) * db.x +
                           static_cast<int128>(da.y) * db.y;
        if (cr == 0 && dot > 0) {
          out.push_back({ViolationKind::CollinearOverlap,
                         "edges at vertex " + std::to_string(shared->vertex) +
                             " leave along the same direction: " +
                             point_str(da) + " and " + point_str(db),
                         {shared->vertex, edges[i].u, edges[i].v, edges[j].u,
                          edges[j].v}});
        }
        continue;
      }
      const int d1 = orient(a1, a2, b1);
      const int d2 = orient(a1, a2, b2);
      const int d3 = orient(b1, b2, a1);
      const int d4 = orient(b1, b2, a2);
      bool hit = false;
      if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
          ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
        hit = true;  // proper crossing
      } else if ((d1 == 0 && on_segment(a1, a2, b1)) ||
                 (d2 == 0 && on_segment(a1, a2, b2)) ||
                 (d3 == 0 && on_segment(b1, b2, a1)) ||
                 (d4 == 0 && on_segment(b1, b2, a2))) {
        hit = true;  // touching without a shared vertex
      }
      if (hit) {
        out.push_back({ViolationKind::Crossing,
                       "edges " + std::to_string(edges[i].u) + "-" +
                           std::to_string(edges[i].v) + " and " +
                           std::to_string(edges[j].u) + "-" +
                           std::to_string(edges[j].v) +
                           " intersect; orientation signs " +
                           std::to_string(d1) + "," + std::to_string(d2) + "," +
                           std::to_string(d3) + "," + std::to_string(d4),
                       {edges[i].u, edges[i].v, edges[j].u, edges[j].v, d1, d2,
                        d3, d4}});
      }
    }
  }
  if (pair_tests) *pair_tests += tests;
  return out;
}

namespace {

void check_grid_extent(const Drawing& d, uint128 num, uint128 den,
                       std::vector<Violation>& out, CertReport* report) {
  const uint128 extent = static_cast<uint128>(
      std::max(d.bbox.width(), d.bbox.height()));
  if (report) {
    report->grid_bound = BigRatio{num, den};
    report->grid_slack = ratio_approx(extent, num, den);
  }
  if (!le_ratio(extent, num, den)) {
    Violation v{ViolationKind::GridBound,
                "bounding box extent " + to_string_128(extent) +
                    " exceeds bound " + BigRatio{num, den}.str(),
                {static_cast<long long>(d.bbox.width()),
                 static_cast<long long>(d.bbox.height())}};
    v.marginal = is_marginal_linear(extent, num, den);
    out.push_back(v);
  }
}

void check_budget(const Drawing& d, long long expected,
                  std::vector<Violation>& out) {
  if (d.triples_used != expected) {
    out.push_back({ViolationKind::BudgetMismatch,
                   "drawing reports " + std::to_string(d.triples_used) +
                       " triples, expected " + std::to_string(expected),
                   {d.triples_used, expected}});
  }
}

// Weak cone containment of vector w between low and high slopes.
bool inside_cone(const PythTriple& low, const PythTriple& high, Point w,
                 long long* contacts) {
  if (w.x == 0 && w.y == 0) return true;
  const int128 lo = cross_128(low.x, low.y, w.x, w.y);
  const int128 hi = cross_128(w.x, w.y, high.x, high.y);
  if (lo < 0 || hi < 0) return false;
  if (contacts && (lo == 0 || hi == 0)) ++*contacts;
  return true;
}

}  // namespace

std::vector<Violation> check_bounds_star(const Drawing& d, int n,
                                         CertReport* report) {
  std::vector<Violation> out;
  // extent <= (pi^2 (n+2) + 3) / 3
  const uint128 num = static_cast<uint128>(kPi2Num) * (n + 2) +
                      static_cast<uint128>(3) * kPi2Den;
  const uint128 den = static_cast<uint128>(3) * kPi2Den;
  check_grid_extent(d, num, den, out, report);
  check_budget(d, n == 1 ? 0 : (n + 2) / 4, out);
  return out;
}

std::vector<Violation> check_bounds_tree(const Drawing& d, const RootedTree& tree,
                                         const TripleAssignment& assignment,
                                         CertReport* report) {
  std::vector<Violation> out;
  const long long t = tree.size() == 1 ? 0 : tree.leaves();
  const long long depth = tree.height();
  const uint128 den = static_cast<uint128>(3) * kPi2Den;
  check_grid_extent(d,
                    static_cast<uint128>(2) * kPi2Num * tree.leaves() * depth,
                    den, out, report);
  check_budget(d, t, out);

  // Per-subtree distance and cone checks.
  std::vector<std::vector<int>> members(tree.size());
  std::vector<int> order;
  order.reserve(tree.size());
  {
    std::vector<int> stack{tree.root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int w : tree.children[v]) stack.push_back(w);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    members[v].push_back(v);
    for (int w : tree.children[v]) {
      members[v].insert(members[v].end(), members[w].begin(), members[w].end());
    }
  }
  for (int v = 0; v < tree.size(); ++v) {
    const uint128 num =
        static_cast<uint128>(tree.depth[v]) * 2 * kPi2Num * tree.leaves();
    for (int u : members[v]) {
      const uint128 sq = squared_distance(d.positions[v], d.positions[u]);
      if (!le_ratio_squared(sq, num, den)) {
        Violation viol{ViolationKind::DistanceBound,
                       "vertex " + std::to_string(u) + " at squared distance " +
                           to_string_128(sq) + " from subtree root " +
                           std::to_string(v) + " exceeds bound " +
                           BigRatio{num, den}.str(),
                       {v, u}};
        viol.marginal = is_marginal_squared(sq, num, den);
        out.push_back(viol);
      }
    }
    if (!assignment.has_block(v)) continue;
    auto [lo, hi] = assignment.vertex_block[v];
    const PythTriple& low = assignment.angle_order[lo];
    const PythTriple& high = assignment.angle_order[hi - 1];
    long long contacts = 0;
    for (int u : members[v]) {
      Point w = d.positions[u] - d.positions[v];
      if (!inside_cone(low, high, w, &contacts)) {
        out.push_back({ViolationKind::ConeBreach,
                       "vertex " + std::to_string(u) + " at offset " +
                           point_str(w) + " leaves the cone of vertex " +
                           std::to_string(v),
                       {v, u, w.x, w.y}});
      }
    }
    if (report) report->boundary_contacts += contacts;
  }
  return out;
}

std::vector<Violation> check_bounds_cactus(const Drawing& d,
                                           const CactusDecomposition& decomp,
                                           const TripleAssignment& assignment,
                                           CertReport* report) {
  std::vector<Violation> out;
  const long long budget = decomp.budget();
  const long long t2o = budget;
  const uint128 lin_den = static_cast<uint128>(3) * kPi2Den;
  const uint128 sq_den = lin_den * lin_den;

  // Grid bound: (2 pi^2/3)(d + o)(t + 2o) + delta * 2 ((pi^2/3)(t + 2o))^2.
  {
    const uint128 lin_num = static_cast<uint128>(2) * kPi2Num *
                            (decomp.root_height() + decomp.cycles_total()) * t2o;
    const uint128 quad_num = static_cast<uint128>(2) *
                             decomp.triangles_total() *
                             (static_cast<uint128>(kPi2Num) * t2o) *
                             (static_cast<uint128>(kPi2Num) * t2o);
    const uint128 num = lin_num * lin_den + quad_num;
    check_grid_extent(d, num, sq_den, out, report);
  }
  check_budget(d, budget, out);

  // Subcactus member lists via the successor structure.
  std::vector<std::vector<int>> members(decomp.size());
  {
    std::vector<int> order;  // vertices with components, by level, deepest first
    for (int v = 0; v < decomp.size(); ++v) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return decomp.level[a] != decomp.level[b] ? decomp.level[a] > decomp.level[b]
                                                : a < b;
    });
    for (int v : order) {
      members[v].push_back(v);
      for (const Successor& s : decomp.successors[v]) {
        if (!s.is_cycle) {
          const auto& sub = members[s.id];
          members[v].insert(members[v].end(), sub.begin(), sub.end());
          continue;
        }
        const CycleInfo& c = decomp.cycles[s.id];
        for (size_t pos = 1; pos < c.right_path.size(); ++pos) {
          int w = c.right_path[pos];
          if (decomp.successors[w].empty()) members[v].push_back(w);
          else members[v].insert(members[v].end(), members[w].begin(), members[w].end());
        }
        for (size_t pos = 1; pos + 1 < c.left_path.size(); ++pos) {
          int w = c.left_path[pos];
          if (decomp.successors[w].empty()) members[v].push_back(w);
          else members[v].insert(members[v].end(), members[w].begin(), members[w].end());
        }
      }
    }
  }

  // Invariant: distance from v to anything in its subcactus is at most
  // (h + O)(2 pi^2/3) K + Delta 2((pi^2/3) K)^2, checked for the root,
  // cut vertices and leaves (every vertex owning a block, plus the root).
  for (int v = 0; v < decomp.size(); ++v) {
    const bool checked = v == decomp.root || assignment.has_block(v);
    if (!checked) continue;
    const uint128 lin_num = static_cast<uint128>(2) * kPi2Num *
                            (decomp.height[v] + decomp.cycle_count[v]) * t2o;
    const uint128 quad_num = static_cast<uint128>(2) * decomp.triangle_count[v] *
                             (static_cast<uint128>(kPi2Num) * t2o) *
                             (static_cast<uint128>(kPi2Num) * t2o);
    const uint128 num = lin_num * lin_den + quad_num;
    for (int u : members[v]) {
      const uint128 sq = squared_distance(d.positions[v], d.positions[u]);
      if (!le_ratio_squared(sq, num, sq_den)) {
        Violation viol{ViolationKind::DistanceBound,
                       "vertex " + std::to_string(u) + " at squared distance " +
                           to_string_128(sq) + " from component root " +
                           std::to_string(v) + " exceeds bound " +
                           BigRatio{num, sq_den}.str(),
                       {v, u}};
        viol.marginal = is_marginal_squared(sq, num, sq_den);
        out.push_back(viol);
      }
    }
    if (!assignment.has_block(v)) continue;
    auto [lo, hi] = assignment.vertex_block[v];
    const PythTriple& low = assignment.angle_order[lo];
    const PythTriple& high = assignment.angle_order[hi - 1];
    long long contacts = 0;
    for (int u : members[v]) {
      Point w = d.positions[u] - d.positions[v];
      if (!inside_cone(low, high, w, &contacts)) {
        out.push_back({ViolationKind::ConeBreach,
                       "vertex " + std::to_string(u) + " at offset " +
                           point_str(w) + " leaves the cone of vertex " +
                           std::to_string(v),
                       {v, u, w.x, w.y}});
      }
    }
    if (report) report->boundary_contacts += contacts;
  }

  // Per-cycle canonical-drawing properties: cone between the two
  // reserved slopes, and the distance cap from the origin.
  for (size_t ci = 0; ci < decomp.cycles.size(); ++ci) {
    const CycleInfo& c = decomp.cycles[ci];
    auto [flat_rank, steep_rank] = assignment.cycle_ranks[ci];
    const PythTriple& flat = assignment.angle_order[flat_rank];
    const PythTriple& steep = assignment.angle_order[steep_rank];
    const Point base = d.positions[c.origin];
    long long contacts = 0;
    auto check_vertex = [&](int u) {
      Point w = d.positions[u] - base;
      if (!inside_cone(flat, steep, w, &contacts)) {
        out.push_back({ViolationKind::ConeBreach,
                       "cycle vertex " + std::to_string(u) + " at offset " +
                           point_str(w) + " leaves the slope wedge of cycle at " +
                           std::to_string(c.origin),
                       {c.origin, u, w.x, w.y}});
      }
      uint128 num;
      uint128 den;
      if (c.length() >= 4) {
        num = static_cast<uint128>((c.length() + 1) / 2) * 2 * kPi2Num * t2o;
        den = lin_den;
      } else {
        num = static_cast<uint128>(2) * (static_cast<uint128>(kPi2Num) * t2o) *
              (static_cast<uint128>(kPi2Num) * t2o);
        den = sq_den;
      }
      const uint128 sq = squared_distance(base, d.positions[u]);
      if (!le_ratio_squared(sq, num, den)) {
        Violation viol{ViolationKind::DistanceBound,
                       "cycle vertex " + std::to_string(u) +
                           " exceeds the canonical cycle distance cap at origin " +
                           std::to_string(c.origin),
                       {c.origin, u}};
        viol.marginal = is_marginal_squared(sq, num, den);
        out.push_back(viol);
      }
    };
    for (size_t pos = 1; pos < c.right_path.size(); ++pos)
      check_vertex(c.right_path[pos]);
    for (size_t pos = 1; pos + 1 < c.left_path.size(); ++pos)
      check_vertex(c.left_path[pos]);
    if (report) report->boundary_contacts += contacts;
  }
  return out;
}

CertReport verify_drawing(const Drawing& d, const InputGraph* graph,
                          const std::string& profile) {
  CertReport report;
  auto add = [&](std::vector<Violation> v) {
    report.violations.insert(report.violations.end(),
                             std::make_move_iterator(v.begin()),
                             std::make_move_iterator(v.end()));
  };
  add(check_integrality(d));
  add(check_planarity(d, &report.pair_tests));
  if (!graph) return report;

  if (graph->n != d.vertex_count())
    throw GraphError("verify: drawing and graph disagree on vertex count");
  std::set<std::pair<int, int>> want, have;
  for (auto [u, v] : graph->edges) want.insert(std::minmax(u, v));
  for (const EdgeRecord& e : d.edges) have.insert(std::minmax(e.u, e.v));
  if (want != have)
    throw GraphError("verify: drawing does not realize the graph's edge set");

  std::string effective = profile == "auto" ? d.algorithm : profile;
  if (effective.empty()) effective = to_string(classify(*graph));
  if (effective == "star") {
    if (classify(*graph) != GraphClass::Star)
      throw GraphError("verify: star profile on a non-star graph");
    add(check_bounds_star(d, graph->n, &report));
  } else if (effective == "tree") {
    GraphClass cls = classify(*graph);
    if (cls != GraphClass::Tree && cls != GraphClass::Star)
      throw GraphError("verify: tree profile on a non-tree graph");
    RootedTree tree = build_rooted_tree(*graph);
    TripleAssignment assignment = assign_triples(
        tree, first_primitive_triples(tree.size() == 1 ? 0 : tree.leaves()));
    add(check_bounds_tree(d, tree, assignment, &report));
  } else if (effective == "cactus") {
    GraphClass cls = classify(*graph);
    if (cls == GraphClass::Unsupported)
      throw GraphError("verify: cactus profile on an unsupported graph");
    CactusDecomposition decomp = build_cactus_decomposition(*graph);
    TripleAssignment assignment = assign_triples(
        decomp, first_primitive_triples(static_cast<int>(decomp.budget())));
    add(check_bounds_cactus(d, decomp, assignment, &report));
  } else {
    throw GraphError("verify: unknown profile '" + effective + "'");
  }
  return report;
}

nlohmann::json report_to_json(const CertReport& report) {
  nlohmann::json j;
  j["pass"] = report.pass();
  j["pair_tests"] = report.pair_tests;
  j["boundary_contacts"] = report.boundary_contacts;
  if (report.grid_bound) {
    j["grid_bound"] = report.grid_bound->str();
    j["grid_bound_approx"] = report.grid_bound->approx();
    j["grid_slack"] = report.grid_slack;
  }
  nlohmann::json categories = nlohmann::json::object();
  for (ViolationKind kind :
       {ViolationKind::NonIntegerLength, ViolationKind::Crossing,
        ViolationKind::CollinearOverlap, ViolationKind::ConeBreach,
        ViolationKind::DistanceBound, ViolationKind::GridBound,
        ViolationKind::BudgetMismatch}) {
    const int count = report.count(kind);
    categories[to_string(kind)] = {{"pass", count == 0}, {"count", count}};
  }
  j["categories"] = categories;
  auto arr = nlohmann::json::array();
  for (const Violation& v : report.violations) {
    nlohmann::json item;
    item["kind"] = to_string(v.kind);
    item["detail"] = v.detail;
    item["witness"] = v.witness;
    item["marginal"] = v.marginal;
    arr.push_back(item);
  }
  j["violations"] = arr;
  return j;
}

std::string report_to_table(const CertReport& report) {
  std::ostringstream out;
  out << (report.pass() ? "PASS" : "FAIL") << "\n";
  out << "  pair tests:        " << report.pair_tests << "\n";
  out << "  boundary contacts: " << report.boundary_contacts << "\n";
  if (report.grid_bound) {
    out << "  grid bound:        " << report.grid_bound->approx()
        << " (slack " << report.grid_slack << ")\n";
  }
  if (report.violations.empty()) {
    out << "  violations:        none\n";
  } else {
    out << "  violations:\n";
    for (const Violation& v : report.violations) {
      out << "    [" << to_string(v.kind) << (v.marginal ? ", marginal" : "")
          << "] " << v.detail << "\n";
    }
  }
  return out.str();
}

}  // namespace gridfary
