#include <doctest.h>

#include "gridfary/embedder.h"
#include "gridfary/generate.h"
#include "gridfary/pipeline.h"
#include "gridfary/verifier.h"

using namespace gridfary;

namespace {

Drawing make_drawing(std::vector<Point> positions,
                     std::vector<std::array<long long, 3>> edges) {
  Drawing d;
  d.positions = std::move(positions);
  for (auto [u, v, len] : edges) {
    EdgeRecord rec;
    rec.u = static_cast<int>(u);
    rec.v = static_cast<int>(v);
    rec.length = len;
    rec.dx = d.positions[rec.v].x - d.positions[rec.u].x;
    rec.dy = d.positions[rec.v].y - d.positions[rec.u].y;
    d.edges.push_back(rec);
  }
  d.recompute_bbox();
  return d;
}

}  // namespace

TEST_CASE("integrality accepts exact edges and flags the rest") {
  Drawing good = make_drawing({{0, 0}, {3, 4}, {16, 12}},
                              {{0, 1, 5}, {0, 2, 20}});
  CHECK(check_integrality(good).empty());

  Drawing bad = make_drawing({{0, 0}, {1, 1}}, {{0, 1, 1}});
  auto violations = check_integrality(bad);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == ViolationKind::NonIntegerLength);

  Drawing wrong_len = make_drawing({{0, 0}, {3, 4}}, {{0, 1, 6}});
  CHECK(check_integrality(wrong_len).size() == 1);
}

TEST_CASE("planarity flags a proper crossing") {
  Drawing d = make_drawing({{0, 0}, {2, 0}, {1, -1}, {1, 1}},
                           {{0, 1, 2}, {2, 3, 2}});
  auto violations = check_planarity(d);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == ViolationKind::Crossing);
}

TEST_CASE("planarity flags collinear overlap at a shared endpoint") {
  Drawing d = make_drawing({{0, 0}, {3, 4}, {6, 8}}, {{0, 1, 5}, {0, 2, 10}});
  auto violations = check_planarity(d);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == ViolationKind::CollinearOverlap);
}

TEST_CASE("planarity accepts opposite collinear edges and touching is flagged") {
  Drawing opposite = make_drawing({{0, 0}, {3, 4}, {-3, -4}},
                                  {{0, 1, 5}, {0, 2, 5}});
  CHECK(check_planarity(opposite).empty());

  // Endpoint of one edge in the interior of another, no shared vertex.
  Drawing touch = make_drawing({{0, 0}, {4, 0}, {2, 0}, {2, 3}},
                               {{0, 1, 4}, {2, 3, 3}});
  auto violations = check_planarity(touch);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == ViolationKind::Crossing);
}

TEST_CASE("grid bound flags an inflated drawing") {
  InputGraph g = generate_random(GenKind::Star, 9, 0);
  auto seq = first_primitive_triples(2);
  Drawing d = draw_star(g, seq);
  CHECK(check_bounds_star(d, 9).empty());
  for (Point& p : d.positions) {
    p.x *= 1000;
    p.y *= 1000;
  }
  d.recompute_bbox();
  auto violations = check_bounds_star(d, 9);
  bool saw_grid = false;
  for (const auto& v : violations) {
    if (v.kind == ViolationKind::GridBound) {
      saw_grid = true;
      CHECK_FALSE(v.marginal);
    }
  }
  CHECK(saw_grid);
}

TEST_CASE("budget mismatch is reported") {
  InputGraph g = generate_random(GenKind::Star, 9, 0);
  Drawing d = draw_star(g, first_primitive_triples(2));
  d.triples_used = 7;
  auto violations = check_bounds_star(d, 9);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == ViolationKind::BudgetMismatch);
}

TEST_CASE("distance and cone checks pass on pipeline trees and catch tampering") {
  InputGraph g = generate_random(GenKind::Tree, 60, 3);
  RootedTree tree = build_rooted_tree(g);
  auto assignment = assign_triples(tree, first_primitive_triples(tree.leaves()));
  Drawing d = draw_tree(tree, assignment);
  CHECK(check_bounds_tree(d, tree, assignment).empty());

  // Drag one deep vertex far away: distance, cone or both must trip.
  Drawing tampered = d;
  int victim = -1;
  for (int v = 0; v < tree.size(); ++v) {
    if (tree.parent[v] != -1 && tree.children[v].empty()) victim = v;
  }
  REQUIRE(victim >= 0);
  tampered.positions[victim].x += 1 << 20;
  tampered.recompute_bbox();
  CHECK_FALSE(check_bounds_tree(tampered, tree, assignment).empty());
}

TEST_CASE("full verification needs a matching edge set") {
  InputGraph g = generate_random(GenKind::Path, 5, 0);
  PipelineResult result = run_pipeline(g);
  Drawing d = result.drawing;
  d.edges.pop_back();
  CHECK_THROWS_AS(verify_drawing(d, &g, "tree"), GraphError);
}

TEST_CASE("verify_drawing full pass on each profile") {
  InputGraph star = generate_random(GenKind::Star, 13, 0);
  CHECK(verify_drawing(run_pipeline(star).drawing, &star, "auto").pass());

  InputGraph tree = generate_random(GenKind::Tree, 40, 11);
  CHECK(verify_drawing(run_pipeline(tree).drawing, &tree, "auto").pass());

  GenParams params;
  params.triangle_frac = 0.5;
  InputGraph cactus = generate_random(GenKind::Cactus, 40, 11, params);
  CHECK(verify_drawing(run_pipeline(cactus).drawing, &cactus, "auto").pass());
}

TEST_CASE("report serialization carries the verdict") {
  InputGraph g = generate_random(GenKind::Star, 9, 0);
  CertReport report = verify_drawing(run_pipeline(g).drawing, &g, "star");
  auto j = report_to_json(report);
  CHECK(j["pass"] == true);
  CHECK(report_to_table(report).find("PASS") == 0);
}
