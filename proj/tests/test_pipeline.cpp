#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "gridfary/bench.h"
#include "gridfary/generate.h"
#include "gridfary/pipeline.h"
#include "gridfary/svg.h"

using namespace gridfary;

namespace {

InputGraph cycle_graph(int n) {
  InputGraph g;
  g.n = n;
  for (int v = 0; v < n; ++v) g.edges.push_back({v, (v + 1) % n});
  return g;
}

}  // namespace

TEST_CASE("pipeline on the twelve-vertex path") {
  InputGraph g = generate_random(GenKind::Path, 12, 0);
  PipelineResult result = run_pipeline(g);
  CHECK(result.cls == GraphClass::Tree);
  CHECK(result.drawing.edges.size() == 11);
  CHECK(result.report.pass());
}

TEST_CASE("pipeline on the twelve-cycle") {
  PipelineResult result = run_pipeline(cycle_graph(12));
  CHECK(result.cls == GraphClass::Cactus);
  CHECK(result.algorithm == "cactus");
  CHECK(result.t == 0);
  CHECK(result.o == 1);
  CHECK(result.report.pass());
}

TEST_CASE("pipeline rejects non-cactus inputs") {
  InputGraph k4;
  k4.n = 4;
  k4.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  CHECK_THROWS_AS(run_pipeline(k4), UnsupportedGraph);
}

TEST_CASE("algorithm override: tree pipeline on a star") {
  InputGraph star = generate_random(GenKind::Star, 9, 0);
  PipelineOptions options;
  options.algorithm = "tree";
  PipelineResult result = run_pipeline(star, options);
  CHECK(result.algorithm == "tree");
  CHECK(result.report.pass());
  options.algorithm = "star";
  InputGraph path = generate_random(GenKind::Path, 9, 0);
  CHECK_THROWS_AS(run_pipeline(path, options), GraphError);
}

TEST_CASE("overflow refusal threshold") {
  InputGraph g = generate_random(GenKind::Tree, 400, 21);
  PipelineOptions options;
  options.max_coord_bits = 10;
  CHECK_THROWS_AS(run_pipeline(g, options), OverflowRefusal);
  try {
    run_pipeline(g, options);
  } catch (const OverflowRefusal& e) {
    CHECK(e.bits_allowed == 10);
    CHECK(e.bits_needed > 10);
  }
}

TEST_CASE("drawing json round trip re-verifies") {
  GenParams params;
  params.triangle_frac = 0.5;
  InputGraph g = generate_random(GenKind::Cactus, 30, 77, params);
  PipelineResult result = run_pipeline(g);
  Drawing back = parse_drawing(drawing_to_json(result.drawing).dump());
  CHECK(back.same_geometry(result.drawing));
  CHECK(back.algorithm == result.drawing.algorithm);
  CHECK(verify_drawing(back, &g, "auto").pass());
}

TEST_CASE("svg export mentions every vertex") {
  PipelineResult result = run_pipeline(generate_random(GenKind::Star, 6, 0));
  std::ostringstream out;
  write_svg(result.drawing, out);
  std::string svg = out.str();
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("circle") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("bench rows are reproducible and within bounds") {
  auto rows = bench_bounds(GenKind::Tree, {50, 100}, 3, 99);
  CHECK(rows.size() == 6);
  for (const BenchRow& r : rows) {
    CHECK(r.slack <= 1.0);
    CHECK(r.side_x >= 0);
  }
  auto again = bench_bounds(GenKind::Tree, {50, 100}, 3, 99);
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].seed == again[i].seed);
    CHECK(rows[i].side_x == again[i].side_x);
    CHECK(rows[i].side_y == again[i].side_y);
  }
  std::ostringstream csv;
  write_bench_csv(rows, csv);
  CHECK(csv.str().find("class,n,trial,seed") == 0);

  // Star bound at n = 13: side within (pi^2 * 15 + 3) / 3, about 50.3.
  auto star_rows = bench_bounds(GenKind::Star, {13}, 1, 4);
  REQUIRE(star_rows.size() == 1);
  CHECK(star_rows[0].slack <= 1.0);
  CHECK(star_rows[0].bound.approx() == doctest::Approx(50.348).epsilon(1e-3));
  CHECK(std::max(star_rows[0].side_x, star_rows[0].side_y) <= 50);
}

TEST_CASE("loglog fit recovers a known exponent") {
  std::vector<BenchRow> rows;
  for (int n : {100, 200, 400, 800}) {
    BenchRow r;
    r.n = n;
    r.side_x = static_cast<long long>(n) * n;  // exponent 2
    r.side_y = r.side_x;
    rows.push_back(r);
  }
  CHECK(fit_loglog_exponent(rows) == doctest::Approx(2.0).epsilon(1e-9));
}
