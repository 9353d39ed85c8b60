#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gridfary/bench.h"
#include "gridfary/generate.h"
#include "gridfary/pipeline.h"
#include "gridfary/pythagorean.h"
#include "gridfary/svg.h"
#include "gridfary/verifier.h"

namespace {

using namespace gridfary;

// Exit codes: 0 ok, 1 verification failure, 2 input/parse error,
// 3 unsupported graph class, 4 overflow refusal.
constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitInputError = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitOverflow = 4;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw GraphError("cannot write " + path);
  out << content;
}

int cmd_triples(int count, bool angle_sorted, const std::string& format) {
  TripleSequence seq = first_primitive_triples(count);
  std::vector<int> order(count);
  for (int i = 0; i < count; ++i) order[i] = i;
  if (angle_sorted) order = seq.angle_rank_to_index;
  if (format == "csv") {
    std::cout << "index,m,n,variant,x,y,ell\n";
    for (int pos = 0; pos < count; ++pos) {
      int i = order[pos];
      const PythTriple& t = seq.triples[i];
      const GeneratorParams& p = seq.params[i];
      std::cout << (i + 1) << ',' << p.m << ',' << p.n << ','
                << to_string(p.form) << ',' << t.x << ',' << t.y << ','
                << t.ell << '\n';
    }
  } else {
    auto arr = nlohmann::json::array();
    for (int pos = 0; pos < count; ++pos) {
      int i = order[pos];
      const PythTriple& t = seq.triples[i];
      const GeneratorParams& p = seq.params[i];
      arr.push_back({{"index", i + 1},
                     {"m", p.m},
                     {"n", p.n},
                     {"variant", to_string(p.form)},
                     {"x", t.x},
                     {"y", t.y},
                     {"ell", t.ell}});
    }
    std::cout << arr.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_draw(const std::string& input, const std::string& output,
             const std::string& svg_path, const std::string& algorithm) {
  InputGraph g = parse_graph(read_file(input));
  PipelineOptions options;
  options.algorithm = algorithm;
  PipelineResult result = run_pipeline(g, options);
  if (!result.report.pass()) {
    std::cerr << "self-verification failed:\n"
              << report_to_table(result.report);
    return kExitViolations;
  }
  write_file(output, drawing_to_json(result.drawing).dump(2) + "\n");
  if (!svg_path.empty()) {
    std::ofstream svg(svg_path);
    if (!svg) throw GraphError("cannot write " + svg_path);
    write_svg(result.drawing, svg);
  }
  std::cerr << "drew " << g.n << " vertices with algorithm "
            << result.algorithm << "; bbox " << result.drawing.bbox.width()
            << "x" << result.drawing.bbox.height() << ", "
            << result.drawing.triples_used << " triples, bound slack "
            << result.report.grid_slack << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& drawing_path, const std::string& graph_path,
               const std::string& profile, const std::string& format) {
  Drawing d = parse_drawing(read_file(drawing_path));
  std::optional<InputGraph> graph;
  if (!graph_path.empty()) graph = parse_graph(read_file(graph_path));
  CertReport report =
      verify_drawing(d, graph ? &*graph : nullptr, profile);
  if (format == "json") {
    std::cout << report_to_json(report).dump(2) << '\n';
  } else {
    std::cout << report_to_table(report);
  }
  return report.pass() ? kExitOk : kExitViolations;
}

int cmd_gen(const std::string& kind_name, int n, uint64_t seed,
            const GenParams& params, const std::string& output) {
  auto kind = gen_kind_from_string(kind_name);
  if (!kind) throw GraphError("unknown instance kind '" + kind_name + "'");
  InputGraph g = generate_random(*kind, n, seed, params);
  write_file(output, graph_to_json(g).dump(2) + "\n");
  return kExitOk;
}

int cmd_bench(const std::string& kind_name, const std::vector<int>& sizes,
              int trials, uint64_t seed, const GenParams& params,
              const std::string& output) {
  auto kind = gen_kind_from_string(kind_name);
  if (!kind) throw GraphError("unknown instance kind '" + kind_name + "'");
  auto rows = bench_bounds(*kind, sizes, trials, seed, params);
  std::ostringstream csv;
  write_bench_csv(rows, csv);
  write_file(output, csv.str());
  std::cerr << "fitted log-log exponent: " << fit_loglog_exponent(rows) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"integer-grid drawings of stars, trees and cacti with integer edge lengths"};
  app.require_subcommand(1);

  // triples
  auto* triples = app.add_subcommand("triples", "list primitive Pythagorean triples");
  int count = 10;
  bool angle_sorted = false;
  std::string triples_format = "csv";
  triples->add_option("--count", count, "how many triples")->required();
  triples->add_flag("--angle-sorted", angle_sorted, "sort by slope angle");
  triples->add_option("--format", triples_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // draw
  auto* draw = app.add_subcommand("draw", "draw a graph from json");
  std::string draw_input, draw_output = "-", draw_svg, draw_algorithm = "auto";
  draw->add_option("input", draw_input, "graph json (or - for stdin)")->required();
  draw->add_option("-o,--output", draw_output, "drawing json output (default stdout)");
  draw->add_option("--svg", draw_svg, "also write an svg rendering");
  draw->add_option("--algorithm", draw_algorithm, "auto, star, tree or cactus")
      ->check(CLI::IsMember({"auto", "star", "tree", "cactus"}));

  // verify
  auto* verify = app.add_subcommand("verify", "verify a drawing json");
  std::string verify_drawing_path, verify_graph, verify_profile = "auto";
  std::string verify_format = "table";
  verify->add_option("drawing", verify_drawing_path, "drawing json")->required();
  verify->add_option("--graph", verify_graph, "graph json for bound checks");
  verify->add_option("--profile", verify_profile, "auto, star, tree or cactus")
      ->check(CLI::IsMember({"auto", "star", "tree", "cactus"}));
  verify->add_option("--format", verify_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  std::string gen_kind = "tree", gen_output = "-";
  int gen_n = 10;
  uint64_t gen_seed = 1;
  GenParams gen_params;
  gen->add_option("--kind", gen_kind, "tree, cactus, star, path or balanced")
      ->required();
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--seed", gen_seed, "prng seed");
  gen->add_option("--depth-cap", gen_params.depth_cap, "trees: depth cap (0 = none)");
  gen->add_option("--cycles", gen_params.cycle_target,
                  "cacti: exact cycle count (-1 = stochastic)");
  gen->add_option("--cycle-prob", gen_params.cycle_prob, "cacti: cycle step chance");
  gen->add_option("--triangle-frac", gen_params.triangle_frac,
                  "cacti: chance a cycle is a triangle");
  gen->add_option("--max-cycle-len", gen_params.max_cycle_len, "cacti: longest cycle");
  gen->add_option("-o,--output", gen_output, "graph json output (default stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "measure bounding boxes vs bounds");
  std::string bench_kind = "tree", bench_output = "-";
  std::vector<int> bench_sizes{250, 500, 1000};
  int bench_trials = 5;
  uint64_t bench_seed = 1;
  GenParams bench_params;
  bench->add_option("--class", bench_kind, "tree, cactus, star, path or balanced")
      ->required();
  bench->add_option("--sizes", bench_sizes, "instance sizes")->delimiter(',');
  bench->add_option("--trials", bench_trials, "trials per size");
  bench->add_option("--seed", bench_seed, "prng seed");
  bench->add_option("--triangle-frac", bench_params.triangle_frac,
                    "cacti: chance a cycle is a triangle");
  bench->add_option("--cycle-prob", bench_params.cycle_prob, "cacti: cycle step chance");
  bench->add_option("-o,--output", bench_output, "csv output (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (triples->parsed()) return cmd_triples(count, angle_sorted, triples_format);
    if (draw->parsed())
      return cmd_draw(draw_input, draw_output, draw_svg, draw_algorithm);
    if (verify->parsed())
      return cmd_verify(verify_drawing_path, verify_graph, verify_profile,
                        verify_format);
    if (gen->parsed()) return cmd_gen(gen_kind, gen_n, gen_seed, gen_params, gen_output);
    if (bench->parsed())
      return cmd_bench(bench_kind, bench_sizes, bench_trials, bench_seed,
                       bench_params, bench_output);
  } catch (const OverflowRefusal& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOverflow;
  } catch (const UnsupportedGraph& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
