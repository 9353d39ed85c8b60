#include "gridfary/bench.h"

#include <cmath>
#include <ostream>

namespace gridfary {

std::vector<BenchRow> bench_bounds(GenKind kind, const std::vector<int>& sizes,
                                   int trials, uint64_t seed,
                                   const GenParams& params) {
  std::vector<BenchRow> rows;
  PipelineOptions options;
  options.self_verify = false;  // bounds only; the acceptance suite verifies
  for (int n : sizes) {
    for (int trial = 0; trial < trials; ++trial) {
      SplitMix64 mix(seed ^ (static_cast<uint64_t>(n) << 32) ^
                     static_cast<uint64_t>(trial));
      const uint64_t row_seed = mix.next();
      InputGraph g = generate_random(kind, n, row_seed, params);
      PipelineResult result = run_pipeline(g, options);
      BenchRow row;
      row.kind = kind;
      row.n = n;
      row.trial = trial;
      row.seed = row_seed;
      row.t = result.t;
      row.o = result.o;
      row.delta = result.delta;
      row.d = result.d;
      row.side_x = result.drawing.bbox.width();
      row.side_y = result.drawing.bbox.height();
      row.bound = result.grid_bound;
      const long long side = std::max(row.side_x, row.side_y);
      row.slack = row.bound.num == 0
                      ? 0.0
                      : static_cast<double>(static_cast<long double>(side) *
                                            static_cast<long double>(row.bound.den) /
                                            static_cast<long double>(row.bound.num));
      rows.push_back(row);
    }
  }
  return rows;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "class,n,trial,seed,t,d,o,delta,side_x,side_y,bound_num,bound_den,slack\n";
  for (const BenchRow& r : rows) {
    out << to_string(r.kind) << ',' << r.n << ',' << r.trial << ',' << r.seed
        << ',' << r.t << ',' << r.d << ',' << r.o << ',' << r.delta << ','
        << r.side_x << ',' << r.side_y << ',' << to_string_128(r.bound.num)
        << ',' << to_string_128(r.bound.den) << ',' << r.slack << '\n';
  }
}

double fit_loglog_exponent(const std::vector<BenchRow>& rows) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (const BenchRow& r : rows) {
    const long long side = std::max(r.side_x, r.side_y);
    if (side <= 0 || r.n <= 1) continue;
    const double x = std::log(static_cast<double>(r.n));
    const double y = std::log(static_cast<double>(side));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count < 2) return 0.0;
  const double denom = count * sxx - sx * sx;
  if (denom == 0) return 0.0;
  return (count * sxy - sx * sy) / denom;
}

}  // namespace gridfary
