#ifndef GRIDFARY_BENCH_H
#define GRIDFARY_BENCH_H

#include <iosfwd>
#include <vector>

#include "gridfary/generate.h"
#include "gridfary/pipeline.h"

// Bound-measurement harness: observed bounding boxes against the
// theoretical formulas, with exact slack ratios.

namespace gridfary {

struct BenchRow {
  GenKind kind;
  int n = 0;
  int trial = 0;
  uint64_t seed = 0;
  long long t = 0, o = 0, delta = 0, d = 0;
  long long side_x = 0, side_y = 0;
  BigRatio bound;
  double slack = 0.0;  // max(side_x, side_y) / bound
};

/// One pipeline run per (size, trial); trial seeds derive from the
/// master seed, the size and the trial index, so every row is
/// individually reproducible.
std::vector<BenchRow> bench_bounds(GenKind kind, const std::vector<int>& sizes,
                                   int trials, uint64_t seed,
                                   const GenParams& params = {});

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out);

/// Least-squares slope of log(side) against log(n).
double fit_loglog_exponent(const std::vector<BenchRow>& rows);

}  // namespace gridfary

#endif
