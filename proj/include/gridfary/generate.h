#ifndef GRIDFARY_GENERATE_H
#define GRIDFARY_GENERATE_H

#include <cstdint>
#include <optional>

#include "gridfary/graph.h"

// Deterministic pseudo-random instances for tests and benchmarks.

namespace gridfary {

/// splitmix64: state += 0x9e3779b97f4a7c15; then two xor-multiply
/// finalization rounds. Identical streams on every platform.
struct SplitMix64 {
  uint64_t state = 0;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, bound) via the 128-bit multiply-shift map.
  uint64_t below(uint64_t bound) {
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

enum class GenKind { Tree, Cactus, Star, Path, Balanced };

const char* to_string(GenKind kind);
std::optional<GenKind> gen_kind_from_string(const std::string& name);

struct GenParams {
  int depth_cap = 0;           // trees: max depth, 0 = unbounded
  long long cycle_target = -1; // cacti: exact cycle count, -1 = stochastic
  double cycle_prob = 0.45;    // cacti: chance a growth step adds a cycle
  double triangle_frac = 0.3;  // cacti: chance a new cycle is a triangle
  int max_cycle_len = 8;
};

/// Construction-time facts, recorded for cross-checking the
/// decomposition in tests.
struct GenStats {
  long long cycles = 0;
  long long triangles = 0;
  long long degree_one = 0;
};

/// Deterministic instance of the requested class. Throws GraphError on
/// infeasible parameters (e.g. a cycle target that cannot fit in n).
InputGraph generate_random(GenKind kind, int n, uint64_t seed,
                           const GenParams& params = {},
                           GenStats* stats = nullptr);

}  // namespace gridfary

#endif
