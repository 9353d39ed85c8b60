#ifndef GRIDFARY_PIPELINE_H
#define GRIDFARY_PIPELINE_H

#include <optional>
#include <string>

#include "gridfary/decompose.h"
#include "gridfary/drawing.h"
#include "gridfary/graph.h"
#include "gridfary/verifier.h"

// classify -> decompose -> generate triples -> assign -> draw -> self-verify.

namespace gridfary {

/// Raised when the worst-case coordinate bound of an input does not
/// fit the configured bit budget.
class OverflowRefusal : public std::runtime_error {
 public:
  OverflowRefusal(int needed, int allowed)
      : std::runtime_error("worst-case coordinates need " +
                           std::to_string(needed) +
                           " bits, refusing above the " +
                           std::to_string(allowed) +
                           "-bit threshold (override with GRIDFARY_MAX_COORD_BITS)"),
        bits_needed(needed),
        bits_allowed(allowed) {}
  int bits_needed;
  int bits_allowed;
};

class UnsupportedGraph : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coordinate-width threshold: GRIDFARY_MAX_COORD_BITS when set
/// (clamped to [16, 62]), 62 otherwise.
int max_coord_bits_from_env();

struct PipelineOptions {
  std::string algorithm = "auto";  // auto | star | tree | cactus
  int max_coord_bits = max_coord_bits_from_env();
  bool self_verify = true;
};

struct PipelineResult {
  GraphClass cls = GraphClass::Unsupported;
  std::string algorithm;
  Drawing drawing;
  CertReport report;
  // Decomposition statistics (leaves, cycles, triangles, root height).
  long long t = 0, o = 0, delta = 0;
  long long d = 0;
  BigRatio grid_bound;
};

PipelineResult run_pipeline(const InputGraph& g, const PipelineOptions& options = {});

}  // namespace gridfary

#endif
