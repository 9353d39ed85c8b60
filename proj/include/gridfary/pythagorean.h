#ifndef GRIDFARY_PYTHAGOREAN_H
#define GRIDFARY_PYTHAGOREAN_H

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridfary/exact.h"

// Generation and exact ordering of primitive Pythagorean triples.
// All comparisons are integer-exact; no floating point in this module.

namespace gridfary {

/// Which leg receives the square-difference term. Standard maps the
/// generator pair (m, n) to (m^2-n^2, 2mn, m^2+n^2); Mirrored swaps
/// the two legs.
enum class TripleForm : uint8_t { Standard, Mirrored };

const char* to_string(TripleForm form);

/// Integer triple (x, y, ell) with x^2 + y^2 = ell^2, all positive.
/// x is the horizontal leg, y the vertical leg, ell the hypotenuse.
struct PythTriple {
  long long x = 0;
  long long y = 0;
  long long ell = 0;
  friend bool operator==(const PythTriple&, const PythTriple&) = default;
};

struct GeneratorParams {
  long long m = 0;
  long long n = 0;
  TripleForm form = TripleForm::Standard;
  friend bool operator==(const GeneratorParams&, const GeneratorParams&) = default;
};

/// Evaluate the generator at (m, n). Requires m > n > 0; the result
/// may be non-primitive (e.g. (3, 1) -> (8, 6, 10)).
PythTriple euclid_triple(const GeneratorParams& params);

/// gcd(x, y, ell) == 1 (equivalently gcd(x, y) == 1).
bool is_primitive(const PythTriple& t);

/// Compare the slope angles arctan(y/x) exactly via the sign of the
/// integer cross product y_a*x_b - y_b*x_a. Distinct primitive triples
/// never compare equal.
std::strong_ordering slope_compare(const PythTriple& a, const PythTriple& b);

/// Streams primitive triples in generation order: m = 2, 3, ...; for
/// each m, n = 1 .. m-1; Standard before Mirrored; non-primitive
/// outputs skipped.
class TripleEnumerator {
 public:
  std::pair<PythTriple, GeneratorParams> next();

 private:
  long long m_ = 2;
  long long n_ = 1;
  TripleForm form_ = TripleForm::Standard;

  GeneratorParams advance();
};

/// The first k primitive triples in generation order, plus the
/// permutation that sorts them by slope angle.
struct TripleSequence {
  std::vector<PythTriple> triples;        // generation order
  std::vector<GeneratorParams> params;    // parallel to triples
  std::vector<int> angle_rank_to_index;   // rank r -> index of r-th flattest

  int size() const { return static_cast<int>(triples.size()); }
  const PythTriple& by_angle_rank(int rank) const {
    return triples[angle_rank_to_index[rank]];
  }
  /// The first k triples of this sequence, re-ranked by angle.
  TripleSequence prefix(int k) const;
  /// Triples in angle order, flattest first.
  std::vector<PythTriple> angle_sorted() const;
};

TripleSequence first_primitive_triples(int k);

/// Convenience: the first k primitive triples reordered by increasing
/// slope angle.
std::vector<PythTriple> angle_sorted_prefix(int k);

struct SizeBoundViolation {
  int index = 0;  // 1-based position in the sequence
  std::string what;
};

struct SizeBoundAudit {
  bool pass = true;
  std::optional<SizeBoundViolation> first_violation;
  // Observed ratios, informational. component slack is against the
  // (2 pi^2 / 3) k component bound, param slack against the
  // (pi / sqrt 3) sqrt(k) generator bound.
  double max_component_slack = 0.0;
  double max_param_slack = 0.0;
  double min_component_ratio = 0.0;  // min over k of ell_k / k
};

/// Check every triple of seq against the component and generator-size
/// bounds. Violations are report entries, not exceptions.
SizeBoundAudit audit_size_bounds(const TripleSequence& seq);

}  // namespace gridfary

#endif
