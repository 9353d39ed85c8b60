#ifndef GRIDFARY_VERIFIER_H
#define GRIDFARY_VERIFIER_H

#include <optional>
#include <string>
#include <vector>

#include "gridfary/decompose.h"
#include "gridfary/drawing.h"
#include "gridfary/graph.h"

// Certification of drawings with exact integer arithmetic: integer
// edge lengths, crossing-freeness, cone containment, distance and
// grid-size bounds, triple budgets.

namespace gridfary {

enum class ViolationKind {
  NonIntegerLength,
  Crossing,
  CollinearOverlap,
  ConeBreach,
  DistanceBound,
  GridBound,
  BudgetMismatch,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;              // human-readable, exact integers
  std::vector<long long> witness;  // offending ids / signs
  bool marginal = false;  // bound exceeded by a relative margin < 1e-9
};

struct CertReport {
  std::vector<Violation> violations;
  long long pair_tests = 0;         // planarity pairs examined
  long long boundary_contacts = 0;  // cone-boundary incidences (allowed)
  std::optional<BigRatio> grid_bound;
  double grid_slack = 0.0;  // observed extent / bound

  bool pass() const {
    for (const Violation& v : violations)
      if (!v.marginal) return false;
    return true;
  }
  int count(ViolationKind kind) const {
    int c = 0;
    for (const Violation& v : violations)
      if (v.kind == kind) ++c;
    return c;
  }
};

/// Every edge's displacement must square to the recorded length.
std::vector<Violation> check_integrality(const Drawing& d);

/// Exact pairwise segment tests over all edge pairs. Pairs sharing an
/// endpoint are checked for collinear overlap past the shared point.
std::vector<Violation> check_planarity(const Drawing& d,
                                       long long* pair_tests = nullptr);

std::vector<Violation> check_bounds_star(const Drawing& d, int n,
                                         CertReport* report = nullptr);
std::vector<Violation> check_bounds_tree(const Drawing& d, const RootedTree& tree,
                                         const TripleAssignment& assignment,
                                         CertReport* report = nullptr);
std::vector<Violation> check_bounds_cactus(const Drawing& d,
                                           const CactusDecomposition& decomp,
                                           const TripleAssignment& assignment,
                                           CertReport* report = nullptr);

/// Full certification. With a graph, the drawing must realize exactly
/// its edge set; the profile ("auto" = the drawing's algorithm tag)
/// selects which bound formulas apply. Without a graph only
/// integrality and planarity run.
CertReport verify_drawing(const Drawing& d, const InputGraph* graph = nullptr,
                          const std::string& profile = "auto");

nlohmann::json report_to_json(const CertReport& report);
std::string report_to_table(const CertReport& report);

}  // namespace gridfary

#endif
