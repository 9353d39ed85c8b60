#ifndef GRIDFARY_GRAPH_H
#define GRIDFARY_GRAPH_H

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace gridfary {

inline constexpr const char* kGraphFormatTag = "grid-fary-graph-v1";

/// Thrown for malformed or out-of-contract inputs (files, graphs,
/// option combinations).
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected simple connected graph with vertex ids 0 .. n-1.
/// The optional rotation system lists each vertex's neighbors in
/// counterclockwise order; when absent, neighbors are taken in
/// ascending id order.
struct InputGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::map<int, std::vector<int>> rotation;  // empty when none given
  std::optional<int> root;

  bool has_rotation() const { return !rotation.empty(); }
};

enum class GraphClass { Star, Tree, Cactus, Unsupported };

const char* to_string(GraphClass cls);

/// Structural validation: ids in range, no loops or parallel edges,
/// connected, rotation lists (if any) are permutations of the
/// neighborhoods. Throws GraphError.
void validate_graph(const InputGraph& g);

/// Star: one hub adjacent to all other vertices and no other edges
/// (includes n = 1 and n = 2). Tree: connected acyclic. Cactus: every
/// edge on at most one cycle. Anything else: Unsupported.
GraphClass classify(const InputGraph& g);

/// For a star, the hub vertex (smallest id among valid hubs).
int star_center(const InputGraph& g);

/// Neighbor lists honoring the rotation system, ascending ids otherwise.
std::vector<std::vector<int>> neighbor_lists(const InputGraph& g);

/// Biconnected components as lists of edge indices into g.edges.
std::vector<std::vector<int>> biconnected_components(const InputGraph& g);

InputGraph graph_from_json(const nlohmann::json& j);
InputGraph parse_graph(const std::string& text);
nlohmann::json graph_to_json(const InputGraph& g);

}  // namespace gridfary

#endif
