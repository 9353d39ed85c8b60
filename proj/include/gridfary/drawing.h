#ifndef GRIDFARY_DRAWING_H
#define GRIDFARY_DRAWING_H

#include <string>
#include <vector>

#include <json.hpp>

#include "gridfary/geometry.h"

namespace gridfary {

inline constexpr const char* kDrawingFormatTag = "grid-fary-drawing-v1";

struct EdgeRecord {
  int u = 0;
  int v = 0;
  long long dx = 0;
  long long dy = 0;
  long long length = 0;
  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

struct BBox {
  long long xmin = 0, ymin = 0, xmax = 0, ymax = 0;
  long long width() const { return xmax - xmin; }
  long long height() const { return ymax - ymin; }
  friend bool operator==(const BBox&, const BBox&) = default;
};

/// Vertex placement with per-edge integer displacements and lengths.
struct Drawing {
  std::vector<Point> positions;  // index = vertex id
  std::vector<EdgeRecord> edges;
  BBox bbox;
  long long triples_used = 0;
  std::string algorithm;              // "star" | "tree" | "cactus"
  std::vector<std::string> notes;

  int vertex_count() const { return static_cast<int>(positions.size()); }
  void recompute_bbox();

  /// Equality of the geometric content (positions, edges, bbox,
  /// consumed triples), ignoring the algorithm tag and notes.
  bool same_geometry(const Drawing& other) const;
};

nlohmann::json drawing_to_json(const Drawing& d);
Drawing drawing_from_json(const nlohmann::json& j);
Drawing parse_drawing(const std::string& text);

}  // namespace gridfary

#endif
