#include "gridfary/drawing.h"

#include <algorithm>

#include "gridfary/graph.h"

namespace gridfary {

void Drawing::recompute_bbox() {
  bbox = {};
  if (positions.empty()) return;
  bbox = {positions[0].x, positions[0].y, positions[0].x, positions[0].y};
  for (const Point& p : positions) {
    bbox.xmin = std::min(bbox.xmin, p.x);
    bbox.ymin = std::min(bbox.ymin, p.y);
    bbox.xmax = std::max(bbox.xmax, p.x);
    bbox.ymax = std::max(bbox.ymax, p.y);
  }
}

bool Drawing::same_geometry(const Drawing& other) const {
  return positions == other.positions && edges == other.edges &&
         bbox == other.bbox && triples_used == other.triples_used;
}

nlohmann::json drawing_to_json(const Drawing& d) {
  nlohmann::json j;
  j["format"] = kDrawingFormatTag;
  j["algorithm"] = d.algorithm;
  nlohmann::json positions = nlohmann::json::object();
  for (int v = 0; v < d.vertex_count(); ++v) {
    positions[std::to_string(v)] = {d.positions[v].x, d.positions[v].y};
  }
  j["positions"] = positions;
  auto edges = nlohmann::json::array();
  for (const EdgeRecord& e : d.edges) edges.push_back({e.u, e.v, e.length});
  j["edges"] = edges;
  j["bbox"] = {d.bbox.xmin, d.bbox.ymin, d.bbox.xmax, d.bbox.ymax};
  j["triples_used"] = d.triples_used;
  if (!d.notes.empty()) j["notes"] = d.notes;
  return j;
}

Drawing drawing_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw GraphError("drawing json must be an object");
  if (!j.contains("format") || j["format"] != kDrawingFormatTag)
    throw GraphError(std::string("drawing json must carry format tag ") + kDrawingFormatTag);
  Drawing d;
  d.algorithm = j.value("algorithm", std::string{});
  if (!j.contains("positions") || !j["positions"].is_object())
    throw GraphError("drawing json: missing object field 'positions'");
  const auto& raw = j["positions"];
  d.positions.assign(raw.size(), {});
  std::vector<char> filled(raw.size(), 0);
  for (const auto& [key, value] : raw.items()) {
    int v = 0;
    try {
      v = std::stoi(key);
    } catch (...) {
      throw GraphError("drawing json: position key is not an integer");
    }
    if (v < 0 || v >= static_cast<int>(raw.size()) || filled[v])
      throw GraphError("drawing json: position keys must be 0..n-1 without repeats");
    if (!value.is_array() || value.size() != 2)
      throw GraphError("drawing json: each position must be [x, y]");
    d.positions[v] = {value[0].get<long long>(), value[1].get<long long>()};
    filled[v] = 1;
  }
  if (!j.contains("edges") || !j["edges"].is_array())
    throw GraphError("drawing json: missing array field 'edges'");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3)
      throw GraphError("drawing json: each edge must be [u, v, length]");
    EdgeRecord rec;
    rec.u = e[0].get<int>();
    rec.v = e[1].get<int>();
    rec.length = e[2].get<long long>();
    if (rec.u < 0 || rec.u >= d.vertex_count() || rec.v < 0 ||
        rec.v >= d.vertex_count())
      throw GraphError("drawing json: edge endpoint out of range");
    rec.dx = d.positions[rec.v].x - d.positions[rec.u].x;
    rec.dy = d.positions[rec.v].y - d.positions[rec.u].y;
    d.edges.push_back(rec);
  }
  if (j.contains("bbox")) {
    const auto& b = j["bbox"];
    if (!b.is_array() || b.size() != 4)
      throw GraphError("drawing json: bbox must be [xmin, ymin, xmax, ymax]");
    d.bbox = {b[0].get<long long>(), b[1].get<long long>(),
              b[2].get<long long>(), b[3].get<long long>()};
  } else {
    d.recompute_bbox();
  }
  d.triples_used = j.value("triples_used", 0LL);
  if (j.contains("notes")) d.notes = j["notes"].get<std::vector<std::string>>();
  return d;
}

Drawing parse_drawing(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("drawing json parse error: ") + e.what());
  }
  return drawing_from_json(j);
}

}  // namespace gridfary
