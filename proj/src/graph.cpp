#include "gridfary/graph.h"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace gridfary {

const char* to_string(GraphClass cls) {
  switch (cls) {
    case GraphClass::Star: return "star";
    case GraphClass::Tree: return "tree";
    case GraphClass::Cactus: return "cactus";
    case GraphClass::Unsupported: return "unsupported";
  }
  return "?";
}

void validate_graph(const InputGraph& g) {
  if (g.n < 1) throw GraphError("graph must have at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : g.edges) {
    if (u < 0 || u >= g.n || v < 0 || v >= g.n)
      throw GraphError("edge endpoint out of range");
    if (u == v) throw GraphError("self-loops are not allowed");
    auto key = std::minmax(u, v);
    if (!seen.insert({key.first, key.second}).second)
      throw GraphError("parallel edges are not allowed");
  }
  // Connectivity.
  std::vector<std::vector<int>> adj(g.n);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> visited(g.n, 0);
  std::queue<int> q;
  q.push(0);
  visited[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v]) {
      if (!visited[w]) {
        visited[w] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  if (reached != g.n) throw GraphError("graph must be connected");
  // Rotation lists must be permutations of the neighborhoods.
  for (const auto& [v, order] : g.rotation) {
    if (v < 0 || v >= g.n) throw GraphError("rotation key out of range");
    std::vector<int> a = order;
    std::vector<int> b = adj[v];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw GraphError("rotation list is not a permutation of the neighborhood");
  }
  if (g.has_rotation()) {
    for (int v = 0; v < g.n; ++v) {
      if (!adj[v].empty() && !g.rotation.count(v))
        throw GraphError("rotation system must cover every vertex");
    }
  }
  if (g.root && (*g.root < 0 || *g.root >= g.n))
    throw GraphError("root out of range");
}

std::vector<std::vector<int>> neighbor_lists(const InputGraph& g) {
  std::vector<std::vector<int>> adj(g.n);
  if (g.has_rotation()) {
    for (const auto& [v, order] : g.rotation) adj[v] = order;
  } else {
    for (auto [u, v] : g.edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
  }
  return adj;
}

namespace {

// Iterative biconnected-components DFS (lowpoint + edge stack).
struct BiconnectedFinder {
  const std::vector<std::vector<std::pair<int, int>>>& adj;  // (neighbor, edge id)
  std::vector<int> num, low;
  std::vector<int> edge_stack;
  std::vector<char> edge_seen;
  std::vector<std::vector<int>> components;
  int counter = 0;

  explicit BiconnectedFinder(const std::vector<std::vector<std::pair<int, int>>>& a,
                             size_t edge_count)
      : adj(a), num(a.size(), -1), low(a.size(), 0), edge_seen(edge_count, 0) {}

  void run(int root) {
    struct Frame {
      int v;
      int parent_edge;
      size_t next = 0;
    };
    std::vector<Frame> stack;
    stack.push_back({root, -1});
    num[root] = low[root] = counter++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        auto [w, eid] = adj[f.v][f.next++];
        if (eid == f.parent_edge) continue;
        if (!edge_seen[eid]) {
          edge_seen[eid] = 1;
          edge_stack.push_back(eid);
        }
        if (num[w] == -1) {
          num[w] = low[w] = counter++;
          stack.push_back({w, eid});
        } else {
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        int v = f.v;
        int parent_edge = f.parent_edge;
        stack.pop_back();
        if (stack.empty()) break;
        int u = stack.back().v;
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= num[u]) {
          // Pop one component ending with the tree edge u-v.
          std::vector<int> comp;
          for (;;) {
            int eid = edge_stack.back();
            edge_stack.pop_back();
            comp.push_back(eid);
            if (eid == parent_edge) break;
          }
          components.push_back(std::move(comp));
        }
      }
    }
  }
};

}  // namespace

std::vector<std::vector<int>> biconnected_components(const InputGraph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);
  for (size_t i = 0; i < g.edges.size(); ++i) {
    auto [u, v] = g.edges[i];
    adj[u].push_back({v, static_cast<int>(i)});
    adj[v].push_back({u, static_cast<int>(i)});
  }
  BiconnectedFinder finder(adj, g.edges.size());
  finder.run(0);
  return finder.components;
}

int star_center(const InputGraph& g) {
  if (g.n == 1) return 0;
  std::vector<int> degree(g.n, 0);
  for (auto [u, v] : g.edges) {
    ++degree[u];
    ++degree[v];
  }
  for (int v = 0; v < g.n; ++v) {
    if (degree[v] == g.n - 1) return v;
  }
  throw GraphError("graph is not a star");
}

GraphClass classify(const InputGraph& g) {
  validate_graph(g);
  const int m = static_cast<int>(g.edges.size());
  if (g.n == 1) return GraphClass::Star;
  if (m == g.n - 1) {
    std::vector<int> degree(g.n, 0);
    for (auto [u, v] : g.edges) {
      ++degree[u];
      ++degree[v];
    }
    if (*std::max_element(degree.begin(), degree.end()) == g.n - 1)
      return GraphClass::Star;
    return GraphClass::Tree;
  }
  // Connected with cycles: cactus iff every biconnected component is a
  // single edge or a simple cycle (edge count == vertex count).
  for (const auto& comp : biconnected_components(g)) {
    if (comp.size() == 1) continue;
    std::set<int> vertices;
    for (int eid : comp) {
      vertices.insert(g.edges[eid].first);
      vertices.insert(g.edges[eid].second);
    }
    if (comp.size() != vertices.size()) return GraphClass::Unsupported;
  }
  return GraphClass::Cactus;
}

InputGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw GraphError("graph json must be an object");
  if (!j.contains("format") || j["format"] != kGraphFormatTag)
    throw GraphError(std::string("graph json must carry format tag ") + kGraphFormatTag);
  InputGraph g;
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw GraphError("graph json: missing integer field 'n'");
  g.n = j["n"].get<int>();
  if (!j.contains("edges") || !j["edges"].is_array())
    throw GraphError("graph json: missing array field 'edges'");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2)
      throw GraphError("graph json: each edge must be a pair");
    g.edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  if (j.contains("rotation")) {
    if (!j["rotation"].is_object())
      throw GraphError("graph json: 'rotation' must be an object");
    for (const auto& [key, value] : j["rotation"].items()) {
      int v = 0;
      try {
        v = std::stoi(key);
      } catch (...) {
        throw GraphError("graph json: rotation key is not an integer");
      }
      g.rotation[v] = value.get<std::vector<int>>();
    }
  }
  if (j.contains("root") && !j["root"].is_null()) g.root = j["root"].get<int>();
  validate_graph(g);
  return g;
}

InputGraph parse_graph(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("graph json parse error: ") + e.what());
  }
  return graph_from_json(j);
}

nlohmann::json graph_to_json(const InputGraph& g) {
  nlohmann::json j;
  j["format"] = kGraphFormatTag;
  j["n"] = g.n;
  auto edges = nlohmann::json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  j["edges"] = edges;
  if (g.has_rotation()) {
    nlohmann::json rot = nlohmann::json::object();
    for (const auto& [v, order] : g.rotation) rot[std::to_string(v)] = order;
    j["rotation"] = rot;
  }
  if (g.root) j["root"] = *g.root;
  return j;
}

}  // namespace gridfary
