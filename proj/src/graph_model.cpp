#include "chinampa/graph_model.hpp"

#include <algorithm>
#include <set>

#include "chinampa/errors.hpp"

namespace chinampa {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_size: return "invalid size";
    case ErrorKind::invalid_tree: return "invalid tree";
    case ErrorKind::domain: return "domain error";
    case ErrorKind::unsupported_topology: return "unsupported topology";
    case ErrorKind::precondition: return "precondition failed";
    case ErrorKind::invalid_attachment: return "invalid attachment";
    case ErrorKind::redundancy: return "redundant diagram";
    case ErrorKind::exactness: return "inexact coefficient";
    case ErrorKind::shape: return "shape error";
    case ErrorKind::bijection_domain: return "outside bijection domain";
    case ErrorKind::parse: return "parse error";
  }
  return "error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

namespace {
const std::vector<std::size_t> kNoEdges;
}

Network::Network(std::vector<VertexId> vertices, std::vector<Edge> edges,
                 std::map<VertexId, int> thresholds)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), thresholds_(std::move(thresholds)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    in_[edges_[i].dst].push_back(i);
    out_[edges_[i].src].push_back(i);
  }
}

bool Network::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int Network::index_of(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return -1;
  return static_cast<int>(it - vertices_.begin());
}

int Network::threshold(VertexId v) const {
  auto it = thresholds_.find(v);
  return it == thresholds_.end() ? kDefaultThreshold : it->second;
}

const std::vector<std::size_t>& Network::in_edges(VertexId v) const {
  auto it = in_.find(v);
  return it == in_.end() ? kNoEdges : it->second;
}

const std::vector<std::size_t>& Network::out_edges(VertexId v) const {
  auto it = out_.find(v);
  return it == out_.end() ? kNoEdges : it->second;
}

bool Network::is_path() const {
  const int l = static_cast<int>(vertices_.size());
  if (l == 0 || vertices_.front() != 1 || vertices_.back() != l) return false;
  if (static_cast<int>(edges_.size()) != 2 * l - 1) return false;
  for (VertexId v : vertices_)
    if (threshold(v) != kDefaultThreshold) return false;
  std::multiset<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : edges_) {
    if (e.travel_time != 1 || e.intensity != 1) return false;
    seen.insert({e.src, e.dst});
  }
  for (int i = 1; i <= l; ++i) {
    if (seen.count({i, i}) != 1) return false;
    if (i < l && seen.count({i, i + 1}) != 1) return false;
  }
  return true;
}

Network make_path(int length) {
  if (length < 1) throw Error(ErrorKind::invalid_size, "path length must be at least 1");
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  for (int i = 1; i <= length; ++i) {
    vertices.push_back(i);
    edges.push_back({i, i, 1, 1});
    if (i < length) edges.push_back({i, i + 1, 1, 1});
  }
  return Network(std::move(vertices), std::move(edges));
}

Network make_cycle(int length) {
  if (length < 1) throw Error(ErrorKind::invalid_size, "cycle length must be at least 1");
  Network path = make_path(length);
  std::vector<Edge> edges = path.edges();
  edges.push_back({length, 1, 1, 1});
  return Network(path.vertices(), std::move(edges));
}

Network make_clique(int n, int travel_time, int threshold) {
  if (n < 1) throw Error(ErrorKind::invalid_size, "clique size must be at least 1");
  if (travel_time < 1) throw Error(ErrorKind::domain, "travel time must be positive");
  if (threshold < 1) throw Error(ErrorKind::domain, "threshold must be positive");
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  std::map<VertexId, int> thresholds;
  for (int i = 1; i <= n; ++i) {
    vertices.push_back(i);
    thresholds[i] = threshold;
    for (int j = 1; j <= n; ++j)
      if (i != j) edges.push_back({i, j, travel_time, 1});
  }
  return Network(std::move(vertices), std::move(edges), std::move(thresholds));
}

Network make_rooted_tree(const std::map<VertexId, VertexId>& parent_map, VertexId lone_root) {
  std::set<VertexId> vertices;
  for (auto [child, parent] : parent_map) {
    if (child == parent) throw Error(ErrorKind::invalid_tree, "vertex is its own parent");
    vertices.insert(child);
    vertices.insert(parent);
  }
  if (vertices.empty()) vertices.insert(lone_root);

  std::vector<VertexId> roots;
  for (VertexId v : vertices)
    if (!parent_map.contains(v)) roots.push_back(v);
  if (roots.size() != 1) throw Error(ErrorKind::invalid_tree, "parent map must have exactly one root");

  for (VertexId v : vertices) {
    std::set<VertexId> trail{v};
    for (auto it = parent_map.find(v); it != parent_map.end(); it = parent_map.find(it->second))
      if (!trail.insert(it->second).second) throw Error(ErrorKind::invalid_tree, "cycle in parent map");
  }

  std::vector<Edge> edges;
  for (VertexId v : vertices) edges.push_back({v, v, 1, 1});
  for (auto [child, parent] : parent_map) edges.push_back({child, parent, 1, 1});
  return Network({vertices.begin(), vertices.end()}, std::move(edges));
}

std::vector<std::string> validate(const Network& network) {
  std::vector<std::string> violations;
  for (VertexId v : network.vertices())
    if (v < 0) violations.push_back("negative vertex id " + std::to_string(v));
  for (std::size_t i = 0; i < network.edges().size(); ++i) {
    const Edge& e = network.edges()[i];
    const std::string where = " on edge " + std::to_string(i);
    if (e.travel_time < 1) violations.push_back("nonpositive travel time" + where);
    if (!network.has_vertex(e.src) || !network.has_vertex(e.dst))
      violations.push_back("unknown endpoint" + where);
  }
  for (auto [v, th] : network.thresholds()) {
    if (!network.has_vertex(v)) violations.push_back("threshold for unknown vertex " + std::to_string(v));
    if (th < 1) violations.push_back("nonpositive threshold at vertex " + std::to_string(v));
  }
  return violations;
}

}  // namespace chinampa
