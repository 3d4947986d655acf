#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chinampa/stv.hpp"

namespace chinampa {

inline constexpr int kDefaultThreshold = 2;

struct Edge {
  VertexId src = 0;
  VertexId dst = 0;
  int travel_time = 1;
  int intensity = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Directed multigraph of neurons. Immutable once built; problems with the
// data are reported by validate() rather than thrown from the constructor.
class Network {
 public:
  Network() = default;
  Network(std::vector<VertexId> vertices, std::vector<Edge> edges,
          std::map<VertexId, int> thresholds = {});

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::map<VertexId, int>& thresholds() const { return thresholds_; }

  std::size_t size() const { return vertices_.size(); }
  bool has_vertex(VertexId v) const;
  int threshold(VertexId v) const;
  // Position of v in vertices(), or -1.
  int index_of(VertexId v) const;

  // Indices into edges() of edges entering / leaving v.
  const std::vector<std::size_t>& in_edges(VertexId v) const;
  const std::vector<std::size_t>& out_edges(VertexId v) const;

  // True when this is exactly make_path(l) for some l >= 1.
  bool is_path() const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::map<VertexId, int> thresholds_;
  std::map<VertexId, std::vector<std::size_t>> in_;
  std::map<VertexId, std::vector<std::size_t>> out_;
};

Network make_path(int length);
Network make_cycle(int length);
Network make_clique(int n, int travel_time = 1, int threshold = kDefaultThreshold);
// parent_map maps child -> parent. With an empty map the tree is the lone root.
Network make_rooted_tree(const std::map<VertexId, VertexId>& parent_map,
                         VertexId lone_root = 1);

// Human-readable invariant violations; empty when the network is well formed.
std::vector<std::string> validate(const Network& network);

}  // namespace chinampa
