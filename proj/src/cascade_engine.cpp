#include "chinampa/cascade_engine.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "chinampa/errors.hpp"

namespace chinampa {

StvSet ActivationDiagram::activated() const {
  StvSet all = primaries_;
  all.insert(secondaries_.begin(), secondaries_.end());
  return all;
}

int default_horizon(const Network& network, const StvSet& primaries) {
  int last = 0;
  for (const Stv& p : primaries) last = std::max(last, p.time);
  return last + static_cast<int>(network.size()) + 1;
}

ActivationDiagram activation_closure(const Network& network, const StvSet& primaries,
                                     std::optional<int> horizon) {
  for (const Stv& p : primaries) {
    if (!network.has_vertex(p.vertex))
      throw Error(ErrorKind::domain, "stimulus on unknown vertex " + std::to_string(p.vertex));
    if (p.time < 0) throw Error(ErrorKind::domain, "stimulus at negative time");
  }
  const int last = horizon.value_or(default_horizon(network, primaries));
  if (last < 0) throw Error(ErrorKind::precondition, "horizon must be nonnegative");
  if (!primaries.empty() && primaries.rbegin()->time > last)
    throw Error(ErrorKind::precondition, "horizon earlier than the last stimulus");

  struct Incoming {
    int source;
    int travel;
    int intensity;
  };
  const auto& vertices = network.vertices();
  const int width = static_cast<int>(vertices.size());
  std::vector<std::vector<Incoming>> incoming(width);
  std::vector<int> threshold(width);
  for (int i = 0; i < width; ++i) {
    threshold[i] = network.threshold(vertices[i]);
    for (std::size_t e : network.in_edges(vertices[i])) {
      const Edge& edge = network.edges()[e];
      int src = network.index_of(edge.src);
      if (src >= 0 && edge.travel_time >= 1) incoming[i].push_back({src, edge.travel_time, edge.intensity});
    }
  }

  ActivationDiagram d;
  d.network_ = network;
  d.primaries_ = primaries;
  d.horizon_ = last;

  std::vector<std::vector<char>> active(last + 1, std::vector<char>(width, 0));
  auto stim = primaries.begin();
  for (int t = 0; t <= last; ++t) {
    std::vector<char> stimulated(width, 0);
    for (; stim != primaries.end() && stim->time == t; ++stim) stimulated[network.index_of(stim->vertex)] = 1;
    for (int v = 0; v < width; ++v) {
      long sum = 0;
      for (const Incoming& in : incoming[v])
        if (t - in.travel >= 0 && active[t - in.travel][in.source]) sum += in.intensity;
      const bool fired = !incoming[v].empty() && sum >= threshold[v];
      active[t][v] = fired || stimulated[v];
      if (fired) (stimulated[v] ? d.redundant_ : d.secondaries_).insert({vertices[v], t});
    }
  }
  return d;
}

bool is_redundant(const ActivationDiagram& diagram) { return !diagram.redundant_primaries().empty(); }

bool is_connected(const ActivationDiagram& diagram) {
  const StvSet& nodes = diagram.secondaries();
  if (nodes.size() <= 1) return true;
  const Network& net = diagram.network();
  StvSet seen{*nodes.begin()};
  std::deque<Stv> queue{*nodes.begin()};
  auto visit = [&](Stv next) {
    if (nodes.contains(next) && seen.insert(next).second) queue.push_back(next);
  };
  while (!queue.empty()) {
    Stv cur = queue.front();
    queue.pop_front();
    for (std::size_t e : net.out_edges(cur.vertex)) {
      const Edge& edge = net.edges()[e];
      visit({edge.dst, cur.time + edge.travel_time});
    }
    for (std::size_t e : net.in_edges(cur.vertex)) {
      const Edge& edge = net.edges()[e];
      visit({edge.src, cur.time - edge.travel_time});
    }
  }
  return seen.size() == nodes.size();
}

int profit(const ActivationDiagram& diagram) {
  return static_cast<int>(diagram.secondaries().size()) - static_cast<int>(diagram.primaries().size());
}

bool is_chinampa(const ActivationDiagram& diagram) {
  if (!diagram.network().is_path())
    throw Error(ErrorKind::unsupported_topology, "chinampas are defined on paths only");
  return is_connected(diagram) && !is_redundant(diagram) && profit(diagram) >= 0;
}

std::vector<Stv> non_contributing_primaries(const ActivationDiagram& diagram) {
  const Network& net = diagram.network();
  std::vector<Stv> idle;
  for (const Stv& p : diagram.primaries()) {
    bool feeds = false;
    for (std::size_t e : net.out_edges(p.vertex)) {
      const Edge& edge = net.edges()[e];
      if (diagram.fires({edge.dst, p.time + edge.travel_time})) feeds = true;
    }
    if (!feeds) idle.push_back(p);
  }
  return idle;
}

Grid rule192_evolve(const Grid& stimulus_rows, int width, int steps) {
  if (width < 1) throw Error(ErrorKind::domain, "width must be at least 1");
  if (steps < 0) throw Error(ErrorKind::domain, "steps must be nonnegative");
  auto stimulus = [&](int t, int c) {
    return t < static_cast<int>(stimulus_rows.size()) && c < static_cast<int>(stimulus_rows[t].size()) &&
           stimulus_rows[t][c];
  };
  Grid grid(steps + 1, std::vector<bool>(width, false));
  for (int c = 0; c < width; ++c) grid[0][c] = stimulus(0, c);
  for (int t = 1; t <= steps; ++t)
    for (int c = 0; c < width; ++c)
      grid[t][c] = (grid[t - 1][c] && c > 0 && grid[t - 1][c - 1]) || stimulus(t, c);
  return grid;
}

Grid to_grid(const StvSet& cells, int width, int rows) {
  Grid grid(rows, std::vector<bool>(width, false));
  for (const Stv& s : cells)
    if (s.time >= 0 && s.time < rows && s.vertex >= 1 && s.vertex <= width) grid[s.time][s.vertex - 1] = true;
  return grid;
}

Stv find_spike(const ActivationDiagram& diagram) {
  if (!is_chinampa(diagram)) throw Error(ErrorKind::precondition, "spike is defined for chinampas only");
  StvSet all = diagram.activated();
  if (all.empty()) throw Error(ErrorKind::precondition, "empty diagram has no spike");
  const int top = all.rbegin()->time;
  auto first_top = all.lower_bound({std::numeric_limits<VertexId>::min(), top});
  if (std::next(first_top) != all.end())
    throw Error(ErrorKind::precondition, "several activated vertices share the maximal time");
  return *first_top;
}

}  // namespace chinampa
