#include "chinampa/persistent_cascades.hpp"

#include <algorithm>
#include <string>

#include "chinampa/cascade_engine.hpp"
#include "chinampa/errors.hpp"

namespace chinampa {

namespace {

void check_members(const Network& network, const VertexSet& S) {
  for (VertexId v : S)
    if (!network.has_vertex(v)) throw Error(ErrorKind::domain, "vertex " + std::to_string(v) + " is not in the network");
}

// Longest travel time of an edge from n into S; 0 when there is none.
int longest_inner_travel(const Network& network, const VertexSet& S, VertexId n) {
  int longest = 0;
  for (std::size_t e : network.out_edges(n)) {
    const Edge& edge = network.edges()[e];
    if (S.contains(edge.dst)) longest = std::max(longest, edge.travel_time);
  }
  return longest;
}

}  // namespace

std::optional<VertexId> first_unsupported_vertex(const Network& network, const VertexSet& S) {
  check_members(network, S);
  for (VertexId n : S) {
    long support = 0;
    bool exposed = false;
    for (std::size_t e : network.in_edges(n)) {
      const Edge& edge = network.edges()[e];
      if (S.contains(edge.src))
        support += edge.intensity;
      else if (edge.intensity < 0)
        exposed = true;
    }
    if (exposed || support < network.threshold(n)) return n;
  }
  return std::nullopt;
}

bool check_sufficient_conditions(const Network& network, const VertexSet& S) {
  return !first_unsupported_vertex(network, S).has_value();
}

PersistenceSchedule schedule_infinite(const Network& network, const VertexSet& S) {
  if (auto bad = first_unsupported_vertex(network, S))
    throw Error(ErrorKind::precondition, "vertex " + std::to_string(*bad) + " cannot sustain itself inside the set");
  PersistenceSchedule schedule;
  std::map<VertexId, int> reach;
  for (VertexId n : S) {
    reach[n] = longest_inner_travel(network, S, n);
    schedule.M = std::max(schedule.M, reach[n]);
  }
  for (VertexId n : S) {
    const int start = schedule.M - reach[n];
    if (start < 0) throw Error(ErrorKind::precondition, "window would start before time 0");
    schedule.window_start[n] = start;
    for (int tau = start; tau <= schedule.M; ++tau) schedule.stimuli.insert({n, tau});
  }
  return schedule;
}

StvSet synfire_schedule(const Network& network, const VertexSet& S) {
  const PersistenceSchedule schedule = schedule_infinite(network, S);
  StvSet stimuli;
  for (VertexId n : S)
    for (int tau = 0; tau <= schedule.M; ++tau) stimuli.insert({n, tau});
  return stimuli;
}

bool verify_persistence(const Network& network, const StvSet& stimuli, const VertexSet& S, int horizon) {
  check_members(network, S);
  if (S.empty()) return true;
  if (stimuli.empty()) return false;
  const int start = stimuli.rbegin()->time;
  if (horizon <= start) throw Error(ErrorKind::precondition, "horizon must lie past the last stimulus");
  const ActivationDiagram run = activation_closure(network, stimuli, horizon);
  for (int t = start; t <= horizon; ++t)
    for (VertexId n : S)
      if (!run.is_active({n, t})) return false;
  return true;
}

}  // namespace chinampa
