#pragma once

#include <map>
#include <optional>
#include <set>

#include "chinampa/graph_model.hpp"
#include "chinampa/stv.hpp"

namespace chinampa {

using VertexSet = std::set<VertexId>;

// First vertex of S whose in-edges from S cannot reach its threshold, or that
// an inhibitory edge from outside S could silence. Empty when S can persist.
std::optional<VertexId> first_unsupported_vertex(const Network& network, const VertexSet& S);
bool check_sufficient_conditions(const Network& network, const VertexSet& S);

struct PersistenceSchedule {
  int M = 0;
  std::map<VertexId, int> window_start;  // vertex n is stimulated on [M - m_n, M]
  StvSet stimuli;
};

PersistenceSchedule schedule_infinite(const Network& network, const VertexSet& S);
StvSet synfire_schedule(const Network& network, const VertexSet& S);

// Every vertex of S active at every time from the last stimulus to horizon.
bool verify_persistence(const Network& network, const StvSet& stimuli, const VertexSet& S, int horizon);

inline int default_persistence_horizon(int M) { return 10 * (M + 1) + 100; }

}  // namespace chinampa
