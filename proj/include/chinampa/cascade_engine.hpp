#pragma once

#include <optional>
#include <vector>

#include "chinampa/graph_model.hpp"
#include "chinampa/stv.hpp"

namespace chinampa {

// Result of running the firing rule forward from a set of primaries.
// Primaries that would also fire on their own stay primaries and are listed
// in redundant_primaries(); nothing is repaired here.
class ActivationDiagram {
 public:
  const Network& network() const { return network_; }
  const StvSet& primaries() const { return primaries_; }
  const StvSet& secondaries() const { return secondaries_; }
  const StvSet& redundant_primaries() const { return redundant_; }
  StvSet activated() const;
  int horizon() const { return horizon_; }

  bool is_active(Stv v) const { return primaries_.contains(v) || secondaries_.contains(v); }
  bool is_primary(Stv v) const { return primaries_.contains(v); }
  // Fired by incoming signal, whether or not it was also stimulated.
  bool fires(Stv v) const { return secondaries_.contains(v) || redundant_.contains(v); }

 private:
  friend ActivationDiagram activation_closure(const Network&, const StvSet&, std::optional<int>);
  Network network_;
  StvSet primaries_;
  StvSet secondaries_;
  StvSet redundant_;
  int horizon_ = 0;
};

// Max primary time + network size + 1.
int default_horizon(const Network& network, const StvSet& primaries);

ActivationDiagram activation_closure(const Network& network, const StvSet& primaries,
                                     std::optional<int> horizon = std::nullopt);

bool is_redundant(const ActivationDiagram& diagram);
bool is_connected(const ActivationDiagram& diagram);
int profit(const ActivationDiagram& diagram);
bool is_chinampa(const ActivationDiagram& diagram);

// Primaries none of whose outgoing signals lands on a fired vertex.
std::vector<Stv> non_contributing_primaries(const ActivationDiagram& diagram);

// grid[t][c] is cell c (vertex c+1) at time t.
using Grid = std::vector<std::vector<bool>>;

// Rule 192 with stimuli injected row by row. Rows of stimulus_rows beyond
// their length, and missing rows, count as white. Returns steps+1 rows.
Grid rule192_evolve(const Grid& stimulus_rows, int width, int steps);

Grid to_grid(const StvSet& cells, int width, int rows);

Stv find_spike(const ActivationDiagram& diagram);

}  // namespace chinampa
