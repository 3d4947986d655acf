#pragma once

#include <compare>
#include <set>
#include <vector>

namespace chinampa {

using VertexId = int;

// A vertex at a moment. Ordered by time first, then vertex.
struct Stv {
  VertexId vertex = 0;
  int time = 0;

  friend bool operator==(const Stv&, const Stv&) = default;
  friend std::strong_ordering operator<=>(const Stv& a, const Stv& b) {
    if (auto c = a.time <=> b.time; c != 0) return c;
    return a.vertex <=> b.vertex;
  }
};

using StvSet = std::set<Stv>;

inline std::vector<Stv> to_vector(const StvSet& s) { return {s.begin(), s.end()}; }

}  // namespace chinampa
