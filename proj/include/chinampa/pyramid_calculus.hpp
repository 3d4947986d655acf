#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "chinampa/cascade_engine.hpp"
#include "chinampa/stv.hpp"

namespace chinampa {

// Base of a pyramid: positions lp..rp at time t.
struct PyramidInterval {
  int t = 0;
  int lp = 0;
  int rp = 0;

  int length() const { return rp - lp + 1; }
  friend bool operator==(const PyramidInterval&, const PyramidInterval&) = default;
  friend auto operator<=>(const PyramidInterval&, const PyramidInterval&) = default;
};

class Pyramid {
 public:
  explicit Pyramid(PyramidInterval base);
  // The pyramid of the given length whose top vertex is `top`.
  static Pyramid with_pyramidion(Stv top, int length);

  const PyramidInterval& base() const { return base_; }
  int length() const { return base_.length(); }
  Stv pyramidion() const { return {base_.rp, base_.t + base_.rp - base_.lp}; }
  bool contains(Stv v) const;
  // Time descending, then position ascending.
  std::vector<Stv> region() const;
  StvSet base_cells() const;

  friend bool operator==(const Pyramid&, const Pyramid&) = default;

 private:
  PyramidInterval base_;
};

int pyramid_profit(int length);
int max_pyramid_length(int profit_bound);

// primaries must be strictly increasing in (time, vertex).
std::vector<PyramidInterval> build_pyramids(std::span<const Stv> primaries);
std::vector<PyramidInterval> remove_duplicates(std::span<const PyramidInterval> intervals);
bool will_vertex_be_activated(VertexId v, int t0, std::span<const Stv> primaries);

struct FactorNode {
  PyramidInterval pyramid;
  std::optional<std::size_t> parent;

  friend bool operator==(const FactorNode&, const FactorNode&) = default;
};

struct Factorization {
  std::vector<FactorNode> nodes;

  // Pyramid count per length, lengths 2 included.
  std::map<int, int> signature() const;
  // Base cells not covered by the upper part of any pyramid.
  StvSet restacked_primaries() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

Factorization factorize(const ActivationDiagram& chinampa);

// Breadth-first stacking tree of a connected non-redundant path diagram,
// without the profit requirement. Used for pyr(2) chains and by the search.
Factorization stacking_tree(const StvSet& primaries);

ActivationDiagram stack(const ActivationDiagram& base_diagram, int length, Stv attach);

struct Intersection {
  enum class Kind { empty, point, pyramid };
  Kind kind = Kind::empty;
  std::optional<PyramidInterval> pyramid;
  std::optional<Stv> point;

  int profit() const;
};

Intersection intersect(const Pyramid& a, const Pyramid& b);
int inclusion_exclusion_profit(const Factorization& factorization);

}  // namespace chinampa
