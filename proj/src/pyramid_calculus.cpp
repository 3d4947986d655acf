#include "chinampa/pyramid_calculus.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <string>

#include "chinampa/errors.hpp"

namespace chinampa {

Pyramid::Pyramid(PyramidInterval base) : base_(base) {
  if (base.lp > base.rp) throw Error(ErrorKind::domain, "pyramid base must have lp <= rp");
}

Pyramid Pyramid::with_pyramidion(Stv top, int length) {
  if (length < 1) throw Error(ErrorKind::domain, "pyramid length must be positive");
  return Pyramid({top.time - length + 1, top.vertex - length + 1, top.vertex});
}

bool Pyramid::contains(Stv v) const {
  return v.time >= base_.t && v.vertex <= base_.rp && v.vertex - v.time >= base_.lp - base_.t;
}

std::vector<Stv> Pyramid::region() const {
  std::vector<Stv> cells;
  for (int b = length() - 1; b >= 0; --b)
    for (int x = base_.lp + b; x <= base_.rp; ++x) cells.push_back({x, base_.t + b});
  return cells;
}

StvSet Pyramid::base_cells() const {
  StvSet cells;
  for (int x = base_.lp; x <= base_.rp; ++x) cells.insert({x, base_.t});
  return cells;
}

int pyramid_profit(int length) {
  if (length < 2) throw Error(ErrorKind::domain, "pyramid profit needs length >= 2");
  return length * (length - 3) / 2;
}

int max_pyramid_length(int profit_bound) {
  if (profit_bound < 0) throw Error(ErrorKind::domain, "profit bound must be nonnegative");
  // Largest l with l(l-3)/2 <= k, which is floor((3 + sqrt(9 + 8k)) / 2).
  int l = 3;
  while ((l + 1) * (l - 2) <= 2 * profit_bound) ++l;
  return l;
}

std::vector<PyramidInterval> remove_duplicates(std::span<const PyramidInterval> intervals) {
  std::vector<PyramidInterval> out;
  for (const PyramidInterval& walker : intervals) {
    if (!out.empty() && out.back().t == walker.t && walker.lp <= out.back().rp + 1) {
      out.back().rp = std::max(out.back().rp, walker.rp);
      continue;
    }
    out.push_back(walker);
  }
  return out;
}

namespace {

// Grows `iv` over every live cross-section of an earlier pyramid that
// touches or overlaps it. Returns whether anything changed.
bool absorb_lowers(PyramidInterval& iv, const std::vector<PyramidInterval>& lowers) {
  bool grew = false;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const PyramidInterval& lower : lowers) {
      const int dt = iv.t - lower.t;
      if (dt <= 0 || dt > lower.rp - lower.lp) continue;
      const int live_l = lower.lp + dt;
      const int live_r = lower.rp;
      if (live_l > iv.rp + 1 || live_r < iv.lp - 1) continue;
      const PyramidInterval before = iv;
      iv.lp = std::min(iv.lp, live_l);
      iv.rp = std::max(iv.rp, live_r);
      if (!(iv == before)) changed = grew = true;
    }
  }
  return grew;
}

}  // namespace

std::vector<PyramidInterval> build_pyramids(std::span<const Stv> primaries) {
  for (std::size_t i = 1; i < primaries.size(); ++i)
    if (!(primaries[i - 1] < primaries[i]))
      throw Error(ErrorKind::precondition, "primaries must be sorted by time then position");

  std::vector<PyramidInterval> built;
  std::size_t i = 0;
  while (i < primaries.size()) {
    const int t = primaries[i].time;
    std::vector<PyramidInterval> group;
    for (; i < primaries.size() && primaries[i].time == t; ++i) {
      const int x = primaries[i].vertex;
      if (!group.empty() && group.back().rp + 1 == x)
        group.back().rp = x;
      else
        group.push_back({t, x, x});
    }
    // Absorbing can make same-time intervals meet; merge and repeat.
    bool changed = true;
    while (changed) {
      changed = false;
      for (PyramidInterval& iv : group) changed |= absorb_lowers(iv, built);
      std::sort(group.begin(), group.end());
      auto merged = remove_duplicates(group);
      if (merged.size() != group.size()) changed = true;
      group = std::move(merged);
    }
    built.insert(built.end(), group.begin(), group.end());
  }
  std::sort(built.begin(), built.end());
  return remove_duplicates(built);
}

bool will_vertex_be_activated(VertexId v, int t0, std::span<const Stv> primaries) {
  std::vector<Stv> sorted(primaries.begin(), primaries.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (std::binary_search(sorted.begin(), sorted.end(), Stv{v, t0})) return true;
  for (const PyramidInterval& p : build_pyramids(sorted)) {
    if (p.t > t0) break;
    const int dt = t0 - p.t;
    if (p.lp + dt <= v && v <= p.rp && p.t <= t0 && t0 <= v - p.lp + p.t) return true;
  }
  return false;
}

std::map<int, int> Factorization::signature() const {
  std::map<int, int> counts;
  for (const FactorNode& n : nodes) ++counts[n.pyramid.length()];
  return counts;
}

StvSet Factorization::restacked_primaries() const {
  StvSet bases;
  for (const FactorNode& n : nodes) {
    StvSet cells = Pyramid(n.pyramid).base_cells();
    bases.insert(cells.begin(), cells.end());
  }
  StvSet primaries;
  for (const Stv& c : bases) {
    bool covered = false;
    for (const FactorNode& n : nodes)
      if (c.time > n.pyramid.t && Pyramid(n.pyramid).contains(c)) covered = true;
    if (!covered) primaries.insert(c);
  }
  return primaries;
}

Factorization stacking_tree(const StvSet& primaries) {
  const std::vector<Stv> sorted = to_vector(primaries);
  const std::vector<PyramidInterval> intervals = build_pyramids(sorted);
  if (intervals.empty()) throw Error(ErrorKind::precondition, "no pyramids to factorize");

  std::map<Stv, std::vector<std::size_t>> by_top;
  int top_time = std::numeric_limits<int>::min();
  for (std::size_t k = 0; k < intervals.size(); ++k) {
    Stv top = Pyramid(intervals[k]).pyramidion();
    by_top[top].push_back(k);
    top_time = std::max(top_time, top.time);
  }
  std::vector<std::size_t> tops;
  for (auto& [top, ks] : by_top)
    if (top.time == top_time) tops.insert(tops.end(), ks.begin(), ks.end());
  if (tops.size() != 1) throw Error(ErrorKind::precondition, "no unique pyramid of maximal time");

  Factorization f;
  std::vector<char> found(intervals.size(), 0);
  std::deque<std::size_t> queue{tops.front()};
  found[tops.front()] = 1;
  f.nodes.push_back({intervals[tops.front()], std::nullopt});
  std::vector<std::size_t> slot_of(intervals.size());
  slot_of[tops.front()] = 0;
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    const Pyramid parent(intervals[cur]);
    for (const Stv& v : parent.region()) {
      if (v == parent.pyramidion()) continue;
      auto it = by_top.find(v);
      if (it == by_top.end()) continue;
      for (std::size_t k : it->second) {
        if (found[k]) continue;
        found[k] = 1;
        slot_of[k] = f.nodes.size();
        f.nodes.push_back({intervals[k], slot_of[cur]});
        queue.push_back(k);
      }
    }
  }
  if (f.nodes.size() != intervals.size())
    throw Error(ErrorKind::precondition, "pyramids are not stacked into a single tree");
  return f;
}

Factorization factorize(const ActivationDiagram& chinampa) {
  if (!is_chinampa(chinampa)) throw Error(ErrorKind::precondition, "factorize needs a chinampa");
  return stacking_tree(chinampa.primaries());
}

ActivationDiagram stack(const ActivationDiagram& base_diagram, int length, Stv attach) {
  if (length < 2) throw Error(ErrorKind::domain, "stacked pyramid needs length >= 2");
  if (!base_diagram.is_active(attach)) throw Error(ErrorKind::invalid_attachment, "attach vertex is not activated");

  const std::vector<PyramidInterval> existing = build_pyramids(to_vector(base_diagram.primaries()));
  bool inside = false;
  for (const PyramidInterval& iv : existing) {
    Pyramid p(iv);
    if (p.contains(attach) && p.pyramidion() != attach) inside = true;
  }
  if (!inside) throw Error(ErrorKind::invalid_attachment, "attach vertex is a pyramidion or lies outside every pyramid");

  const Pyramid added = Pyramid::with_pyramidion(attach, length);
  if (added.base().t < 0 || added.base().lp < 1)
    throw Error(ErrorKind::invalid_attachment, "stacked pyramid leaves the path");
  const std::vector<Stv> region = added.region();
  for (const PyramidInterval& iv : existing) {
    Pyramid p(iv);
    if (std::all_of(region.begin(), region.end(), [&](Stv c) { return p.contains(c); }))
      throw Error(ErrorKind::invalid_attachment, "stacked pyramid lies inside an existing one");
  }

  StvSet merged;
  for (const Stv& p : base_diagram.primaries())
    if (!(added.contains(p) && p.time > added.base().t)) merged.insert(p);
  for (const Stv& c : added.base_cells())
    if (!base_diagram.secondaries().contains(c)) merged.insert(c);

  ActivationDiagram result = activation_closure(base_diagram.network(), merged);
  StvSet expected = base_diagram.activated();
  expected.insert(region.begin(), region.end());
  if (is_redundant(result)) throw Error(ErrorKind::redundancy, "stacking fires a primary vertex");
  // A proper stacking adds one factor and leaves the others alone.
  std::vector<PyramidInterval> wanted = existing;
  wanted.push_back(added.base());
  std::sort(wanted.begin(), wanted.end());
  if (result.activated() != expected || build_pyramids(to_vector(result.primaries())) != wanted)
    throw Error(ErrorKind::redundancy, "stacked pyramid merges with or swallows an existing one");
  return result;
}

int Intersection::profit() const {
  switch (kind) {
    case Kind::empty: return 0;
    case Kind::point: return -1;
    case Kind::pyramid: return pyramid_profit(pyramid->length());
  }
  return 0;
}

namespace {

// A pyramid region is {x <= rp, s >= t, x - s >= lp - t}; intersections keep that shape.
struct Wedge {
  int t;
  int rp;
  int diag;

  static Wedge of(const PyramidInterval& p) { return {p.t, p.rp, p.lp - p.t}; }
  Wedge meet(const Wedge& o) const { return {std::max(t, o.t), std::min(rp, o.rp), std::max(diag, o.diag)}; }
  int length() const { return rp - (diag + t) + 1; }
};

}  // namespace

Intersection intersect(const Pyramid& a, const Pyramid& b) {
  const Wedge w = Wedge::of(a.base()).meet(Wedge::of(b.base()));
  Intersection out;
  if (w.length() <= 0) return out;
  if (w.length() == 1) {
    out.kind = Intersection::Kind::point;
    out.point = Stv{w.rp, w.t};
    return out;
  }
  out.kind = Intersection::Kind::pyramid;
  out.pyramid = PyramidInterval{w.t, w.diag + w.t, w.rp};
  return out;
}

int inclusion_exclusion_profit(const Factorization& factorization) {
  const auto& nodes = factorization.nodes;
  long total = 0;
  // Supersets of an empty intersection are empty, so the walk prunes there.
  std::function<void(std::size_t, Wedge, int)> walk = [&](std::size_t next, Wedge acc, int size) {
    for (std::size_t k = next; k < nodes.size(); ++k) {
      const Wedge w = size == 0 ? Wedge::of(nodes[k].pyramid) : acc.meet(Wedge::of(nodes[k].pyramid));
      const int len = w.length();
      if (len <= 0) continue;
      const int sign = (size % 2 == 0) ? 1 : -1;
      total += sign * (len == 1 ? -1 : pyramid_profit(len));
      walk(k + 1, w, size + 1);
    }
  };
  walk(0, Wedge{0, 0, 0}, 0);
  return static_cast<int>(total);
}

}  // namespace chinampa
