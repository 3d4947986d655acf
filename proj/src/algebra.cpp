#include "chinampa/algebra.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "chinampa/cascade_engine.hpp"
#include "chinampa/errors.hpp"

namespace chinampa {

namespace {

void check_config(const StimulusConfig& a) {
  if (a.width < 0) throw Error(ErrorKind::domain, "negative width");
  for (const Stv& s : a.stimuli)
    if (s.vertex < 1 || s.vertex > a.width || s.time < 0)
      throw Error(ErrorKind::domain, "stimulus outside the path");
}

void check_permutation(const Permutation& sigma, int width) {
  if (static_cast<int>(sigma.size()) != width) throw Error(ErrorKind::domain, "permutation has the wrong width");
  std::vector<bool> hit(width + 1, false);
  for (int image : sigma) {
    if (image < 1 || image > width || hit[image]) throw Error(ErrorKind::domain, "not a bijection");
    hit[image] = true;
  }
}

// Union-find over activated cells.
struct Pieces {
  std::map<Stv, Stv> parent;

  Stv find(Stv v) {
    Stv root = v;
    while (parent[root] != root) root = parent[root];
    while (parent[v] != root) {
      Stv next = parent[v];
      parent[v] = root;
      v = next;
    }
    return root;
  }
  void join(Stv a, Stv b) { parent[find(a)] = find(b); }
};

}  // namespace

StimulusConfig overlay(const StimulusConfig& a, const StimulusConfig& b) {
  if (a.width != b.width) throw Error(ErrorKind::domain, "overlay needs equal widths");
  check_config(a);
  check_config(b);
  StimulusConfig out = a;
  out.stimuli.insert(b.stimuli.begin(), b.stimuli.end());
  return out;
}

StimulusConfig disjoint_union(const StimulusConfig& a, const StimulusConfig& b) {
  check_config(a);
  check_config(b);
  StimulusConfig out{a.width + b.width, a.stimuli};
  for (const Stv& s : b.stimuli) out.stimuli.insert({s.vertex + a.width, s.time});
  return out;
}

StimulusConfig permute(const Permutation& sigma, const StimulusConfig& a) {
  check_permutation(sigma, a.width);
  check_config(a);
  StimulusConfig out{a.width, {}};
  for (const Stv& s : a.stimuli) out.stimuli.insert({sigma[s.vertex - 1], s.time});
  return out;
}

StimulusConfig operad_act(const Permutation& sigma, const StimulusConfig& g, const std::vector<StimulusConfig>& parts) {
  StimulusConfig joined;
  for (const StimulusConfig& part : parts) joined = disjoint_union(joined, part);
  if (joined.width != g.width) throw Error(ErrorKind::domain, "part widths must add up to the outer width");
  return overlay(permute(sigma, joined), g);
}

Permutation identity_permutation(int width) {
  Permutation id(width);
  std::iota(id.begin(), id.end(), 1);
  return id;
}

Permutation block_sum(const Permutation& sigma, const Permutation& tau) {
  Permutation out = sigma;
  const int shift = static_cast<int>(sigma.size());
  for (int image : tau) out.push_back(image + shift);
  return out;
}

Permutation braiding(int m, int n) {
  Permutation out;
  for (int r = 1; r <= m + n; ++r) out.push_back(r <= m ? r + n : r - m);
  return out;
}

ActivationGraphSet proy(const StimulusConfig& a) {
  check_config(a);
  ActivationGraphSet out;
  out.width = a.width;
  if (a.stimuli.empty()) return out;

  const ActivationDiagram d = activation_closure(make_path(a.width), a.stimuli);
  StvSet fired = d.secondaries();
  fired.insert(d.redundant_primaries().begin(), d.redundant_primaries().end());
  StvSet kept_primary;
  for (const Stv& p : d.primaries())
    if (!fired.contains(p)) kept_primary.insert(p);

  Pieces pieces;
  for (const Stv& v : fired) pieces.parent[v] = v;
  for (const Stv& v : kept_primary) pieces.parent[v] = v;
  for (const Stv& v : fired)
    for (Stv up : {Stv{v.vertex, v.time + 1}, Stv{v.vertex + 1, v.time + 1}})
      if (fired.contains(up)) pieces.join(v, up);
  for (const Stv& p : kept_primary)
    for (Stv up : {Stv{p.vertex, p.time + 1}, Stv{p.vertex + 1, p.time + 1}})
      if (fired.contains(up)) pieces.join(p, up);

  std::map<Stv, ActivationGraph> by_root;
  for (const Stv& v : fired) by_root[pieces.find(v)].secondary.insert(v);
  for (const Stv& p : kept_primary) by_root[pieces.find(p)].primary.insert(p);

  for (auto& [root, graph] : by_root) out.components.push_back(std::move(graph));
  auto anchor = [](const ActivationGraph& g) {
    Stv lo{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
    for (const StvSet* part : {&g.primary, &g.secondary})
      for (const Stv& v : *part) {
        lo.time = std::min(lo.time, v.time);
        lo.vertex = std::min(lo.vertex, v.vertex);
      }
    return std::pair{lo.time, lo.vertex};
  };
  std::sort(out.components.begin(), out.components.end(), [&](const ActivationGraph& x, const ActivationGraph& y) {
    const auto ax = anchor(x), ay = anchor(y);
    if (ax != ay) return ax < ay;
    return std::pair{x.primary, x.secondary} < std::pair{y.primary, y.secondary};
  });
  return out;
}

StimulusConfig incl(const ActivationGraphSet& graphs) {
  StimulusConfig out{graphs.width, {}};
  for (const ActivationGraph& g : graphs.components) out.stimuli.insert(g.primary.begin(), g.primary.end());
  return out;
}

StimulusConfig normalize_e(const StimulusConfig& a) { return incl(proy(a)); }

}  // namespace chinampa
