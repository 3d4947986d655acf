// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "chinampa/algebra.hpp"
#include "chinampa/cascade_engine.hpp"
#include "chinampa/enumeration.hpp"
#include "chinampa/errors.hpp"
#include "chinampa/persistent_cascades.hpp"
#include "chinampa/pyramid_calculus.hpp"
#include "chinampa/triangular_sequences.hpp"
#include "support/generators.hpp"

using namespace chinampa;
using namespace chinampa::testkit;

namespace {

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<bool(std::ostream&)> check;
};

bool profit0_counts(std::ostream& why) {
  const std::vector<BigCount> expected{1, 5, 16, 44, 112};
  for (int n = 0; n <= 4; ++n) {
    const BigCount brute = count_chinampas(n + 3, StackProfile::parse("3:1"));
    if (brute != profit0_closed_form(n) || brute != expected[n]) {
      why << "n=" << n << " brute " << brute << " formula " << profit0_closed_form(n);
      return false;
    }
  }
  return true;
}

bool profit1_counts(std::ostream& why) {
  const EgfSeries series = egf_expand({4, 18, 9}, 2, 2, 4);
  if (series.front() != 2) return why << "q_0 = " << series.front(), false;
  for (int n = 0; n <= 3; ++n) {
    const BigCount brute = count_chinampas(n + 4, StackProfile::parse("3:2"));
    if (brute != series[n]) return why << "n=" << n << " brute " << brute << " egf " << series[n], false;
  }
  return true;
}

bool chain_counts(std::ostream& why) {
  for (int n = 2; n <= 8; ++n)
    if (count_pyr2_chains(n) != (BigCount(1) << (n - 2))) return why << "n=" << n << " gives " << count_pyr2_chains(n), false;
  return true;
}

bool triseq_counts(std::ostream& why) {
  const std::vector<BigCount> r3{1, 8, 35, 112};
  for (int K = 0; K <= 3; ++K)
    if (enumerate_triseq(K, 3) != r3[K]) return why << "R=3 K=" << K << " gives " << enumerate_triseq(K, 3), false;
  if (enumerate_triseq(0, 4) != 1 || enumerate_triseq(1, 4) != 16) return why << "R=4 leading terms differ", false;
  return true;
}

bool series_regression(std::ostream& why) {
  const std::vector<std::vector<long>> printed{
      {1, 8, 35, 112, 294, 672, 1386, 2640, 4719, 8008, 13013},
      {1, 16, 126, 672, 2772, 9504, 28314, 75504, 184041},
      {1, 32, 462, 4224, 28314, 151008, 674817},
      {1, 64, 1716, 27456, 306735},
      {1, 128, 6435},
  };
  for (int R = 3; R <= 7; ++R) {
    const std::vector<BigCount> got = expand_rational_series(R, 15);
    const auto& want = printed[R - 3];
    for (std::size_t k = 0; k < want.size(); ++k) {
      const std::size_t n = 2 * R - 1 + k;
      if (got[n] != want[k]) return why << "R=" << R << " x^" << n << ": " << got[n] << " vs " << want[k], false;
    }
  }
  return true;
}

bool rule192_equivalence(std::ostream& why) {
  Rng rng(1192);
  for (int run = 0; run < 1000; ++run) {
    const int width = uniform(rng, 1, 12);
    const int horizon = uniform(rng, 0, 20);
    const StvSet stimuli = random_stimuli(rng, width, 10, horizon);
    const ActivationDiagram d = activation_closure(make_path(width), stimuli, horizon);
    if (rule192_evolve(to_grid(stimuli, width, horizon + 1), width, horizon) != to_grid(d.activated(), width, horizon + 1))
      return why << "instance " << run, false;
  }
  return true;
}

bool query_oracle(std::ostream& why) {
  Rng rng(4004);
  for (int run = 0; run < 10000; ++run) {
    const int width = uniform(rng, 1, 12);
    const StvSet stimuli = random_stimuli(rng, width, 10, 12);
    const ActivationDiagram d = activation_closure(make_path(width), stimuli);
    const Stv q{uniform(rng, 1, width), uniform(rng, 0, d.horizon())};
    if (will_vertex_be_activated(q.vertex, q.time, to_vector(stimuli)) != d.is_active(q))
      return why << "pair " << run << " query (" << q.vertex << "," << q.time << ")", false;
  }
  return true;
}

std::vector<ActivationDiagram> sample_chinampas(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<ActivationDiagram> out;
  for (int k = 0; k < count; ++k) out.push_back(random_chinampa(rng));
  return out;
}

bool factorization_soundness(std::ostream& why) {
  int k = 0;
  for (const ActivationDiagram& c : sample_chinampas(808, 500)) {
    const Factorization f = factorize(c);
    if (activation_closure(c.network(), f.restacked_primaries()).activated() != c.activated())
      return why << "restack differs on sample " << k, false;
    if (!(factorize(c) == f)) return why << "order changed on sample " << k, false;
    if (inclusion_exclusion_profit(f) != profit(c))
      return why << "profit " << profit(c) << " vs " << inclusion_exclusion_profit(f) << " on sample " << k, false;
    ++k;
  }
  return true;
}

bool structure_theorems(std::ostream& why) {
  int k = 0;
  for (const ActivationDiagram& c : sample_chinampas(909, 500)) {
    try {
      const Stv spike = find_spike(c);
      const Factorization f = stacking_tree(c.primaries());
      if (Pyramid(f.nodes.front().pyramid).pyramidion() != spike) return why << "top pyramid misses the spike, sample " << k, false;
      for (const FactorNode& n : f.nodes)
        if (n.pyramid.length() > max_pyramid_length(profit(c)))
          return why << "pyr(" << n.pyramid.length() << ") at profit " << profit(c), false;
    } catch (const Error& e) {
      return why << "sample " << k << ": " << e.what(), false;
    }
    ++k;
  }
  return true;
}

bool persistence(std::ostream& why) {
  Rng rng(610);
  for (int run = 0; run < 400; ++run) {
    const int n = uniform(rng, 3, 8);
    std::vector<VertexId> vertices;
    std::vector<Edge> edges;
    for (int v = 1; v <= n; ++v) {
      vertices.push_back(v);
      edges.push_back({v, v, uniform(rng, 1, 4), 1});
      edges.push_back({v, v % n + 1, uniform(rng, 1, 4), 1});
    }
    const Network net(vertices, edges);
    const VertexSet S(vertices.begin(), vertices.end());
    const PersistenceSchedule s = schedule_infinite(net, S);
    if (!verify_persistence(net, s.stimuli, S, default_persistence_horizon(s.M))) return why << "cycle " << run << " dies", false;
    const std::size_t baseline = synfire_schedule(net, S).size();
    bool uneven = false;
    for (const auto& [v, start] : s.window_start) uneven |= start != s.window_start.begin()->second;
    if (s.stimuli.size() > baseline || (uneven && s.stimuli.size() >= baseline))
      return why << "cycle " << run << ": " << s.stimuli.size() << " vs synfire " << baseline, false;
  }
  return true;
}

bool algebra_laws(std::ostream& why) {
  Rng rng(5151);
  auto config = [&](int w) { return StimulusConfig{w, random_stimuli(rng, w, 6, 5)}; };
  auto shuffled = [&](int w) {
    Permutation p = identity_permutation(w);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
  };
  for (int run = 0; run < 500; ++run) {
    const int m = uniform(rng, 1, 4), n = uniform(rng, 1, 4);
    const auto a = config(m), b = config(m), c = config(m), g = config(n), g2 = config(n);
    const Permutation sigma = shuffled(m), tau = shuffled(n);
    const StimulusConfig e_abc = normalize_e(overlay(overlay(a, b), c));
    const std::vector<std::pair<const char*, bool>> laws{
        {"overlay associative", overlay(overlay(a, b), c) == overlay(a, overlay(b, c))},
        {"overlay commutative", overlay(a, b) == overlay(b, a)},
        {"overlay idempotent", overlay(a, a) == a},
        {"overlay unit", overlay(a, StimulusConfig::unit(m)) == a},
        {"union associative", disjoint_union(disjoint_union(a, g), b) == disjoint_union(a, disjoint_union(g, b))},
        {"union unit", disjoint_union(StimulusConfig::unit(m), StimulusConfig::unit(n)) == StimulusConfig::unit(m + n)},
        {"braiding", permute(braiding(m, n), disjoint_union(a, g)) == disjoint_union(g, a)},
        {"equivariance", permute(block_sum(sigma, tau), disjoint_union(a, g)) == disjoint_union(permute(sigma, a), permute(tau, g))},
        {"action distributes", permute(sigma, overlay(a, b)) == overlay(permute(sigma, a), permute(sigma, b))},
        {"interchange", overlay(disjoint_union(a, g), disjoint_union(b, g2)) == disjoint_union(overlay(a, b), overlay(g, g2))},
        {"proy retraction", proy(incl(proy(a))) == proy(a)},
        {"e idempotent", normalize_e(normalize_e(a)) == normalize_e(a)},
        {"e mixed left", normalize_e(overlay(normalize_e(overlay(a, b)), c)) == e_abc},
        {"e mixed right", normalize_e(overlay(a, normalize_e(overlay(b, c)))) == e_abc},
    };
    for (const auto& [name, ok] : laws)
      if (!ok) return why << name << " fails on case " << run, false;
  }
  const StimulusConfig a{2, {{1, 0}, {2, 0}}}, b{2, {{2, 1}}};
  if (overlay(normalize_e(a), normalize_e(b)) == normalize_e(overlay(a, b))) return why << "witness lost", false;
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "profit-0 counts", 60, profit0_counts},
      {2, "profit-1 counts", 300, profit1_counts},
      {3, "pyr(2) chain counts", 30, chain_counts},
      {4, "triangular sequence counts", 120, triseq_counts},
      {5, "stored series coefficients", 0, series_regression},
      {6, "rule 192 equivalence", 0, rule192_equivalence},
      {7, "activation query oracle", 0, query_oracle},
      {8, "factorization soundness", 0, factorization_soundness},
      {9, "structure theorems", 0, structure_theorems},
      {10, "persistent schedules", 30, persistence},
      {11, "algebra laws", 0, algebra_laws},
  };
  apply_thread_cap();
  int failures = 0;
  for (const Criterion& c : criteria) {
    std::ostringstream why;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.check(why);
    } catch (const std::exception& e) {
      why << "threw: " << e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.budget_seconds > 0 && seconds > c.budget_seconds) {
      ok = false;
      why << "over the " << c.budget_seconds << " s budget";
    }
    std::cout << "criterion " << c.id << ' ' << (ok ? "PASS" : "FAIL") << ' ' << c.name << " (" << seconds << " s)";
    if (!ok) std::cout << ": " << why.str();
    std::cout << '\n';
    failures += ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
