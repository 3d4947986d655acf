#include <doctest.h>

#include <string>

#include "chinampa/errors.hpp"
#include "chinampa/io.hpp"
#include "chinampa/persistent_cascades.hpp"
#include "support/generators.hpp"

using namespace chinampa;
using namespace chinampa::testkit;

namespace {

VertexSet all_of(const Network& n) { return {n.vertices().begin(), n.vertices().end()}; }

Network slow_edge_cycle(int slow_time) {
  std::vector<Edge> edges = make_cycle(3).edges();
  for (Edge& e : edges)
    if (e.src == 1 && e.dst == 2) e.travel_time = slow_time;
  return Network({1, 2, 3}, edges);
}

Network mixed_cycle() { return read_network_file(std::string(CHINAMPA_FIXTURES) + "/mixed_cycle.json"); }

}  // namespace

TEST_CASE("sufficient conditions") {
  CHECK(check_sufficient_conditions(make_cycle(3), all_of(make_cycle(3))));
  CHECK_FALSE(check_sufficient_conditions(make_path(4), all_of(make_path(4))));
  CHECK(first_unsupported_vertex(make_path(4), all_of(make_path(4))) == std::optional<VertexId>{1});
  CHECK(check_sufficient_conditions(make_clique(4), all_of(make_clique(4))));
  CHECK(check_sufficient_conditions(make_cycle(3), {}));
  CHECK_FALSE(check_sufficient_conditions(make_cycle(3), {1, 2}));

  std::vector<Edge> edges = make_cycle(3).edges();
  edges.push_back({4, 2, 1, -1});
  edges.push_back({4, 4, 1, 1});
  const Network inhibited({1, 2, 3, 4}, edges);
  CHECK(first_unsupported_vertex(inhibited, {1, 2, 3}) == std::optional<VertexId>{2});

  CHECK_THROWS_AS(check_sufficient_conditions(make_cycle(3), {7}), Error);
}

TEST_CASE("minimal windows on cycles") {
  const PersistenceSchedule unit = schedule_infinite(make_cycle(3), {1, 2, 3});
  CHECK(unit.M == 1);
  CHECK(unit.stimuli == StvSet{{1, 0}, {1, 1}, {2, 0}, {2, 1}, {3, 0}, {3, 1}});
  CHECK(synfire_schedule(make_cycle(3), {1, 2, 3}).size() == unit.stimuli.size());
  CHECK(verify_persistence(make_cycle(3), unit.stimuli, {1, 2, 3}, 50));

  const PersistenceSchedule slow = schedule_infinite(slow_edge_cycle(3), {1, 2, 3});
  CHECK(slow.M == 3);
  CHECK(slow.window_start == std::map<VertexId, int>{{1, 0}, {2, 2}, {3, 2}});
  CHECK(slow.stimuli.size() == 8);
  CHECK(synfire_schedule(slow_edge_cycle(3), {1, 2, 3}).size() == 12);
  CHECK(verify_persistence(slow_edge_cycle(3), slow.stimuli, {1, 2, 3}, default_persistence_horizon(slow.M)));

  const PersistenceSchedule none = schedule_infinite(make_cycle(3), {});
  CHECK(none.M == 0);
  CHECK(none.stimuli.empty());
}

TEST_CASE("unsupported sets are rejected by name") {
  try {
    schedule_infinite(make_path(3), {1, 2, 3});
    FAIL("expected a precondition error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::precondition);
    CHECK(std::string(e.what()).find("vertex 1") != std::string::npos);
  }
}

TEST_CASE("persistence checks") {
  CHECK_FALSE(verify_persistence(make_cycle(3), {}, {1, 2, 3}, 20));
  // On the unit cycle the last stimulus of a vertex is fired anyway.
  StvSet trimmed = schedule_infinite(make_cycle(3), {1, 2, 3}).stimuli;
  trimmed.erase({2, 1});
  CHECK(verify_persistence(make_cycle(3), trimmed, {1, 2, 3}, 50));
  trimmed.erase({1, 0});
  CHECK_FALSE(verify_persistence(make_cycle(3), trimmed, {1, 2, 3}, 50));
}

TEST_CASE("mixed travel times need fewer stimuli than synfire") {
  const Network net = mixed_cycle();
  const PersistenceSchedule s = schedule_infinite(net, all_of(net));
  CHECK(s.M == 2);
  CHECK(s.stimuli.size() == 7);
  CHECK(synfire_schedule(net, all_of(net)).size() == 9);
  CHECK(verify_persistence(net, s.stimuli, all_of(net), default_persistence_horizon(s.M)));
  StvSet broken = s.stimuli;
  broken.erase({1, 1});
  CHECK_FALSE(verify_persistence(net, broken, all_of(net), default_persistence_horizon(s.M)));
}

TEST_CASE("random cycles persist under their schedule") {
  Rng rng(27);
  int strict = 0;
  for (int run = 0; run < 300; ++run) {
    const int n = uniform(rng, 1, 6);
    std::vector<VertexId> vertices;
    std::vector<Edge> edges;
    for (int v = 1; v <= n; ++v) {
      vertices.push_back(v);
      edges.push_back({v, v, uniform(rng, 1, 3), 1});
      edges.push_back({v, v % n + 1, uniform(rng, 1, 4), 1});
    }
    if (n > 2 && uniform(rng, 0, 1)) edges.push_back({1, 3, uniform(rng, 1, 5), 1});
    const Network net(vertices, edges);
    const VertexSet S = all_of(net);
    REQUIRE(check_sufficient_conditions(net, S));
    const PersistenceSchedule s = schedule_infinite(net, S);
    REQUIRE(verify_persistence(net, s.stimuli, S, default_persistence_horizon(s.M)));
    const StvSet synfire = synfire_schedule(net, S);
    REQUIRE(s.stimuli.size() <= synfire.size());
    int lo = s.M, hi = 0;
    for (const auto& [v, start] : s.window_start) {
      lo = std::min(lo, s.M - start);
      hi = std::max(hi, s.M - start);
    }
    if (lo != hi) {
      REQUIRE(s.stimuli.size() < synfire.size());
      ++strict;
    }
  }
  CHECK(strict > 50);
}
