#include <doctest.h>
#include <omp.h>

#include <cstdlib>

#include "chinampa/cascade_engine.hpp"
#include "chinampa/enumeration.hpp"
#include "chinampa/errors.hpp"
#include "chinampa/pyramid_calculus.hpp"
#include "chinampa/triangular_sequences.hpp"

using namespace chinampa;

namespace {

StackProfile profile(const std::string& text) { return StackProfile::parse(text); }

std::vector<BigCount> big(std::initializer_list<long> values) { return {values.begin(), values.end()}; }

}  // namespace

TEST_CASE("profile parsing") {
  const StackProfile p = profile("4:2,3:1");
  CHECK(p.counts == std::map<int, int>{{3, 1}, {4, 2}});
  CHECK(p.to_string() == "3:1,4:2");
  CHECK(p.max_length() == 4);
  CHECK(profile("2:5").pure_chain());
  CHECK_FALSE(p.pure_chain());
  CHECK(p.accepts({{2, 3}, {3, 1}, {4, 2}}));
  CHECK_FALSE(p.accepts({{3, 1}, {4, 1}}));
  CHECK_FALSE(profile("2:2").accepts({{2, 3}}));
  for (const char* bad : {"", "3", "3:x", "x:1", "3:1,3:2", "3:1;4:1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(profile(bad), Error);
  }
  CHECK_THROWS_AS(profile("3:0"), Error);
  CHECK_THROWS_AS(profile("2:1,3:1"), Error);
}

TEST_CASE("counts from the closed forms") {
  CHECK(count_chinampas(3, profile("3:1")) == 1);
  CHECK(count_chinampas(4, profile("3:1")) == 5);
  CHECK(count_chinampas(4, profile("3:2")) == 2);
  for (int n = 0; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(count_chinampas(n + 3, profile("3:1")) == profit0_closed_form(n));
  }
  const EgfSeries profit1 = profit1_series(5);
  for (int n = 0; n < 5; ++n) {
    CAPTURE(n);
    CHECK(count_chinampas(n + 4, profile("3:2")) == profit1[n]);
  }
  CHECK(count_chinampas(3, profile("4:1")) == 0);
  CHECK(count_chinampas(2, profile("3:1")) == 0);
}

TEST_CASE("pyr(2) chains") {
  CHECK(count_pyr2_chains(2) == 1);
  CHECK(count_pyr2_chains(4) == 4);
  CHECK(count_pyr2_chains(6) == 16);
  for (int n = 2; n <= 9; ++n) CHECK(count_pyr2_chains(n) == (BigCount(1) << (n - 2)));
  CHECK_THROWS_AS(count_pyr2_chains(1), Error);
}

TEST_CASE("profit-0 closed form") {
  CHECK(profit0_closed_form(0) == 1);
  CHECK(profit0_closed_form(2) == 16);
  CHECK(profit0_closed_form(4) == 112);
  CHECK(profit0_closed_form(60) == BigCount(182) << 59);
  CHECK_THROWS_AS(profit0_closed_form(-1), Error);
}

TEST_CASE("exponential generating functions") {
  CHECK(egf_expand(big({1, 3}), 2, 1, 6) == big({1, 5, 16, 44, 112, 272}));
  const EgfSeries profit1 = egf_expand(big({4, 18, 9}), 2, 2, 3);
  CHECK(profit1 == big({2, 13, 53}));
  CHECK(profit1_series(5) == big({2, 13, 53, 178, 536}));
  CHECK(egf_expand(big({1, 3}), 2, 1, 0).empty());
  try {
    egf_expand(big({1}), 1, 2, 3);
    FAIL("expected an exactness error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::exactness);
  }
}

TEST_CASE("family verification") {
  for (const FamilyRow& row : verify_family(Family::profit0, 0, 4)) CHECK(row.match);
  for (const FamilyRow& row : verify_family(Family::pyr2_chains, 2, 8)) CHECK(row.match);
  for (const FamilyRow& row : verify_family(Family::profit1, 0, 3)) CHECK(row.match);
  const auto repeated = verify_family(Family::repeated_pyramid, 0, 3);
  CHECK(repeated[2].canvas == 5);
  CHECK(repeated[2].brute_force == 4);
  for (const FamilyRow& row : repeated) CHECK(row.match);
  for (const FamilyRow& row : verify_family(Family::repeated_pyramid, 0, 2, 4)) CHECK(row.match);
  CHECK(parse_family("pyr2") == Family::pyr2_chains);
  CHECK_THROWS_AS(parse_family("profit9"), Error);
}

TEST_CASE("profit-2 canvases") {
  CHECK(count_chinampas(5, profile("3:3")) == 4);
  CHECK(count_chinampas(5, profile("4:1")) == 7);
}

TEST_CASE("listed chinampas are chinampas with the right profile") {
  for (const char* text : {"3:1", "3:2", "4:1", "3:3", "2:5"}) {
    const StackProfile p = profile(text);
    for (int n = p.max_length(); n <= 6; ++n) {
      const auto listed = list_chinampas(n, p);
      CHECK(BigCount(listed.size()) == count_chinampas(n, p));
      for (const CanvasRows& rows : listed) {
        const ActivationDiagram d = activation_closure(make_path(n), canvas_primaries(rows));
        REQUIRE(is_chinampa(d) == !p.pure_chain());
        REQUIRE(d.activated() == canvas_cells(rows));
        REQUIRE(d.is_active({n, n - 1}));
        const Factorization f = stacking_tree(d.primaries());
        REQUIRE(p.accepts(f.signature()));
        if (p.pure_chain()) continue;
        for (const FactorNode& node : f.nodes) REQUIRE(node.pyramid.length() <= max_pyramid_length(profit(d)));
      }
    }
  }
}

TEST_CASE("pruning never drops a counted chinampa") {
  const SearchOptions open{false, false};
  for (const char* text : {"3:1", "3:2", "4:1", "3:3"}) {
    const StackProfile p = profile(text);
    for (int n = p.max_length(); n <= 6; ++n) {
      CAPTURE(text);
      CAPTURE(n);
      CHECK(count_chinampas(n, p, open) == count_chinampas(n, p));
    }
  }
}

TEST_CASE("stacking search agrees with the subset census") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const ProfitCensus census = subset_census_serial(n);
    CHECK(subset_census_parallel(n) == census);
    if (n >= 3) {
      CHECK(census.at(0) == count_chinampas(n, profile("3:1")));
    }
    if (n >= 4) {
      CHECK(census.at(1) == count_chinampas(n, profile("3:2")));
    }
  }
  const ProfitCensus five = subset_census_serial(5);
  CHECK(five.at(2) == count_chinampas(5, profile("3:3")) + count_chinampas(5, profile("4:1")));
}

TEST_CASE("parallel kernels agree with several workers") {
  const int before = omp_get_max_threads();
  omp_set_num_threads(4);
  CHECK(subset_census_parallel(6) == subset_census_serial(6));
  for (int R = 2; R <= 5; ++R) CHECK(enumerate_triseq_parallel(3, R) == enumerate_triseq(3, R));
  omp_set_num_threads(before);
}

TEST_CASE("worker cap from the environment") {
  const int before = omp_get_max_threads();
  setenv("CHINAMPA_THREADS", "1", 1);
  apply_thread_cap();
  CHECK(omp_get_max_threads() == 1);
  unsetenv("CHINAMPA_THREADS");
  omp_set_num_threads(before);
}
