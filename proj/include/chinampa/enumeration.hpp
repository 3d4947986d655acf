#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chinampa/canvas.hpp"
#include "chinampa/stv.hpp"

namespace chinampa {

using BigCount = boost::multiprecision::cpp_int;

// Pyramid counts per length (>= 3). The single-key profile {2: m} asks for
// pure chains of m pyr(2)s; otherwise pyr(2)s are free.
struct StackProfile {
  std::map<int, int> counts;

  bool pure_chain() const { return counts.size() == 1 && counts.begin()->first == 2; }
  int max_length() const;
  // "3:1,4:2"
  static StackProfile parse(const std::string& text);
  std::string to_string() const;
  // Whether a factorization signature (lengths 2 included) fits this profile.
  bool accepts(const std::map<int, int>& signature) const;
};

struct SearchOptions {
  // Only try pyramid lengths the profile can still use.
  bool length_prune = true;
  // Drop partial stackings whose union is not closed under the firing rule.
  bool closure_prune = true;
};

// Chinampas whose minimal enclosing pyramid is exactly apyr(n) (apex
// activated, row 0 used), every primary feeding a secondary, with the
// profile's pyramid multiset. pyr(2) chains are counted with the same
// canvas rule but without the profit requirement.
BigCount count_chinampas(int n, const StackProfile& profile, const SearchOptions& options = {});
std::vector<CanvasRows> list_chinampas(int n, const StackProfile& profile, const SearchOptions& options = {});

BigCount count_pyr2_chains(int n);
BigCount profit0_closed_form(int n);

// q_0 .. q_{terms-1} of n! [x^n] p(x) e^{scale x} / divisor.
using EgfSeries = std::vector<BigCount>;
EgfSeries egf_expand(const std::vector<BigCount>& poly, int scale, int divisor, int terms);
EgfSeries profit1_series(int terms);

enum class Family { profit0, profit1, pyr2_chains, repeated_pyramid };

struct FamilyRow {
  int n = 0;  // family index: profit0 n -> canvas n+3, profit1 n -> n+4, chains canvas n, repeated k
  int canvas = 0;
  std::string profile;
  BigCount brute_force;
  BigCount closed_form;
  bool match = false;
};

Family parse_family(const std::string& name);
// repeated_pyramid rows are k = lo..hi with pyramids of `pyramid_length`.
std::vector<FamilyRow> verify_family(Family family, int lo, int hi, int pyramid_length = 3);

// Independent oracle: walks every non-redundant stimulus set inside apyr(n)
// row by row and tallies the countable ones by profit.
using ProfitCensus = std::map<int, BigCount>;
ProfitCensus subset_census_serial(int n);
ProfitCensus subset_census_parallel(int n);

// CHINAMPA_THREADS caps the OpenMP worker count when set.
void apply_thread_cap();

}  // namespace chinampa
