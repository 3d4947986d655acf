#pragma once

#include <string>
#include <vector>

#include "chinampa/cascade_engine.hpp"
#include "chinampa/enumeration.hpp"

namespace chinampa {

// Entries s_j^i for 1 <= i <= j <= R: j is the depth (row), i the column.
// Columns run weakly down from s_i^i to s_R^i inside [i, K+i]; diagonals are
// strict, s_j^i > s_{j-1}^{i-1}. A zero entry means "not filled in".
class TriangularSeq {
 public:
  TriangularSeq(int R, int K);

  int R() const { return rows_; }
  int K() const { return spread_; }
  int at(int j, int i) const { return entries_[slot(j, i)]; }
  void set(int j, int i, int value) { entries_[slot(j, i)] = value; }
  bool complete() const;

  // Rows j = 1..R, each printed s_j^j ... s_j^1 and right-aligned.
  std::string layout() const;

  friend bool operator==(const TriangularSeq&, const TriangularSeq&) = default;

 private:
  int slot(int j, int i) const;
  int rows_;
  int spread_;
  std::vector<int> entries_;
};

bool is_valid_triseq(const TriangularSeq& seq);

BigCount enumerate_triseq(int K, int R);
BigCount enumerate_triseq_parallel(int K, int R);
std::vector<TriangularSeq> list_triseq(int K, int R);

// K roots, each a column of R stacked pyr(2)s hanging under the base of
// apyr(3K) (positions 1..3K). roots[k][d-1] is the position of the top of
// root k's pyr(2) at depth d. board[d-1] has K+d cells numbered from 1;
// white cells sit at columns s_d^1..s_d^d, and column c lies at geometric
// slot K+d-c counted from the left.
struct RootConfig {
  int K = 0;
  int R = 0;
  std::vector<std::vector<int>> roots;
  std::vector<std::vector<bool>> board;

  friend bool operator==(const RootConfig&, const RootConfig&) = default;
};

RootConfig triseq_to_roots(const TriangularSeq& seq);
TriangularSeq roots_to_triseq(const RootConfig& config);
// apyr(3K) with the roots under it, shifted so every time and position fits a path.
ActivationDiagram roots_diagram(const RootConfig& config);

// x^shift * numerator(x) / (1 - x)^exponent.
struct RationalSeries {
  std::vector<BigCount> numerator;
  int shift = 0;
  int exponent = 0;

  // Coefficients of x^0 .. x^last.
  std::vector<BigCount> expand(int last) const;
};

RationalSeries triseq_series(int R);
std::vector<BigCount> expand_rational_series(int R, int last);

struct StrictTableau {
  int R = 0;
  int K = 0;
  std::vector<std::vector<int>> rows;  // rows[j-1][i-1] = T_j^i

  int at(int j, int i) const { return rows[j - 1][i - 1]; }
  friend bool operator==(const StrictTableau&, const StrictTableau&) = default;
  friend auto operator<=>(const StrictTableau&, const StrictTableau&) = default;
};

// T_j^i = s_j^i + (R - r) where r = j-i+1 is the display row of the entry.
StrictTableau strictify(const TriangularSeq& seq);
// Strict tableaux counted directly: strict columns and diagonals with
// T_R^1 >= 1 and T_R^R <= K+2R-1.
BigCount count_strict_tableaux(int K, int R);

struct DivisibilityRow {
  int n = 0;
  BigCount q;
  BigCount p;
  BigCount remainder;
};

// Rows n = 2R-1 .. n_max with p_n = C(n, 2R-1).
std::vector<DivisibilityRow> divisibility_report(int R, int n_max);

}  // namespace chinampa
