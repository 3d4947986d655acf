#include "chinampa/triangular_sequences.hpp"

#include <algorithm>
#include <sstream>

#include "chinampa/errors.hpp"

namespace chinampa {

TriangularSeq::TriangularSeq(int R, int K) : rows_(R), spread_(K) {
  if (R < 1) throw Error(ErrorKind::domain, "R must be at least 1");
  if (K < 0) throw Error(ErrorKind::domain, "K must be nonnegative");
  entries_.assign(R * (R + 1) / 2, 0);
}

int TriangularSeq::slot(int j, int i) const {
  if (i < 1 || i > j || j > rows_) throw Error(ErrorKind::shape, "entry index outside the triangle");
  return (j - 1) * j / 2 + (i - 1);
}

bool TriangularSeq::complete() const {
  return std::none_of(entries_.begin(), entries_.end(), [](int v) { return v == 0; });
}

std::string TriangularSeq::layout() const {
  int cell = 1;
  for (int v : entries_) cell = std::max(cell, static_cast<int>(std::to_string(v).size()));
  std::ostringstream out;
  for (int j = 1; j <= rows_; ++j) {
    out << std::string(static_cast<std::size_t>((rows_ - j) * (cell + 1)), ' ');
    for (int i = j; i >= 1; --i) {
      const std::string v = std::to_string(at(j, i));
      out << std::string(cell - v.size(), ' ') << v << (i > 1 ? " " : "");
    }
    out << '\n';
  }
  return out.str();
}

bool is_valid_triseq(const TriangularSeq& seq) {
  if (!seq.complete()) throw Error(ErrorKind::shape, "triangular sequence has missing entries");
  const int R = seq.R(), K = seq.K();
  for (int i = 1; i <= R; ++i)
    for (int j = i; j <= R; ++j) {
      const int v = seq.at(j, i);
      if (v < i || v > K + i) return false;
      if (j > i && v > seq.at(j - 1, i)) return false;
      if (i >= 2 && v <= seq.at(j - 1, i - 1)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Roots under apyr(3K)
// ---------------------------------------------------------------------------

namespace {

RootConfig empty_config(int K, int R) {
  RootConfig c;
  c.K = K;
  c.R = R;
  c.roots.assign(K, std::vector<int>(R, 0));
  for (int d = 1; d <= R; ++d) c.board.emplace_back(K + d, false);
  return c;
}

void check_root_moves(const RootConfig& c) {
  if (static_cast<int>(c.roots.size()) != c.K)
    throw Error(ErrorKind::bijection_domain, "expected one root per block");
  for (int k = 0; k < c.K; ++k) {
    const auto& root = c.roots[k];
    if (static_cast<int>(root.size()) != c.R) throw Error(ErrorKind::bijection_domain, "root has the wrong depth");
    if (root[0] < 2 || root[0] > 3 * c.K) throw Error(ErrorKind::bijection_domain, "root does not hang from the base");
    for (int d = 1; d < c.R; ++d)
      if (root[d] != root[d - 1] && root[d] != root[d - 1] - 1)
        throw Error(ErrorKind::bijection_domain, "root must step straight down or one to the left");
    if (k > 0)
      for (int d = 0; d < c.R; ++d)
        if (root[d] < c.roots[k - 1][d] + 3)
          throw Error(ErrorKind::bijection_domain, "neighbouring roots are too close");
  }
}

StvSet roots_region(const RootConfig& c) {
  StvSet cells;
  const int base_t = c.R, shift = c.R;
  for (int b = 0; b < 3 * c.K; ++b)
    for (int x = 1 + b; x <= 3 * c.K; ++x) cells.insert({x + shift, base_t + b});
  for (const auto& root : c.roots)
    for (int d = 1; d <= c.R; ++d) {
      const int y = root[d - 1] + shift;
      cells.insert({y - 1, base_t - d});
      cells.insert({y, base_t - d});
    }
  return cells;
}

}  // namespace

RootConfig triseq_to_roots(const TriangularSeq& seq) {
  if (!is_valid_triseq(seq)) throw Error(ErrorKind::bijection_domain, "not a valid triangular sequence");
  const int K = seq.K(), R = seq.R();
  RootConfig c = empty_config(K, R);
  for (int d = 1; d <= R; ++d) {
    for (int i = 1; i <= d; ++i) c.board[d - 1][seq.at(d, i) - 1] = true;
    int block = 0, whites_left = 0;
    for (int slot = 0; slot < K + d; ++slot) {
      const int column = K + d - slot;
      if (c.board[d - 1][column - 1]) {
        ++whites_left;
      } else {
        ++block;
        c.roots[block - 1][d - 1] = 3 * block - d + whites_left;
      }
    }
  }
  return c;
}

TriangularSeq roots_to_triseq(const RootConfig& config) {
  check_root_moves(config);
  const int K = config.K, R = config.R;
  RootConfig rebuilt = empty_config(K, R);
  rebuilt.roots = config.roots;
  TriangularSeq seq(R, K);
  for (int d = 1; d <= R; ++d) {
    // Block k sits after k-1 blocks and whites_left whites.
    std::vector<bool> black(K + d + 1, false);
    for (int k = 1; k <= K; ++k) {
      const int whites_left = config.roots[k - 1][d - 1] - 3 * k + d;
      if (whites_left < 0 || whites_left > d) throw Error(ErrorKind::bijection_domain, "root leaves the board");
      black[K + d - (whites_left + k - 1)] = true;
    }
    int i = 0;
    for (int column = 1; column <= K + d; ++column) {
      rebuilt.board[d - 1][column - 1] = !black[column];
      if (!black[column]) seq.set(d, ++i, column);
    }
  }
  if (!config.board.empty() && config.board != rebuilt.board)
    throw Error(ErrorKind::bijection_domain, "board marks disagree with the roots");
  if (!is_valid_triseq(seq)) throw Error(ErrorKind::bijection_domain, "roots do not encode a triangular sequence");
  const ActivationDiagram diagram = roots_diagram(rebuilt);
  if (diagram.activated() != roots_region(rebuilt) || is_redundant(diagram))
    throw Error(ErrorKind::bijection_domain, "roots are redundant under the pyramid");
  return seq;
}

ActivationDiagram roots_diagram(const RootConfig& config) {
  const StvSet region = roots_region(config);
  StvSet primaries;
  for (const Stv& c : region)
    if (!(region.contains({c.vertex, c.time - 1}) && region.contains({c.vertex - 1, c.time - 1})))
      primaries.insert(c);
  return activation_closure(make_path(std::max(1, 3 * config.K + config.R)), primaries);
}

// ---------------------------------------------------------------------------
// Printed rational series
// ---------------------------------------------------------------------------

std::vector<BigCount> RationalSeries::expand(int last) const {
  std::vector<BigCount> out(last + 1, 0);
  for (std::size_t k = 0; k < numerator.size(); ++k)
    if (shift + static_cast<int>(k) <= last) out[shift + k] = numerator[k];
  // Dividing by (1 - x) is a running sum.
  for (int e = 0; e < exponent; ++e)
    for (int m = 1; m <= last; ++m) out[m] += out[m - 1];
  return out;
}

RationalSeries triseq_series(int R) {
  auto big = [](std::initializer_list<long> coeffs) { return std::vector<BigCount>(coeffs.begin(), coeffs.end()); };
  switch (R) {
    case 3: return {big({1, 1}), 5, 7};
    case 4: return {big({1, 5, 5, 1}), 7, 11};
    case 5: return {big({1, 16, 70, 112, 70, 16, 1}), 9, 16};
    case 6: return {big({1, 42, 539, 2948, 7854, 10824, 7854, 2948, 539, 42, 1}), 11, 22};
    case 7:
      return {big({1, 99, 3129, 44739, 336819, 1450761, 3753841, 5999851, 5999851, 3753841, 1450761, 336819, 44739,
                   3129, 99, 1}),
              13, 29};
    default: throw Error(ErrorKind::domain, "series stored for R = 3..7 only");
  }
}

std::vector<BigCount> expand_rational_series(int R, int last) {
  const RationalSeries series = triseq_series(R);
  if (last < series.shift) throw Error(ErrorKind::domain, "expansion must reach the leading term");
  return series.expand(last);
}

StrictTableau strictify(const TriangularSeq& seq) {
  if (!is_valid_triseq(seq)) throw Error(ErrorKind::domain, "strictify needs a valid sequence");
  StrictTableau t;
  t.R = seq.R();
  t.K = seq.K();
  t.rows.assign(t.R, {});
  for (int j = 1; j <= t.R; ++j)
    for (int i = 1; i <= j; ++i) t.rows[j - 1].push_back(seq.at(j, i) + t.R - (j - i + 1));
  return t;
}

namespace {

// Fills T column by column (i = 1..R, j = i..R, top down).
std::uint64_t strict_fill(std::vector<std::vector<int>>& T, int R, int top, int i, int j) {
  if (i > R) return (T[R - 1][0] >= 1 && T[R - 1][R - 1] <= top) ? 1 : 0;
  if (j > R) return strict_fill(T, R, top, i + 1, i + 1);
  int hi = top;
  if (j > i) hi = std::min(hi, T[j - 2][i - 1] - 1);
  int lo = 1;
  if (i >= 2) lo = std::max(lo, T[j - 2][i - 2] + 1);
  std::uint64_t total = 0;
  for (int v = lo; v <= hi; ++v) {
    T[j - 1][i - 1] = v;
    total += strict_fill(T, R, top, i, j + 1);
  }
  return total;
}

BigCount binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigCount r = 1;
  for (int m = 1; m <= k; ++m) r = r * (n - k + m) / m;
  return r;
}

}  // namespace

BigCount count_strict_tableaux(int K, int R) {
  if (R < 1 || K < 0) throw Error(ErrorKind::domain, "need R >= 1 and K >= 0");
  std::vector<std::vector<int>> T(R);
  for (int j = 1; j <= R; ++j) T[j - 1].assign(j, 0);
  return BigCount(strict_fill(T, R, K + 2 * R - 1, 1, 1));
}

std::vector<DivisibilityRow> divisibility_report(int R, int n_max) {
  const std::vector<BigCount> q = expand_rational_series(R, std::max(n_max, triseq_series(R).shift));
  std::vector<DivisibilityRow> rows;
  for (int n = 2 * R - 1; n <= n_max; ++n) {
    DivisibilityRow row;
    row.n = n;
    row.q = q[n];
    row.p = binomial(n, 2 * R - 1);
    row.remainder = row.q % row.p;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace chinampa
