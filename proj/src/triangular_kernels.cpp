#include <omp.h>

#include <cstdint>
#include <vector>

#include "chinampa/errors.hpp"
#include "chinampa/triangular_sequences.hpp"

namespace chinampa {

namespace {

// Fills columns left to right, each from its diagonal entry downwards.
// visit(seq) is called for every complete valid sequence.
template <typename Visit>
void fill(TriangularSeq& seq, int i, int j, Visit& visit) {
  const int R = seq.R(), K = seq.K();
  if (i > R) {
    visit(seq);
    return;
  }
  if (j > R) {
    fill(seq, i + 1, i + 1, visit);
    return;
  }
  int hi = K + i;
  if (j > i) hi = std::min(hi, seq.at(j - 1, i));
  int lo = i;
  if (i >= 2) lo = std::max(lo, seq.at(j - 1, i - 1) + 1);
  for (int v = lo; v <= hi; ++v) {
    seq.set(j, i, v);
    fill(seq, i, j + 1, visit);
  }
  seq.set(j, i, 0);
}

void check_shape(int K, int R) {
  if (R < 1) throw Error(ErrorKind::domain, "R must be at least 1");
  if (K < 0) throw Error(ErrorKind::domain, "K must be nonnegative");
}

// All weakly decreasing first columns s_1^1 >= ... >= s_R^1 in [1, K+1].
std::vector<std::vector<int>> first_columns(int K, int R) {
  std::vector<std::vector<int>> out;
  std::vector<int> col(R);
  auto rec = [&](auto& self, int j) -> void {
    if (j == R) {
      out.push_back(col);
      return;
    }
    const int hi = j == 0 ? K + 1 : col[j - 1];
    for (int v = 1; v <= hi; ++v) {
      col[j] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::uint64_t count_from_column(int K, int R, const std::vector<int>& column) {
  TriangularSeq seq(R, K);
  for (int j = 1; j <= R; ++j) seq.set(j, 1, column[j - 1]);
  std::uint64_t count = 0;
  auto tally = [&](const TriangularSeq&) { ++count; };
  fill(seq, 2, 2, tally);
  return count;
}

}  // namespace

BigCount enumerate_triseq(int K, int R) {
  check_shape(K, R);
  TriangularSeq seq(R, K);
  std::uint64_t count = 0;
  auto tally = [&](const TriangularSeq&) { ++count; };
  fill(seq, 1, 1, tally);
  return BigCount(count);
}

BigCount enumerate_triseq_parallel(int K, int R) {
  check_shape(K, R);
  apply_thread_cap();
  const std::vector<std::vector<int>> columns = first_columns(K, R);
  const long jobs = static_cast<long>(columns.size());
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
  for (long k = 0; k < jobs; ++k) total += count_from_column(K, R, columns[k]);
  return BigCount(total);
}

std::vector<TriangularSeq> list_triseq(int K, int R) {
  check_shape(K, R);
  TriangularSeq seq(R, K);
  std::vector<TriangularSeq> out;
  auto keep = [&](const TriangularSeq& s) { out.push_back(s); };
  fill(seq, 1, 1, keep);
  return out;
}

}  // namespace chinampa
