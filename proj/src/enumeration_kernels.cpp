#include <omp.h>

#include <cstdint>
#include <cstdlib>
#include <map>

#include "chinampa/enumeration.hpp"
#include "chinampa/errors.hpp"

namespace chinampa {

namespace {

using Tally = std::map<int, std::uint64_t>;

void census_rows(CanvasRows& c, int t, Tally& tally) {
  if (t == c.n) {
    const CanvasVerdict v = canvas_judge(c);
    if (v.countable()) ++tally[v.profit()];
    return;
  }
  const std::uint32_t fired = canvas_fired_row(c, t);
  const std::uint32_t free = canvas_region_row(c.n, t) & ~fired;
  // Every subset of the free cells, including none.
  std::uint32_t extra = 0;
  do {
    c.rows[t] = fired | extra;
    census_rows(c, t + 1, tally);
    extra = (extra - free) & free;
  } while (extra != 0);
  c.rows[t] = 0;
}

void census_from_base(int n, std::uint32_t base_row, Tally& tally) {
  CanvasRows c;
  c.n = n;
  c.rows[0] = base_row;
  census_rows(c, 1, tally);
}

void check_census_size(int n) {
  if (n < 1 || n > 8) throw Error(ErrorKind::domain, "subset census supports canvases 1..8");
}

ProfitCensus widen(const Tally& tally) {
  ProfitCensus out;
  for (auto [profit, count] : tally) out[profit] = BigCount(count);
  return out;
}

}  // namespace

ProfitCensus subset_census_serial(int n) {
  check_census_size(n);
  Tally tally;
  const std::uint32_t region = canvas_region_row(n, 0);
  for (std::uint32_t base = region; base != 0; base = (base - 1) & region) census_from_base(n, base, tally);
  return widen(tally);
}

ProfitCensus subset_census_parallel(int n) {
  check_census_size(n);
  apply_thread_cap();
  // Row-0 patterns are the bits 1..n; index k maps to pattern k << 1.
  const long patterns = (1L << n) - 1;
  Tally total;
#pragma omp parallel
  {
    Tally local;
#pragma omp for schedule(dynamic, 1) nowait
    for (long k = 1; k <= patterns; ++k) census_from_base(n, static_cast<std::uint32_t>(k) << 1, local);
#pragma omp critical
    for (auto [profit, count] : local) total[profit] += count;
  }
  return widen(total);
}

void apply_thread_cap() {
  const char* cap = std::getenv("CHINAMPA_THREADS");
  if (cap == nullptr) return;
  const int limit = std::atoi(cap);
  if (limit >= 1) omp_set_num_threads(std::min(limit, omp_get_num_procs()));
}

}  // namespace chinampa
