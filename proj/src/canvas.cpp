#include "chinampa/canvas.hpp"

#include <bit>

namespace chinampa {

std::size_t CanvasRowsHash::operator()(const CanvasRows& c) const noexcept {
  std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(c.n);
  for (int t = 0; t < c.n; ++t) {
    h ^= c.rows[t];
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

std::uint32_t canvas_region_row(int n, int t) {
  if (t < 0 || t >= n) return 0;
  const std::uint32_t upto_n = (n >= 31) ? 0xFFFFFFFFu : ((1u << (n + 1)) - 1);
  const std::uint32_t below = (1u << (t + 1)) - 1;
  return upto_n & ~below;
}

std::uint32_t canvas_fired_row(const CanvasRows& c, int t) {
  if (t <= 0) return 0;
  const std::uint32_t prev = c.rows[t - 1];
  return prev & (prev << 1) & canvas_region_row(c.n, t);
}

bool canvas_closed(const CanvasRows& c) {
  for (int t = 1; t < c.n; ++t)
    if (canvas_fired_row(c, t) & ~c.rows[t]) return false;
  return true;
}

bool canvas_add_pyramid(CanvasRows& c, Stv top, int length) {
  const int base_t = top.time - length + 1;
  if (base_t < 0 || top.time >= c.n || top.vertex > c.n) return false;
  for (int b = 0; b < length; ++b) {
    const int from = top.vertex - length + 1 + b;
    if (from < base_t + b + 1) return false;
    const std::uint32_t span = ((1u << (top.vertex + 1)) - 1) & ~((1u << from) - 1);
    c.rows[base_t + b] |= span;
  }
  return true;
}

CanvasVerdict canvas_judge(const CanvasRows& c) {
  CanvasVerdict v;
  const int n = c.n;
  std::array<std::uint32_t, kMaxCanvas> fired{}, prim{};
  v.closed = true;
  for (int t = 0; t < n; ++t) {
    fired[t] = canvas_fired_row(c, t);
    if (fired[t] & ~c.rows[t]) v.closed = false;
    fired[t] &= c.rows[t];
    prim[t] = c.rows[t] & ~fired[t];
    v.primaries += std::popcount(prim[t]);
    v.secondaries += std::popcount(fired[t]);
  }
  v.hull_exact = n > 0 && c.rows[0] != 0 && (c.rows[n - 1] >> n & 1u);

  v.contributes = true;
  for (int t = 0; t < n; ++t) {
    const std::uint32_t next = (t + 1 < n) ? fired[t + 1] : 0;
    if (prim[t] & ~(next | (next >> 1))) v.contributes = false;
  }

  // Flood fill over fired cells; neighbours of (x,t) are (x,t±1), (x+1,t+1), (x-1,t-1).
  std::array<std::uint32_t, kMaxCanvas> reach{};
  int seed = -1;
  for (int t = 0; t < n && seed < 0; ++t)
    if (fired[t]) {
      seed = t;
      reach[t] = fired[t] & (~fired[t] + 1);
    }
  bool grew = seed >= 0;
  while (grew) {
    grew = false;
    for (int t = 0; t < n; ++t) {
      std::uint32_t from = 0;
      if (t > 0) from |= reach[t - 1] | (reach[t - 1] << 1);
      if (t + 1 < n) from |= reach[t + 1] | (reach[t + 1] >> 1);
      const std::uint32_t add = fired[t] & from & ~reach[t];
      if (add) {
        reach[t] |= add;
        grew = true;
      }
    }
  }
  v.connected = true;
  for (int t = 0; t < n; ++t)
    if (reach[t] != fired[t]) v.connected = false;
  return v;
}

StvSet canvas_primaries(const CanvasRows& c) {
  StvSet out;
  for (int t = 0; t < c.n; ++t) {
    std::uint32_t row = c.rows[t] & ~canvas_fired_row(c, t);
    for (int x = 1; x <= c.n; ++x)
      if (row >> x & 1u) out.insert({x, t});
  }
  return out;
}

StvSet canvas_cells(const CanvasRows& c) {
  StvSet out;
  for (int t = 0; t < c.n; ++t)
    for (int x = 1; x <= c.n; ++x)
      if (c.rows[t] >> x & 1u) out.insert({x, t});
  return out;
}

}  // namespace chinampa
