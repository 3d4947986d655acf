#pragma once

#include <array>
#include <cstdint>
#include <functional>

#include "chinampa/stv.hpp"

namespace chinampa {

// Bit-row view of a vertex set inside the canonical canvas apyr(n): row t
// holds positions t+1..n, bit x stands for vertex x. Time runs 0..n-1 and
// the apex is (n, n-1).
inline constexpr int kMaxCanvas = 24;

struct CanvasRows {
  int n = 0;
  std::array<std::uint32_t, kMaxCanvas> rows{};

  friend bool operator==(const CanvasRows&, const CanvasRows&) = default;
};

struct CanvasRowsHash {
  std::size_t operator()(const CanvasRows& c) const noexcept;
};

std::uint32_t canvas_region_row(int n, int t);
// Cells fired at time t by the previous row of the set.
std::uint32_t canvas_fired_row(const CanvasRows& c, int t);
// Closed under the firing rule: nothing fires outside the set.
bool canvas_closed(const CanvasRows& c);
// Adds the region of the pyramid with the given top; false if it leaves the canvas.
bool canvas_add_pyramid(CanvasRows& c, Stv top, int length);

struct CanvasVerdict {
  bool closed = false;
  bool hull_exact = false;   // apex active and row 0 nonempty
  bool contributes = false;  // every primary feeds a fired cell
  bool connected = false;    // fired cells form one component
  int primaries = 0;
  int secondaries = 0;
  int profit() const { return secondaries - primaries; }
  bool countable() const { return closed && hull_exact && contributes && connected; }
};

CanvasVerdict canvas_judge(const CanvasRows& c);
StvSet canvas_primaries(const CanvasRows& c);
StvSet canvas_cells(const CanvasRows& c);

}  // namespace chinampa
