#pragma once

#include <string>
#include <string_view>

#include "chinampa/cascade_engine.hpp"

namespace chinampa {

inline constexpr char kPrimaryGlyph = 'O';
inline constexpr char kSecondaryGlyph = '*';
inline constexpr char kInactiveGlyph = '.';

// One line per time step, latest first, so time grows upward. Columns follow
// the network's vertices in increasing order.
std::string render_ascii(const ActivationDiagram& diagram);
std::string render_svg(const ActivationDiagram& diagram);

struct ParsedRender {
  int width = 0;
  int horizon = 0;
  StvSet primary;
  StvSet secondary;
};

// Inverse of render_ascii for networks whose vertices are 1..width.
ParsedRender parse_ascii(std::string_view text);

}  // namespace chinampa
