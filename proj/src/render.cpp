#include "chinampa/render.hpp"

#include <sstream>
#include <vector>

#include "chinampa/errors.hpp"

namespace chinampa {

namespace {

constexpr int kCell = 24;
constexpr int kRadius = 8;

}  // namespace

std::string render_ascii(const ActivationDiagram& diagram) {
  const auto& vertices = diagram.network().vertices();
  std::string out;
  for (int t = diagram.horizon(); t >= 0; --t) {
    for (VertexId v : vertices) {
      const Stv cell{v, t};
      out += diagram.is_primary(cell) ? kPrimaryGlyph : diagram.is_active(cell) ? kSecondaryGlyph : kInactiveGlyph;
    }
    out += '\n';
  }
  return out;
}

std::string render_svg(const ActivationDiagram& diagram) {
  const auto& vertices = diagram.network().vertices();
  const int columns = static_cast<int>(vertices.size());
  const int rows = diagram.horizon() + 1;
  const int w = (columns + 1) * kCell, h = (rows + 1) * kCell;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 " << -h
      << ' ' << w << ' ' << h << "\">\n";
  for (int t = 0; t < rows; ++t)
    for (int c = 0; c < columns; ++c) {
      const Stv cell{vertices[c], t};
      const int x = (c + 1) * kCell, y = -(t + 1) * kCell;
      const bool on = diagram.is_active(cell);
      out << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << kRadius << "\" fill=\""
          << (on ? "black" : "none") << "\" stroke=\"" << (on ? "black" : "#bbbbbb") << "\"/>\n";
      if (diagram.is_primary(cell))
        out << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << kRadius + 3
            << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
  out << "</svg>\n";
  return out.str();
}

ParsedRender parse_ascii(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) lines.push_back(line);
  ParsedRender parsed;
  if (lines.empty()) return parsed;
  parsed.width = static_cast<int>(lines.front().size());
  parsed.horizon = static_cast<int>(lines.size()) - 1;
  for (std::size_t row = 0; row < lines.size(); ++row) {
    if (static_cast<int>(lines[row].size()) != parsed.width) throw Error(ErrorKind::parse, "ragged render");
    const int t = parsed.horizon - static_cast<int>(row);
    for (int c = 0; c < parsed.width; ++c) {
      const char g = lines[row][c];
      if (g == kPrimaryGlyph) parsed.primary.insert({c + 1, t});
      else if (g == kSecondaryGlyph) parsed.secondary.insert({c + 1, t});
      else if (g != kInactiveGlyph) throw Error(ErrorKind::parse, "unknown glyph in render");
    }
  }
  return parsed;
}

}  // namespace chinampa
