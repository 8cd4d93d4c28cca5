#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "xatlas/drawing.hpp"

namespace xatlas {

struct RenderStyle {
  double width = 960;         // image width in px
  double diskBand = 220;      // height of each disk band
  double lateralBand = 160;   // height of the lateral band
  double margin = 40;
  double strokeWidth = 1.2;
  double vertexRadius = 3.5;
  double fontSize = 11;
  std::map<EdgeClass, std::string> colors;

  [[nodiscard]] double height() const { return 2 * margin + 2 * diskBand + lateralBand; }
};

RenderStyle default_style();
// "default", "print", or a JSON file whose keys override the default style.
RenderStyle load_style(const std::string& nameOrPath);
RenderStyle style_from_json(const nlohmann::json& j, RenderStyle base);

// Throws std::invalid_argument on non-positive sizes or missing/duplicate class colors.
void validate(const RenderStyle& s);

std::string render_svg(const ExpandedDrawing& e, const RenderStyle& style, std::optional<std::int64_t> crossings);

}  // namespace xatlas
