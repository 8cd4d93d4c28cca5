#include "xatlas/render.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace xatlas {

namespace {

std::string num(double v) {
  if (std::abs(v) < 5e-7) v = 0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Frame {
  const RenderStyle& s;

  [[nodiscard]] double chart_width() const { return s.width - 2 * s.margin; }
  [[nodiscard]] double px(double x) const { return s.margin + x * chart_width(); }
  [[nodiscard]] double py(double y) const {
    if (y >= 1) return s.margin + (2 - y) * s.diskBand;
    if (y >= 0) return s.margin + s.diskBand + (1 - y) * s.lateralBand;
    return s.margin + s.diskBand + s.lateralBand + (-y) * s.diskBand;
  }
};

struct XY {
  double x, y;
};

// Splits a chart polyline at the band boundaries y = 0 and y = 1 so each piece maps affinely.
std::vector<XY> refine(const std::vector<Point2>& pts) {
  std::vector<XY> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const XY q{pts[i].x.to_double(), pts[i].y.to_double()};
    if (i > 0) {
      const XY p = out.back();
      const double levels[2] = {q.y > p.y ? 0.0 : 1.0, q.y > p.y ? 1.0 : 0.0};
      for (double level : levels)
        if ((p.y - level) * (q.y - level) < 0) {
          const double t = (level - p.y) / (q.y - p.y);
          out.push_back({p.x + t * (q.x - p.x), level});
        }
    }
    out.push_back(q);
  }
  return out;
}

}  // namespace

RenderStyle default_style() {
  RenderStyle s;
  s.colors = {{EdgeClass::EX, "#1f77b4"}, {EdgeClass::EY, "#d62728"}, {EdgeClass::EXY, "#2ca02c"}, {EdgeClass::EZXY, "#9467bd"}};
  return s;
}

RenderStyle style_from_json(const nlohmann::json& j, RenderStyle base) {
  if (!j.is_object()) throw std::invalid_argument("style must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "width") base.width = value.get<double>();
    else if (key == "diskBand") base.diskBand = value.get<double>();
    else if (key == "lateralBand") base.lateralBand = value.get<double>();
    else if (key == "margin") base.margin = value.get<double>();
    else if (key == "strokeWidth") base.strokeWidth = value.get<double>();
    else if (key == "vertexRadius") base.vertexRadius = value.get<double>();
    else if (key == "fontSize") base.fontSize = value.get<double>();
    else if (key == "colors") {
      for (const auto& [cls, color] : value.items()) base.colors[parse_class(cls)] = color.get<std::string>();
    } else {
      throw std::invalid_argument("unknown style key: " + key);
    }
  }
  return base;
}

RenderStyle load_style(const std::string& nameOrPath) {
  RenderStyle s = default_style();
  if (nameOrPath.empty() || nameOrPath == "default") return s;
  if (nameOrPath == "print") {
    s.width = 1600;
    s.diskBand = 360;
    s.lateralBand = 260;
    s.strokeWidth = 0.8;
    s.vertexRadius = 2.5;
    s.fontSize = 9;
    s.colors = {{EdgeClass::EX, "#000000"}, {EdgeClass::EY, "#e69f00"}, {EdgeClass::EXY, "#0072b2"}, {EdgeClass::EZXY, "#cc79a7"}};
    return s;
  }
  std::ifstream in(nameOrPath);
  if (!in) throw std::invalid_argument("unknown style '" + nameOrPath + "' (expected default, print or a JSON file)");
  nlohmann::json j;
  try {
    in >> j;
    s = style_from_json(j, s);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(nameOrPath + ": " + e.what());
  }
  return s;
}

void validate(const RenderStyle& s) {
  for (double v : {s.width, s.diskBand, s.lateralBand, s.strokeWidth, s.vertexRadius, s.fontSize})
    if (!(v > 0) || !std::isfinite(v)) throw std::invalid_argument("style sizes must be positive");
  if (!(s.margin >= 0) || 2 * s.margin >= s.width) throw std::invalid_argument("style margin does not fit the width");
  std::set<std::string> seen;
  for (EdgeClass c : {EdgeClass::EX, EdgeClass::EY, EdgeClass::EXY, EdgeClass::EZXY}) {
    auto it = s.colors.find(c);
    if (it == s.colors.end() || it->second.empty()) throw std::invalid_argument("style has no color for " + class_name(c));
    if (!seen.insert(it->second).second) throw std::invalid_argument("edge classes need distinct colors");
  }
}

std::string render_svg(const ExpandedDrawing& e, const RenderStyle& style, std::optional<std::int64_t> crossings) {
  validate(style);
  const Frame f{style};
  const double w = style.width, h = style.height();
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h) << "\" viewBox=\"0 0 "
    << num(w) << " " << num(h) << "\">\n";
  o << "<defs><clipPath id=\"chart\"><rect x=\"" << num(f.px(0)) << "\" y=\"0\" width=\"" << num(f.chart_width())
    << "\" height=\"" << num(h) << "\"/></clipPath></defs>\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  o << "<g class=\"frame\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"" << num(0.6) << "\">\n";
  for (double y : {2.0, 1.0, 0.0, -1.0})
    o << "<line x1=\"" << num(f.px(0)) << "\" y1=\"" << num(f.py(y)) << "\" x2=\"" << num(f.px(1)) << "\" y2=\""
      << num(f.py(y)) << "\"" << (y == 2.0 || y == -1.0 ? " stroke-dasharray=\"4 3\"" : "") << "/>\n";
  o << "</g>\n";

  o << "<g clip-path=\"url(#chart)\" fill=\"none\" stroke-width=\"" << num(style.strokeWidth)
    << "\" stroke-linejoin=\"round\">\n";
  for (const auto& pl : e.polylines) {
    const std::vector<XY> pts = refine(pl.points);
    double x0 = pts.front().x, x1 = pts.front().x;
    for (const auto& p : pts) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
    }
    std::string d;
    for (long k = static_cast<long>(std::ceil(-x1)); k <= static_cast<long>(std::floor(1 - x0)); ++k) {
      for (std::size_t i = 0; i < pts.size(); ++i) {
        d += i == 0 ? (d.empty() ? "M" : " M") : " L";
        d += num(f.px(pts[i].x + static_cast<double>(k))) + " " + num(f.py(pts[i].y));
      }
    }
    o << "<path class=\"edge\" data-edge=\"" << escape(to_string(pl.edge)) << "\" data-class=\"" << class_name(pl.cls)
      << "\" stroke=\"" << escape(style.colors.at(pl.cls)) << "\" d=\"" << d << "\"/>\n";
  }
  o << "</g>\n";

  o << "<g class=\"vertices\" font-family=\"sans-serif\" font-size=\"" << num(style.fontSize) << "\">\n";
  for (const auto& v : e.vertices) {
    const double x = v.pole ? 0.5 : v.at.x.frac().to_double();
    const double cx = f.px(x), cy = f.py(v.at.y.to_double());
    if (v.pole)
      o << "<line class=\"pole\" x1=\"" << num(f.px(0)) << "\" y1=\"" << num(cy) << "\" x2=\"" << num(f.px(1))
        << "\" y2=\"" << num(cy) << "\" stroke=\"black\" stroke-width=\"" << num(2 * style.strokeWidth) << "\"/>\n";
    o << "<circle class=\"vertex\" cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(style.vertexRadius)
      << "\" fill=\"black\"/>\n";
    o << "<text class=\"label\" x=\"" << num(cx + style.vertexRadius + 1) << "\" y=\"" << num(cy - style.vertexRadius - 1)
      << "\">" << escape(to_string(v.label)) << "</text>\n";
  }
  o << "</g>\n";

  if (crossings)
    o << "<text class=\"count\" x=\"" << num(w - 8) << "\" y=\"" << num(style.fontSize + 6)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"" << num(style.fontSize + 2)
      << "\">crossings: " << *crossings << "</text>\n";
  o << "</svg>\n";
  return o.str();
}

}  // namespace xatlas
