#include <gtest/gtest.h>

#include <regex>

#include "xatlas/render.hpp"
#include "xatlas/serialize.hpp"

using namespace xatlas;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t k = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++k;
  return k;
}

}  // namespace

TEST(Render, SixHasThirtyEdgePaths) {
  const std::string svg = render_svg(expand_Dn(generate_Dn(6)), default_style(), 12);
  EXPECT_EQ(occurrences(svg, "<path class=\"edge\""), 30u);
  EXPECT_EQ(occurrences(svg, "<circle class=\"vertex\""), 12u);
  EXPECT_NE(svg.find("crossings: 12"), std::string::npos);
  EXPECT_EQ(svg.rfind("</svg>\n"), svg.size() - 7);
}

TEST(Render, TrivialDrawing) {
  const std::string svg = render_svg(expand_Dn(trivial_drawing()), default_style(), 0);
  EXPECT_EQ(occurrences(svg, "<path class=\"edge\""), 0u);
  EXPECT_EQ(occurrences(svg, "<text class=\"label\""), 2u);
  EXPECT_NE(svg.find(">a0</text>"), std::string::npos);
  EXPECT_NE(svg.find(">b0</text>"), std::string::npos);
}

TEST(Render, SplitDrawingHasOnePathPerMember) {
  const DrawingDocument d = build_document(Family::C4, 3);
  const std::string svg = render_svg(d.expanded, default_style(), std::nullopt);
  EXPECT_EQ(occurrences(svg, "<path class=\"edge\""), 24u);
  EXPECT_EQ(svg.find("crossings:"), std::string::npos);
}

TEST(Render, NumbersHaveSixDecimals) {
  const std::string doc = render_svg(expand_Dn(generate_Dn(5)), default_style(), 4);
  const std::string svg = doc.substr(doc.find("<svg"));
  const std::regex number(R"(-?\d+\.\d+)");
  std::size_t checked = 0;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), number); it != std::sregex_iterator(); ++it, ++checked) {
    const std::string s = it->str();
    EXPECT_EQ(s.size() - s.find('.') - 1, 6u) << s;
  }
  EXPECT_GT(checked, 100u);
}

TEST(Render, ClassesUseTheirColors) {
  RenderStyle s = default_style();
  const std::string svg = render_svg(expand_Dn(generate_Dn(7)), s, std::nullopt);
  for (const auto& [cls, color] : s.colors) EXPECT_NE(svg.find("data-class=\"" + class_name(cls) + "\" stroke=\"" + color), std::string::npos);
}

TEST(Render, Deterministic) {
  const auto e = expand_Dn(generate_Dn(8));
  EXPECT_EQ(render_svg(e, default_style(), 72), render_svg(e, default_style(), 72));
}

TEST(RenderStyle, Validation) {
  EXPECT_NO_THROW(validate(default_style()));
  EXPECT_NO_THROW(validate(load_style("print")));
  RenderStyle s = default_style();
  s.width = 0;
  EXPECT_THROW(validate(s), std::invalid_argument);
  s = default_style();
  s.colors[EdgeClass::EY] = s.colors[EdgeClass::EX];
  EXPECT_THROW(validate(s), std::invalid_argument);
  s = default_style();
  s.colors.erase(EdgeClass::EZXY);
  EXPECT_THROW(validate(s), std::invalid_argument);
  EXPECT_THROW(load_style("no-such-style"), std::invalid_argument);
}

TEST(RenderStyle, JsonOverrides) {
  const RenderStyle s = style_from_json(json{{"width", 500}, {"colors", {{"E_X", "#000001"}}}}, default_style());
  EXPECT_EQ(s.width, 500);
  EXPECT_EQ(s.colors.at(EdgeClass::EX), "#000001");
  EXPECT_EQ(s.colors.at(EdgeClass::EY), default_style().colors.at(EdgeClass::EY));
  EXPECT_THROW(style_from_json(json{{"wdth", 1}}, default_style()), std::invalid_argument);
  EXPECT_THROW(style_from_json(json{{"colors", {{"E_Q", "#fff"}}}}, default_style()), std::invalid_argument);
}
