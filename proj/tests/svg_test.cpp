#include <gtest/gtest.h>

#include <regex>

#include "dido/extremal.hpp"
#include "dido/svg.hpp"
#include "support/shapes.hpp"

using namespace dido;

namespace {

int count(const std::string& s, const std::string& what) {
  int n = 0;
  for (std::size_t p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
  return n;
}

}  // namespace

TEST(Svg, UnitSquareIsOneFourVertexPath) {
  const std::string doc = svg::render(dido::testing::unit_square());
  EXPECT_EQ(count(doc, "<path"), 1);
  EXPECT_EQ(count(doc, " L "), 3);
  EXPECT_NE(doc.find("M 0.000000 0.000000 L 1.000000 0.000000 L 1.000000 -1.000000 L 0.000000 -1.000000 Z"),
            std::string::npos);
}

TEST(Svg, SixDecimalsEverywhere) {
  auto rng = dido::testing::rng_for(5);
  const std::string doc = svg::render(dido::testing::random_polygon(rng));
  const std::regex number(R"(-?\d+\.\d+)");
  for (auto it = std::sregex_iterator(doc.begin(), doc.end(), number); it != std::sregex_iterator(); ++it) {
    const std::string n = it->str();
    EXPECT_EQ(n.size() - n.find('.') - 1, 6u) << n;
  }
  EXPECT_EQ(doc.find("-0.000000"), std::string::npos);
}

TEST(Svg, OverlaysAndEmptyList) {
  const DirectionGrid g(360);
  const auto s = solve_external_urysohn_triangle(1.0, 1.7, g);
  svg::Scene scene{s.body, s.container, s.arc_centers, s.certificate.mu};
  const std::string bare = svg::render(scene);
  EXPECT_EQ(count(bare, "<path"), 1);
  EXPECT_EQ(count(bare, "<circle"), 0);
  EXPECT_EQ(count(bare, "<line"), 0);
  svg::RenderStyle all;
  all.overlays = {svg::Overlay::kContainer, svg::Overlay::kArcCenters, svg::Overlay::kAtoms};
  const std::string full = svg::render(scene, all);
  EXPECT_EQ(count(full, "class=\"container\""), 1);
  EXPECT_EQ(count(full, "class=\"center\""), 3);
  EXPECT_EQ(count(full, "class=\"atom\""), static_cast<int>(s.certificate.mu.size()));
  EXPECT_EQ(full, svg::render(scene, all));
}

TEST(Svg, DegenerateViewport) {
  EXPECT_THROW(svg::render(ConvexFigure::point({1, 1})), GeometryError);
  EXPECT_THROW(svg::render(ConvexFigure{}), GeometryError);
  svg::RenderStyle bad;
  bad.stroke_width = 0.0;
  EXPECT_THROW(svg::render(dido::testing::unit_square(), bad), GeometryError);
  EXPECT_NO_THROW(svg::render(ConvexFigure::segment({0, 0}, {1, 0})));
}
