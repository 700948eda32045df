#pragma once

// Deterministic SVG rendering of figures with optional overlays.
// Coordinates are printed with 6 decimals; the y axis points up.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "dido/geometry.hpp"
#include "dido/measures.hpp"

namespace dido::svg {

enum class Overlay { kContainer, kArcCenters, kAtoms };

struct RenderStyle {
  double stroke_width = 0.01;  // fraction of the viewport's larger side
  bool fill = true;
  double padding = 0.08;  // fraction of the larger side
  double pixels = 512.0;
  std::vector<Overlay> overlays;
};

struct Scene {
  ConvexFigure body;
  std::optional<ConvexFigure> container;
  std::vector<Vec2> arc_centers;
  DiscreteMeasure atoms;
};

inline std::string fixed(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

namespace detail {

inline bool wants(const RenderStyle& st, Overlay o) {
  return std::find(st.overlays.begin(), st.overlays.end(), o) != st.overlays.end();
}

inline std::string path(const ConvexFigure& x) {
  std::string d;
  const auto& v = x.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    d += (i == 0 ? "M " : " L ") + fixed(v[i].x) + " " + fixed(-v[i].y);
  }
  if (v.size() >= 3) d += " Z";
  return d;
}

}  // namespace detail

inline std::string render(const Scene& scene, const RenderStyle& style = {}) {
  if (scene.body.empty()) throw GeometryError("nothing to render");
  if (!(style.stroke_width > 0.0) || !(style.padding >= 0.0) || !(style.pixels > 0.0)) {
    throw GeometryError("render style dimensions must be positive");
  }
  const bool show_container = scene.container && detail::wants(style, Overlay::kContainer);
  const bool show_centers = detail::wants(style, Overlay::kArcCenters);
  const bool show_atoms = detail::wants(style, Overlay::kAtoms);

  std::vector<Vec2> extent = scene.body.vertices();
  if (show_container) extent.insert(extent.end(), scene.container->vertices().begin(), scene.container->vertices().end());
  if (show_centers) extent.insert(extent.end(), scene.arc_centers.begin(), scene.arc_centers.end());
  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  for (const Vec2& p : extent) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  double side = std::max(hi_x - lo_x, hi_y - lo_y);
  if (!(side > 0.0)) throw GeometryError("degenerate viewport");

  // Arrows for atoms start on the body and scale with weight.
  const ConvexFigure* anchor = show_container ? &*scene.container : &scene.body;
  double max_w = 0.0;
  for (const auto& a : scene.atoms.atoms()) max_w = std::max(max_w, a.weight);
  const double arrow_len = 0.2 * side;
  struct Arrow {
    Vec2 from, to;
  };
  std::vector<Arrow> arrows;
  if (show_atoms && max_w > 0.0) {
    for (const auto& a : scene.atoms.atoms()) {
      const Vec2 u = a.unit();
      const auto& v = anchor->vertices();
      Vec2 from = v.front();
      for (const Vec2& p : v) {
        if (dot(p, u) > dot(from, u) + 1e-12 * side) from = p;
      }
      const Vec2 to = from + (arrow_len * a.weight / max_w) * u;
      arrows.push_back({from, to});
      lo_x = std::min(lo_x, to.x);
      hi_x = std::max(hi_x, to.x);
      lo_y = std::min(lo_y, to.y);
      hi_y = std::max(hi_y, to.y);
    }
    side = std::max(hi_x - lo_x, hi_y - lo_y);
  }

  const double pad = style.padding * side;
  const double vx = lo_x - pad, vy = -hi_y - pad;
  const double vw = hi_x - lo_x + 2 * pad, vh = hi_y - lo_y + 2 * pad;
  const double sw = style.stroke_width * side;
  const double px_w = style.pixels * vw / std::max(vw, vh);
  const double px_h = style.pixels * vh / std::max(vw, vh);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fixed(vx) + " " + fixed(vy) + " " + fixed(vw) +
         " " + fixed(vh) + "\" width=\"" + fixed(px_w) + "\" height=\"" + fixed(px_h) + "\">\n";
  if (show_container) {
    out += "  <path class=\"container\" d=\"" + detail::path(*scene.container) +
           "\" fill=\"none\" stroke=\"#555555\" stroke-dasharray=\"" + fixed(3 * sw) + "\" stroke-width=\"" +
           fixed(sw) + "\"/>\n";
  }
  out += "  <path class=\"body\" d=\"" + detail::path(scene.body) + "\" fill=\"" +
         (style.fill ? "#9ecae1" : "none") + "\" stroke=\"#08519c\" stroke-width=\"" + fixed(sw) + "\"/>\n";
  if (show_centers) {
    for (const Vec2& c : scene.arc_centers) {
      out += "  <circle class=\"center\" cx=\"" + fixed(c.x) + "\" cy=\"" + fixed(-c.y) + "\" r=\"" +
             fixed(1.5 * sw) + "\" fill=\"#cb181d\"/>\n";
    }
  }
  for (const auto& a : arrows) {
    out += "  <line class=\"atom\" x1=\"" + fixed(a.from.x) + "\" y1=\"" + fixed(-a.from.y) + "\" x2=\"" +
           fixed(a.to.x) + "\" y2=\"" + fixed(-a.to.y) + "\" stroke=\"#e6550d\" stroke-width=\"" + fixed(0.6 * sw) +
           "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

inline std::string render(const ConvexFigure& body, const RenderStyle& style = {}) {
  Scene s;
  s.body = body;
  return render(s, style);
}

}  // namespace dido::svg
