#pragma once

// JSON forms of figures, measures, certificates and reports.
//
// Numbers are written with 12 significant digits so that emitted documents
// are stable across platforms and build types. Needs the single-header nlohmann json.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "dido/extremal.hpp"
#include "dido/geometry.hpp"
#include "dido/majorization.hpp"
#include "dido/measures.hpp"

namespace dido::io {

using Json = nlohmann::ordered_json;

/// Malformed or semantically invalid input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline double round12(double v) {
  if (!std::isfinite(v)) throw std::domain_error("non-finite number in output");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

inline Json number(double v) { return Json(round12(v)); }

inline Json point_json(Vec2 p) { return Json::array({number(p.x), number(p.y)}); }

// ---------------------------------------------------------------------------
// Parsing helpers

inline Json parse_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": malformed JSON");
  }
}

inline Json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline double real(const Json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError(std::string(what) + ": non-finite number");
  return v;
}

inline double real_field(const Json& j, const char* key) { return real(field(j, key), key); }

inline Vec2 point_from(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) throw InputError(std::string(what) + ": expected [x, y]");
  return {real(j[0], what), real(j[1], what)};
}

// ---------------------------------------------------------------------------
// Figures

inline Json figure_json(const ConvexFigure& x) {
  if (x.is_segment()) {
    return Json{{"kind", "segment"}, {"a", point_json(x.vertices()[0])}, {"b", point_json(x.vertices()[1])}};
  }
  Json verts = Json::array();
  for (const Vec2& v : x.vertices()) verts.push_back(point_json(v));
  return Json{{"kind", "polygon"}, {"vertices", verts}};
}

inline ConvexFigure figure_from(const Json& j, const DirectionGrid& grid) {
  if (!j.is_object()) throw InputError("figure: expected an object");
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw InputError("figure: \"kind\" must be a string");
  const std::string k = kind.get<std::string>();
  try {
    if (k == "polygon") {
      const Json& vs = field(j, "vertices");
      if (!vs.is_array() || vs.empty()) throw InputError("polygon: \"vertices\" must be a nonempty array");
      std::vector<Vec2> pts;
      for (const auto& v : vs) pts.push_back(point_from(v, "vertex"));
      return ConvexFigure(std::move(pts));
    }
    if (k == "disk") {
      const double r = real_field(j, "radius");
      int segments = grid.size();
      if (j.contains("segments")) {
        if (!j["segments"].is_number_integer()) throw InputError("disk: \"segments\" must be an integer");
        segments = j["segments"].get<int>();
      }
      return ConvexFigure::disk(point_from(field(j, "center"), "center"), r, segments);
    }
    if (k == "segment") {
      return ConvexFigure::segment(point_from(field(j, "a"), "a"), point_from(field(j, "b"), "b"));
    }
    if (k == "ball") return ConvexFigure::disk({0.0, 0.0}, 1.0, grid.size());
  } catch (const GeometryError& e) {
    throw InputError(std::string("figure: ") + e.what());
  }
  throw InputError("figure: unknown kind \"" + k + "\"");
}

// ---------------------------------------------------------------------------
// Measures

inline Json measure_json(const DiscreteMeasure& m) {
  Json atoms = Json::array();
  for (const auto& a : m.atoms()) atoms.push_back(Json{{"angle", number(a.angle)}, {"weight", number(a.weight)}});
  return Json{{"atoms", atoms}};
}

/// Twelve digits lose grid angles; put them back on the grid when close.
inline double snap_angle(double angle, const DirectionGrid& grid) {
  if (const auto i = grid.index_of(angle)) return grid.angle(*i);
  return angle;
}

inline DiscreteMeasure measure_from(const Json& j, const DirectionGrid* grid = nullptr) {
  const Json& atoms = field(j, "atoms");
  if (!atoms.is_array()) throw InputError("measure: \"atoms\" must be an array");
  std::vector<MeasureAtom> out;
  for (const auto& a : atoms) {
    double angle = real_field(a, "angle");
    if (grid) angle = snap_angle(angle, *grid);
    out.push_back({angle, real_field(a, "weight")});
  }
  try {
    return DiscreteMeasure(std::move(out));
  } catch (const MeasureError& e) {
    throw InputError(std::string("measure: ") + e.what());
  }
}

inline DiscreteMeasure measure_from(const Json& j, const DirectionGrid& grid) { return measure_from(j, &grid); }

/// Accepts either a measure document or a figure (whose surface measure is taken).
inline DiscreteMeasure measure_or_figure(const Json& j, const DirectionGrid& grid) {
  if (j.is_object() && j.contains("atoms")) return measure_from(j, grid);
  const ConvexFigure x = figure_from(j, grid);
  try {
    return surface_measure(x).measure();
  } catch (const MeasureError& e) {
    throw InputError(std::string("measure: ") + e.what());
  }
}

/// {"atoms":[{"point":[x,y],"weight":w},...]}
inline PointMeasure<2> point_measure_from(const Json& j) {
  const Json& atoms = field(j, "atoms");
  if (!atoms.is_array()) throw InputError("point measure: \"atoms\" must be an array");
  PointMeasure<2> m;
  for (const auto& a : atoms) {
    const Vec2 p = point_from(field(a, "point"), "point");
    const double w = real_field(a, "weight");
    if (w < 0.0) throw InputError("point measure: negative weight");
    m.atoms.push_back({{p.x, p.y}, w});
  }
  return m;
}

inline Json plan_json(const TransportCertificate& c) {
  Json rows = Json::array();
  for (const auto& row : c.plan) {
    Json r = Json::array();
    for (double v : row) r.push_back(number(v));
    rows.push_back(r);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Certificates and reports

inline Json urysohn_json(const UrysohnSolution& s) {
  Json cert{{"alpha", number(s.certificate.alpha)}, {"mu", measure_json(s.certificate.mu)}};
  return Json{{"problem", "external-urysohn"},
              {"body", figure_json(s.body)},
              {"container", figure_json(s.container)},
              {"certificate", cert}};
}

inline UrysohnCertificate urysohn_certificate_from(const Json& j, const DirectionGrid& grid) {
  return {measure_from(field(j, "mu"), grid), real_field(j, "alpha")};
}

inline Json flattening_json(const ConvexFigure& body, const ConvexFigure& container, const FlatteningCertificate& c) {
  Json cert{{"alpha", number(c.alpha)},
            {"beta", number(c.beta)},
            {"direction", number(c.direction.angle())},
            {"residual", measure_json(c.residual)}};
  return Json{{"problem", "flattening"},
              {"body", figure_json(body)},
              {"container", figure_json(container)},
              {"certificate", cert}};
}

inline FlatteningCertificate flattening_certificate_from(const Json& j, const DirectionGrid& grid) {
  FlatteningCertificate c;
  c.alpha = real_field(j, "alpha");
  c.beta = real_field(j, "beta");
  c.direction = Direction(snap_angle(real_field(j, "direction"), grid));
  if (j.contains("residual")) c.residual = measure_from(j["residual"], grid);
  return c;
}

inline CurrentHyperplaneCertificate current_hyperplane_certificate_from(const Json& j, const DirectionGrid& grid) {
  CurrentHyperplaneCertificate c;
  c.alpha = real_field(j, "alpha");
  c.beta = real_field(j, "beta");
  c.direction = Direction(snap_angle(real_field(j, "direction"), grid));
  c.x = figure_from(field(j, "x"), grid);
  c.y = figure_from(field(j, "y"), grid);
  return c;
}

inline Json report_json(const std::string& problem, const VerificationReport& r) {
  Json conds = Json::array();
  for (const auto& c : r.conditions) {
    conds.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"residual", number(c.residual)}, {"detail", c.detail}});
  }
  return Json{{"problem", problem}, {"passed", r.passed()}, {"conditions", conds}};
}

namespace detail {

inline void write_number(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  std::string t = buf;
  if (t.find_first_of(".eEn") == std::string::npos) t += ".0";
  out += t;
}

inline bool is_flat(const Json& j) {
  return j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_number(); });
}

inline void write(std::string& out, const Json& j, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close(2 * depth, ' ');
  if (j.is_number_float()) {
    write_number(out, j.get<double>());
  } else if (is_flat(j)) {
    out += '[';
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ", ";
      write(out, j[i], depth + 1);
    }
    out += ']';
  } else if (j.is_array()) {
    if (j.empty()) {
      out += "[]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      write(out, j[i], depth + 1);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "]";
  } else if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + Json(it.key()).dump() + ": ";
      write(out, it.value(), depth + 1);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "}";
  } else {
    out += j.dump();
  }
}

}  // namespace detail

/// Two-space indented JSON; floats with 12 significant digits, numeric
/// arrays on one line.
inline std::string dump(const Json& j) {
  std::string out;
  detail::write(out, j, 0);
  return out + "\n";
}

}  // namespace dido::io
