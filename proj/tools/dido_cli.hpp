#pragma once

// Command-line front end. run() is kept in a header so tests can drive it
// in-process with captured streams.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dido/extremal.hpp"
#include "dido/io.hpp"
#include "dido/majorization.hpp"
#include "dido/measures.hpp"
#include "dido/svg.hpp"

namespace dido::cli {

inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kNegative = 2;  // infeasible or failed verification

namespace detail {

using io::Json;

struct Options {
  int grid = DirectionGrid::kDefaultSize;
  bool grid_given = false;
  std::uint64_t seed = 0;
  double tol = 1e-7;
  std::string output;
};

// Thrown for "infeasible" outcomes that still carry a JSON report.
struct Negative {
  Json report;
};

inline void emit(const std::string& text, const Options& opt, std::ostream& out) {
  if (opt.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(opt.output, std::ios::binary);
  if (!f) throw io::InputError(opt.output + ": cannot write file");
  f << text;
}

inline DirectionGrid grid_for(const Json& doc, const Options& opt) {
  if (!opt.grid_given && doc.is_object() && doc.contains("grid")) {
    if (!doc["grid"].is_number_integer()) throw io::InputError("\"grid\" must be an integer");
    return DirectionGrid(doc["grid"].get<int>());
  }
  return DirectionGrid(opt.grid);
}

inline Json figure_summary(const ConvexFigure& x, const DirectionGrid& grid) {
  Json j = io::figure_json(x);
  j["area"] = io::number(x.area());
  j["perimeter"] = io::number(x.perimeter());
  j["integral_breadth"] = io::number(integral_breadth(x, grid));
  return j;
}

inline ConvexFigure box_around(const ConvexFigure& x, double factor) {
  const double r = factor * std::max(1.0, x.diameter());
  return ConvexFigure::hull(std::vector<Vec2>{{-r, -r}, {r, -r}, {r, r}, {-r, r}});
}

inline Json with_centers(Json doc, const UrysohnSolution& s) {
  Json centers = Json::array();
  for (const Vec2& c : s.arc_centers) centers.push_back(io::point_json(c));
  doc["arc_centers"] = centers;
  return doc;
}

inline Json run_verify(const std::string& problem, const Json& doc, const Options& opt, const std::string& reading) {
  const DirectionGrid grid = grid_for(doc, opt);
  if (problem == "external-urysohn") {
    const ConvexFigure body = io::figure_from(io::field(doc, "body"), grid);
    const ConvexFigure container = io::figure_from(io::field(doc, "container"), grid);
    const auto cert = io::urysohn_certificate_from(io::field(doc, "certificate"), grid);
    return io::report_json(problem, verify_external_optimality(body, container, cert, grid, opt.tol));
  }
  if (problem == "flattening") {
    const ConvexFigure body = io::figure_from(io::field(doc, "body"), grid);
    const ConvexFigure container = io::figure_from(io::field(doc, "container"), grid);
    const auto cert = io::flattening_certificate_from(io::field(doc, "certificate"), grid);
    if (!contains(container, body)) throw io::InputError("flattening: body is not inside the container");
    return io::report_json(problem, verify_flattening_optimality(body, container, cert, grid, opt.tol));
  }
  if (problem == "current-hyperplane") {
    const ConvexFigure xbar = io::figure_from(io::field(doc, "xbar"), grid);
    const ConvexFigure ybar = io::figure_from(io::field(doc, "ybar"), grid);
    const ConvexFigure container = io::figure_from(io::field(doc, "container"), grid);
    const auto cert = io::current_hyperplane_certificate_from(io::field(doc, "certificate"), grid);
    std::string mode = reading;
    if (mode.empty() && doc.contains("reading") && doc["reading"].is_string()) mode = doc["reading"].get<std::string>();
    if (mode.empty()) mode = "literal";
    if (mode != "literal" && mode != "corrected") throw io::InputError("reading must be literal or corrected");
    try {
      const auto rep = verify_current_hyperplane(
          xbar, ybar, container, cert, grid, opt.tol,
          mode == "literal" ? ContactReading::kLiteral : ContactReading::kCorrected);
      Json out = io::report_json(problem, rep);
      out["reading"] = mode;
      return out;
    } catch (const GeometryError& e) {
      throw io::InputError(std::string("current-hyperplane: ") + e.what());
    }
  }
  throw io::InputError("unknown problem \"" + problem + "\"");
}

inline svg::Scene scene_from(const Json& doc, const DirectionGrid& grid) {
  svg::Scene s;
  if (doc.is_object() && doc.contains("body")) {
    s.body = io::figure_from(doc["body"], grid);
    if (doc.contains("container")) s.container = io::figure_from(doc["container"], grid);
    if (doc.contains("arc_centers")) {
      for (const auto& c : doc["arc_centers"]) s.arc_centers.push_back(io::point_from(c, "arc center"));
    }
    if (doc.contains("certificate")) {
      const Json& c = doc["certificate"];
      if (c.contains("mu")) s.atoms = io::measure_from(c["mu"], grid);
      if (c.contains("residual")) s.atoms = io::measure_from(c["residual"], grid);
    }
  } else {
    s.body = io::figure_from(doc, grid);
  }
  return s;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  using detail::Json;
  detail::Options opt;
  CLI::App app{"Convex-figure calculus for Dido-type problems", "dido"};
  app.require_subcommand(1);
  app.fallthrough();
  auto* grid_opt = app.add_option("--grid", opt.grid, "direction grid size")->capture_default_str();
  app.add_option("--seed", opt.seed, "random seed")->capture_default_str();
  app.add_option("--tol", opt.tol, "verification tolerance")->capture_default_str();
  app.add_option("-o,--output", opt.output, "output file");

  std::string file_a, file_b, problem, cert_file, reading;
  bool blaschke = false, linear = false, affine = false;
  double side = 0, target = 0, half = 0, radius = 0, length = 0;
  std::size_t scan = 0;
  std::string overlays = "container,centers,atoms";

  auto* body = app.add_subcommand("body", "parse a figure and print its canonical form");
  body->add_option("figure", file_a)->required();
  auto* measure = app.add_subcommand("measure", "surface measure of a figure");
  measure->add_option("figure", file_a)->required();
  auto* sum = app.add_subcommand("sum", "Minkowski (or Blaschke) sum of two figures");
  sum->add_option("a", file_a)->required();
  sum->add_option("b", file_b)->required();
  sum->add_flag("--blaschke", blaschke);
  auto* mixed = app.add_subcommand("mixedvol", "mixed area V1(a, b)");
  mixed->add_option("a", file_a)->required();
  mixed->add_option("b", file_b)->required();
  auto* major = app.add_subcommand("majorize", "majorization of two measures");
  major->add_option("a", file_a)->required();
  major->add_option("b", file_b)->required();
  auto* lin_flag = major->add_flag("--linear", linear);
  major->add_flag("--affine", affine)->excludes(lin_flag);

  auto* solve = app.add_subcommand("solve", "build an optimum with its certificate");
  solve->require_subcommand(1);
  auto* tri = solve->add_subcommand("urysohn-triangle", "external Urysohn problem around a triangle");
  tri->add_option("--side", side)->required();
  tri->add_option("--breadth", target)->required();
  auto* lens = solve->add_subcommand("lens", "lens around a segment");
  lens->add_option("--a", half)->required();
  lens->add_option("--r", radius)->required();
  auto* stad = solve->add_subcommand("stadium", "flattening optimum in a large box");
  stad->add_option("--r", radius)->required();
  stad->add_option("--l", length)->required();

  auto* verify = app.add_subcommand("verify", "check an optimality certificate");
  verify->add_option("problem", problem)->required()->check(
      CLI::IsMember({"external-urysohn", "flattening", "current-hyperplane"}));
  verify->add_option("certificate", cert_file)->required();
  verify->add_option("--reading", reading, "contact reading for current-hyperplane")
      ->check(CLI::IsMember({"literal", "corrected"}));

  auto* pareto = app.add_subcommand("pareto", "vector isoperimetric solution");
  pareto->add_option("spec", file_a)->required();
  pareto->add_option("--scan", scan, "perturbation samples");

  auto* render = app.add_subcommand("render", "SVG of a figure or solution");
  render->add_option("input", file_a)->required();
  render->add_option("--overlays", overlays, "comma list of container, centers, atoms; empty for body only");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "dido: " << e.what() << "\n" << app.help();
    return kInputError;
  }
  opt.grid_given = grid_opt->count() > 0;

  try {
    const DirectionGrid default_grid(opt.grid);
    Json result;
    int code = kOk;
    if (*body) {
      const Json doc = io::read_file(file_a);
      result = detail::figure_summary(io::figure_from(doc, default_grid), default_grid);
    } else if (*measure) {
      result = io::measure_json(io::measure_or_figure(io::read_file(file_a), default_grid));
    } else if (*sum) {
      const ConvexFigure a = io::figure_from(io::read_file(file_a), default_grid);
      const ConvexFigure b = io::figure_from(io::read_file(file_b), default_grid);
      try {
        result = io::figure_json(blaschke ? blaschke_sum(a, b) : minkowski_sum(a, b));
      } catch (const MeasureError& e) {
        throw io::InputError(std::string("sum: ") + e.what());
      }
    } else if (*mixed) {
      const ConvexFigure a = io::figure_from(io::read_file(file_a), default_grid);
      const ConvexFigure b = io::figure_from(io::read_file(file_b), default_grid);
      if (!a.full_dimensional()) throw io::InputError("mixedvol: first figure must be full-dimensional");
      result = Json{{"V1", io::number(mixed_volume(a, b))}};
    } else if (*major) {
      if (!linear && !affine) throw io::InputError("majorize: pass --linear or --affine");
      std::optional<TransportCertificate> cert;
      if (linear) {
        cert = linearly_majorizes(io::measure_or_figure(io::read_file(file_a), default_grid),
                                  io::measure_or_figure(io::read_file(file_b), default_grid));
      } else {
        cert = affinely_majorizes(io::point_measure_from(io::read_file(file_a)),
                                  io::point_measure_from(io::read_file(file_b)));
      }
      result = Json{{"feasible", cert.has_value()}};
      if (cert) result["certificate"] = io::plan_json(*cert);
      if (!cert) code = kNegative;
    } else if (*solve) {
      const DirectionGrid& g = default_grid;
      try {
        if (*tri) {
          const auto s = solve_external_urysohn_triangle(side, target, g);
          result = detail::with_centers(io::urysohn_json(s), s);
          result["disk_branch"] = s.disk_branch;
        } else if (*lens) {
          if (g.size() % 4 != 0) throw GeometryError("lens needs a grid size divisible by 4");
          const auto s = lens_2d(half, radius, g);
          result = detail::with_centers(io::urysohn_json(s), s);
        } else {
          if (g.size() % 4 != 0) throw GeometryError("stadium needs a grid size divisible by 4");
          const ConvexFigure st = stadium(radius, length, g);
          FlatteningCertificate c{radius, length, {}, Direction(kPi / 2)};
          result = io::flattening_json(st, detail::box_around(st, 10.0), c);
        }
      } catch (const GeometryError& e) {
        const std::string what = e.what();
        if (what.rfind("infeasible", 0) == 0) throw detail::Negative{Json{{"feasible", false}, {"reason", what}}};
        throw io::InputError("solve: " + what);
      }
      result["grid"] = g.size();
      result.erase("problem");
      Json ordered{{"problem", (*stad) ? "flattening" : "external-urysohn"}};
      ordered.update(result);
      result = ordered;
    } else if (*verify) {
      result = detail::run_verify(problem, io::read_file(cert_file), opt, reading);
      if (!result["passed"].get<bool>()) code = kNegative;
    } else if (*pareto) {
      const Json doc = io::read_file(file_a);
      const DirectionGrid g = detail::grid_for(doc, opt);
      std::vector<ConvexFigure> bodies;
      std::vector<double> weights;
      for (const auto& b : io::field(doc, "bodies")) bodies.push_back(io::figure_from(b, g));
      for (const auto& w : io::field(doc, "weights")) weights.push_back(io::real(w, "weight"));
      ParetoSolution s;
      try {
        s = pareto_vector_isoperimetric(bodies, weights, io::real_field(doc, "volume"));
      } catch (const GeometryError& e) {
        throw io::InputError(std::string("pareto: ") + e.what());
      }
      Json objectives = Json::array();
      for (double v : s.point.objectives) objectives.push_back(io::number(v));
      result = Json{{"body", io::figure_json(s.body)}, {"objectives", objectives}};
      if (scan > 0) {
        const auto rep = scan_vector_isoperimetric(s.body, bodies, g, scan, opt.seed);
        result["scan"] = Json{{"samples", rep.samples},
                              {"feasible", rep.feasible},
                              {"seed", opt.seed},
                              {"best_improvement", io::number(rep.best_improvement)}};
      }
    } else if (*render) {
      const Json doc = io::read_file(file_a);
      const DirectionGrid g = detail::grid_for(doc, opt);
      svg::RenderStyle style;
      std::stringstream ss(overlays);
      for (std::string item; std::getline(ss, item, ',');) {
        if (item == "container") style.overlays.push_back(svg::Overlay::kContainer);
        else if (item == "centers") style.overlays.push_back(svg::Overlay::kArcCenters);
        else if (item == "atoms") style.overlays.push_back(svg::Overlay::kAtoms);
        else if (!item.empty()) throw io::InputError("unknown overlay \"" + item + "\"");
      }
      std::string text;
      try {
        text = svg::render(detail::scene_from(doc, g), style);
      } catch (const GeometryError& e) {
        throw io::InputError(std::string("render: ") + e.what());
      }
      detail::emit(text, opt, out);
      return kOk;
    }
    detail::emit(io::dump(result), opt, out);
    return code;
  } catch (const detail::Negative& n) {
    detail::emit(io::dump(n.report), opt, out);
    return kNegative;
  } catch (const io::InputError& e) {
    err << "dido: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "dido: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "dido: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace dido::cli
