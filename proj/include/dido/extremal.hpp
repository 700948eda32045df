#pragma once

// Solution families and optimality-certificate checkers for Urysohn-type,
// flattening, current-hyperplane, vector isoperimetric and rotational
// problems, plus reproducible perturbation scans that probe optimality.
//
// Solutions are built on a direction grid: every edge normal of a
// constructed body is a grid direction, so the body and its certificate are
// the exact optimum and multiplier of the discretized problem, not merely an
// approximation of the continuous one.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dido/geometry.hpp"
#include "dido/majorization.hpp"
#include "dido/measures.hpp"

namespace dido {

// ---------------------------------------------------------------------------
// Reports

struct ConditionReport {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  std::string detail;
};

struct VerificationReport {
  std::vector<ConditionReport> conditions;

  bool passed() const {
    return std::all_of(conditions.begin(), conditions.end(), [](const ConditionReport& c) { return c.pass; });
  }

  const ConditionReport* find(const std::string& name) const {
    for (const auto& c : conditions) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

// ---------------------------------------------------------------------------
// Certificates

/// Contact multiplier μ and Lagrange factor ᾱ of the external Urysohn problem.
struct UrysohnCertificate {
  DiscreteMeasure mu;
  double alpha = 0.0;
};

struct FlatteningCertificate {
  double alpha = 0.0;
  double beta = 0.0;
  DiscreteMeasure residual;  ///< μ(𝔵), empty for the zero measure
  Direction direction{kPi / 2};
};

struct CurrentHyperplaneCertificate {
  double alpha = 0.0;
  double beta = 0.0;
  ConvexFigure x;
  ConvexFigure y;
  Direction direction{0.0};  ///< outer normal z0 of the hyperplane, seen from x̄
};

/// Which support the second contact condition of the current-hyperplane
/// theorem ranges over.
enum class ContactReading {
  kLiteral,    ///< supp(𝔵) \ {−z0}, as printed
  kCorrected,  ///< supp(𝔶) \ {−z0}
};

// ---------------------------------------------------------------------------
// Bulge bodies: the Urysohn optimum around a container with grid normals.

struct UrysohnSolution {
  ConvexFigure body;
  ConvexFigure container;
  UrysohnCertificate certificate;
  std::vector<Vec2> arc_centers;  ///< continuous-arc centers O_i, one per container edge
  bool disk_branch = false;       ///< body is a scaled disk that has lost contact
};

namespace detail {

struct Chain {
  int center = 0;       // grid index of the edge normal
  int half_width = 0;   // m: free cells are center ± (m−1)
  double end_weight{};  // weight of cells center ± m (or of the center cell when m = 0)
};

// Symmetric chain of grid-normal edges of full weight cap = α·2tan(π/n)
// spanning an edge of length s, with partial end cells.
inline Chain solve_chain(int center, double s, double cap, const DirectionGrid& grid) {
  Chain c{center, 0, s};
  if (cap >= s) return c;
  const double step = grid.spacing();
  double base = cap;  // Σ_{|k|<m} cap·cos(kδ) for m = 1
  for (int m = 1;; ++m) {
    const double cm = std::cos(m * step);
    if (m * step >= kPi / 2 || cm <= 0.0) throw GeometryError("non-convex bulge");
    if (base + 2.0 * cap * cm >= s) {
      c.half_width = m;
      c.end_weight = std::max(0.0, (s - base) / (2.0 * cm));
      return c;
    }
    base += 2.0 * cap * cm;
  }
}

}  // namespace detail

/// Body of greatest area among grid-normal polygons containing `container`
/// with the integral breadth it attains: every container edge is capped by a
/// chain of equal edges of length α·2tan(π/n) (a circumscribed arc of radius
/// α), meeting the container at its vertices. The certificate measure is
/// α·μ(ball) − μ(body), supported on the container's vertex normal cones.
inline UrysohnSolution urysohn_bulge(const ConvexFigure& container, double alpha, const DirectionGrid& grid) {
  if (container.empty()) throw GeometryError("empty figure");
  if (!(alpha > 0.0)) throw GeometryError("alpha must be positive");
  const int n = grid.size();
  const double cap = alpha * 2.0 * std::tan(kPi / n);
  const auto& verts = container.vertices();
  const auto edges = detail::edge_vectors(container);
  UrysohnSolution out;
  out.container = container;
  std::vector<double> total(static_cast<std::size_t>(n), 0.0);
  std::vector<Vec2> pts;
  std::vector<detail::Chain> chains;
  if (edges.empty()) {
    // A point container: the disk of radius α through it is optimal.
    throw GeometryError("point container has no bulge family; use a disk");
  }
  Vec2 start = verts.front();
  for (const Vec2& e : edges) {
    const double normal_angle = normalize_angle(std::atan2(-e.x, e.y));
    const auto center = grid.index_of(normal_angle);
    if (!center) throw GeometryError("container edge normals must lie on the direction grid");
    const double s = norm(e);
    const detail::Chain ch = detail::solve_chain(*center, s, cap, grid);
    chains.push_back(ch);
    Vec2 p = start;
    pts.push_back(p);
    for (int k = -ch.half_width; k <= ch.half_width; ++k) {
      const bool end = (k == -ch.half_width || k == ch.half_width);
      const double w = end ? ch.end_weight : cap;
      const int cell = grid.wrap(*center + k);
      total[static_cast<std::size_t>(cell)] += w;
      p += w * perp(grid.unit(cell));
      pts.push_back(p);
    }
    const double half = 0.5 * s;
    const double depth = std::sqrt(std::max(0.0, alpha * alpha - half * half));
    out.arc_centers.push_back(start + 0.5 * e - depth * grid.unit(*center));
    start += e;
  }
  // Consecutive chains may share an end cell but must not overlap.
  for (std::size_t i = 0; i < chains.size(); ++i) {
    const auto& a = chains[i];
    const auto& b = chains[(i + 1) % chains.size()];
    const int gap = grid.wrap((b.center - b.half_width) - (a.center + a.half_width));
    if (chains.size() > 1 && gap > n / 2) throw GeometryError("non-convex bulge");
  }
  for (double t : total) {
    if (t > cap * (1.0 + 1e-9)) throw GeometryError("non-convex bulge");
  }
  out.body = ConvexFigure::hull(pts);
  std::vector<MeasureAtom> mu;
  for (int k = 0; k < n; ++k) {
    const double w = cap - total[static_cast<std::size_t>(k)];
    if (w > 1e-14 * cap) mu.push_back({grid.angle(k), w});
  }
  out.certificate = {DiscreteMeasure(std::move(mu)), alpha};
  return out;
}

/// Equilateral triangle of side s, centroid at the origin, bottom edge
/// horizontal. Its edge normals (30°, 150°, 270°) lie on grids with n % 12 == 0.
inline ConvexFigure equilateral_triangle(double side) {
  if (!(side > 0.0)) throw GeometryError("side must be positive");
  const double r = side / std::sqrt(3.0);
  return ConvexFigure::hull(std::vector<Vec2>{r * unit_vector(kPi / 2), r * unit_vector(kPi / 2 + 2 * kPi / 3),
                                              r * unit_vector(kPi / 2 + 4 * kPi / 3)});
}

/// Union of the triangle and three circular slices of radius α over its
/// edges. α equal to the circumradius gives the circumdisk.
inline UrysohnSolution triangle_bulge_body(double side, double alpha, const DirectionGrid& grid) {
  const double circumradius = side / std::sqrt(3.0);
  if (!(alpha >= circumradius * (1.0 - 1e-12))) throw GeometryError("non-convex bulge");
  return urysohn_bulge(equilateral_triangle(side), std::max(alpha, circumradius), grid);
}

/// Intersection of two disks of radius r through (±a, 0): the Urysohn
/// optimum around the segment [−a, a] × {0}.
inline UrysohnSolution lens_2d(double a, double r, const DirectionGrid& grid) {
  if (!(a > 0.0)) throw GeometryError("half-width must be positive");
  if (!(r >= a * (1.0 - 1e-12))) throw GeometryError("infeasible radius");
  return urysohn_bulge(ConvexFigure::segment({-a, 0.0}, {a, 0.0}), std::max(r, a), grid);
}

/// Minkowski sum of the grid disk of radius r and a horizontal segment of
/// length ℓ centered at the origin.
inline ConvexFigure stadium(double r, double length, const DirectionGrid& grid) {
  if (!(r > 0.0)) throw GeometryError("stadium radius must be positive");
  if (!(length >= 0.0)) throw GeometryError("stadium length must be nonnegative");
  const ConvexFigure disk = ConvexFigure::disk({0.0, 0.0}, r, grid.size());
  if (length == 0.0) return disk;
  return minkowski_sum(disk, ConvexFigure::segment({-0.5 * length, 0.0}, {0.5 * length, 0.0}));
}

/// Solves the external Urysohn problem around the equilateral triangle of
/// side s for integral breadth B by bisection in α over the bulge family.
/// Beyond the circumdisk's breadth the solution is the disk of radius B/π
/// (contact lost, empty multiplier).
inline UrysohnSolution solve_external_urysohn_triangle(double side, double target, const DirectionGrid& grid) {
  if (grid.size() % 12 != 0) throw GeometryError("triangle problems need a grid size divisible by 12");
  const ConvexFigure tri = equilateral_triangle(side);
  const double b_min = integral_breadth(tri, grid);
  const double circumradius = side / std::sqrt(3.0);
  const double b_disk = kPi * circumradius;
  if (!(target >= b_min * (1.0 - 1e-12))) throw GeometryError("infeasible: breadth below the triangle's");
  if (target >= b_disk) {
    UrysohnSolution out;
    const double rho = target / kPi;
    out.body = ConvexFigure::disk({0.0, 0.0}, rho, grid.size());
    out.container = tri;
    out.certificate = {DiscreteMeasure{}, rho};
    out.disk_branch = target > b_disk;
    return out;
  }
  auto breadth_at = [&](double a) { return integral_breadth(triangle_bulge_body(side, a, grid).body, grid); };
  double lo = circumradius;  // breadth(lo) = b_disk >= target
  double hi = 2.0 * circumradius;
  int doublings = 0;
  while (breadth_at(hi) > target) {
    lo = hi;
    hi *= 2.0;
    if (++doublings > 200) throw GeometryError("bisection could not bracket the breadth target");
  }
  const double tol = 1e-8 * std::max(1.0, target);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double b = breadth_at(mid);
    if (std::abs(b - target) <= 0.01 * tol && it > 60) {
      lo = hi = mid;
      break;
    }
    (b > target ? lo : hi) = mid;
    if (hi - lo <= 1e-15 * hi) break;
  }
  const double alpha = 0.5 * (lo + hi);
  UrysohnSolution sol = triangle_bulge_body(side, alpha, grid);
  const double achieved = integral_breadth(sol.body, grid);
  if (std::abs(achieved - target) > tol) {
    throw GeometryError("bisection failed: breadth " + std::to_string(achieved) + " vs target " +
                        std::to_string(target));
  }
  return sol;
}

// ---------------------------------------------------------------------------
// Verifiers

namespace detail {

// Surface measure with atoms moved onto grid directions within 1e-9 rad;
// bodies read back from rounded coordinates have slightly tilted edges.
inline DiscreteMeasure grid_measure(const ConvexFigure& x, const DirectionGrid& grid) {
  std::vector<MeasureAtom> atoms = surface_measure(x).measure().atoms();
  for (auto& a : atoms) {
    if (const auto i = grid.index_of(a.angle)) a.angle = grid.angle(*i);
  }
  return DiscreteMeasure(std::move(atoms));
}

}  // namespace detail

/// Checks the three optimality conditions of the external Urysohn problem:
///   (1) ᾱ·μ(ball) ≫ μ(x̄) + μ,
///   (2) V(x̄) + (1/2)∫ x̄ dμ = ᾱ·V1(ball, x̄),
///   (3) x̄(z) = x₀(z) on the support of μ,
/// plus containment of x₀ and positivity of ᾱ.
inline VerificationReport verify_external_optimality(const ConvexFigure& body, const ConvexFigure& container,
                                                     const UrysohnCertificate& cert, const DirectionGrid& grid,
                                                     double tol) {
  VerificationReport rep;
  const double scale = std::max(1.0, body.diameter());
  rep.conditions.push_back({"containment", contains(body, container), 0.0, "x0 inside body"});
  rep.conditions.push_back({"multiplier", cert.alpha > 0.0, cert.alpha > 0.0 ? 0.0 : -cert.alpha, "alpha > 0"});

  const DiscreteMeasure ball = ball_measure(grid).measure();
  const DiscreteMeasure majorant = std::max(cert.alpha, 0.0) * ball;
  DiscreteMeasure minor = cert.mu;
  if (body.full_dimensional()) minor = minor + detail::grid_measure(body, grid);
  {
    const double cellwise = max_abs_weight(signed_difference(majorant, minor));
    double violation = 0.0;
    bool ok = detail::identity_transport(majorant, minor, tol * scale).has_value();
    if (!ok) {
      violation = std::max(0.0, -linear_majorization_depth(majorant, minor));
      ok = violation <= tol * scale;
    }
    rep.conditions.push_back(
        {"majorization", ok, violation, "cellwise |alpha*mu(ball) - mu(body) - mu| = " + std::to_string(cellwise)});
  }
  {
    auto h = [&](Vec2 u) { return support_eval(body, u); };
    const double lhs = volume(body) + pairing(h, cert.mu);
    const double rhs = cert.alpha * pairing(h, ball);
    const double res = lhs - rhs;
    rep.conditions.push_back({"volume_identity", std::abs(res) <= tol * std::max(1.0, std::abs(rhs)), res,
                              "V + <body, mu> - alpha*V1(ball, body)"});
  }
  {
    double worst = 0.0;
    for (const auto& a : cert.mu.atoms()) {
      worst = std::max(worst, std::abs(support_eval(body, a.unit()) - support_eval(container, a.unit())));
    }
    rep.conditions.push_back({"contact", worst <= tol * scale, worst, "|body(z) - x0(z)| on supp(mu)"});
  }
  return rep;
}

/// Checks μ(x̄) = μ(𝔵) + α·μ(ball) + β(ε_z + ε_−z) atomwise and contact of
/// x̄ with x₀ on supp μ(𝔵); α, β must be positive and x̄ ⊆ x₀.
inline VerificationReport verify_flattening_optimality(const ConvexFigure& body, const ConvexFigure& container,
                                                       const FlatteningCertificate& cert, const DirectionGrid& grid,
                                                       double tol) {
  VerificationReport rep;
  const double scale = std::max(1.0, body.diameter());
  rep.conditions.push_back({"containment", contains(container, body), 0.0, "body inside x0"});
  rep.conditions.push_back({"multipliers", cert.alpha > 0.0 && cert.beta > 0.0,
                            std::max({0.0, -cert.alpha, -cert.beta}), "alpha > 0 and beta > 0"});
  {
    bool ok = true;
    std::string why = "zero";
    if (!cert.residual.empty()) {
      try {
        AlexandrovMeasure check(cert.residual);
        why = "surface measure";
      } catch (const MeasureError& e) {
        ok = false;
        why = e.what();
      }
    }
    rep.conditions.push_back({"residual_measure", ok, 0.0, why});
  }
  {
    double res = std::numeric_limits<double>::infinity();
    if (body.full_dimensional()) {
      DiscreteMeasure rhs = cert.residual + std::max(cert.alpha, 0.0) * ball_measure(grid).measure();
      if (cert.beta > 0.0) {
        rhs = rhs + DiscreteMeasure::dirac(cert.direction, cert.beta) +
              DiscreteMeasure::dirac(cert.direction.opposite(), cert.beta);
      }
      res = max_abs_weight(signed_difference(detail::grid_measure(body, grid), rhs));
    }
    rep.conditions.push_back({"decomposition", res <= tol * scale, res,
                              "max atom of mu(body) - mu(x) - alpha*mu(ball) - beta*(e_z + e_-z)"});
  }
  {
    double worst = 0.0;
    for (const auto& a : cert.residual.atoms()) {
      worst = std::max(worst, std::abs(support_eval(body, a.unit()) - support_eval(container, a.unit())));
    }
    rep.conditions.push_back({"contact", worst <= tol * scale, worst, "|body(z) - x0(z)| on supp mu(x)"});
  }
  return rep;
}

/// Checks the five conditions of the current-hyperplane theorem for the pair
/// (x̄, ȳ) in x₀. Throws when the pair is not separated by a line with
/// normal z0.
inline VerificationReport verify_current_hyperplane(const ConvexFigure& xbar, const ConvexFigure& ybar,
                                                    const ConvexFigure& container,
                                                    const CurrentHyperplaneCertificate& cert,
                                                    const DirectionGrid& grid, double tol,
                                                    ContactReading reading = ContactReading::kLiteral) {
  const Vec2 z0 = cert.direction.unit();
  const double scale = std::max({1.0, xbar.diameter(), ybar.diameter()});
  if (support_eval(xbar, z0) > -support_eval(ybar, -z0) + tol * scale) {
    throw GeometryError("figures are not separated by a line with the given normal");
  }
  VerificationReport rep;
  rep.conditions.push_back({"containment", contains(container, xbar) && contains(container, ybar), 0.0,
                            "both bodies inside x0"});
  rep.conditions.push_back({"multipliers", cert.alpha > 0.0 && cert.beta > 0.0,
                            std::max({0.0, -cert.alpha, -cert.beta}), "alpha > 0 and beta > 0"});
  const DiscreteMeasure ball = std::max(cert.alpha, 0.0) * ball_measure(grid).measure();
  auto blaschke_residual = [&](const ConvexFigure& bar, const ConvexFigure& part) {
    if (!bar.full_dimensional() || !part.full_dimensional()) return std::numeric_limits<double>::infinity();
    return max_abs_weight(signed_difference(detail::grid_measure(bar, grid), detail::grid_measure(part, grid) + ball));
  };
  const double r1 = blaschke_residual(xbar, cert.x);
  const double r2 = blaschke_residual(ybar, cert.y);
  rep.conditions.push_back({"blaschke_x", r1 <= tol * scale, r1, "mu(xbar) = mu(x) + alpha*mu(ball)"});
  rep.conditions.push_back({"blaschke_y", r2 <= tol * scale, r2, "mu(ybar) = mu(y) + alpha*mu(ball)"});

  const DiscreteMeasure mx = cert.x.full_dimensional() ? detail::grid_measure(cert.x, grid) : DiscreteMeasure{};
  const DiscreteMeasure my = cert.y.full_dimensional() ? detail::grid_measure(cert.y, grid) : DiscreteMeasure{};
  const double at_z0 = mx.mass_at(cert.direction.angle());
  const double at_minus = my.mass_at(cert.direction.opposite().angle());
  const double shortfall = std::max(0.0, cert.beta - std::min(at_z0, at_minus));
  rep.conditions.push_back({"flat_faces", shortfall <= tol * scale, shortfall,
                            "mu(x) >= beta*e_z0 and mu(y) >= beta*e_-z0"});

  auto contact = [&](const ConvexFigure& bar, const DiscreteMeasure& supp, Direction skip) {
    double worst = 0.0;
    for (const auto& a : supp.atoms()) {
      if (std::abs(angle_difference(a.angle, skip.angle())) <= 1e-9) continue;
      worst = std::max(worst, std::abs(support_eval(bar, a.unit()) - support_eval(container, a.unit())));
    }
    return worst;
  };
  const double c4 = contact(xbar, mx, cert.direction);
  const double c5 = contact(ybar, reading == ContactReading::kLiteral ? mx : my, cert.direction.opposite());
  rep.conditions.push_back({"contact_x", c4 <= tol * scale, c4, "xbar = x0 on supp(x) \\ {z0}"});
  rep.conditions.push_back({"contact_y", c5 <= tol * scale, c5,
                            reading == ContactReading::kLiteral ? "ybar = x0 on supp(x) \\ {-z0}"
                                                                : "ybar = x0 on supp(y) \\ {-z0}"});
  return rep;
}

// ---------------------------------------------------------------------------
// Vector isoperimetric problem

struct ParetoPoint {
  std::vector<double> objectives;  ///< V1(x̄, y_k), k = 1..M
  std::vector<double> weights;
};

struct ParetoSolution {
  ConvexFigure body;
  ParetoPoint point;
};

/// x̄ = λ·Σ α_k y_k with λ fixing volume(x̄) = V*; centroid at the origin.
inline ParetoSolution pareto_vector_isoperimetric(const std::vector<ConvexFigure>& bodies,
                                                  const std::vector<double>& weights, double target_volume) {
  if (bodies.empty() || bodies.size() != weights.size()) throw GeometryError("need one weight per body");
  if (!(target_volume > 0.0)) throw GeometryError("target volume must be positive");
  ConvexFigure comb;
  for (std::size_t k = 0; k < bodies.size(); ++k) {
    if (!(weights[k] > 0.0)) throw GeometryError("weights must be positive");
    const ConvexFigure term = scale(bodies[k], weights[k]);
    comb = comb.empty() ? term : minkowski_sum(comb, term);
  }
  if (!comb.full_dimensional() || comb.area() <= 0.0) throw GeometryError("degenerate combination");
  const ConvexFigure x = scale(comb, std::sqrt(target_volume / comb.area()));
  ParetoSolution out{x.translated(-x.centroid()), {{}, weights}};
  for (const auto& y : bodies) out.point.objectives.push_back(mixed_volume(out.body, y));
  return out;
}

// ---------------------------------------------------------------------------
// Bodies of rotation

/// A planar profile symmetric about an axis through the origin, stored in
/// the axis frame (axis along +y).
struct RotationBody {
  ConvexFigure profile;
  Direction axis{kPi / 2};
};

inline ConvexFigure rotate_figure(const ConvexFigure& x, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  std::vector<Vec2> pts;
  for (const Vec2& v : x.vertices()) pts.push_back({c * v.x - s * v.y, s * v.x + c * v.y});
  return ConvexFigure::hull(pts);
}

inline RotationBody rotate_profile(const ConvexFigure& profile, Direction axis) {
  if (profile.empty()) throw GeometryError("empty figure");
  const ConvexFigure framed = rotate_figure(profile, kPi / 2 - axis.angle());
  std::vector<Vec2> mirrored;
  for (const Vec2& v : framed.vertices()) mirrored.push_back({-v.x, v.y});
  const double diam = std::max(framed.diameter(), 1e-300);
  if (hausdorff_distance(framed, ConvexFigure::hull(mirrored)) > kGeometricTolerance * diam) {
    throw GeometryError("asymmetric profile");
  }
  return {framed, axis};
}

namespace detail {

// Part of the profile with x >= 0.
inline std::vector<Vec2> right_half(const ConvexFigure& p) {
  const std::vector<Vec2> normals{{-1.0, 0.0}};
  const std::vector<double> offsets{0.0};
  if (!p.full_dimensional()) return {};
  std::vector<Vec2> poly = p.vertices();
  std::vector<Vec2> out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2 a = poly[i];
    const Vec2 b = poly[(i + 1) % poly.size()];
    if (a.x >= 0.0) out.push_back({std::max(a.x, 0.0), a.y});
    if ((a.x < 0.0 && b.x > 0.0) || (a.x > 0.0 && b.x < 0.0)) {
      const double t = a.x / (a.x - b.x);
      out.push_back({0.0, a.y + t * (b.y - a.y)});
    }
  }
  return out;
}

}  // namespace detail

/// π ∮ x² dz over the right half of the profile (exact for polygons).
inline double rotation_volume(const RotationBody& b) {
  const auto h = detail::right_half(b.profile);
  double s = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Vec2 p = h[i];
    const Vec2 q = h[(i + 1) % h.size()];
    s += (q.y - p.y) * (p.x * p.x + p.x * q.x + q.x * q.x);
  }
  return kPi * s / 3.0;
}

/// 2π ∫ x ds over the boundary of the right half (frusta; exact for polygons).
inline double rotation_surface(const RotationBody& b) {
  const auto h = detail::right_half(b.profile);
  double s = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Vec2 p = h[i];
    const Vec2 q = h[(i + 1) % h.size()];
    s += norm(q - p) * (p.x + q.x);
  }
  return kPi * s;
}

/// Breadth along the axis.
inline double rotation_breadth(const RotationBody& b) { return breadth(b.profile, Direction(kPi / 2)); }

// ---------------------------------------------------------------------------
// Perturbation scans

struct ScanReport {
  std::size_t samples = 0;
  std::size_t feasible = 0;
  /// Largest improvement seen (for Pareto scans: the smallest per-objective
  /// improvement of the best sample); negative when nothing improved.
  double best_improvement = -std::numeric_limits<double>::infinity();
  std::size_t best_sample = 0;
};

namespace detail {

inline std::mt19937_64 sample_rng(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

// Random support-vector jitter: i.i.d. cell noise, a few low Fourier modes,
// or a single bump, with log-uniform amplitude.
inline std::vector<double> jitter(std::mt19937_64& rng, const DirectionGrid& grid, double scale) {
  const int n = grid.size();
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> expo(-4.0, -1.0);
  const double amp = scale * std::pow(10.0, expo(rng));
  std::vector<double> d(static_cast<std::size_t>(n), 0.0);
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0:
      for (double& v : d) v = amp * unit(rng);
      break;
    case 1:
      for (int mode = 0; mode <= 6; ++mode) {
        const double a = amp * unit(rng) / (1 + mode);
        const double b = amp * unit(rng) / (1 + mode);
        for (int k = 0; k < n; ++k) {
          d[static_cast<std::size_t>(k)] += a * std::cos(mode * grid.angle(k)) + b * std::sin(mode * grid.angle(k));
        }
      }
      break;
    default: {
      const int at = std::uniform_int_distribution<int>(0, n - 1)(rng);
      const int width = std::uniform_int_distribution<int>(1, std::max(1, n / 12))(rng);
      const double a = amp * unit(rng);
      for (int k = -width; k <= width; ++k) {
        d[static_cast<std::size_t>(grid.wrap(at + k))] += a * (1.0 - std::abs(k) / (width + 1.0));
      }
    }
  }
  return d;
}

inline double sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace detail

/// Perturbs an external Urysohn optimum within the feasible set (bodies with
/// grid normals containing x₀ whose integral breadth does not exceed the
/// optimum's) and reports the largest area gain found.
inline ScanReport scan_external_urysohn(const ConvexFigure& body, const ConvexFigure& container,
                                        const DirectionGrid& grid, std::size_t samples, std::uint64_t seed) {
  const auto hbar = sample_support(body, grid).values();
  const auto h0 = sample_support(container, grid).values();
  const double total = detail::sum(hbar);
  const double area = body.area();
  const double scale = std::max(1e-300, body.diameter());
  ScanReport rep;
  for (std::size_t s = 0; s < samples; ++s) {
    ++rep.samples;
    auto rng = detail::sample_rng(seed, s);
    const auto d = detail::jitter(rng, grid, scale);
    std::vector<double> h(hbar.size());
    for (std::size_t k = 0; k < h.size(); ++k) h[k] = std::max(hbar[k] + d[k], h0[k]);
    const double excess = detail::sum(h) - total;
    if (excess > 0.0) {
      double slack = 0.0;
      for (std::size_t k = 0; k < h.size(); ++k) slack += h[k] - h0[k];
      if (slack < excess) continue;
      for (std::size_t k = 0; k < h.size(); ++k) h[k] -= excess * (h[k] - h0[k]) / slack;
    }
    const ConvexFigure x = SupportVector(grid, h).figure();
    if (x.empty() || !contains(x, container) || integral_breadth(x, grid) > integral_breadth(body, grid) * (1 + 1e-12)) {
      continue;
    }
    ++rep.feasible;
    const double gain = x.area() - area;
    if (gain > rep.best_improvement) {
      rep.best_improvement = gain;
      rep.best_sample = s;
    }
  }
  return rep;
}

/// Perturbs a vector-isoperimetric solution at fixed volume and reports the
/// best simultaneous improvement of all mixed-volume objectives (the minimum
/// over k of V1(x̄, y_k) − V1(x, y_k)).
inline ScanReport scan_vector_isoperimetric(const ConvexFigure& body, const std::vector<ConvexFigure>& bodies,
                                            const DirectionGrid& grid, std::size_t samples, std::uint64_t seed) {
  const auto hbar = sample_support(body, grid).values();
  const double vol = body.area();
  std::vector<double> base;
  for (const auto& y : bodies) base.push_back(mixed_volume(body, y));
  ScanReport rep;
  for (std::size_t s = 0; s < samples; ++s) {
    ++rep.samples;
    auto rng = detail::sample_rng(seed, s);
    const auto d = detail::jitter(rng, grid, body.diameter());
    std::vector<double> h(hbar.size());
    for (std::size_t k = 0; k < h.size(); ++k) h[k] = hbar[k] + d[k];
    const ConvexFigure raw = SupportVector(grid, h).figure();
    if (!raw.full_dimensional()) continue;
    const ConvexFigure x = scale(raw, std::sqrt(vol / raw.area()));
    ++rep.feasible;
    double gain = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < bodies.size(); ++k) gain = std::min(gain, base[k] - mixed_volume(x, bodies[k]));
    if (gain > rep.best_improvement) {
      rep.best_improvement = gain;
      rep.best_sample = s;
    }
  }
  return rep;
}

/// Perturbs the profile of a body of rotation symmetrically, rescales to the
/// same volume, and reports the best simultaneous decrease of surface area
/// and axial breadth.
inline ScanReport scan_rotational(const RotationBody& body, const DirectionGrid& grid, std::size_t samples,
                                  std::uint64_t seed) {
  const auto hbar = sample_support(body.profile, grid).values();
  const double vol = rotation_volume(body);
  const double surf = rotation_surface(body);
  const double width = rotation_breadth(body);
  const int n = grid.size();
  ScanReport rep;
  for (std::size_t s = 0; s < samples; ++s) {
    ++rep.samples;
    auto rng = detail::sample_rng(seed, s);
    const auto d = detail::jitter(rng, grid, body.profile.diameter());
    std::vector<double> h(hbar.size());
    for (int k = 0; k < n; ++k) {
      const int mirror = grid.wrap(n / 2 - k);
      h[static_cast<std::size_t>(k)] =
          hbar[static_cast<std::size_t>(k)] + 0.5 * (d[static_cast<std::size_t>(k)] + d[static_cast<std::size_t>(mirror)]);
    }
    const ConvexFigure raw = SupportVector(grid, h).figure();
    if (!raw.full_dimensional()) continue;
    RotationBody trial{raw, body.axis};
    const double v = rotation_volume(trial);
    if (!(v > 0.0)) continue;
    trial.profile = scale(raw, std::cbrt(vol / v));
    ++rep.feasible;
    const double gain = std::min(surf - rotation_surface(trial), width - rotation_breadth(trial));
    if (gain > rep.best_improvement) {
      rep.best_improvement = gain;
      rep.best_sample = s;
    }
  }
  return rep;
}

/// Perturbs a flattening optimum inside x₀ at fixed integral breadth (trial
/// bodies are rescaled to the optimum's) and reports the best simultaneous
/// gain in area and decrease of breadth along z.
inline ScanReport scan_flattening(const ConvexFigure& body, const ConvexFigure& container, Direction z,
                                  const DirectionGrid& grid, std::size_t samples, std::uint64_t seed) {
  const auto hbar = sample_support(body, grid).values();
  const double b_int = integral_breadth(body, grid);
  const double area = body.area();
  const double width = breadth(body, z);
  const Vec2 c = body.centroid();
  ScanReport rep;
  for (std::size_t s = 0; s < samples; ++s) {
    ++rep.samples;
    auto rng = detail::sample_rng(seed, s);
    const auto d = detail::jitter(rng, grid, body.diameter());
    std::vector<double> h(hbar.size());
    for (std::size_t k = 0; k < h.size(); ++k) h[k] = hbar[k] + d[k];
    const ConvexFigure raw = SupportVector(grid, h).figure();
    if (!raw.full_dimensional()) continue;
    const double lambda = b_int / integral_breadth(raw, grid);
    const ConvexFigure x = scale(raw.translated(-c), lambda).translated(c);
    if (!contains(container, x)) continue;
    ++rep.feasible;
    const double gain = std::min(x.area() - area, width - breadth(x, z));
    if (gain > rep.best_improvement) {
      rep.best_improvement = gain;
      rep.best_sample = s;
    }
  }
  return rep;
}

}  // namespace dido
