#pragma once

// Majorization of measures and the finite decomposition theorem, decided by
// linear programming.
//
// Linear majorization μ ≫ ν on the circle: μ splits into parts μ_j, one per
// atom of ν, each with the same resultant vector as that atom. Affine
// majorization (Choquet order) additionally matches masses, so each part has
// the atom's mass and barycenter. The quantifier over all Borel partitions
// (resp. all decompositions of ν) reduces to the finest one for atomic
// measures: a certificate for the finest partition sums to a certificate for
// any coarser one.

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dido/geometry.hpp"
#include "dido/lp.hpp"
#include "dido/measures.hpp"

namespace dido {

/// p(u) = max_k <a_k, u>.
struct SublinearFunction {
  std::vector<Vec2> generators;

  double operator()(Vec2 u) const {
    if (generators.empty()) throw std::invalid_argument("sublinear function needs a generator");
    double best = dot(generators.front(), u);
    for (const Vec2& a : generators) best = std::max(best, dot(a, u));
    return best;
  }
};

template <std::size_t D>
using Point = std::array<double, D>;

template <std::size_t D>
double dot(const Point<D>& a, const Point<D>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < D; ++i) s += a[i] * b[i];
  return s;
}

template <std::size_t D>
struct AffinePiece {
  Point<D> slope{};
  double offset = 0.0;
};

/// f(q) = max_k (<a_k, q> + b_k), a convex piecewise-affine test function.
template <std::size_t D>
struct ConvexTestFunction {
  std::vector<AffinePiece<D>> pieces;

  double operator()(const Point<D>& q) const {
    if (pieces.empty()) throw std::invalid_argument("convex test function needs a piece");
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& p : pieces) best = std::max(best, dot(p.slope, q) + p.offset);
    return best;
  }
};

/// Finitely atomic positive measure on points of R^D.
template <std::size_t D>
struct PointMeasure {
  struct Atom {
    Point<D> point{};
    double weight = 0.0;
  };
  std::vector<Atom> atoms;

  double total_mass() const {
    double s = 0.0;
    for (const auto& a : atoms) s += a.weight;
    return s;
  }

  double integrate(const std::function<double(const Point<D>&)>& f) const {
    double s = 0.0;
    for (const auto& a : atoms) s += a.weight * f(a.point);
    return s;
  }
};

/// plan[j][i]: mass of the i-th atom of μ assigned to the part matching the
/// j-th atom of ν. Column sums reproduce μ.
struct TransportCertificate {
  std::vector<std::vector<double>> plan;
};

namespace detail {

inline double mass_scale(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  return std::max(1.0, mu.total_mass() + nu.total_mass());
}

// Identity transport on shared directions, with leftover μ mass (which must be
// closed) put into the first part.
inline std::optional<TransportCertificate> identity_transport(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                                                              double tol) {
  const auto& ma = mu.atoms();
  const auto& na = nu.atoms();
  TransportCertificate cert;
  cert.plan.assign(na.size(), std::vector<double>(ma.size(), 0.0));
  std::vector<double> left(ma.size());
  for (std::size_t i = 0; i < ma.size(); ++i) left[i] = ma[i].weight;
  std::size_t i = 0;
  for (std::size_t j = 0; j < na.size(); ++j) {
    while (i < ma.size() && ma[i].angle < na[j].angle - kAngleMergeTolerance) ++i;
    if (i == ma.size() || std::abs(ma[i].angle - na[j].angle) > kAngleMergeTolerance) return std::nullopt;
    if (na[j].weight > left[i] + tol) return std::nullopt;
    const double take = std::min(na[j].weight, left[i]);
    cert.plan[j][i] = take;
    left[i] -= take;
  }
  Vec2 rest;
  for (std::size_t k = 0; k < ma.size(); ++k) rest += left[k] * ma[k].unit();
  if (norm(rest) > tol) return std::nullopt;
  for (std::size_t k = 0; k < ma.size(); ++k) cert.plan[0][k] += left[k];
  return cert;
}

}  // namespace detail

/// Decision by the dual route. μ ≫ ν iff ∫p dμ ≥ ∫p dν for every sublinear
/// p; on a finite direction set with gaps below π/2 the sublinear functions
/// are the support vectors with nonnegative edge lengths. Hence μ − ν must be
/// the edge-length vector of a closed (generalized) polygon whose support
/// values λ, shifted by some linear function, are all nonnegative. Returns
/// the largest s such that {p : <p,u_k> <= λ_k − s} is nonempty, or −|Σ(μ−ν)u|
/// when μ − ν is not closed. μ ≫ ν iff the result is >= −tol.
inline double linear_majorization_depth(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  std::vector<MeasureAtom> c = signed_difference(mu, nu);
  {
    std::vector<MeasureAtom> fill;
    for (int k = 0; k < 8; ++k) fill.push_back({k * kPi / 4.0, 0.0});
    c.insert(c.end(), fill.begin(), fill.end());
    std::sort(c.begin(), c.end(), [](const MeasureAtom& a, const MeasureAtom& b) { return a.angle < b.angle; });
    std::vector<MeasureAtom> merged;
    for (const auto& a : c) {
      if (!merged.empty() && std::abs(a.angle - merged.back().angle) <= kAngleMergeTolerance) {
        merged.back().weight += a.weight;
      } else {
        merged.push_back(a);
      }
    }
    if (merged.size() >= 2 && kTwoPi - merged.back().angle + merged.front().angle <= kAngleMergeTolerance) {
      merged.front().weight += merged.back().weight;
      merged.pop_back();
    }
    c.swap(merged);
  }
  Vec2 resultant;
  for (const auto& a : c) resultant += a.weight * a.unit();
  const double tol = kGeometricTolerance * detail::mass_scale(mu, nu);
  if (norm(resultant) > tol) return -norm(resultant);

  std::vector<Vec2> normals;
  std::vector<double> lambda;
  Vec2 p;
  double span = 0.0;
  for (const auto& a : c) {
    normals.push_back(a.unit());
    lambda.push_back(dot(p, a.unit()));
    p += a.weight * perp(a.unit());
    span = std::max(span, std::abs(lambda.back()));
  }
  auto feasible = [&](double s) {
    std::vector<double> off(lambda.size());
    for (std::size_t k = 0; k < off.size(); ++k) off[k] = lambda[k] - s;
    return !half_plane_intersection(normals, off).empty();
  };
  double lo = -(span + 1.0);
  double hi = span + 1.0;
  if (!feasible(lo)) return lo;
  if (feasible(hi)) return hi;
  for (int it = 0; it < 80 && hi - lo > 1e-15 * (span + 1.0); ++it) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

inline bool linearly_majorizes_dual(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  return linear_majorization_depth(mu, nu) >= -kGeometricTolerance * detail::mass_scale(mu, nu);
}

/// Transport-plan certificate for μ ≫ ν, or nullopt when none exists.
///
/// LP: plan[j][i] >= 0, Σ_j plan[j][i] = μ_i, Σ_i plan[j][i] u_i = ν_j v_j.
/// Instances whose parts can be matched on shared directions are certified
/// directly; instances too large for the dense tableau are decided by the
/// dual route and only refuted there.
inline std::optional<TransportCertificate> linearly_majorizes(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  if (nu.empty()) return TransportCertificate{};
  const double tol = kGeometricTolerance * detail::mass_scale(mu, nu);
  // Necessary: equal resultants, and |ν_j v_j| <= mass of its part.
  if (norm(mu.resultant() - nu.resultant()) > tol) return std::nullopt;
  if (nu.total_mass() > mu.total_mass() + tol) return std::nullopt;
  if (auto cert = detail::identity_transport(mu, nu, tol)) return cert;

  const auto& ma = mu.atoms();
  const auto& na = nu.atoms();
  const std::size_t I = ma.size();
  const std::size_t J = na.size();
  const std::size_t rows = I + 2 * J;
  const std::size_t cols = I * J;
  if (rows * (rows + cols + 1) > lp::kMaxTableauEntries) {
    if (!linearly_majorizes_dual(mu, nu)) return std::nullopt;
    throw std::length_error("majorization certificate too large for the dense transport LP");
  }
  lp::Matrix<double> a(rows, cols);
  std::vector<double> b(rows);
  for (std::size_t j = 0; j < J; ++j) {
    const Vec2 v = na[j].unit();
    for (std::size_t i = 0; i < I; ++i) {
      const Vec2 u = ma[i].unit();
      const std::size_t col = j * I + i;
      a(i, col) = 1.0;
      a(I + 2 * j, col) = u.x;
      a(I + 2 * j + 1, col) = u.y;
    }
    b[I + 2 * j] = na[j].weight * v.x;
    b[I + 2 * j + 1] = na[j].weight * v.y;
  }
  for (std::size_t i = 0; i < I; ++i) b[i] = ma[i].weight;
  auto x = lp::find_nonnegative_solution(a, b);
  if (!x) return std::nullopt;
  TransportCertificate cert;
  cert.plan.assign(J, std::vector<double>(I, 0.0));
  for (std::size_t j = 0; j < J; ++j) {
    for (std::size_t i = 0; i < I; ++i) cert.plan[j][i] = (*x)[j * I + i];
  }
  return cert;
}

/// Largest violation of the certificate's defining equations.
inline double transport_residual(const DiscreteMeasure& mu, const DiscreteMeasure& nu, const TransportCertificate& c) {
  const auto& ma = mu.atoms();
  const auto& na = nu.atoms();
  if (na.empty()) return 0.0;
  if (c.plan.size() != na.size()) return std::numeric_limits<double>::infinity();
  double r = 0.0;
  for (std::size_t i = 0; i < ma.size(); ++i) {
    double s = 0.0;
    for (const auto& row : c.plan) s += row.at(i);
    r = std::max(r, std::abs(s - ma[i].weight));
  }
  for (std::size_t j = 0; j < na.size(); ++j) {
    Vec2 s;
    for (std::size_t i = 0; i < ma.size(); ++i) {
      if (c.plan[j][i] < 0.0) r = std::max(r, -c.plan[j][i]);
      s += c.plan[j][i] * ma[i].unit();
    }
    r = std::max(r, norm(s - na[j].weight * na[j].unit()));
  }
  return r;
}

/// ∫p dμ − ∫p dν.
inline double reshetnyak_gap(const DiscreteMeasure& mu, const DiscreteMeasure& nu, const SublinearFunction& p) {
  return mu.integrate(p) - nu.integrate(p);
}

/// Transport-plan certificate of affine majorization (Choquet order), or
/// nullopt. Each part of μ must carry the mass and barycenter of its ν atom.
template <std::size_t D>
std::optional<TransportCertificate> affinely_majorizes(const PointMeasure<D>& mu, const PointMeasure<D>& nu) {
  const double scale = std::max(1.0, mu.total_mass() + nu.total_mass());
  if (std::abs(mu.total_mass() - nu.total_mass()) > kGeometricTolerance * scale) return std::nullopt;
  for (const auto* m : {&mu, &nu}) {
    for (const auto& a : m->atoms) {
      if (a.weight < 0.0) throw MeasureError("negative atom weight");
    }
  }
  const std::size_t I = mu.atoms.size();
  const std::size_t J = nu.atoms.size();
  if (J == 0) {
    if (I == 0 || mu.total_mass() == 0.0) return TransportCertificate{};
    return std::nullopt;
  }
  const std::size_t rows = I + J * (D + 1);
  lp::Matrix<double> a(rows, I * J);
  std::vector<double> b(rows);
  for (std::size_t i = 0; i < I; ++i) b[i] = mu.atoms[i].weight;
  for (std::size_t j = 0; j < J; ++j) {
    const std::size_t base = I + j * (D + 1);
    b[base] = nu.atoms[j].weight;
    for (std::size_t d = 0; d < D; ++d) b[base + 1 + d] = nu.atoms[j].weight * nu.atoms[j].point[d];
    for (std::size_t i = 0; i < I; ++i) {
      const std::size_t col = j * I + i;
      a(i, col) = 1.0;
      a(base, col) = 1.0;
      for (std::size_t d = 0; d < D; ++d) a(base + 1 + d, col) = mu.atoms[i].point[d];
    }
  }
  auto x = lp::find_nonnegative_solution(a, b);
  if (!x) return std::nullopt;
  TransportCertificate cert;
  cert.plan.assign(J, std::vector<double>(I, 0.0));
  for (std::size_t j = 0; j < J; ++j) {
    for (std::size_t i = 0; i < I; ++i) cert.plan[j][i] = (*x)[j * I + i];
  }
  return cert;
}

/// True iff ∫f dμ − ∫f dν >= −1e-9 for every f of the family.
template <std::size_t D>
bool cfm_check(const PointMeasure<D>& mu, const PointMeasure<D>& nu,
               const std::vector<ConvexTestFunction<D>>& family) {
  for (const auto& f : family) {
    if (mu.integrate(f) - nu.integrate(f) < -1e-9) return false;
  }
  return true;
}

/// A convex test function with ∫f dμ < ∫f dν, if one exists.
///
/// Searches the values of f on the union of atom locations: f_p must be the
/// restriction of a convex function, i.e. every p carries an affine minorant
/// a_p exact at p. Slopes are boxed to [-1, 1], f is pinned at one point and
/// the violation must exceed 1e-8 per unit of mass.
template <std::size_t D>
std::optional<ConvexTestFunction<D>> find_convex_violation(const PointMeasure<D>& mu, const PointMeasure<D>& nu) {
  std::vector<Point<D>> pts;
  std::vector<double> charge;
  auto locate = [&](const Point<D>& q) {
    for (std::size_t k = 0; k < pts.size(); ++k) {
      double d = 0.0;
      for (std::size_t i = 0; i < D; ++i) d = std::max(d, std::abs(pts[k][i] - q[i]));
      if (d <= 1e-12) return k;
    }
    pts.push_back(q);
    charge.push_back(0.0);
    return pts.size() - 1;
  };
  for (const auto& a : mu.atoms) charge[locate(a.point)] += a.weight;
  for (const auto& a : nu.atoms) charge[locate(a.point)] -= a.weight;
  const std::size_t P = pts.size();
  if (P == 0) return std::nullopt;
  const double margin = 1e-8 * std::max(1.0, mu.total_mass() + nu.total_mass());
  // constants are convex
  if (const double dm = mu.total_mass() - nu.total_mass(); std::abs(dm) > margin) {
    ConvexTestFunction<D> out;
    AffinePiece<D> piece;
    piece.offset = dm > 0.0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < D; ++i) piece.slope[i] = 0.0;
    out.pieces.push_back(piece);
    return out;
  }

  lp::FeasibilityProblem<double> prob;
  std::vector<std::size_t> f(P), b(P);
  std::vector<std::array<std::size_t, D>> slope(P);
  for (std::size_t p = 0; p < P; ++p) {
    f[p] = prob.add_variable(true);
    b[p] = prob.add_variable(true);
    for (std::size_t i = 0; i < D; ++i) slope[p][i] = prob.add_variable(true);
  }
  for (std::size_t p = 0; p < P; ++p) {
    for (std::size_t q = 0; q < P; ++q) {
      std::vector<lp::FeasibilityProblem<double>::Term> row{{b[p], 1.0}, {f[q], -1.0}};
      for (std::size_t i = 0; i < D; ++i) row.push_back({slope[p][i], pts[q][i]});
      prob.add_constraint(std::move(row), p == q ? lp::Sense::kEqual : lp::Sense::kLessEqual, 0.0);
    }
  }
  for (std::size_t p = 0; p < P; ++p) {
    for (std::size_t i = 0; i < D; ++i) {
      prob.add_constraint({{slope[p][i], 1.0}}, lp::Sense::kLessEqual, 1.0);
      prob.add_constraint({{slope[p][i], 1.0}}, lp::Sense::kGreaterEqual, -1.0);
    }
  }
  {
    std::vector<lp::FeasibilityProblem<double>::Term> row;
    for (std::size_t p = 0; p < P; ++p) row.push_back({f[p], charge[p]});
    prob.add_constraint(std::move(row), lp::Sense::kLessEqual, -margin);
  }
  prob.add_constraint({{f[0], 1.0}}, lp::Sense::kEqual, 0.0);
  auto sol = prob.solve();
  if (!sol) return std::nullopt;
  ConvexTestFunction<D> out;
  for (std::size_t p = 0; p < P; ++p) {
    AffinePiece<D> piece;
    piece.offset = (*sol)[b[p]];
    for (std::size_t i = 0; i < D; ++i) piece.slope[i] = (*sol)[slope[p][i]];
    out.pieces.push_back(piece);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Decomposition theorem over the coordinatewise-ordered space R^d.

/// Finite list of vectors; the cone it generates is their nonnegative span.
template <class T>
struct ConeSample {
  std::vector<std::vector<T>> generators;
};

namespace detail {

template <class T>
T inner(const std::vector<T>& a, const std::vector<T>& b) {
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class T>
void check_dimensions(const std::vector<T>& f, const std::vector<ConeSample<T>>& cones) {
  for (const auto& c : cones) {
    if (c.generators.empty()) throw std::invalid_argument("empty cone sample");
    for (const auto& h : c.generators) {
      if (h.size() != f.size()) throw std::invalid_argument("dimension mismatch");
    }
  }
}

}  // namespace detail

/// Given g = g_1 + ... + g_N, a decomposition f = f_1 + ... + f_N into
/// nonnegative terms with f_k(h) >= g_k(h) on every generator h of H_k
/// (hence on the generated cone), or nullopt when none exists.
template <class T>
std::optional<std::vector<std::vector<T>>> decomposition_complete(const std::vector<T>& f,
                                                                  const std::vector<std::vector<T>>& g_parts,
                                                                  const std::vector<ConeSample<T>>& cones) {
  if (g_parts.size() != cones.size()) throw std::invalid_argument("dimension mismatch: parts vs cones");
  for (const auto& g : g_parts) {
    if (g.size() != f.size()) throw std::invalid_argument("dimension mismatch");
    for (const T& v : g) {
      if (v < T(0)) throw std::invalid_argument("decomposition terms must be nonnegative");
    }
  }
  for (const T& v : f) {
    if (v < T(0)) throw std::invalid_argument("functional must be nonnegative");
  }
  detail::check_dimensions(f, cones);
  const std::size_t d = f.size();
  const std::size_t N = cones.size();
  lp::FeasibilityProblem<T> prob;
  for (std::size_t k = 0; k < N * d; ++k) prob.add_variable();
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<typename lp::FeasibilityProblem<T>::Term> row;
    for (std::size_t k = 0; k < N; ++k) row.push_back({k * d + i, T(1)});
    prob.add_constraint(std::move(row), lp::Sense::kEqual, f[i]);
  }
  for (std::size_t k = 0; k < N; ++k) {
    for (const auto& h : cones[k].generators) {
      std::vector<typename lp::FeasibilityProblem<T>::Term> row;
      for (std::size_t i = 0; i < d; ++i) row.push_back({k * d + i, h[i]});
      prob.add_constraint(std::move(row), lp::Sense::kGreaterEqual, detail::inner(g_parts[k], h));
    }
  }
  auto sol = prob.solve();
  if (!sol) return std::nullopt;
  std::vector<std::vector<T>> out(N, std::vector<T>(d));
  for (std::size_t k = 0; k < N; ++k) {
    for (std::size_t i = 0; i < d; ++i) out[k][i] = (*sol)[k * d + i];
  }
  return out;
}

/// Elements h_k of the cones with f(∨h_k) < g(∨h_k), and the decomposition
/// of g that no decomposition of f can dominate.
template <class T>
struct JoinViolation {
  std::vector<std::vector<T>> elements;  ///< h_1..h_N
  std::vector<std::vector<T>> g_parts;   ///< g restricted to where h_k attains the join
};

/// Searches the generated cones for a violation of f(h_1∨…∨h_N) >=
/// g(h_1∨…∨h_N). For each assignment of the coordinates to the cone that
/// attains the join there, the question is one LP (normalized by
/// homogeneity).
template <class T>
std::optional<JoinViolation<T>> find_join_violation(const std::vector<T>& f, const std::vector<T>& g,
                                                    const std::vector<ConeSample<T>>& cones) {
  if (g.size() != f.size()) throw std::invalid_argument("dimension mismatch");
  detail::check_dimensions(f, cones);
  const std::size_t d = f.size();
  const std::size_t N = cones.size();
  if (N == 0 || d == 0) return std::nullopt;
  std::vector<std::size_t> pattern(d, 0);
  while (true) {
    lp::FeasibilityProblem<T> prob;
    std::vector<std::vector<std::size_t>> coef(N);
    for (std::size_t k = 0; k < N; ++k) {
      for (std::size_t s = 0; s < cones[k].generators.size(); ++s) coef[k].push_back(prob.add_variable());
    }
    auto coordinate_terms = [&](std::size_t k, std::size_t i, T sign) {
      std::vector<typename lp::FeasibilityProblem<T>::Term> terms;
      for (std::size_t s = 0; s < coef[k].size(); ++s) terms.push_back({coef[k][s], sign * cones[k].generators[s][i]});
      return terms;
    };
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t k = 0; k < N; ++k) {
        if (k == pattern[i]) continue;
        auto row = coordinate_terms(pattern[i], i, T(1));
        auto neg = coordinate_terms(k, i, T(-1));
        row.insert(row.end(), neg.begin(), neg.end());
        prob.add_constraint(std::move(row), lp::Sense::kGreaterEqual, T(0));
      }
    }
    std::vector<typename lp::FeasibilityProblem<T>::Term> objective;
    for (std::size_t i = 0; i < d; ++i) {
      auto terms = coordinate_terms(pattern[i], i, T(f[i] - g[i]));
      objective.insert(objective.end(), terms.begin(), terms.end());
    }
    prob.add_constraint(std::move(objective), lp::Sense::kLessEqual, T(-1));
    if (auto sol = prob.solve()) {
      JoinViolation<T> out;
      for (std::size_t k = 0; k < N; ++k) {
        std::vector<T> h(d, T(0));
        for (std::size_t s = 0; s < coef[k].size(); ++s) {
          for (std::size_t i = 0; i < d; ++i) h[i] += (*sol)[coef[k][s]] * cones[k].generators[s][i];
        }
        out.elements.push_back(std::move(h));
      }
      out.g_parts.assign(N, std::vector<T>(d, T(0)));
      for (std::size_t i = 0; i < d; ++i) out.g_parts[pattern[i]][i] = g[i];
      return out;
    }
    std::size_t i = 0;
    while (i < d && ++pattern[i] == N) pattern[i++] = 0;
    if (i == d) break;
  }
  return std::nullopt;
}

/// f(h_1∨…∨h_N) >= g(h_1∨…∨h_N) for all h_k in the cones generated by the
/// samples.
template <class T>
bool decomposition_hypothesis(const std::vector<T>& f, const std::vector<T>& g,
                              const std::vector<ConeSample<T>>& cones) {
  return !find_join_violation(f, g, cones).has_value();
}

/// The same inequality checked only on tuples of sample vectors (no
/// nonnegative combinations). Weaker than decomposition_hypothesis.
template <class T>
bool decomposition_hypothesis_sampled(const std::vector<T>& f, const std::vector<T>& g,
                                      const std::vector<ConeSample<T>>& cones, T tol = T(0)) {
  if (g.size() != f.size()) throw std::invalid_argument("dimension mismatch");
  detail::check_dimensions(f, cones);
  const std::size_t d = f.size();
  const std::size_t N = cones.size();
  std::vector<std::size_t> idx(N, 0);
  while (true) {
    std::vector<T> join = cones[0].generators[idx[0]];
    for (std::size_t k = 1; k < N; ++k) {
      for (std::size_t i = 0; i < d; ++i) join[i] = std::max(join[i], cones[k].generators[idx[k]][i]);
    }
    if (detail::inner(f, join) < detail::inner(g, join) - tol) return false;
    std::size_t k = 0;
    while (k < N && ++idx[k] == cones[k].generators.size()) idx[k++] = 0;
    if (k == N) break;
  }
  return true;
}

}  // namespace dido
