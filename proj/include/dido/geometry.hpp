#pragma once

// Planar convex figures and their support functions (the Minkowski side of
// the calculus): evaluation, sampling on direction grids, Minkowski addition,
// scaling, containment and breadths.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dido {

/// Raised on violated preconditions (empty figure, bad grid, negative scale...).
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Relative tolerance of geometric predicates (multiplied by a diameter).
inline constexpr double kGeometricTolerance = 1e-9;
/// Directions closer than this (radians) are identified.
inline constexpr double kAngleMergeTolerance = 1e-12;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2& operator-=(Vec2 o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
/// Counterclockwise quarter turn.
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

/// Maps an angle into [0, 2π).
inline double normalize_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;
  return a;
}

/// Signed distance between two angles on the circle, in (-π, π].
inline double angle_difference(double a, double b) {
  double d = std::fmod(a - b, kTwoPi);
  if (d <= -kPi) d += kTwoPi;
  if (d > kPi) d -= kTwoPi;
  return d;
}

inline Vec2 unit_vector(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// A point of the unit circle, stored by its angle.
class Direction {
 public:
  explicit Direction(double angle) : angle_(normalize_angle(angle)) {}

  static Direction from_vector(Vec2 v) {
    if (norm(v) == 0.0) throw GeometryError("zero vector has no direction");
    return Direction(std::atan2(v.y, v.x));
  }

  double angle() const { return angle_; }
  Vec2 unit() const { return unit_vector(angle_); }
  Direction opposite() const { return Direction(angle_ + kPi); }

 private:
  double angle_;
};

/// n equally spaced directions θ_i = 2πi/n; n even so the grid is closed
/// under antipodes.
class DirectionGrid {
 public:
  static constexpr int kDefaultSize = 360;

  explicit DirectionGrid(int n = kDefaultSize) : n_(n) {
    if (n < 8 || n % 2 != 0) {
      throw GeometryError("direction grid size must be even and >= 8, got " + std::to_string(n));
    }
  }

  int size() const { return n_; }
  double spacing() const { return kTwoPi / n_; }
  double angle(int i) const { return kTwoPi * static_cast<double>(i) / n_; }
  Vec2 unit(int i) const { return unit_vector(angle(i)); }
  Direction direction(int i) const { return Direction(angle(i)); }
  int opposite(int i) const { return (i + n_ / 2) % n_; }
  int wrap(int i) const { return ((i % n_) + n_) % n_; }

  /// Index of the grid direction at `angle`, if there is one within `tol`.
  std::optional<int> index_of(double angle, double tol = 1e-9) const {
    const double k = normalize_angle(angle) / spacing();
    const int i = static_cast<int>(std::lround(k));
    if (std::abs(k - i) * spacing() > tol) return std::nullopt;
    return wrap(i);
  }

  friend bool operator==(const DirectionGrid&, const DirectionGrid&) = default;

 private:
  int n_;
};

namespace detail {

inline double bounding_extent(std::span<const Vec2> pts) {
  if (pts.empty()) return 0.0;
  double lo_x = pts[0].x, hi_x = pts[0].x, lo_y = pts[0].y, hi_y = pts[0].y;
  for (const Vec2& p : pts) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  return std::max(hi_x - lo_x, hi_y - lo_y);
}

// Removes near-duplicate and collinear vertices from a closed CCW chain until
// stable.
inline void simplify_cycle(std::vector<Vec2>& v, double dup_tol) {
  bool changed = true;
  while (changed && v.size() >= 2) {
    changed = false;
    for (std::size_t i = 0; i < v.size() && v.size() >= 2; ++i) {
      const std::size_t j = (i + 1) % v.size();
      if (norm(v[j] - v[i]) <= dup_tol) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
        break;
      }
    }
    if (changed || v.size() < 3) continue;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Vec2 prev = v[(i + v.size() - 1) % v.size()];
      const Vec2 next = v[(i + 1) % v.size()];
      const Vec2 a = v[i] - prev;
      const Vec2 b = next - v[i];
      if (cross(a, b) <= kAngleMergeTolerance * norm(a) * norm(b)) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (v.size() == 2 && norm(v[1] - v[0]) <= dup_tol) v.pop_back();
}

}  // namespace detail

/// A compact convex subset of the plane given by its vertices in
/// counterclockwise order, starting from the lowest (then leftmost) vertex.
/// One vertex is a point, two a segment. The empty figure is default
/// constructed and rejected by every operation that evaluates support.
class ConvexFigure {
 public:
  ConvexFigure() = default;

  /// Validating constructor: the chain must already be convex (either
  /// orientation). Duplicate and collinear vertices are merged.
  explicit ConvexFigure(std::vector<Vec2> vertices) {
    ConvexFigure h = hull(vertices);
    const double tol = kGeometricTolerance * std::max(1.0, detail::bounding_extent(vertices));
    if (h.vertices_.size() >= 3) {
      for (const Vec2& p : vertices) {
        if (h.boundary_distance(p) > tol) throw GeometryError("vertex chain is not convex");
      }
      // A convex chain visits the hull vertices monotonically.
      if (!visits_in_cyclic_order(vertices, h.vertices_, tol)) {
        throw GeometryError("vertex chain is not convex");
      }
    }
    vertices_ = std::move(h.vertices_);
  }

  /// Convex hull of an arbitrary point set.
  static ConvexFigure hull(std::span<const Vec2> points) {
    ConvexFigure out;
    if (points.empty()) return out;
    std::vector<Vec2> pts(points.begin(), points.end());
    for (const Vec2& p : pts) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw GeometryError("non-finite coordinate");
    }
    std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    const double extent = detail::bounding_extent(pts);
    const double dup_tol = 1e-13 * extent;
    std::vector<Vec2> uniq;
    for (const Vec2& p : pts) {
      if (uniq.empty() || norm(p - uniq.back()) > dup_tol) uniq.push_back(p);
    }
    if (uniq.size() <= 2) {
      out.vertices_ = uniq;
      out.canonicalize(dup_tol);
      return out;
    }
    // Andrew's monotone chain; nearly collinear points are dropped.
    auto turns_left = [](Vec2 o, Vec2 a, Vec2 b) {
      const Vec2 u = a - o;
      const Vec2 v = b - o;
      return cross(u, v) > kAngleMergeTolerance * norm(u) * norm(v);
    };
    std::vector<Vec2> chain(2 * uniq.size());
    std::size_t k = 0;
    for (const Vec2& p : uniq) {
      while (k >= 2 && !turns_left(chain[k - 2], chain[k - 1], p)) --k;
      chain[k++] = p;
    }
    for (std::size_t i = uniq.size() - 1, lower = k + 1; i-- > 0;) {
      const Vec2 p = uniq[i];
      while (k >= lower && !turns_left(chain[k - 2], chain[k - 1], p)) --k;
      chain[k++] = p;
    }
    chain.resize(k - 1);
    out.vertices_ = std::move(chain);
    out.canonicalize(dup_tol);
    return out;
  }

  static ConvexFigure point(Vec2 p) { return hull(std::vector<Vec2>{p}); }
  static ConvexFigure segment(Vec2 a, Vec2 b) { return hull(std::vector<Vec2>{a, b}); }

  /// Regular n-gon circumscribed about the circle of radius r: its edge
  /// normals are the directions 2πk/n and its support there is exactly r.
  static ConvexFigure disk(Vec2 center, double radius, int segments) {
    if (!(radius >= 0.0)) throw GeometryError("disk radius must be nonnegative");
    if (segments < 3) throw GeometryError("disk needs at least 3 segments");
    if (radius == 0.0) return point(center);
    const double outer = radius / std::cos(kPi / segments);
    std::vector<Vec2> pts;
    pts.reserve(static_cast<std::size_t>(segments));
    for (int k = 0; k < segments; ++k) {
      pts.push_back(center + outer * unit_vector((2.0 * k + 1.0) * kPi / segments));
    }
    return hull(pts);
  }

  /// The unit ball as realized on a grid: support values identically 1 on
  /// the grid directions.
  static ConvexFigure unit_ball(const DirectionGrid& grid) { return disk({0.0, 0.0}, 1.0, grid.size()); }

  const std::vector<Vec2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  bool is_point() const { return vertices_.size() == 1; }
  bool is_segment() const { return vertices_.size() == 2; }
  bool full_dimensional() const { return vertices_.size() >= 3; }

  double diameter() const {
    double d = 0.0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      for (std::size_t j = i + 1; j < vertices_.size(); ++j) d = std::max(d, norm(vertices_[i] - vertices_[j]));
    }
    return d;
  }

  /// Shoelace area; zero for points and segments.
  double area() const {
    if (vertices_.size() < 3) return 0.0;
    double s = 0.0;
    const Vec2 o = vertices_[0];
    for (std::size_t i = 1; i + 1 < vertices_.size(); ++i) s += cross(vertices_[i] - o, vertices_[i + 1] - o);
    return 0.5 * s;
  }

  double perimeter() const {
    if (vertices_.size() < 2) return 0.0;
    if (vertices_.size() == 2) return 2.0 * norm(vertices_[1] - vertices_[0]);
    double p = 0.0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) p += norm(vertices_[(i + 1) % vertices_.size()] - vertices_[i]);
    return p;
  }

  /// Area centroid (midpoint for segments).
  Vec2 centroid() const {
    if (vertices_.empty()) throw GeometryError("empty figure");
    if (vertices_.size() == 1) return vertices_[0];
    if (vertices_.size() == 2) return 0.5 * (vertices_[0] + vertices_[1]);
    const Vec2 o = vertices_[0];
    Vec2 acc;
    double total = 0.0;
    for (std::size_t i = 1; i + 1 < vertices_.size(); ++i) {
      const Vec2 a = vertices_[i] - o;
      const Vec2 b = vertices_[i + 1] - o;
      const double w = cross(a, b);
      acc += w * (a + b) / 3.0;
      total += w;
    }
    return o + acc / total;
  }

  ConvexFigure translated(Vec2 t) const {
    ConvexFigure out = *this;
    for (Vec2& v : out.vertices_) v += t;
    return out;
  }

  /// Outward unit normals of a finite half-plane description of the figure:
  /// edge normals for polygons, four normals for segments and points.
  std::vector<Vec2> facet_normals() const {
    std::vector<Vec2> out;
    if (vertices_.size() >= 3) {
      for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const Vec2 e = vertices_[(i + 1) % vertices_.size()] - vertices_[i];
        out.push_back(Vec2{e.y, -e.x} / norm(e));
      }
    } else if (vertices_.size() == 2) {
      const Vec2 d = (vertices_[1] - vertices_[0]) / norm(vertices_[1] - vertices_[0]);
      out = {d, -d, perp(d), -perp(d)};
    } else if (vertices_.size() == 1) {
      out = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    }
    return out;
  }

  /// Euclidean distance from p to the figure (0 inside).
  double distance(Vec2 p) const {
    if (vertices_.empty()) throw GeometryError("empty figure");
    if (vertices_.size() >= 3) {
      bool inside = true;
      for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const Vec2 a = vertices_[i];
        const Vec2 b = vertices_[(i + 1) % vertices_.size()];
        if (cross(b - a, p - a) < 0.0) {
          inside = false;
          break;
        }
      }
      if (inside) return 0.0;
    }
    return boundary_distance(p);
  }

 private:
  double boundary_distance(Vec2 p) const {
    if (vertices_.size() == 1) return norm(p - vertices_[0]);
    double best = std::numeric_limits<double>::infinity();
    const std::size_t m = vertices_.size() == 2 ? 1 : vertices_.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Vec2 a = vertices_[i];
      const Vec2 b = vertices_[(i + 1) % vertices_.size()];
      const Vec2 ab = b - a;
      const double len2 = dot(ab, ab);
      const double t = len2 > 0.0 ? std::clamp(dot(p - a, ab) / len2, 0.0, 1.0) : 0.0;
      best = std::min(best, norm(p - (a + t * ab)));
    }
    return best;
  }

  static bool visits_in_cyclic_order(const std::vector<Vec2>& chain, const std::vector<Vec2>& hull_vertices,
                                     double tol) {
    // Map each hull vertex to its first position in the input chain; the
    // positions must be cyclically monotone in one orientation.
    std::vector<std::size_t> pos;
    for (const Vec2& h : hull_vertices) {
      std::size_t found = chain.size();
      for (std::size_t i = 0; i < chain.size(); ++i) {
        if (norm(chain[i] - h) <= tol) {
          found = i;
          break;
        }
      }
      if (found == chain.size()) return false;
      pos.push_back(found);
    }
    auto cyclic_monotone = [](const std::vector<std::size_t>& p) {
      std::size_t descents = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[(i + 1) % p.size()] < p[i]) ++descents;
      }
      return descents <= 1;
    };
    std::vector<std::size_t> rev(pos.rbegin(), pos.rend());
    return cyclic_monotone(pos) || cyclic_monotone(rev);
  }

  void canonicalize(double dup_tol) {
    detail::simplify_cycle(vertices_, dup_tol);
    if (vertices_.empty()) return;
    auto lowest = std::min_element(vertices_.begin(), vertices_.end(),
                                   [](Vec2 a, Vec2 b) { return a.y < b.y || (a.y == b.y && a.x < b.x); });
    std::rotate(vertices_.begin(), lowest, vertices_.end());
  }

  std::vector<Vec2> vertices_;
};

/// h_x(u) = max over vertices v of <v, u>. `u` need not be a unit vector.
inline double support_eval(const ConvexFigure& x, Vec2 u) {
  if (x.empty()) throw GeometryError("empty figure");
  double best = -std::numeric_limits<double>::infinity();
  for (const Vec2& v : x.vertices()) best = std::max(best, dot(v, u));
  return best;
}

inline double support_eval(const ConvexFigure& x, Direction u) { return support_eval(x, u.unit()); }

/// A support function sampled on a direction grid.
class SupportVector {
 public:
  SupportVector(DirectionGrid grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(grid_.size())) {
      throw GeometryError("support vector length does not match grid");
    }
  }

  const DirectionGrid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

  /// The figure {p : <p, u_i> <= values[i] for all i}; empty if infeasible.
  ConvexFigure figure() const;

  /// True when `values` is the support function of `figure()` on the grid.
  bool is_valid(double rel_tol = kGeometricTolerance) const;

 private:
  DirectionGrid grid_;
  std::vector<double> values_;
};

/// The unit ball's support vector: all ones.
inline SupportVector unit_ball_support(const DirectionGrid& grid) {
  return SupportVector(grid, std::vector<double>(static_cast<std::size_t>(grid.size()), 1.0));
}

inline SupportVector sample_support(const ConvexFigure& x, const DirectionGrid& grid) {
  if (x.empty()) throw GeometryError("empty figure");
  std::vector<double> v(static_cast<std::size_t>(grid.size()));
  for (int i = 0; i < grid.size(); ++i) v[static_cast<std::size_t>(i)] = support_eval(x, grid.unit(i));
  return SupportVector(grid, std::move(v));
}

/// Intersection of half-planes <p, normals[k]> <= offsets[k] by successive
/// clipping of a large box. Each vertex remembers the two lines it lies on
/// and is recomputed from them at the end. Empty when infeasible.
inline ConvexFigure half_plane_intersection(std::span<const Vec2> normals, std::span<const double> offsets) {
  if (normals.size() != offsets.size()) throw GeometryError("normals/offsets length mismatch");
  struct Line {
    Vec2 n;
    double c;
  };
  struct Corner {
    Vec2 p;
    std::size_t in, out;  // lines before and after, into `lines`
  };
  double big = 1.0;
  for (double c : offsets) big = std::max(big, std::abs(c));
  big *= 1e4;
  std::vector<Line> lines{{{0, -1}, big}, {{1, 0}, big}, {{0, 1}, big}, {{-1, 0}, big}};
  std::vector<Corner> poly{{{-big, -big}, 3, 0}, {{big, -big}, 0, 1}, {{big, big}, 1, 2}, {{-big, big}, 2, 3}};
  std::vector<Corner> next;
  for (std::size_t k = 0; k < normals.size() && !poly.empty(); ++k) {
    const Vec2 u = normals[k];
    const double c = offsets[k];
    const std::size_t id = lines.size();
    lines.push_back({u, c});
    next.clear();
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Corner& p = poly[i];
      const Corner& q = poly[(i + 1) % poly.size()];
      const double dp = dot(p.p, u) - c;
      const double dq = dot(q.p, u) - c;
      if (dp <= 0.0) next.push_back(p);
      const Vec2 x = p.p + (dp / (dp - dq)) * (q.p - p.p);
      if (dp < 0.0 && dq > 0.0) next.push_back({x, p.out, id});
      if (dp > 0.0 && dq < 0.0) next.push_back({x, id, p.out});
    }
    poly.swap(next);
  }
  std::vector<Vec2> pts;
  pts.reserve(poly.size());
  for (const Corner& v : poly) {
    const Line& a = lines[v.in];
    const Line& b = lines[v.out];
    const double det = a.n.x * b.n.y - a.n.y * b.n.x;
    Vec2 x = v.p;
    if (std::abs(det) > 1e-9 * norm(a.n) * norm(b.n)) {
      const Vec2 exact{(a.c * b.n.y - b.c * a.n.y) / det, (a.n.x * b.c - b.n.x * a.c) / det};
      if (norm(exact - x) <= 1e-6 * std::max(1.0, norm(x))) x = exact;
    }
    pts.push_back(x);
  }
  return ConvexFigure::hull(pts);
}

inline ConvexFigure SupportVector::figure() const {
  std::vector<Vec2> normals;
  normals.reserve(values_.size());
  for (int i = 0; i < grid_.size(); ++i) normals.push_back(grid_.unit(i));
  return half_plane_intersection(normals, values_);
}

inline bool SupportVector::is_valid(double rel_tol) const {
  const ConvexFigure f = figure();
  if (f.empty()) return false;
  double scale = 1.0;
  for (double v : values_) scale = std::max(scale, std::abs(v));
  for (int i = 0; i < grid_.size(); ++i) {
    if (std::abs(support_eval(f, grid_.unit(i)) - values_[static_cast<std::size_t>(i)]) > rel_tol * scale) return false;
  }
  return true;
}

namespace detail {

// Edge vectors of a figure in counterclockwise order from its canonical
// (lowest) vertex; their angles increase within [0, 2π).
inline std::vector<Vec2> edge_vectors(const ConvexFigure& x) {
  const auto& v = x.vertices();
  std::vector<Vec2> edges;
  if (v.size() == 2) {
    edges = {v[1] - v[0], v[0] - v[1]};
  } else if (v.size() >= 3) {
    for (std::size_t i = 0; i < v.size(); ++i) edges.push_back(v[(i + 1) % v.size()] - v[i]);
  }
  return edges;
}

inline double edge_angle(Vec2 e) { return normalize_angle(std::atan2(e.y, e.x)); }

}  // namespace detail

/// Minkowski sum by merging the two edge sequences in angular order (the
/// normal fans are merged; parallel edges combine).
inline ConvexFigure minkowski_sum(const ConvexFigure& x, const ConvexFigure& y) {
  if (x.empty() || y.empty()) throw GeometryError("empty figure");
  const auto ex = detail::edge_vectors(x);
  const auto ey = detail::edge_vectors(y);
  std::vector<std::pair<double, Vec2>> edges;
  edges.reserve(ex.size() + ey.size());
  for (Vec2 e : ex) edges.emplace_back(detail::edge_angle(e), e);
  for (Vec2 e : ey) edges.emplace_back(detail::edge_angle(e), e);
  std::stable_sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Vec2> pts;
  pts.reserve(edges.size() + 1);
  Vec2 p = x.vertices().front() + y.vertices().front();
  pts.push_back(p);
  for (const auto& e : edges) {
    p += e.second;
    pts.push_back(p);
  }
  return ConvexFigure::hull(pts);
}

/// λ·x for λ >= 0 (λ = 0 gives the origin).
inline ConvexFigure scale(const ConvexFigure& x, double lambda) {
  if (!(lambda >= 0.0)) throw GeometryError("scale factor must be nonnegative");
  if (x.empty()) return x;
  std::vector<Vec2> pts;
  pts.reserve(x.size());
  for (const Vec2& v : x.vertices()) pts.push_back(lambda * v);
  return ConvexFigure::hull(pts);
}

/// y ⊆ x, with half-plane tests at tolerance 1e-9 × the larger diameter.
inline bool contains(const ConvexFigure& x, const ConvexFigure& y) {
  if (x.empty() || y.empty()) throw GeometryError("empty figure");
  const double tol = kGeometricTolerance * std::max({x.diameter(), y.diameter(), 1e-300});
  for (Vec2 u : x.facet_normals()) {
    if (support_eval(y, u) > support_eval(x, u) + tol) return false;
  }
  return true;
}

/// Some t with y + t ⊆ x, if one exists. The admissible translations form
/// the half-plane intersection {t : <t,u> <= h_x(u) - h_y(u)} over the facet
/// normals u of x; the returned t is the centroid of that set (relaxed by the
/// containment tolerance).
inline std::optional<Vec2> contains_up_to_translation(const ConvexFigure& x, const ConvexFigure& y) {
  if (x.empty() || y.empty()) throw GeometryError("empty figure");
  const double tol = kGeometricTolerance * std::max({x.diameter(), y.diameter(), 1e-300});
  const auto normals = x.facet_normals();
  std::vector<double> offsets;
  offsets.reserve(normals.size());
  for (Vec2 u : normals) offsets.push_back(support_eval(x, u) - support_eval(y, u) + tol);
  const ConvexFigure region = half_plane_intersection(normals, offsets);
  if (region.empty()) return std::nullopt;
  return region.centroid();
}

/// Width in direction z: h(z) + h(-z).
inline double breadth(const ConvexFigure& x, Direction z) {
  if (x.empty()) throw GeometryError("empty figure");
  const Vec2 u = z.unit();
  double hi = -std::numeric_limits<double>::infinity(), lo = -hi;
  for (const Vec2& v : x.vertices()) {
    hi = std::max(hi, dot(v, u));
    lo = std::min(lo, dot(v, u));
  }
  return hi - lo;
}

/// Pairing of x with the unit ball, (1/2)∫ h_x dθ, by the periodic
/// trapezoidal rule on the grid. Equals perimeter/2 in the grid limit.
inline double integral_breadth(const ConvexFigure& x, const DirectionGrid& grid) {
  const SupportVector h = sample_support(x, grid);
  double s = 0.0;
  for (double v : h.values()) s += v;
  return 0.5 * grid.spacing() * s;
}

/// Hausdorff distance between convex figures (exact for polygons).
inline double hausdorff_distance(const ConvexFigure& x, const ConvexFigure& y) {
  if (x.empty() || y.empty()) throw GeometryError("empty figure");
  double d = 0.0;
  for (const Vec2& v : x.vertices()) d = std::max(d, y.distance(v));
  for (const Vec2& v : y.vertices()) d = std::max(d, x.distance(v));
  return d;
}

/// Hausdorff distance after moving both centroids to the origin.
inline double hausdorff_up_to_translation(const ConvexFigure& x, const ConvexFigure& y) {
  return hausdorff_distance(x.translated(-x.centroid()), y.translated(-y.centroid()));
}

}  // namespace dido
