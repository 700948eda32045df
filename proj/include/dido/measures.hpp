#pragma once

// The Blaschke structure on planar convex figures: surface-area measures,
// reconstruction of a figure from its measure, Blaschke addition, and the
// pairing between support functions and measures (mixed area).
//
// Measures are finitely atomic. An atom of a polygon's surface measure sits
// at an outward edge normal and weighs the edge length; arcs of curved
// boundaries are represented by their polygonal cells.

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dido/geometry.hpp"

namespace dido {

class MeasureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct MeasureAtom {
  double angle = 0.0;  ///< direction, radians in [0, 2π)
  double weight = 0.0;

  Vec2 unit() const { return unit_vector(angle); }
};

/// Positive measure with finitely many atoms on the unit circle. Atoms are
/// kept sorted by angle; directions closer than kAngleMergeTolerance merge.
class DiscreteMeasure {
 public:
  DiscreteMeasure() = default;

  explicit DiscreteMeasure(std::vector<MeasureAtom> atoms) {
    for (MeasureAtom& a : atoms) {
      if (!std::isfinite(a.weight) || !std::isfinite(a.angle)) throw MeasureError("non-finite atom");
      if (a.weight < 0.0) throw MeasureError("negative atom weight");
      a.angle = normalize_angle(a.angle);
    }
    std::sort(atoms.begin(), atoms.end(), [](const MeasureAtom& a, const MeasureAtom& b) { return a.angle < b.angle; });
    for (const MeasureAtom& a : atoms) {
      if (a.weight == 0.0) continue;
      if (!atoms_.empty() && std::abs(a.angle - atoms_.back().angle) <= kAngleMergeTolerance) {
        atoms_.back().weight += a.weight;
      } else {
        atoms_.push_back(a);
      }
    }
    // Wrap-around at 0 / 2π.
    if (atoms_.size() >= 2 && kTwoPi - atoms_.back().angle + atoms_.front().angle <= kAngleMergeTolerance) {
      atoms_.front().weight += atoms_.back().weight;
      atoms_.pop_back();
    }
  }

  static DiscreteMeasure dirac(Direction z, double weight) { return DiscreteMeasure({{z.angle(), weight}}); }

  const std::vector<MeasureAtom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }

  double total_mass() const {
    double s = 0.0;
    for (const auto& a : atoms_) s += a.weight;
    return s;
  }

  /// Σ w_i u_i; zero exactly when the measure annihilates linear functionals.
  Vec2 resultant() const {
    Vec2 r;
    for (const auto& a : atoms_) r += a.weight * a.unit();
    return r;
  }

  /// Mass of the atom at `angle` (within tol), 0 if there is none.
  double mass_at(double angle, double tol = 1e-9) const {
    double m = 0.0;
    for (const auto& a : atoms_) {
      if (std::abs(angle_difference(a.angle, angle)) <= tol) m += a.weight;
    }
    return m;
  }

  /// ∫ f dμ.
  double integrate(const std::function<double(Vec2)>& f) const {
    double s = 0.0;
    for (const auto& a : atoms_) s += a.weight * f(a.unit());
    return s;
  }

  /// Restriction to the atoms whose direction satisfies `keep`.
  DiscreteMeasure restricted(const std::function<bool(const MeasureAtom&)>& keep) const {
    std::vector<MeasureAtom> out;
    for (const auto& a : atoms_) {
      if (keep(a)) out.push_back(a);
    }
    return DiscreteMeasure(std::move(out));
  }

  friend DiscreteMeasure operator+(const DiscreteMeasure& a, const DiscreteMeasure& b) {
    std::vector<MeasureAtom> all = a.atoms_;
    all.insert(all.end(), b.atoms_.begin(), b.atoms_.end());
    return DiscreteMeasure(std::move(all));
  }

  friend DiscreteMeasure operator*(double s, const DiscreteMeasure& m) {
    if (!(s >= 0.0)) throw MeasureError("measure scale must be nonnegative");
    std::vector<MeasureAtom> out = m.atoms_;
    for (auto& a : out) a.weight *= s;
    return DiscreteMeasure(std::move(out));
  }

 private:
  std::vector<MeasureAtom> atoms_;
};

/// Atomwise a - b on the union of directions; weights may be negative.
inline std::vector<MeasureAtom> signed_difference(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  std::vector<MeasureAtom> all = a.atoms();
  for (const auto& x : b.atoms()) all.push_back({x.angle, -x.weight});
  std::sort(all.begin(), all.end(), [](const MeasureAtom& p, const MeasureAtom& q) { return p.angle < q.angle; });
  std::vector<MeasureAtom> out;
  for (const auto& x : all) {
    if (!out.empty() && std::abs(x.angle - out.back().angle) <= kAngleMergeTolerance) {
      out.back().weight += x.weight;
    } else {
      out.push_back(x);
    }
  }
  if (out.size() >= 2 && kTwoPi - out.back().angle + out.front().angle <= kAngleMergeTolerance) {
    out.front().weight += out.back().weight;
    out.pop_back();
  }
  return out;
}

/// Largest |weight| of a signed atom list.
inline double max_abs_weight(const std::vector<MeasureAtom>& atoms) {
  double m = 0.0;
  for (const auto& a : atoms) m = std::max(m, std::abs(a.weight));
  return m;
}

/// True when all atoms lie on one line through the origin (at most one
/// antipodal pair of directions).
inline bool supported_on_antipodal_pair(const DiscreteMeasure& m) {
  if (m.empty()) return true;
  const double base = m.atoms().front().angle;
  for (const auto& a : m.atoms()) {
    const double d = std::abs(angle_difference(a.angle, base));
    if (d > 1e-12 && std::abs(d - kPi) > 1e-12) return false;
  }
  return true;
}

/// A surface-area measure: positive, annihilates linear functionals
/// (Σ w u = 0 up to 1e-9 × mass) and is not concentrated on a single
/// antipodal pair. Atoms stand in for cells of a continuous measure, so the
/// "no mass on singletons" requirement holds only in the refinement limit.
class AlexandrovMeasure {
 public:
  explicit AlexandrovMeasure(DiscreteMeasure m) : m_(std::move(m)) {
    if (norm(m_.resultant()) > 1e-9 * std::max(m_.total_mass(), 1e-300)) {
      throw MeasureError("not translation-invariant");
    }
    if (supported_on_antipodal_pair(m_)) throw MeasureError("great-hypersphere supported");
  }

  const DiscreteMeasure& measure() const { return m_; }
  const std::vector<MeasureAtom>& atoms() const { return m_.atoms(); }
  double total_mass() const { return m_.total_mass(); }

  friend AlexandrovMeasure operator+(const AlexandrovMeasure& a, const AlexandrovMeasure& b) {
    return AlexandrovMeasure(a.m_ + b.m_);
  }
  friend AlexandrovMeasure operator*(double s, const AlexandrovMeasure& a) {
    if (!(s > 0.0)) throw MeasureError("Alexandrov measure scale must be positive");
    return AlexandrovMeasure(s * a.m_);
  }

 private:
  DiscreteMeasure m_;
};

/// One atom per edge: outward normal, edge length.
inline AlexandrovMeasure surface_measure(const ConvexFigure& x) {
  if (!x.full_dimensional()) throw MeasureError("not full-dimensional");
  const auto& v = x.vertices();
  std::vector<MeasureAtom> atoms;
  atoms.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2 e = v[(i + 1) % v.size()] - v[i];
    atoms.push_back({normalize_angle(std::atan2(-e.x, e.y)), norm(e)});
  }
  return AlexandrovMeasure(DiscreteMeasure(std::move(atoms)));
}

/// Surface measure of the grid unit ball: atoms at every grid direction with
/// weight 2·tan(π/n).
inline AlexandrovMeasure ball_measure(const DirectionGrid& grid) {
  std::vector<MeasureAtom> atoms;
  const double w = 2.0 * std::tan(kPi / grid.size());
  for (int i = 0; i < grid.size(); ++i) atoms.push_back({grid.angle(i), w});
  return AlexandrovMeasure(DiscreteMeasure(std::move(atoms)));
}

/// The polygon whose surface measure is μ, with its centroid at the origin:
/// edges w_i·(−sin θ_i, cos θ_i) laid end to end in angular order.
inline ConvexFigure reconstruct(const AlexandrovMeasure& mu) {
  std::vector<Vec2> pts;
  pts.reserve(mu.atoms().size() + 1);
  Vec2 p;
  pts.push_back(p);
  // The closing gap (≤ 1e-9 × mass) is absorbed by dropping the last point.
  for (std::size_t i = 0; i + 1 < mu.atoms().size(); ++i) {
    const auto& a = mu.atoms()[i];
    p += a.weight * perp(a.unit());
    pts.push_back(p);
  }
  const ConvexFigure raw = ConvexFigure::hull(pts);
  return raw.translated(-raw.centroid());
}

/// Blaschke sum: the translate class whose surface measure is μ(x) + μ(y),
/// represented with centroid at the origin.
inline ConvexFigure blaschke_sum(const ConvexFigure& x, const ConvexFigure& y) {
  return reconstruct(surface_measure(x) + surface_measure(y));
}

/// (1/2) ∫ f dμ, the canonical pairing of a support function with a measure.
inline double pairing(const std::function<double(Vec2)>& f, const DiscreteMeasure& mu) {
  return 0.5 * mu.integrate(f);
}

/// Mixed area V1(y, x) = (1/2) Σ h_x(u_i) w_i over the atoms of μ(y).
/// y supplies the measure and must be full-dimensional; x may be degenerate.
inline double mixed_volume(const ConvexFigure& y, const ConvexFigure& x) {
  if (x.empty()) throw GeometryError("empty figure");
  const AlexandrovMeasure mu = surface_measure(y);
  return pairing([&](Vec2 u) { return support_eval(x, u); }, mu.measure());
}

/// Shoelace area of x.
inline double volume(const ConvexFigure& x) {
  if (x.empty()) throw GeometryError("empty figure");
  return x.area();
}

}  // namespace dido
