#pragma once

// Dense phase-one simplex for small feasibility problems.
//
// Finds x >= 0 with A x = b, or proves there is none. Templated on the
// scalar so the same routine runs in double (with tolerances) and on exact
// rationals (tolerances zero). Pivoting uses Dantzig's rule and falls back to
// Bland's rule after a run of degenerate pivots, which keeps it finite.
// Double answers are checked against the input (residual, or a Farkas ray
// from the phase-one duals) and re-solved exactly when the check fails.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dido::lp {

template <class T>
struct Tolerances {
  static T pivot() { return T(0); }
  static T feasibility() { return T(0); }
};

template <>
struct Tolerances<double> {
  static double pivot() { return 1e-9; }
  static double feasibility() { return 1e-11; }
};

template <class T>
T absolute(const T& v) {
  return v < T(0) ? T(-v) : v;
}

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Guard against accidental huge dense tableaux.
inline constexpr std::size_t kMaxTableauEntries = 40'000'000;

namespace detail {

enum class Outcome { kFeasible, kInfeasible, kPivotLimit };

template <class T>
struct PhaseOne {
  Outcome outcome = Outcome::kPivotLimit;
  std::vector<T> x;  // primal point when feasible
  std::vector<T> y;  // phase-one duals in the caller's row signs
};

// tab = B^-1 orig for the current basis, reduced costs rebuilt to match;
// false (tab untouched) when B is numerically singular
template <class T>
bool refactor(const Matrix<T>& orig, const std::vector<std::size_t>& basis, std::size_t n, Matrix<T>& tab,
              std::vector<T>& reduced) {
  const std::size_t m = orig.rows();
  const std::size_t width = orig.cols();
  Matrix<T> bm(m, m);
  Matrix<T> rhs = orig;
  T big(0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      bm(i, k) = orig(i, basis[k]);
      big = std::max(big, absolute(bm(i, k)));
    }
  }
  std::vector<std::size_t> perm(m);
  for (std::size_t i = 0; i < m; ++i) perm[i] = i;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < m; ++i) {
      if (absolute(bm(i, k)) > absolute(bm(piv, k))) piv = i;
    }
    if (absolute(bm(piv, k)) <= T(1e-13) * big) return false;
    if (piv != k) {
      for (std::size_t c = 0; c < m; ++c) std::swap(bm(k, c), bm(piv, c));
      for (std::size_t c = 0; c < width; ++c) std::swap(rhs(k, c), rhs(piv, c));
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      const T f = bm(i, k) / bm(k, k);
      if (f == T(0)) continue;
      for (std::size_t c = k; c < m; ++c) bm(i, c) -= f * bm(k, c);
      for (std::size_t c = 0; c < width; ++c) rhs(i, c) -= f * rhs(k, c);
    }
  }
  for (std::size_t k = m; k-- > 0;) {
    for (std::size_t c = 0; c < width; ++c) {
      T v = rhs(k, c);
      for (std::size_t i = k + 1; i < m; ++i) v -= bm(k, i) * rhs(i, c);
      rhs(k, c) = v / bm(k, k);
    }
  }
  // row k of the solve belongs to basis position k
  tab = std::move(rhs);
  for (std::size_t j = 0; j < width; ++j) {
    T v = (j >= n && j + 1 < width) ? T(1) : T(0);
    for (std::size_t k = 0; k < m; ++k) {
      if (basis[k] >= n) v -= tab(k, j);
    }
    reduced[j] = v;
  }
  for (std::size_t k = 0; k < m; ++k) tab(k, basis[k]) = T(1);
  for (std::size_t j = 0; j + 1 < width; ++j) {
    bool in_basis = false;
    for (std::size_t k = 0; k < m && !in_basis; ++k) in_basis = basis[k] == j;
    if (in_basis) reduced[j] = T(0);
  }
  return true;
}

template <class T>
PhaseOne<T> phase_one(const Matrix<T>& a, const std::vector<T>& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t width = n + m + 1;
  PhaseOne<T> out;

  const T eps = Tolerances<T>::pivot();
  const T cost_eps = Tolerances<T>::feasibility();
  Matrix<T> tab(m, width);
  T rhs_scale = T(1);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < T(0);
    for (std::size_t j = 0; j < n; ++j) tab(i, j) = flip ? T(-a(i, j)) : a(i, j);
    tab(i, n + i) = T(1);
    tab(i, width - 1) = flip ? T(-b[i]) : b[i];
    rhs_scale += tab(i, width - 1);
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<T> reduced(width, T(0));
  for (std::size_t j = 0; j < n; ++j) {
    T s(0);
    for (std::size_t i = 0; i < m; ++i) s += tab(i, j);
    reduced[j] = -s;
  }
  for (std::size_t i = 0; i < m; ++i) reduced[width - 1] -= tab(i, width - 1);

  const bool inexact = Tolerances<T>::pivot() > T(0);
  const Matrix<T> orig = inexact ? tab : Matrix<T>();
  std::size_t since_refactor = 0;
  std::size_t degenerate_run = 0;
  const std::size_t bland_after = 50;
  const std::size_t max_pivots = 50 * (m + n) + 1000;
  bool optimal = false;
  // Columns with an improving cost but no usable pivot; retried after the
  // next successful pivot.
  std::vector<char> blocked(width, 0);
  for (std::size_t iter = 0; iter < max_pivots; ++iter) {
    if (absolute(reduced[width - 1]) <= Tolerances<T>::feasibility() * rhs_scale) {
      optimal = true;  // artificials already at zero
      break;
    }
    const bool bland = degenerate_run >= bland_after;
    std::size_t enter = width;
    T best(0);
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (reduced[j] < -cost_eps && !blocked[j]) {
        if (bland) {
          enter = j;
          break;
        }
        if (enter == width || reduced[j] < best) {
          enter = j;
          best = reduced[j];
        }
      }
    }
    if (enter == width) {
      optimal = true;
      break;
    }

    std::size_t leave = m;
    T best_ratio(0);
    for (std::size_t i = 0; i < m; ++i) {
      if (tab(i, enter) > eps) {
        const T ratio = tab(i, width - 1) / tab(i, enter);
        // ties within the feasibility tolerance go to the lowest basis index
        const T tie = Tolerances<T>::feasibility();
        if (leave == m || ratio < best_ratio - tie || (ratio <= best_ratio + tie && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (eps > T(0) && !bland && leave < m) {
      // Harris: among rows within a small slack of the minimum ratio take
      // the largest pivot.
      const T slack = Tolerances<T>::feasibility();
      T bound(0);
      bool first = true;
      for (std::size_t i = 0; i < m; ++i) {
        if (tab(i, enter) > eps) {
          const T r = (tab(i, width - 1) + slack) / tab(i, enter);
          if (first || r < bound) bound = r;
          first = false;
        }
      }
      for (std::size_t i = 0; i < m; ++i) {
        if (tab(i, enter) > eps && tab(i, width - 1) / tab(i, enter) <= bound &&
            tab(i, enter) > tab(leave, enter)) {
          leave = i;
        }
      }
      best_ratio = tab(leave, width - 1) / tab(leave, enter);
    }
    // Phase one is bounded, so an empty ratio test is roundoff.
    if (leave == m) {
      blocked[enter] = 1;
      continue;
    }
    std::fill(blocked.begin(), blocked.end(), 0);
    degenerate_run = best_ratio <= Tolerances<T>::feasibility() ? degenerate_run + 1 : 0;

    const T piv = tab(leave, enter);
    for (std::size_t j = 0; j < width; ++j) tab(leave, j) /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      const T f = tab(i, enter);
      if (f == T(0)) continue;
      for (std::size_t j = 0; j < width; ++j) tab(i, j) -= f * tab(leave, j);
    }
    const T rf = reduced[enter];
    for (std::size_t j = 0; j < width; ++j) reduced[j] -= rf * tab(leave, j);
    basis[leave] = enter;
    if (inexact && ++since_refactor >= 20) {
      refactor(orig, basis, n, tab, reduced);
      since_refactor = 0;
    }
    if (eps > T(0)) {
      for (std::size_t i = 0; i < m; ++i) {
        if (tab(i, width - 1) < T(0)) tab(i, width - 1) = T(0);
      }
    }
  }

  if (!optimal) return out;
  if (inexact && since_refactor > 0) refactor(orig, basis, n, tab, reduced);

  T infeasibility(0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= n) infeasibility += tab(i, width - 1);
  }
  if (infeasibility > Tolerances<T>::feasibility() * rhs_scale) {
    out.outcome = Outcome::kInfeasible;
    out.y.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      const T yi = T(1) - reduced[n + i];
      out.y[i] = b[i] < T(0) ? T(-yi) : yi;
    }
    return out;
  }

  out.outcome = Outcome::kFeasible;
  out.x.assign(n, T(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) out.x[basis[i]] = tab(i, width - 1) < T(0) ? T(0) : tab(i, width - 1);
  }
  return out;
}

inline void check_shape(std::size_t m, std::size_t n, std::size_t rhs) {
  if (rhs != m) throw std::invalid_argument("rhs length does not match constraint rows");
  if (m * (n + m + 1) > kMaxTableauEntries) throw std::length_error("linear program too large for dense tableau");
}

using Rational = boost::multiprecision::cpp_rational;

// a x = b to within roundoff of the terms involved
inline bool residual_ok(const Matrix<double>& a, const std::vector<double>& b, const std::vector<double>& x) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    double mag = std::abs(b[i]);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      s += a(i, j) * x[j];
      mag += std::abs(a(i, j) * x[j]);
    }
    if (std::abs(s - b[i]) > 1e-9 * (1.0 + mag)) return false;
  }
  return true;
}

// y'a <= 0 columnwise and y'b clearly positive
inline bool farkas_ok(const Matrix<double>& a, const std::vector<double>& b, const std::vector<double>& y) {
  double yb = 0.0;
  double ymag = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    yb += y[i] * b[i];
    ymag += std::abs(y[i] * b[i]);
  }
  if (!(yb > 1e-12 * ymag)) return false;
  double ymax = 0.0;
  for (double v : y) ymax = std::max(ymax, std::abs(v));
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double g = 0.0;
    double mag = 0.0;
    double amax = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      g += y[i] * a(i, j);
      mag += std::abs(y[i] * a(i, j));
      amax = std::max(amax, std::abs(a(i, j)));
    }
    if (g > 1e-9 * (mag + yb) + 1e-12 * ymax * amax) return false;
  }
  return true;
}

}  // namespace detail

/// x >= 0 with a·x = b, or nullopt when infeasible.
template <class T>
std::optional<std::vector<T>> find_nonnegative_solution(const Matrix<T>& a, const std::vector<T>& b) {
  detail::check_shape(a.rows(), a.cols(), b.size());
  if (a.rows() == 0) return std::vector<T>(a.cols(), T(0));
  auto r = detail::phase_one(a, b);
  if (r.outcome == detail::Outcome::kPivotLimit) throw std::runtime_error("simplex pivot limit reached");
  if (r.outcome == detail::Outcome::kInfeasible) return std::nullopt;
  return std::move(r.x);
}

template <>
inline std::optional<std::vector<double>> find_nonnegative_solution(const Matrix<double>& a,
                                                                    const std::vector<double>& b) {
  detail::check_shape(a.rows(), a.cols(), b.size());
  if (a.rows() == 0) return std::vector<double>(a.cols(), 0.0);
  auto r = detail::phase_one(a, b);
  if (r.outcome == detail::Outcome::kFeasible && detail::residual_ok(a, b, r.x)) return std::move(r.x);
  if (r.outcome == detail::Outcome::kInfeasible && detail::farkas_ok(a, b, r.y)) return std::nullopt;

  // exact re-solve; doubles convert to rationals without loss
  Matrix<detail::Rational> ea(a.rows(), a.cols());
  std::vector<detail::Rational> eb(b.size());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) ea(i, j) = detail::Rational(a(i, j));
    eb[i] = detail::Rational(b[i]);
  }
  auto e = find_nonnegative_solution(ea, eb);
  if (!e) return std::nullopt;
  std::vector<double> x(e->size());
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = (*e)[j].convert_to<double>();
  return x;
}

enum class Sense { kEqual, kLessEqual, kGreaterEqual };

/// Builder for feasibility problems with free or nonnegative variables and
/// mixed constraint senses; reduces to standard form for the simplex.
template <class T = double>
class FeasibilityProblem {
 public:
  using Term = std::pair<std::size_t, T>;

  /// Returns the new variable's index.
  std::size_t add_variable(bool free = false) {
    free_.push_back(free);
    return free_.size() - 1;
  }

  std::size_t variable_count() const { return free_.size(); }

  void add_constraint(std::vector<Term> terms, Sense sense, T rhs) {
    for (const auto& t : terms) {
      if (t.first >= free_.size()) throw std::out_of_range("constraint references unknown variable");
    }
    rows_.push_back({std::move(terms), sense, std::move(rhs)});
  }

  /// Values of the declared variables at some feasible point, or nullopt.
  std::optional<std::vector<T>> solve() const {
    // Column layout: one column per nonnegative variable, two per free
    // variable, then one slack per inequality.
    std::vector<std::size_t> column(free_.size());
    std::size_t cols = 0;
    for (std::size_t v = 0; v < free_.size(); ++v) {
      column[v] = cols;
      cols += free_[v] ? 2 : 1;
    }
    const std::size_t structural = cols;
    for (const auto& r : rows_) {
      if (r.sense != Sense::kEqual) ++cols;
    }
    Matrix<T> a(rows_.size(), cols);
    std::vector<T> b(rows_.size());
    std::size_t slack = structural;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto& r = rows_[i];
      for (const auto& [v, c] : r.terms) {
        a(i, column[v]) += c;
        if (free_[v]) a(i, column[v] + 1) -= c;
      }
      if (r.sense == Sense::kLessEqual) a(i, slack++) = T(1);
      if (r.sense == Sense::kGreaterEqual) a(i, slack++) = T(-1);
      b[i] = r.rhs;
    }
    auto x = find_nonnegative_solution(a, b);
    if (!x) return std::nullopt;
    std::vector<T> out(free_.size());
    for (std::size_t v = 0; v < free_.size(); ++v) {
      out[v] = (*x)[column[v]];
      if (free_[v]) out[v] -= (*x)[column[v] + 1];
    }
    return out;
  }

 private:
  struct Row {
    std::vector<Term> terms;
    Sense sense;
    T rhs;
  };
  std::vector<bool> free_;
  std::vector<Row> rows_;
};

}  // namespace dido::lp
