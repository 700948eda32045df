#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "dido/lp.hpp"

using dido::lp::FeasibilityProblem;
using dido::lp::Matrix;
using dido::lp::Sense;
using Rational = boost::multiprecision::cpp_rational;

TEST(Simplex, FindsNonnegativeSolution) {
  Matrix<double> a(2, 3);
  a(0, 0) = 1;
  a(0, 1) = 1;
  a(0, 2) = 1;
  a(1, 0) = 1;
  a(1, 1) = -1;
  const auto x = dido::lp::find_nonnegative_solution(a, {3.0, 1.0});
  ASSERT_TRUE(x);
  EXPECT_NEAR((*x)[0] + (*x)[1] + (*x)[2], 3.0, 1e-12);
  EXPECT_NEAR((*x)[0] - (*x)[1], 1.0, 1e-12);
  for (double v : *x) EXPECT_GE(v, 0.0);
}

TEST(Simplex, DetectsInfeasibility) {
  Matrix<double> a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(1, 1) = 1;
  EXPECT_FALSE(dido::lp::find_nonnegative_solution(a, {1.0, 2.0}));
  Matrix<double> b(1, 1);
  b(0, 0) = 1;
  EXPECT_FALSE(dido::lp::find_nonnegative_solution(b, {-1.0}));
}

TEST(Simplex, RejectsMismatchedRhs) {
  Matrix<double> a(2, 2);
  EXPECT_THROW(dido::lp::find_nonnegative_solution(a, {1.0}), std::invalid_argument);
}

TEST(Simplex, ExactOnRationals) {
  FeasibilityProblem<Rational> p;
  const auto x = p.add_variable();
  const auto y = p.add_variable(true);
  p.add_constraint({{x, Rational(3)}, {y, Rational(1)}}, Sense::kEqual, Rational(1, 7));
  p.add_constraint({{y, Rational(1)}}, Sense::kLessEqual, Rational(-2, 5));
  const auto sol = p.solve();
  ASSERT_TRUE(sol);
  EXPECT_EQ(Rational(3) * (*sol)[x] + (*sol)[y], Rational(1, 7));
  EXPECT_LE((*sol)[y], Rational(-2, 5));
  EXPECT_GE((*sol)[x], Rational(0));
}

TEST(Simplex, ExactInfeasibilityOnRationals) {
  // x + y = 1, x - y = 1/3, y >= 1/2 has no solution.
  FeasibilityProblem<Rational> p;
  const auto x = p.add_variable(), y = p.add_variable();
  p.add_constraint({{x, Rational(1)}, {y, Rational(1)}}, Sense::kEqual, Rational(1));
  p.add_constraint({{x, Rational(1)}, {y, Rational(-1)}}, Sense::kEqual, Rational(1, 3));
  p.add_constraint({{y, Rational(1)}}, Sense::kGreaterEqual, Rational(1, 2));
  EXPECT_FALSE(p.solve());
}

TEST(Simplex, DegenerateCyclingExample) {
  // Beale's cycling example recast as feasibility with a tight objective bound.
  FeasibilityProblem<Rational> p;
  std::vector<std::size_t> v;
  for (int i = 0; i < 4; ++i) v.push_back(p.add_variable());
  p.add_constraint({{v[0], Rational(1, 4)}, {v[1], Rational(-8)}, {v[2], Rational(-1)}, {v[3], Rational(9)}},
                   Sense::kLessEqual, Rational(0));
  p.add_constraint({{v[0], Rational(1, 2)}, {v[1], Rational(-12)}, {v[2], Rational(-1, 2)}, {v[3], Rational(3)}},
                   Sense::kLessEqual, Rational(0));
  p.add_constraint({{v[2], Rational(1)}}, Sense::kLessEqual, Rational(1));
  p.add_constraint({{v[0], Rational(3, 4)}, {v[1], Rational(-20)}, {v[2], Rational(1, 2)}, {v[3], Rational(-6)}},
                   Sense::kGreaterEqual, Rational(5, 4));
  const auto sol = p.solve();
  ASSERT_TRUE(sol);
  const auto& s = *sol;
  EXPECT_EQ(Rational(3, 4) * s[0] - Rational(20) * s[1] + Rational(1, 2) * s[2] - Rational(6) * s[3], Rational(5, 4));
}

TEST(FeasibilityProblem, UnknownVariable) {
  FeasibilityProblem<double> p;
  EXPECT_THROW(p.add_constraint({{3, 1.0}}, Sense::kEqual, 0.0), std::out_of_range);
}

TEST(Simplex, DoubleAgreesWithRationalOnRandomInstances) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3), dim(2, 9);
  int feasible = 0;
  for (int t = 0; t < 300; ++t) {
    const int m = dim(rng), n = dim(rng);
    Matrix<double> a(m, n);
    Matrix<Rational> ea(m, n);
    std::vector<double> b(m);
    std::vector<Rational> eb(m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) ea(i, j) = a(i, j) = coef(rng);
      eb[i] = b[i] = coef(rng);
    }
    const auto x = dido::lp::find_nonnegative_solution(a, b);
    const auto e = dido::lp::find_nonnegative_solution(ea, eb);
    ASSERT_EQ(x.has_value(), e.has_value()) << "instance " << t;
    if (!x) continue;
    ++feasible;
    for (int i = 0; i < m; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) {
        EXPECT_GE((*x)[j], 0.0);
        s += a(i, j) * (*x)[j];
      }
      EXPECT_NEAR(s, b[i], 1e-9);
    }
  }
  EXPECT_GT(feasible, 30);
  EXPECT_LT(feasible, 270);
}

TEST(Simplex, NearlyDependentRowsStayConsistent) {
  // third row is the sum of the first two up to one ulp
  Matrix<double> a(3, 3);
  const double rows[3][3] = {{0.1, 0.7, 0.3}, {0.2, 0.1, 0.9}, {0.1 + 0.2, 0.7 + 0.1, 0.3 + 0.9}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = rows[i][j];
  const auto x = dido::lp::find_nonnegative_solution(a, {1.0, 1.0, 2.0});
  ASSERT_TRUE(x);
  for (int i = 0; i < 3; ++i) {
    double s = 0.0;
    for (int j = 0; j < 3; ++j) s += a(i, j) * (*x)[j];
    EXPECT_NEAR(s, i == 2 ? 2.0 : 1.0, 1e-9);
  }
}
