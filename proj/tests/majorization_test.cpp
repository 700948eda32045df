#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "dido/majorization.hpp"
#include "support/shapes.hpp"

using namespace dido;
using dido::testing::box;
using dido::testing::random_polygon;
using Rational = boost::multiprecision::cpp_rational;

namespace {

DiscreteMeasure mu_of(const ConvexFigure& x) { return surface_measure(x).measure(); }

SublinearFunction random_sublinear(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> k(1, 5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  SublinearFunction p;
  const int n = k(rng);
  for (int i = 0; i < n; ++i) p.generators.push_back({u(rng), u(rng)});
  return p;
}

}  // namespace

TEST(LinearMajorization, Identity) {
  auto rng = dido::testing::rng_for(1);
  const auto mu = mu_of(random_polygon(rng));
  const auto cert = linearly_majorizes(mu, mu);
  ASSERT_TRUE(cert);
  EXPECT_LE(transport_residual(mu, mu, *cert), 1e-12);
  EXPECT_TRUE(linearly_majorizes(mu, DiscreteMeasure{}));
}

TEST(LinearMajorization, ContainedSquare) {
  const auto big = mu_of(box(0, 0, 2, 2));
  std::vector<Vec2> diamond{{1, 0.2}, {1.8, 1}, {1, 1.8}, {0.2, 1}};
  const auto small = mu_of(ConvexFigure::hull(diamond));
  const auto cert = linearly_majorizes(big, small);
  ASSERT_TRUE(cert);
  EXPECT_LE(transport_residual(big, small, *cert), 1e-9);
  EXPECT_TRUE(linearly_majorizes_dual(big, small));
}

TEST(LinearMajorization, DiskVsLargeSquareInfeasible) {
  const auto disk = mu_of(ConvexFigure::disk({0, 0}, 1.0, 360));
  const auto square = mu_of(box(0, 0, 3, 3));
  EXPECT_FALSE(linearly_majorizes(disk, square));
  EXPECT_FALSE(linearly_majorizes_dual(disk, square));
}

TEST(LinearMajorization, TransportAndDualRoutesAgree) {
  auto rng = dido::testing::rng_for(44);
  std::uniform_real_distribution<double> s(0.4, 1.3);
  for (int i = 0; i < 60; ++i) {
    const ConvexFigure x = random_polygon(rng, 3, 8);
    const ConvexFigure y = scale(random_polygon(rng, 3, 8), s(rng));
    const bool lp = linearly_majorizes(mu_of(x), mu_of(y)).has_value();
    const bool dual = linearly_majorizes_dual(mu_of(x), mu_of(y));
    EXPECT_EQ(lp, dual) << "pair " << i;
  }
}

TEST(ReshetnyakGap, Examples) {
  auto rng = dido::testing::rng_for(2);
  const auto mu = mu_of(random_polygon(rng));
  const auto nu = mu_of(random_polygon(rng));
  SublinearFunction p = random_sublinear(rng);
  EXPECT_NEAR(reshetnyak_gap(mu, mu, p), 0.0, 1e-15);
  SublinearFunction linear{{{0.7, -1.3}}};
  EXPECT_NEAR(reshetnyak_gap(mu, nu, linear), 0.0, 1e-12);
}

TEST(ReshetnyakGap, CertificateImpliesInequality) {
  auto rng = dido::testing::rng_for(3);
  for (int i = 0; i < 20; ++i) {
    const ConvexFigure y = random_polygon(rng);
    const ConvexFigure x = minkowski_sum(y, scale(random_polygon(rng), 0.5));
    ASSERT_TRUE(linearly_majorizes(mu_of(x), mu_of(y)));
    for (int k = 0; k < 100; ++k) EXPECT_GE(reshetnyak_gap(mu_of(x), mu_of(y), random_sublinear(rng)), -1e-9);
  }
}

TEST(AffineMajorization, Examples) {
  PointMeasure<2> mu{{{{0, 0}, 1.0}, {{1, 0}, 1.0}, {{0, 1}, 2.0}}};
  PointMeasure<2> bary{{{{0.25, 0.5}, 4.0}}};
  EXPECT_TRUE(affinely_majorizes(mu, bary));
  EXPECT_TRUE(affinely_majorizes(mu, mu));
  PointMeasure<2> one{{{{0, 0}, 1.0}}};
  PointMeasure<2> two{{{{0, 0}, 2.0}}};
  EXPECT_FALSE(affinely_majorizes(one, two));
}

TEST(AffineMajorization, ImpliesLinear) {
  // Atoms read as vectors: μ ≫_aff ν gives each ν atom as a barycenter of
  // its part with the same mass, hence |ν_j v_j| is a nonnegative
  // combination of the μ vectors.
  PointMeasure<2> mu{{{{1, 0}, 1.0}, {{0, 1}, 1.0}, {{-1, -1}, 1.0}}};
  PointMeasure<2> nu{{{{0, 0}, 3.0}}};
  ASSERT_TRUE(affinely_majorizes(mu, nu));
  const DiscreteMeasure lin_mu({{0.0, 1.0}, {kPi / 2, 1.0}, {5 * kPi / 4, std::sqrt(2.0)}});
  EXPECT_TRUE(linearly_majorizes(lin_mu, DiscreteMeasure{}));
}

TEST(CfmCheck, Examples) {
  PointMeasure<2> mu{{{{-1, 0}, 1.0}, {{1, 0}, 1.0}}};
  PointMeasure<2> nu_center{{{{0, 0}, 2.0}}};
  PointMeasure<2> nu_off{{{{0.5, 0}, 2.0}}};
  EXPECT_TRUE(cfm_check(mu, nu_center, {}));
  ConvexTestFunction<2> abs_x{{{{1, 0}, -0.5}, {{-1, 0}, 0.5}}};
  ConvexTestFunction<2> shifted{{{{1, 0}, 0.0}, {{-1, 0}, 0.0}, {{0, 0}, 0.6}}};
  EXPECT_TRUE(cfm_check(mu, nu_center, {abs_x, shifted}));
  ConvexTestFunction<2> linear{{{{1, 0}, 0.0}}};
  EXPECT_FALSE(cfm_check(mu, nu_off, {linear}));
  EXPECT_FALSE(affinely_majorizes(mu, nu_off));
  const auto f = find_convex_violation(mu, nu_off);
  ASSERT_TRUE(f);
  EXPECT_LT(mu.integrate(*f) - nu_off.integrate(*f), -1e-9);
  EXPECT_FALSE(find_convex_violation(mu, nu_center));
}

TEST(CfmCheck, RoundedBarycentersAreNotViolations) {
  // ν collects μ at rounded barycenters; only roundoff separates them
  PointMeasure<2> mu{{{{0.193101, 0.233779}, 0.4901}, {{0.334557, 0.139499}, 0.8043},
                      {{0.161629, 0.542821}, 1.0473}, {{0.431895, 0.470299}, 0.9375}}};
  PointMeasure<2> nu;
  for (int g = 0; g < 2; ++g) {
    const auto& p = mu.atoms[2 * g];
    const auto& q = mu.atoms[2 * g + 1];
    const double w = p.weight + q.weight;
    nu.atoms.push_back({{(p.weight * p.point[0] + q.weight * q.point[0]) / w,
                         (p.weight * p.point[1] + q.weight * q.point[1]) / w},
                        w});
  }
  EXPECT_TRUE(affinely_majorizes(mu, nu));
  EXPECT_FALSE(find_convex_violation(mu, nu));
  nu.atoms[0].point[0] += 1e-5;
  EXPECT_FALSE(affinely_majorizes(mu, nu));
  const auto f = find_convex_violation(mu, nu);
  ASSERT_TRUE(f);
  EXPECT_LT(mu.integrate(*f) - nu.integrate(*f), -1e-9);
}

TEST(CfmCheck, MassMismatchFoundByConstant) {
  PointMeasure<2> mu{{{{0, 0}, 1.0}}};
  PointMeasure<2> nu{{{{0, 0}, 1.5}}};
  const auto f = find_convex_violation(mu, nu);
  ASSERT_TRUE(f);
  EXPECT_LT(mu.integrate(*f) - nu.integrate(*f), -0.1);
}

TEST(Decomposition, Examples) {
  const std::vector<ConeSample<Rational>> h1{{{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}}};
  const std::vector<Rational> f{2, 2}, g{1, 1};
  const auto d = decomposition_complete<Rational>(f, {g}, h1);
  ASSERT_TRUE(d);
  EXPECT_EQ((*d)[0], f);
  EXPECT_TRUE(decomposition_hypothesis(f, g, h1));
  EXPECT_TRUE(decomposition_complete<Rational>(g, {g}, h1));

  const std::vector<ConeSample<Rational>> two{{{{Rational(1), Rational(0)}}}, {{{Rational(0), Rational(1)}}}};
  const std::vector<Rational> f2{1, 0}, g2{0, 1};
  EXPECT_FALSE(decomposition_complete<Rational>(f2, {{0, 0}, g2}, two));
  EXPECT_TRUE(decomposition_complete<Rational>(f2, {g2, {0, 0}}, two));
  EXPECT_FALSE(decomposition_hypothesis(f2, g2, two));
}

TEST(Decomposition, SampledTuplesAreWeakerThanCones) {
  // The sampled joins are e1 ∨ e2 = (1,1) only, where f and g agree; the
  // cone element 0·e1 ∨ e2 exposes g2 > f2.
  const std::vector<ConeSample<Rational>> cones{{{{Rational(1), Rational(0)}}}, {{{Rational(0), Rational(1)}}}};
  const std::vector<Rational> f{2, 0}, g{1, 1};
  EXPECT_TRUE(decomposition_hypothesis_sampled(f, g, cones));
  EXPECT_FALSE(decomposition_hypothesis(f, g, cones));
  const auto v = find_join_violation(f, g, cones);
  ASSERT_TRUE(v);
  EXPECT_FALSE(decomposition_complete(f, v->g_parts, cones));
}

TEST(Decomposition, DimensionMismatch) {
  const std::vector<ConeSample<double>> cones{{{{1.0, 0.0, 0.0}}}};
  EXPECT_THROW(decomposition_complete<double>({1.0, 1.0}, {{1.0, 1.0}}, cones), std::invalid_argument);
  EXPECT_THROW(decomposition_hypothesis<double>({1.0, 1.0}, {1.0, 1.0}, cones), std::invalid_argument);
}

TEST(Decomposition, HypothesisMatchesCompletenessOnSmallRationalInstances) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coord(0, 3), count(1, 3);
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    const std::size_t d = 2 + t % 2;
    std::vector<ConeSample<Rational>> cones(2);
    for (auto& c : cones) {
      const int m = count(rng);
      for (int s = 0; s < m; ++s) {
        std::vector<Rational> h(d);
        for (auto& v : h) v = coord(rng);
        if (std::all_of(h.begin(), h.end(), [](const Rational& v) { return v == 0; })) h[0] = 1;
        c.generators.push_back(h);
      }
    }
    std::vector<Rational> f(d), g(d);
    for (auto& v : f) v = coord(rng);
    for (auto& v : g) v = coord(rng);
    const auto violation = find_join_violation(f, g, cones);
    if (violation) {
      EXPECT_FALSE(decomposition_complete(f, violation->g_parts, cones));
      continue;
    }
    // Exhaustively split g over {0, g_i/2, g_i} per coordinate.
    std::vector<int> split(d, 0);
    while (true) {
      std::vector<std::vector<Rational>> parts(2, std::vector<Rational>(d));
      for (std::size_t i = 0; i < d; ++i) {
        parts[0][i] = g[i] * Rational(split[i], 2);
        parts[1][i] = g[i] - parts[0][i];
      }
      EXPECT_TRUE(decomposition_complete(f, parts, cones));
      ++checked;
      std::size_t i = 0;
      while (i < d && ++split[i] == 3) split[i++] = 0;
      if (i == d) break;
    }
  }
  EXPECT_GT(checked, 0);
}
