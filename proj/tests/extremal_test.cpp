#include <gtest/gtest.h>

#include <cmath>

#include "dido/extremal.hpp"
#include "support/shapes.hpp"

using namespace dido;
using dido::testing::box;

namespace {

double segment_area(double radius, double chord) {
  const double phi = std::asin(chord / (2.0 * radius));
  return radius * radius * (phi - std::sin(phi) * std::cos(phi));
}

}  // namespace

TEST(TriangleBulge, CircumradiusGivesCircumdisk) {
  const DirectionGrid g(360);
  const double R = 1.0 / std::sqrt(3.0);
  const auto s = triangle_bulge_body(1.0, R, g);
  EXPECT_LE(hausdorff_distance(s.body, ConvexFigure::disk({0, 0}, R, 360)), 1e-12);
  EXPECT_TRUE(s.certificate.mu.empty());
  for (const Vec2& c : s.arc_centers) EXPECT_LE(norm(c), 1e-12);
}

TEST(TriangleBulge, SegmentAreaFormula) {
  const DirectionGrid g(720);
  const auto s = triangle_bulge_body(1.0, 1.0, g);
  const double expected = std::sqrt(3.0) / 4.0 + 3.0 * segment_area(1.0, 1.0);
  EXPECT_NEAR(dido::testing::shoelace(s.body.vertices()), expected, 2e-5);
  EXPECT_TRUE(contains(s.body, s.container));
  for (const auto& a : s.certificate.mu.atoms()) {
    EXPECT_NEAR(support_eval(s.body, a.unit()), support_eval(s.container, a.unit()), 1e-12);
  }
}

TEST(TriangleBulge, LargeRadiusApproachesTriangle) {
  const DirectionGrid g(360);
  const auto s = triangle_bulge_body(1.0, 1e4, g);
  EXPECT_NEAR(s.body.area(), std::sqrt(3.0) / 4.0, 1e-12);
  EXPECT_THROW(triangle_bulge_body(1.0, 0.5, g), GeometryError);
}

TEST(SolveTriangle, CircumdiskBranchPoint) {
  const DirectionGrid g(360);
  const double R = 1.0 / std::sqrt(3.0);
  const auto s = solve_external_urysohn_triangle(1.0, kPi * R, g);
  EXPECT_NEAR(s.certificate.alpha, R, 1e-12);
  EXPECT_LE(hausdorff_distance(s.body, ConvexFigure::disk({0, 0}, R, 360)), 1e-12);
  EXPECT_FALSE(s.disk_branch);
  EXPECT_TRUE(verify_external_optimality(s.body, s.container, s.certificate, g, 1e-7).passed());
}

TEST(SolveTriangle, BeyondCircumdiskReturnsScaledDisk) {
  const DirectionGrid g(360);
  const auto s = solve_external_urysohn_triangle(1.0, 2.5, g);
  EXPECT_TRUE(s.disk_branch);
  EXPECT_NEAR(integral_breadth(s.body, g), 2.5, 1e-12);
  EXPECT_TRUE(verify_external_optimality(s.body, s.container, s.certificate, g, 1e-7).passed());
}

TEST(SolveTriangle, InfeasibleBelowTriangle) {
  const DirectionGrid g(360);
  try {
    solve_external_urysohn_triangle(1.0, 1.2, g);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("infeasible", 0), 0u);
  }
  EXPECT_THROW(solve_external_urysohn_triangle(1.0, 1.7, DirectionGrid(100)), GeometryError);
}

TEST(SolveTriangle, NearTriangleBreadth) {
  const DirectionGrid g(360);
  const double b_tri = integral_breadth(equilateral_triangle(1.0), g);
  double last_gap = 1e300, last_alpha = 0.0;
  for (double bump : {1e-4, 1e-6, 1e-8}) {
    const auto s = solve_external_urysohn_triangle(1.0, b_tri * (1 + bump), g);
    const double gap = s.body.area() - std::sqrt(3.0) / 4.0;
    EXPECT_GT(gap, 0.0);
    EXPECT_LT(gap, last_gap);
    EXPECT_GT(s.certificate.alpha, last_alpha);
    last_gap = gap;
    last_alpha = s.certificate.alpha;
  }
  EXPECT_GT(last_alpha, 10.0);
  EXPECT_LT(last_gap, 1e-4);
}

TEST(SolveTriangle, MonotoneInBreadth) {
  const DirectionGrid g(360);
  const double b_tri = integral_breadth(equilateral_triangle(1.0), g);
  const double b_disk = kPi / std::sqrt(3.0);
  double last_area = 0.0, last_alpha = 1e300;
  for (int k = 1; k <= 8; ++k) {
    const double B = b_tri + (b_disk - b_tri) * k / 9.0;
    const auto s = solve_external_urysohn_triangle(1.0, B, g);
    EXPECT_GT(s.body.area(), last_area);
    EXPECT_LT(s.certificate.alpha, last_alpha);
    last_area = s.body.area();
    last_alpha = s.certificate.alpha;
  }
}

TEST(SolveTriangle, ScaleCovariance) {
  const DirectionGrid g(360);
  const auto a = solve_external_urysohn_triangle(1.0, 2.0, g);
  const auto b = solve_external_urysohn_triangle(3.0, 6.0, g);
  EXPECT_NEAR(b.certificate.alpha, 3.0 * a.certificate.alpha, 1e-7);
  EXPECT_NEAR(b.body.area(), 9.0 * a.body.area(), 1e-7);
}

TEST(VerifyExternal, OversizedSquareFailsVolumeIdentity) {
  const DirectionGrid g(360);
  const auto s = solve_external_urysohn_triangle(1.0, 2.0, g);
  const ConvexFigure square = box(-2, -2, 2, 2);
  const auto rep = verify_external_optimality(square, s.container, s.certificate, g, 1e-7);
  const auto* c2 = rep.find("volume_identity");
  ASSERT_NE(c2, nullptr);
  EXPECT_FALSE(c2->pass);
  EXPECT_GT(c2->residual, 0.0);
  EXPECT_FALSE(rep.passed());
}

TEST(VerifyExternal, ClassicalUrysohnAroundPoint) {
  const DirectionGrid g(360);
  const ConvexFigure disk = ConvexFigure::disk({0, 0}, 0.8, 360);
  const UrysohnCertificate cert{DiscreteMeasure{}, 0.8};
  EXPECT_TRUE(verify_external_optimality(disk, ConvexFigure::point({0.1, 0}), cert, g, 1e-7).passed());
}

TEST(VerifyExternal, WrongAlphaFailsMajorization) {
  const DirectionGrid g(360);
  const auto s = solve_external_urysohn_triangle(1.0, 2.0, g);
  UrysohnCertificate bad = s.certificate;
  bad.alpha *= 0.9;
  const auto rep = verify_external_optimality(s.body, s.container, bad, g, 1e-7);
  EXPECT_FALSE(rep.find("majorization")->pass);
}

TEST(Lens, Examples) {
  const DirectionGrid g(720);
  const auto generic = lens_2d(1.0, 2.0, g);
  EXPECT_NEAR(breadth(generic.body, Direction(kPi / 2)), 2.0 * (2.0 - std::sqrt(3.0)), 1e-5);
  EXPECT_NEAR(generic.body.area(), 2.0 * segment_area(2.0, 2.0), 5e-5);
  EXPECT_TRUE(contains(generic.body, ConvexFigure::segment({-1, 0}, {1, 0})));
  EXPECT_TRUE(verify_external_optimality(generic.body, generic.container, generic.certificate, g, 1e-7).passed());

  // Centers coincide when r = a: the full disk.
  const auto disk = lens_2d(0.7, 0.7, g);
  EXPECT_LE(hausdorff_distance(disk.body, ConvexFigure::disk({0, 0}, 0.7, 720)), 2 * 0.7 * kPi / 720);

  // A short chord in a large circle gives a thin lens.
  const auto thin = lens_2d(0.05, 1.0, g);
  EXPECT_NEAR(thin.body.area(), 2.0 * segment_area(1.0, 0.1), 1e-5);
  EXPECT_LT(thin.body.area(), 1e-3);

  try {
    lens_2d(1.0, 0.5, g);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_STREQ(e.what(), "infeasible radius");
  }
}

TEST(Stadium, Examples) {
  const DirectionGrid g(360);
  EXPECT_LE(hausdorff_distance(stadium(1.0, 0.0, g), ConvexFigure::disk({0, 0}, 1.0, 360)), 1e-15);
  const ConvexFigure st = stadium(1.2, 2.0, g);
  EXPECT_NEAR(dido::testing::shoelace(st.vertices()), kPi * 1.44 + 2 * 1.2 * 2.0, 1e-4 * (kPi * 1.44 + 4.8));
  EXPECT_NEAR(breadth(st, Direction(kPi / 2)), 2.4, 1e-12);
  const auto mu = surface_measure(st).measure();
  const auto expected = 1.2 * ball_measure(g).measure() + DiscreteMeasure({{kPi / 2, 2.0}, {3 * kPi / 2, 2.0}});
  EXPECT_LE(max_abs_weight(signed_difference(mu, expected)), 1e-12);
}

TEST(Flattening, StadiumInLargeBox) {
  const DirectionGrid g(360);
  const ConvexFigure st = stadium(1.0, 1.5, g);
  const ConvexFigure big = box(-50, -50, 50, 50);
  const FlatteningCertificate cert{1.0, 1.5, {}, Direction(kPi / 2)};
  const auto rep = verify_flattening_optimality(st, big, cert, g, 1e-7);
  EXPECT_TRUE(rep.passed());
  EXPECT_LE(rep.find("decomposition")->residual, 1e-12);
}

TEST(Flattening, ZeroBetaFlagged) {
  const DirectionGrid g(360);
  const ConvexFigure st = stadium(1.0, 1.5, g);
  const FlatteningCertificate cert{1.0, 0.0, {}, Direction(kPi / 2)};
  const auto rep = verify_flattening_optimality(st, box(-50, -50, 50, 50), cert, g, 1e-7);
  EXPECT_FALSE(rep.find("multipliers")->pass);
}

TEST(Flattening, DiskHasNoFlats) {
  const DirectionGrid g(360);
  const ConvexFigure disk = ConvexFigure::disk({0, 0}, 1.0, 360);
  const FlatteningCertificate cert{1.0, 0.5, {}, Direction(kPi / 2)};
  const auto rep = verify_flattening_optimality(disk, box(-50, -50, 50, 50), cert, g, 1e-7);
  EXPECT_FALSE(rep.find("decomposition")->pass);
}

namespace {

struct HalfPair {
  ConvexFigure xbar, ybar, container;
  CurrentHyperplaneCertificate cert;
};

// Rounded rectangles R ⊕ a·ball filling the two halves of [−1,1]².
HalfPair half_pair(const DirectionGrid& g, double a) {
  const ConvexFigure left = box(-1 + a, -1 + a, -a, 1 - a);
  const ConvexFigure right = box(a, -1 + a, 1 - a, 1 - a);
  const ConvexFigure ball = scale(ConvexFigure::unit_ball(g), a);
  HalfPair p{minkowski_sum(left, ball), minkowski_sum(right, ball), box(-1, -1, 1, 1), {}};
  p.cert = {a, 1.0 - 2.0 * a, left, right, Direction(0.0)};
  return p;
}

}  // namespace

TEST(CurrentHyperplane, HalvesOfSquarePass) {
  const DirectionGrid g(360);
  const auto p = half_pair(g, 0.25);
  const auto lit = verify_current_hyperplane(p.xbar, p.ybar, p.container, p.cert, g, 1e-7);
  EXPECT_TRUE(lit.passed());
  const auto cor = verify_current_hyperplane(p.xbar, p.ybar, p.container, p.cert, g, 1e-7, ContactReading::kCorrected);
  EXPECT_TRUE(cor.passed());
}

TEST(CurrentHyperplane, ExcessBetaFailsFlatFaces) {
  const DirectionGrid g(360);
  auto p = half_pair(g, 0.25);
  p.cert.beta = 2.0;
  const auto rep = verify_current_hyperplane(p.xbar, p.ybar, p.container, p.cert, g, 1e-7);
  EXPECT_FALSE(rep.find("flat_faces")->pass);
}

TEST(CurrentHyperplane, SeparationPrecondition) {
  const DirectionGrid g(360);
  auto p = half_pair(g, 0.25);
  EXPECT_THROW(verify_current_hyperplane(p.xbar.translated({0.6, 0}), p.ybar, p.container, p.cert, g, 1e-7),
               GeometryError);
}

TEST(CurrentHyperplane, ReadingsDiffer) {
  // ȳ pulled off the right wall: supp(y) contains e1 and contact fails there
  // under the corrected reading. The literal reading only asks about supp(x).
  const DirectionGrid g(360);
  auto p = half_pair(g, 0.25);
  p.cert.y = box(0.25, -0.75, 0.65, 0.75);
  p.ybar = minkowski_sum(p.cert.y, scale(ConvexFigure::unit_ball(g), 0.25));
  const auto lit = verify_current_hyperplane(p.xbar, p.ybar, p.container, p.cert, g, 1e-7);
  const auto cor = verify_current_hyperplane(p.xbar, p.ybar, p.container, p.cert, g, 1e-7, ContactReading::kCorrected);
  EXPECT_FALSE(lit.find("contact_y")->pass);
  EXPECT_FALSE(cor.find("contact_y")->pass);

  auto q = half_pair(g, 0.25);
  // With x a right triangle, supp(x) holds the hypotenuse normal, where ȳ
  // stays off the wall; supp(y) holds only axis directions.
  q.cert.x = ConvexFigure::hull(std::vector<Vec2>{{-0.75, -0.75}, {-0.25, -0.75}, {-0.25, 0.75}});
  q.xbar = minkowski_sum(q.cert.x, scale(ConvexFigure::unit_ball(g), 0.25));
  const auto lit2 = verify_current_hyperplane(q.xbar, q.ybar, q.container, q.cert, g, 1e-7);
  const auto cor2 =
      verify_current_hyperplane(q.xbar, q.ybar, q.container, q.cert, g, 1e-7, ContactReading::kCorrected);
  EXPECT_FALSE(lit2.find("contact_y")->pass);
  EXPECT_TRUE(cor2.find("contact_y")->pass);
}

TEST(Pareto, ClassicalIsoperimetric) {
  const DirectionGrid g(360);
  const ConvexFigure disk = ConvexFigure::disk({0, 0}, 1.0, 360);
  const auto s = pareto_vector_isoperimetric({disk}, {1.0}, kPi);
  EXPECT_NEAR(s.body.area(), kPi, 1e-12);
  EXPECT_NEAR(integral_breadth(s.body, g), kPi, 0.002 * kPi);
  EXPECT_EQ(s.point.objectives.size(), 1u);
}

TEST(Pareto, DiskPlusSegmentIsStadium) {
  const DirectionGrid g(360);
  const ConvexFigure disk = ConvexFigure::disk({0, 0}, 1.0, 360);
  const ConvexFigure seg = ConvexFigure::segment({-1, 0}, {1, 0});
  const auto s = pareto_vector_isoperimetric({disk, seg}, {1.0, 0.5}, 4.0);
  EXPECT_NEAR(s.body.area(), 4.0, 1e-12);
  const double lambda = std::sqrt(4.0 / stadium(1.0, 1.0, g).area());
  EXPECT_LE(hausdorff_up_to_translation(s.body, scale(stadium(1.0, 1.0, g), lambda)), 1e-12);
  EXPECT_THROW(pareto_vector_isoperimetric({seg}, {1.0}, 1.0), GeometryError);
  EXPECT_THROW(pareto_vector_isoperimetric({disk}, {-1.0}, 1.0), GeometryError);
}

TEST(Pareto, ScanFindsNoImprovement) {
  const DirectionGrid g(360);
  const ConvexFigure disk = ConvexFigure::disk({0, 0}, 1.0, 360);
  const ConvexFigure seg = ConvexFigure::segment({-1, 0}, {1, 0});
  const auto s = pareto_vector_isoperimetric({disk, seg}, {1.0, 0.7}, 5.0);
  const auto rep = scan_vector_isoperimetric(s.body, {disk, seg}, g, 200, 0);
  EXPECT_EQ(rep.feasible, 200u);
  EXPECT_LE(rep.best_improvement, 1e-6);
}

TEST(Rotation, SphereAndCylinder) {
  const auto sphere = rotate_profile(ConvexFigure::disk({0, 0}, 1.0, 360), Direction(kPi / 2));
  EXPECT_NEAR(rotation_volume(sphere), 4.0 * kPi / 3.0, 0.005 * 4.0 * kPi / 3.0);
  EXPECT_NEAR(rotation_surface(sphere), 4.0 * kPi, 0.005 * 4.0 * kPi);
  const auto cyl = rotate_profile(box(-0.5, -1, 0.5, 1), Direction(kPi / 2));
  EXPECT_NEAR(rotation_volume(cyl), kPi * 0.25 * 2.0, 1e-12);
  EXPECT_NEAR(rotation_surface(cyl), 2 * kPi * 0.25 + 2 * kPi * 0.5 * 2.0, 1e-12);
  EXPECT_DOUBLE_EQ(rotation_breadth(cyl), 2.0);
}

TEST(Rotation, AxisOtherThanVertical) {
  const ConvexFigure lying = box(-1, -0.5, 1, 0.5);
  const auto body = rotate_profile(lying, Direction(0.0));
  EXPECT_NEAR(rotation_volume(body), kPi * 0.25 * 2.0, 1e-12);
  EXPECT_NEAR(rotation_breadth(body), breadth(lying, Direction(0.0)), 1e-15);
}

TEST(Rotation, AsymmetricProfileRejected) {
  EXPECT_THROW(rotate_profile(box(0, 0, 1, 1), Direction(kPi / 2)), GeometryError);
  const ConvexFigure tri = ConvexFigure::hull(std::vector<Vec2>{{-1, 0}, {1, 0}, {0.3, 1}});
  EXPECT_THROW(rotate_profile(tri, Direction(kPi / 2)), GeometryError);
}

TEST(Scans, UrysohnOptimaHold) {
  const DirectionGrid g(360);
  const auto tri = solve_external_urysohn_triangle(1.0, 2.0, g);
  const auto r1 = scan_external_urysohn(tri.body, tri.container, g, 200, 1);
  EXPECT_GT(r1.feasible, 100u);
  EXPECT_LE(r1.best_improvement, 1e-6);
  const auto lens = lens_2d(0.5, 0.8, g);
  const auto r2 = scan_external_urysohn(lens.body, lens.container, g, 200, 1);
  EXPECT_LE(r2.best_improvement, 1e-6);
}

TEST(Scans, FlatteningStadiumHolds) {
  const DirectionGrid g(360);
  const ConvexFigure st = stadium(1.0, 1.5, g);
  const auto r = scan_flattening(st, box(-50, -50, 50, 50), Direction(kPi / 2), g, 200, 2);
  EXPECT_EQ(r.feasible, 200u);
  EXPECT_LE(r.best_improvement, 1e-6);
}

TEST(Scans, Reproducible) {
  const DirectionGrid g(360);
  const ConvexFigure disk = ConvexFigure::disk({0, 0}, 1.0, 360);
  const auto a = scan_vector_isoperimetric(disk, {disk}, g, 50, 9);
  const auto b = scan_vector_isoperimetric(disk, {disk}, g, 50, 9);
  EXPECT_EQ(a.best_improvement, b.best_improvement);
  EXPECT_EQ(a.best_sample, b.best_sample);
}
