// Acceptance run: one PASS/FAIL line per criterion.
//   acceptance [--also OTHER_CLI]...
// Exit status is nonzero when a criterion fails that is not listed in
// kKnownFailures.

#include <boost/multiprecision/cpp_int.hpp>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dido/extremal.hpp"
#include "dido/majorization.hpp"
#include "dido/measures.hpp"
#include "support/shapes.hpp"

using namespace dido;
using dido::testing::random_polygon;
using Rational = boost::multiprecision::cpp_rational;
namespace fs = std::filesystem;

namespace {

// Criterion 10's rotational scan finds bodies that beat the rotated stadium;
// see README.
const std::set<int> kKnownFailures{10};

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

DiscreteMeasure mu_of(const ConvexFigure& x) { return surface_measure(x).measure(); }

std::vector<std::pair<ConvexFigure, ConvexFigure>> corpus(std::uint64_t seed, int n) {
  auto rng = dido::testing::rng_for(seed);
  std::vector<std::pair<ConvexFigure, ConvexFigure>> out;
  for (int i = 0; i < n; ++i) {
    ConvexFigure x = random_polygon(rng);
    ConvexFigure y = random_polygon(rng);
    out.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

Outcome c1() {
  double worst = 0.0;
  for (const auto& [x, y] : corpus(101, 200)) {
    const double a = mixed_volume(x, y), b = mixed_volume(y, x);
    worst = std::max(worst, std::abs(a - b) / std::max(std::abs(a), std::abs(b)));
  }
  return {worst <= 1e-9, fmt("200 pairs, max relative asymmetry %.3g", worst)};
}

Outcome c2() {
  double worst = 0.0, worst_eq = 0.0;
  std::mt19937_64 rng(102);
  std::uniform_real_distribution<double> s(0.2, 3.0), t(-3.0, 3.0);
  for (const auto& [x, y] : corpus(101, 200)) {
    const double v1 = mixed_volume(x, y);
    worst = std::min(worst, v1 * v1 - volume(x) * volume(y));
    const ConvexFigure h = scale(x, s(rng)).translated({t(rng), t(rng)});
    const double w1 = mixed_volume(x, h);
    const double prod = volume(x) * volume(h);
    worst_eq = std::max(worst_eq, std::abs(w1 * w1 - prod) / prod);
  }
  return {worst >= -1e-9 && worst_eq <= 1e-6,
          fmt("min V1^2 - V V = %.3g; homothets max relative gap %.3g", worst, worst_eq)};
}

Outcome c3() {
  double worst = 0.0;
  for (const auto& [x, y] : corpus(103, 100)) {
    const ConvexFigure b = reconstruct(AlexandrovMeasure(mu_of(x) + mu_of(y)));
    const ConvexFigure m = minkowski_sum(x, y);
    worst = std::max(worst, hausdorff_up_to_translation(b, m) / m.diameter());
  }
  return {worst <= 1e-9, fmt("100 pairs, max Hausdorff/diameter %.3g", worst)};
}

struct MajorizationPair {
  ConvexFigure x, y;
  bool feasible;
};

std::vector<MajorizationPair> majorization_pairs() {
  auto rng = dido::testing::rng_for(104);
  std::uniform_real_distribution<double> s(0.15, 0.9);
  std::vector<MajorizationPair> out;
  for (int i = 0; i < 100; ++i) {
    const ConvexFigure x = random_polygon(rng);
    const ConvexFigure y = scale(random_polygon(rng), s(rng));
    out.push_back({x, y, false});
  }
  return out;
}

std::vector<MajorizationPair> g_pairs;

Outcome c4() {
  g_pairs = majorization_pairs();
  int disagree = 0, feasible = 0;
  for (auto& p : g_pairs) {
    p.feasible = linearly_majorizes(mu_of(p.x), mu_of(p.y)).has_value();
    const bool fits = contains_up_to_translation(p.x, p.y).has_value();
    feasible += p.feasible;
    disagree += p.feasible != fits;
  }
  return {disagree == 0 && feasible > 0 && feasible < 100,
          fmt("100 pairs, %d feasible, %d disagreements", feasible, disagree)};
}

SublinearFunction random_sublinear(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> k(1, 6);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  SublinearFunction p;
  const int n = k(rng);
  for (int i = 0; i < n; ++i) p.generators.push_back({u(rng), u(rng)});
  return p;
}

Outcome c5() {
  std::mt19937_64 rng(105);
  double worst = 0.0;
  int tested = 0;
  for (const auto& p : g_pairs) {
    if (!p.feasible) continue;
    ++tested;
    for (int k = 0; k < 100; ++k) worst = std::min(worst, reshetnyak_gap(mu_of(p.x), mu_of(p.y), random_sublinear(rng)));
  }
  return {tested > 0 && worst >= -1e-9, fmt("%d feasible pairs x 100 functions, min gap %.3g", tested, worst)};
}

Outcome c6() {
  std::mt19937_64 rng(106);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> mu_count(2, 6), nu_count(1, 4);
  // triangle domain with corners (0,0), (1,0), (0,1)
  auto inside = [&] {
    double a = u(rng), b = u(rng);
    if (a + b > 1.0) a = 1.0 - a, b = 1.0 - b;
    return Point<2>{a, b};
  };
  int disagree = 0, feasible = 0;
  for (int t = 0; t < 50; ++t) {
    PointMeasure<2> mu, nu;
    const int m = mu_count(rng);
    for (int i = 0; i < m; ++i) mu.atoms.push_back({inside(), 0.2 + u(rng)});
    const int n = std::min(nu_count(rng), m);
    // ν from a random grouping of μ; odd instances get one atom moved
    std::vector<double> w(n, 0.0);
    std::vector<Point<2>> c(n, Point<2>{0.0, 0.0});
    for (int i = 0; i < m; ++i) {
      const int g = i < n ? i : static_cast<int>(rng() % n);
      w[g] += mu.atoms[i].weight;
      for (int d = 0; d < 2; ++d) c[g][d] += mu.atoms[i].weight * mu.atoms[i].point[d];
    }
    for (int g = 0; g < n; ++g) nu.atoms.push_back({{c[g][0] / w[g], c[g][1] / w[g]}, w[g]});
    if (t % 2 == 1) nu.atoms[0].point = inside();
    const bool aff = affinely_majorizes(mu, nu).has_value();
    const auto violation = find_convex_violation(mu, nu);
    bool searched = !violation.has_value();
    if (violation) searched = cfm_check(mu, nu, {*violation});
    feasible += aff;
    disagree += aff != searched;
  }
  return {disagree == 0 && feasible > 0 && feasible < 50,
          fmt("50 instances, %d majorized, %d disagreements", feasible, disagree)};
}

Outcome c7() {
  std::mt19937_64 rng(107);
  std::uniform_int_distribution<int> coord(0, 3), count(1, 3), frac(0, 4);
  int hypothesis_true = 0, checked = 0, counterexamples = 0;
  for (int t = 0; t < 50; ++t) {
    std::vector<ConeSample<Rational>> cones(2);
    for (auto& c : cones) {
      const int m = count(rng);
      for (int s = 0; s < m; ++s) {
        std::vector<Rational> h(3);
        for (auto& v : h) v = coord(rng);
        if (h[0] == 0 && h[1] == 0 && h[2] == 0) h[t % 3] = 1;
        c.generators.push_back(h);
      }
    }
    std::vector<Rational> f(3), g(3);
    for (auto& v : g) v = coord(rng);
    for (std::size_t i = 0; i < 3; ++i) f[i] = t % 2 == 0 ? g[i] + coord(rng) : Rational(coord(rng));
    if (!decomposition_hypothesis(f, g, cones)) continue;
    ++hypothesis_true;
    for (int k = 0; k < 20; ++k) {
      std::vector<std::vector<Rational>> parts(2, std::vector<Rational>(3));
      for (std::size_t i = 0; i < 3; ++i) {
        parts[0][i] = g[i] * Rational(frac(rng), 4);
        parts[1][i] = g[i] - parts[0][i];
      }
      ++checked;
      counterexamples += !decomposition_complete(f, parts, cones).has_value();
    }
  }
  return {counterexamples == 0 && hypothesis_true > 0,
          fmt("%d of 50 instances satisfy the hypothesis, %d decompositions, %d counterexamples", hypothesis_true,
              checked, counterexamples)};
}

Outcome c8() {
  const DirectionGrid g(360);
  const ConvexFigure disk = ConvexFigure::disk({0, 0}, 1.0, 360);
  const auto s = pareto_vector_isoperimetric({disk}, {1.0}, kPi);
  const double area = s.body.area();
  const double ib = integral_breadth(s.body, g);
  const auto scan = scan_vector_isoperimetric(s.body, {disk}, g, 1000, 8);
  const bool ok = std::abs(area - kPi) <= 1e-9 && std::abs(ib - kPi) <= 0.002 * kPi && scan.best_improvement <= 1e-6;
  return {ok, fmt("area %.9f, integral breadth %.6f, scan %zu/%zu feasible, best %.3g", area, ib, scan.feasible,
                  scan.samples, scan.best_improvement)};
}

Outcome c9() {
  const DirectionGrid g(720);
  const double b_tri = integral_breadth(equilateral_triangle(1.0), g);
  const double b_disk = kPi / std::sqrt(3.0);
  bool ok = true;
  std::string detail;
  for (int k = 1; k <= 3; ++k) {
    const double B = b_tri + (b_disk - b_tri) * k / 4.0;
    const auto s = solve_external_urysohn_triangle(1.0, B, g);
    const auto rep = verify_external_optimality(s.body, s.container, s.certificate, g, 1e-5);
    double worst = 0.0;
    for (const auto& c : rep.conditions) worst = std::max(worst, std::abs(c.residual));
    const auto scan = scan_external_urysohn(s.body, s.container, g, 1000, 9 + k);
    ok = ok && rep.passed() && worst <= 1e-5 && scan.best_improvement <= 1e-6;
    detail += fmt("%sB=%.4f alpha=%.4f %s max residual %.2g, scan best %.2g", k == 1 ? "" : "; ", B,
                  s.certificate.alpha, rep.passed() ? "verified" : "NOT verified", worst, scan.best_improvement);
  }
  return {ok, detail};
}

Outcome c10() {
  const DirectionGrid g(360);
  const double r = 0.7, l = 2.0;
  const ConvexFigure st = stadium(r, l, g);
  const ConvexFigure box = dido::testing::box(-20, -20, 20, 20);
  const FlatteningCertificate cert{r, l, {}, Direction(kPi / 2)};
  const auto rep = verify_flattening_optimality(st, box, cert, g, 1e-12);
  const double dec = rep.find("decomposition")->residual;
  const bool flat_ok = rep.passed() && dec <= 1e-12;

  const auto sphere = rotate_profile(ConvexFigure::disk({0, 0}, 1.0, 360), Direction(kPi / 2));
  const double vol = rotation_volume(sphere);
  const double rel = std::abs(vol - 4.0 * kPi / 3.0) / (4.0 * kPi / 3.0);
  const bool sphere_ok = rel <= 0.005;

  const auto rotated = rotate_profile(stadium(1.0, 2.0, g), Direction(kPi / 2));
  const auto scan = scan_rotational(rotated, g, 500, 10);
  const bool scan_ok = scan.best_improvement <= 1e-6;
  return {flat_ok && sphere_ok && scan_ok,
          fmt("stadium %s (decomposition residual %.2g); sphere volume %.6f (rel err %.2g); rotational scan "
              "%zu/%zu feasible, best dominance %.3g%s",
              flat_ok ? "verified" : "NOT verified", dec, vol, rel, scan.feasible, scan.samples,
              scan.best_improvement, scan_ok ? "" : " [dominating body found]")};
}

std::vector<std::string> g_other_clis;

std::string capture(const std::string& cli, const std::string& args) {
  const std::string cmd = "cd '" DIDO_SOURCE_DIR "' && '" + cli + "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "<popen failed>";
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
  const int status = pclose(p);
  if (status != 0) out += "<exit " + std::to_string(status) + ">";
  return out;
}

Outcome c11() {
  std::ifstream cases(DIDO_SOURCE_DIR "/tests/golden/cases.txt");
  if (!cases) return {false, "cannot read golden cases"};
  std::vector<std::string> clis{DIDO_CLI_PATH};
  clis.insert(clis.end(), g_other_clis.begin(), g_other_clis.end());
  int fixtures = 0, mismatches = 0;
  std::string first_bad;
  for (std::string line; std::getline(cases, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto sp = line.find(' ');
    const std::string name = line.substr(0, sp), args = line.substr(sp + 1);
    std::ifstream f(fs::path(DIDO_SOURCE_DIR) / "tests/golden" / name, std::ios::binary);
    std::ostringstream golden;
    golden << f.rdbuf();
    ++fixtures;
    for (const auto& cli : clis) {
      for (int run = 0; run < 2; ++run) {
        if (capture(cli, args) != golden.str()) {
          ++mismatches;
          if (first_bad.empty()) first_bad = name + " via " + cli;
        }
      }
    }
  }
  return {fixtures > 0 && mismatches == 0,
          fmt("%d fixtures x %zu builds x 2 runs, %d mismatches%s%s", fixtures, clis.size(), mismatches,
              first_bad.empty() ? "" : ", first: ", first_bad.c_str())};
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; i += 2) {
    if (std::string(argv[i]) == "--also") g_other_clis.push_back(argv[i + 1]);
  }
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"mixed-area symmetry", c1},
      {"Minkowski's first inequality", c2},
      {"Blaschke sum equals Minkowski sum", c3},
      {"linear majorization iff translate containment", c4},
      {"Reshetnyak gap nonnegative", c5},
      {"affine majorization vs convex-test search", c6},
      {"decomposition hypothesis implies decompositions", c7},
      {"classical isoperimetric recovery", c8},
      {"triangle external Urysohn optimum", c9},
      {"flattening stadium, sphere, rotational scan", c10},
      {"CLI determinism against goldens", c11},
  };
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool known = !o.pass && kKnownFailures.count(id) > 0;
    if (!o.pass && !known) ++unexpected;
    std::printf("criterion %2d: %s  %s: %s (%.1fs)%s\n", id, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str(), secs, known ? " [known failure]" : "");
    std::fflush(stdout);
  }
  return unexpected == 0 ? 0 : 1;
}
