#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "anglebis/corpus.hpp"
#include "anglebis/highprec.hpp"
#include "anglebis/triangle.hpp"
#include "oracles.hpp"

using namespace anglebis;
using doctest::Approx;

namespace {
double rel(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }
const double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("degenerate and invalid triangles are rejected") {
  CHECK_THROWS_AS(make_triangle(1.0, 1.0, 2.0), InvalidTriangle);
  CHECK_THROWS_AS(make_triangle(1.0, 2.0, 3.0001), InvalidTriangle);
  CHECK_THROWS_AS(make_triangle(0.0, 1.0, 1.0), InvalidTriangle);
  CHECK_THROWS_AS(make_triangle(-1.0, 1.0, 1.0), InvalidTriangle);
  CHECK_NOTHROW(make_triangle(1.0, 1.0, 1.999));
}

TEST_CASE("Heron") {
  CHECK(area_heron(make_triangle(3.0, 4.0, 5.0)) == 6.0);
  CHECK(area_heron(make_triangle(2.0, 2.0, 2.0)) == Approx(std::sqrt(3.0)).epsilon(1e-15));
  // Sliver: the naive formula cancels, Kahan's ordering does not.
  double oracle = oracle::heron_high_precision(1.0, 1.0, 1.999, 50);
  CHECK(rel(area_heron(make_triangle(1.0, 1.0, 1.999)), oracle) < 1e-14);
}

TEST_CASE("medians") {
  auto m = medians(make_triangle(3.0, 4.0, 5.0));
  CHECK(m[2] == 2.5);
  CHECK(m[0] == Approx(0.5 * std::sqrt(73.0)).epsilon(1e-15));
  for (double x : medians(make_triangle(2.0, 2.0, 2.0))) CHECK(x == Approx(std::sqrt(3.0)).epsilon(1e-15));
}

TEST_CASE("area from medians") {
  CHECK(area_from_medians(medians(make_triangle(3.0, 4.0, 5.0))) == Approx(6.0).epsilon(1e-15));
  double s3 = std::sqrt(3.0);
  CHECK(area_from_medians(std::array<double, 3>{s3, s3, s3}) == Approx(s3).epsilon(1e-15));
  auto t = make_triangle(5.0, 6.0, 7.0);
  CHECK(rel(area_from_medians(medians(t)), area_heron(t)) < 1e-14);
  CHECK_THROWS_AS(area_from_medians(std::array<double, 3>{1, 1, 3}), InvalidMedians);
}

TEST_CASE("altitudes and their area formula") {
  auto t = make_triangle(3.0, 4.0, 5.0);
  auto h = altitudes(t);
  CHECK(h[2] == Approx(12.0 / 5.0).epsilon(1e-15));
  CHECK(area_from_altitudes(h) == Approx(6.0).epsilon(1e-14));
  auto t2 = make_triangle(7.0, 8.0, 9.0);
  CHECK(rel(area_from_altitudes(altitudes(t2)), area_heron(t2)) < 1e-14);
  CHECK_THROWS_AS(area_from_altitudes(std::array<double, 3>{1, 1, 0.25}), InvalidAltitudes);
  CHECK_THROWS_AS(area_from_altitudes(std::array<double, 3>{1, -1, 1}), InvalidAltitudes);
}

TEST_CASE("angles") {
  auto a = angles(make_triangle(3.0, 4.0, 5.0));
  CHECK(a[2] == Approx(kPi / 2).epsilon(1e-15));
  for (double x : angles(make_triangle(2.0, 2.0, 2.0))) CHECK(x == Approx(kPi / 3).epsilon(1e-15));
  // Law of sines as an independent residual: a / sin(alpha) is constant.
  auto t = make_triangle(4.0, 5.0, 6.0);
  auto g = angles(t);
  double k = t.a() / std::sin(g[0]);
  CHECK(rel(t.b() / std::sin(g[1]), k) < 1e-14);
  CHECK(rel(t.c() / std::sin(g[2]), k) < 1e-14);
  CHECK(std::abs(g[0] + g[1] + g[2] - kPi) < 1e-12 * kPi);
}

TEST_CASE("bisectors") {
  auto t = make_triangle(3.0, 4.0, 5.0);
  auto l = bisectors(t);
  CHECK(l[2] == Approx(12.0 * std::sqrt(2.0) / 7.0).epsilon(1e-14));
  CHECK(l[0] == Approx(2.0 / 9.0 * std::sqrt(360.0)).epsilon(1e-14));
  for (double x : bisectors(make_triangle(2.0, 2.0, 2.0))) CHECK(x == Approx(std::sqrt(3.0)).epsilon(1e-15));
}

TEST_CASE("inradius and symmetric invariants") {
  CHECK(inradius(make_triangle(3.0, 4.0, 5.0)) == Approx(1.0).epsilon(1e-15));
  auto inv = symmetric_invariants(Rational(1), Rational(2), Rational(3));
  CHECK(inv.a2 == Rational(Integer(49), Integer(36)));
  CHECK(inv.a3 == Rational(Integer(1), Integer(6)));
  CHECK(inv.a4 == Rational(Integer(7), Integer(18)));
  auto eq = symmetric_invariants(Rational(1), Rational(1), Rational(1));
  CHECK(eq.a2 == Rational(3));
  CHECK(eq.a3 == Rational(1));
  CHECK(eq.a4 == Rational(3));
  CHECK_THROWS_AS(symmetric_invariants(Rational(0), Rational(1), Rational(1)), NonPositiveInput);
  CHECK_THROWS_AS(symmetric_invariants(1.0, -2.0, 1.0), NonPositiveInput);
}

TEST_CASE("incircle relations hold numerically") {
  for (auto sides : {std::array<double, 3>{2, 2, 2}, {3, 4, 5}, {4, 5, 6}}) {
    auto r = vrf_residuals(make_triangle(sides[0], sides[1], sides[2]));
    CHECK(r[0] <= 1e-10);
    CHECK(r[1] <= 1e-10);
  }
}

TEST_CASE("corpus: cross-formula agreement, bisector routes, invariants") {
  for (const auto& t : random_triangles(1000, 99)) {
    double s = area_heron(t);
    CHECK(rel(area_from_medians(medians(t)), s) < 1e-11);
    CHECK(rel(area_from_altitudes(altitudes(t)), s) < 1e-11);
    auto angle_form = bisectors(t), side_form = bisectors_side_form(t);
    for (int i = 0; i < 3; ++i) CHECK(rel(angle_form[i], side_form[i]) < 1e-12);
    auto m = metrics(t);
    CHECK(std::abs(m.angles[0] + m.angles[1] + m.angles[2] - kPi) < 1e-12 * kPi);
    CHECK(rel(m.semiperimeter * m.inradius, m.area) < 1e-14);
    auto inv = symmetric_invariants(m.bisectors[0], m.bisectors[1], m.bisectors[2]);
    CHECK(inv.a2 * inv.a2 >= 3 * inv.a4 * (1 - 1e-14));
  }
}

TEST_CASE("scaling covariance") {
  auto base = make_triangle(4.0, 5.0, 6.0);
  auto m0 = metrics(base);
  auto inv0 = symmetric_invariants(m0.bisectors[0], m0.bisectors[1], m0.bisectors[2]);
  for (double k : {1.0 / 3.0, 2.0, 10.0}) {
    auto m = metrics(make_triangle(4.0 * k, 5.0 * k, 6.0 * k));
    CHECK(rel(m.semiperimeter, k * m0.semiperimeter) < 1e-14);
    CHECK(rel(m.inradius, k * m0.inradius) < 1e-14);
    CHECK(rel(m.area, k * k * m0.area) < 1e-14);
    for (int i = 0; i < 3; ++i) {
      CHECK(rel(m.medians[i], k * m0.medians[i]) < 1e-14);
      CHECK(rel(m.altitudes[i], k * m0.altitudes[i]) < 1e-14);
      CHECK(rel(m.bisectors[i], k * m0.bisectors[i]) < 1e-14);
      CHECK(rel(m.angles[i], m0.angles[i]) < 1e-14);
    }
    auto inv = symmetric_invariants(m.bisectors[0], m.bisectors[1], m.bisectors[2]);
    CHECK(rel(inv.a2, inv0.a2 / (k * k)) < 1e-13);
    CHECK(rel(inv.a3, inv0.a3 / (k * k * k)) < 1e-13);
    CHECK(rel(inv.a4, inv0.a4 / (k * k * k * k)) < 1e-13);
  }
}

TEST_CASE("high-precision geometry agrees with double") {
  PrecisionScope scope(40);
  auto t = make_triangle(HighReal(4), HighReal(5), HighReal(6));
  auto m = metrics(t);
  auto d = metrics(make_triangle(4.0, 5.0, 6.0));
  CHECK(rel(static_cast<double>(m.area), d.area) < 1e-15);
  CHECK(rel(static_cast<double>(m.bisectors[1]), d.bisectors[1]) < 1e-15);
  auto res = vrf_residuals(t);
  CHECK(static_cast<double>(res[0]) < 1e-35);
  CHECK(static_cast<double>(res[1]) < 1e-35);
}
