#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace polyfourier;
using namespace testutil;

namespace {

ParametricCurve unit_circle_curve() {
  return trig_circle_curve(make_circle(cvec2(0, 0), Complex(1, 0)));
}

ParametricCurve line_curve(double alpha = 1.0, double beta = 0.0) {
  // t -> (alpha t + beta, 2(alpha t + beta) + 1)
  return rational_curve({{{beta, alpha}, {}}, {{2 * beta + 1, 2 * alpha}, {}}});
}

ParametricCurve parabola_curve(double alpha = 1.0, double beta = 0.0) {
  return rational_curve({{{beta, alpha}, {}}, {{beta * beta, 2 * alpha * beta, alpha * alpha}, {}}});
}

ParametricCurve twisted_cubic_curve() {
  return rational_curve({{{0, 1}, {}}, {{0, 0, 1}, {}}, {{0, 0, 0, 1}, {}}});
}

}  // namespace

TEST_CASE("circle parametrizations hit pinned points") {
  auto C = make_circle(cvec2(0, 0), Complex(1, 0));
  REQUIRE((circle_point_trig(C, Complex(0, 0)) - cvec2(1, 0)).norm() < 1e-15);
  CVector at_i = circle_point_trig(C, i_unit);
  REQUIRE(std::abs(at_i[0] - std::cosh(1.0)) < 1e-15);
  REQUIRE(std::abs(at_i[1] - Complex(0, 1) * std::sinh(1.0)) < 1e-15);

  auto C2 = make_circle(cvec2(1, 2), Complex(0, 2));
  CVector p = circle_point_trig(C2, Complex(pi / 2, 0));
  REQUIRE(std::abs(p[0] - Complex(1, 0)) < 1e-15);
  REQUIRE(std::abs(p[1] - Complex(2, 2)) < 1e-15);

  REQUIRE((circle_point_rational(C, Complex(0, 0)) - cvec2(1, 0)).norm() < 1e-15);
  REQUIRE((circle_point_rational(C, Complex(1, 0)) - cvec2(0, 1)).norm() < 1e-15);
  REQUIRE_THROWS_AS(circle_point_rational(C, i_unit), PoleAtParameter);
  REQUIRE_THROWS_AS(circle_point_rational(C, -i_unit), PoleAtParameter);

  REQUIRE_THROWS_AS(make_circle(cvec2(0, 0), Complex(0, 0)), DegenerateInput);
  REQUIRE_THROWS_AS(make_circle(cvec2(0, 0), Complex(1, 0), 0, 0), DegenerateInput);
}

TEST_CASE("both parametrizations stay on the complex sphere") {
  auto C = make_circle(cvec2(Complex(0.3, -0.1), Complex(1.5, 0.2)), Complex(0.8, 0.4));
  detail::Rng rng(31);
  for (int k = 0; k < 50; ++k) {
    Complex t(rng.uniform(-2, 2), rng.uniform(-2, 2));
    REQUIRE(std::abs(sphere_membership(C.center, C.radius, circle_point_trig(C, t))) < 1e-10);
    if (std::abs(t - i_unit) > 0.2 && std::abs(t + i_unit) > 0.2)
      REQUIRE(std::abs(sphere_membership(C.center, C.radius, circle_point_rational(C, t))) < 1e-10);
  }
  REQUIRE(std::abs(sphere_membership(C.center, C.radius, C.center) + C.radius * C.radius) < 1e-14);

  auto C3 = make_circle(cvec3(1, -2, 0.5), Complex(2, 0), 0, 2);
  CVector q = circle_point_trig(C3, Complex(0.7, 0.3));
  REQUIRE(std::abs(sphere_membership(C3.center, C3.radius, q)) < 1e-10);
  REQUIRE(std::abs(q[1] - Complex(-2, 0)) < 1e-15);  // off-plane coordinate is fixed
}

TEST_CASE("trig and rational parametrizations agree via the half-angle substitution") {
  auto C = make_circle(cvec2(0.2, -0.4), Complex(1.3, 0.0));
  detail::Rng rng(37);
  for (int k = 0; k < 20; ++k) {
    double t = rng.uniform(-3, 3);
    if (std::abs(std::abs(t) - pi) < 0.1) continue;
    CVector a = circle_point_trig(C, Complex(t, 0));
    CVector b = circle_point_rational(C, Complex(std::tan(t / 2), 0));
    REQUIRE((a - b).norm() < 1e-10);
  }
}

TEST_CASE("affine hull containment and its normal") {
  auto v = affine_hull_containment(line_curve(), 64);
  REQUIRE(v.contained);
  REQUIRE(std::abs(v.normal.norm() - 1.0) < 1e-12);
  REQUIRE(std::abs(v.normal[0] + 2.0 * v.normal[1]) < 1e-8);  // normal _|_ (1, 2)

  REQUIRE_FALSE(affine_hull_containment(parabola_curve(), 64).contained);
  REQUIRE_FALSE(affine_hull_containment(unit_circle_curve(), 64).contained);
  REQUIRE_FALSE(affine_hull_containment(rational_circle_curve(make_circle(cvec2(0, 0), Complex(1, 0))), 64).contained);
  REQUIRE_FALSE(affine_hull_containment(twisted_cubic_curve(), 64).contained);
  REQUIRE_FALSE(affine_hull_containment(builtin_curve("t2_sin"), 64).contained);

  REQUIRE_THROWS_AS(affine_hull_containment(line_curve(), 7), InsufficientSamples);
}

TEST_CASE("containment verdicts are reparametrization invariant") {
  detail::Rng rng(41);
  for (int k = 0; k < 20; ++k) {
    double alpha = rng.uniform(0.5, 2.0), beta = rng.uniform(-1, 1);
    auto base = affine_hull_containment(line_curve(), 64);
    auto re = affine_hull_containment(line_curve(alpha, beta), 64);
    REQUIRE(base.contained == re.contained);
    Complex cross = base.normal[0] * re.normal[1] - base.normal[1] * re.normal[0];
    REQUIRE(std::abs(cross) < 1e-8);
    REQUIRE(affine_hull_containment(parabola_curve(alpha, beta), 64).contained == false);
  }
}

TEST_CASE("vanishing polynomial rank separates algebraic from generic curves") {
  REQUIRE(vanishing_polynomial_rank(parabola_curve(), 2, 25) < 1e-10);
  REQUIRE(vanishing_polynomial_rank(unit_circle_curve(), 2, 25) < 1e-10);
  REQUIRE(vanishing_polynomial_rank(line_curve(), 1, 12) < 1e-10);

  // y = x^3 + x + 1 admits no vanishing polynomial of degree <= 2
  auto cubic_graph = rational_curve({{{0, 1}, {}}, {{1, 1, 0, 1}, {}}});
  REQUIRE(vanishing_polynomial_rank(cubic_graph, 2, 25) > 1e-6);

  // degree-5 monomials on (t^2, sin t) are numerically dependent over [0,1]
  REQUIRE(vanishing_polynomial_rank(builtin_curve("t2_sin"), 5, 42) < 1e-12);

  REQUIRE_THROWS_AS(vanishing_polynomial_rank(parabola_curve(), 2, 11), InsufficientSamples);
  REQUIRE_THROWS_AS(vanishing_polynomial_rank(twisted_cubic_curve(), 2, 25), DegenerateInput);
}

TEST_CASE("builtin curve works and unknown names are rejected") {
  auto g = builtin_curve("t2_sin");
  REQUIRE(g.rho == 1.0);
  REQUIRE(curve_param_span(g) == 1.0);
  CVector p0 = curve_point(g, Complex(0, 0));
  REQUIRE(p0.norm() < 1e-15);
  CVector p1 = curve_point(g, Complex(pi / 2, 0));
  REQUIRE(std::abs(p1[0] - pi * pi / 4.0) < 1e-14);
  REQUIRE(std::abs(p1[1] - 1.0) < 1e-14);
  REQUIRE_THROWS_AS(builtin_curve("helix"), UnknownName);

  REQUIRE(curve_param_span(unit_circle_curve()) == two_pi);
  REQUIRE(curve_param_span(line_curve()) == 1.0);
}

TEST_CASE("rational component extraction reproduces the circle") {
  auto g = rational_circle_curve(make_circle(cvec3(Complex(0.5, 0.1), 2.0, -1.0), Complex(1.5, -0.3), 0, 1));
  auto comps = rational_components(g);
  REQUIRE(comps.size() == 3);
  REQUIRE(comps[2].num.size() == 1);  // off-plane coordinate is constant
  detail::Rng rng(43);
  for (int k = 0; k < 20; ++k) {
    Complex t(rng.uniform(-2, 2), rng.uniform(-2, 2));
    if (std::abs(t * t + 1.0) < 0.05) continue;
    CVector direct = circle_point_rational(g.circle, t);
    for (int j = 0; j < 3; ++j) {
      Complex num = detail::poly_eval(comps[j].num, t);
      Complex den = comps[j].den.empty() ? Complex(1, 0) : detail::poly_eval(comps[j].den, t);
      REQUIRE(std::abs(num / den - direct[j]) < 1e-12);
    }
  }
  REQUIRE_THROWS_AS(rational_components(unit_circle_curve()), WrongCurveKind);
}

TEST_CASE("polynomial long division") {
  // (t^2 + 1)(t - 3) + 5
  std::vector<Complex> a{Complex(-3 + 5, 0), Complex(1, 0), Complex(-3, 0), Complex(1, 0)};
  std::vector<Complex> b{Complex(1, 0), Complex(0, 0), Complex(1, 0)};
  std::vector<Complex> q, r;
  detail::poly_divmod(a, b, q, r);
  REQUIRE(detail::poly_degree(q, 0.0) == 1);
  REQUIRE(std::abs(q[0] - Complex(-3, 0)) < 1e-14);
  REQUIRE(std::abs(q[1] - Complex(1, 0)) < 1e-14);
  REQUIRE(detail::poly_degree(r, 1e-14) == 0);
  REQUIRE(std::abs(r[0] - Complex(5, 0)) < 1e-14);
}
