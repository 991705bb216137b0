#include "doctest.h"
#include "support.hpp"

using namespace kecert;
using namespace kecert::testing;

namespace {

Polynomial X(int i, int vars = 3) { return Polynomial::variable(field(), vars, i); }

// Equal up to a nonzero scalar.
bool proportional(const Polynomial& a, const Polynomial& b) { return a.monic() == b.monic(); }

}  // namespace

TEST_CASE("polynomial arithmetic examples") {
  CHECK(X(0) * X(1) == poly("X0*X1"));
  CHECK((X(0) + X(1)).pow(2) == poly("X0^2+2*X0*X1+X1^2"));
  Polynomial f = poly("3*X0^2*X2-z*X1^3+X2^3");
  CHECK((f + (-f)).is_zero());
  CHECK_THROWS_AS((void)(X(0, 3) + X(0, 4)), Error);
}

TEST_CASE("polynomial text round-trips") {
  auto k = field();
  for (const char* s : {"X0", "X0^2*X1-X2^3", "(1+z^3)*X0*X1+1/2*X2^2", "-z^2*X0^3+X1^2*X2"}) {
    Polynomial f = parse_polynomial(s, k, 3);
    CHECK(parse_polynomial(f.to_string(), k, 3) == f);
  }
  Random rng(5);
  for (int t = 0; t < 30; ++t) {
    Polynomial f = rng.form(k, 4, 3, 5);
    CHECK(parse_polynomial(f.to_string(), k, 4) == f);
  }
  CHECK_THROWS_AS(parse_polynomial("X0+", k, 3), Error);
  CHECK_THROWS_AS(parse_polynomial("X3", k, 3), Error);
}

TEST_CASE("substituting map components") {
  auto cr = standard_cremona(field()).components();
  CHECK(substitute_map(X(0), cr) == poly("X1*X2"));
  CHECK(substitute_map(poly("X0*X1-X2^2"), cr) == poly("X0*X1*X2^2-X0^2*X1^2"));
  Polynomial f = poly("X0^3-2*X1*X2^2+z*X0*X1*X2");
  CHECK(substitute_map(f, {X(0), X(1), X(2)}) == f);
  CHECK_THROWS_AS(substitute_map(f, {X(0), X(1)}), Error);
  CHECK_THROWS_AS(substitute_map(f, {X(0), X(1), poly("X2^2")}), Error);
}

TEST_CASE("gcd examples") {
  CHECK(gcd_homogeneous(poly("X0*X1"), poly("X0*X2")) == X(0));
  Polynomial f = poly("2*X0^2*X1-4*X1^3+X0*X2^2");
  CHECK(gcd_homogeneous(f, f) == f.monic());
  CHECK(gcd_homogeneous(Polynomial(field(), 3), f) == f.monic());
}

TEST_CASE("the fixed cubic of the cubic involution") {
  auto k = field();
  auto pts = standard_points(k, 5);
  PolynomialMap s1 = sigma(pts, 1);
  Polynomial c = gcd_all(s1.cross_polynomials());
  REQUIRE(c.total_degree() == 3);
  for (const auto& cp : s1.cross_polynomials()) CHECK(exact_divide(cp, c).has_value());
  // The cubic passes through all five points (it is the anticanonical curve fixed by the involution).
  for (const auto& p : pts) CHECK(c.evaluate(p.coords()).is_zero());
  CHECK(is_smooth_plane_curve(c).smooth);

  // Invariance under Cr_45: C o Cr_45 = C * (product of the contracted lines).
  PolynomialMap cr45 = cr_pair_swap(pts, 4, 5);
  Polynomial pulled = substitute_map(c, cr45.components());
  auto quotient = divides_as_factor(c, pulled);
  REQUIRE(quotient.has_value());
  CHECK(proportional(*quotient, poly("X0*X1*X2")));
}

TEST_CASE("resultant examples") {
  auto k = field();
  Scalar a = q(k, 2), b = z(k, 3);
  Polynomial fa = X(1) - X(0) * a, fb = X(1) - X(0) * b;
  Polynomial r = resultant_eliminate(fa, fb, 1);
  // Standard Sylvester sign: Res(x - a, x - b) = a - b, and swapping the arguments gives b - a.
  CHECK(r == X(0) * (a - b));
  CHECK(resultant_eliminate(fb, fa, 1) == X(0) * (b - a));

  Polynomial f = poly("X1^3-2*X0*X1^2+z*X0^3");
  Scalar c = q(k, 3);
  Polynomial lin = X(1) - X(0) * c;
  // Res(x - c, f) = f(c) in the chart X0 = 1.
  CHECK(resultant_eliminate(lin, f, 1).evaluate({q(k, 1), Scalar::zero(k), Scalar::zero(k)}) ==
        f.evaluate({q(k, 1), c, Scalar::zero(k)}));

  CHECK_THROWS_AS(resultant_eliminate(poly("X0^2"), poly("X0*X1"), 2), Error);
}

TEST_CASE("eliminating a variable locates the fixed points of the 4-cycle") {
  auto k = field();
  PolynomialMap m = PolynomialMap::from_matrix({{q(k, 0), q(k, 0), q(k, 1)}, {q(k, -1), q(k, 0), q(k, 1)}, {q(k, 0), q(k, -1), q(k, 1)}});
  auto cross = m.cross_polynomials();
  Polynomial r = resultant_eliminate(cross[0], cross[1], 2);
  REQUIRE(r.total_degree() > 0);
  Scalar i = z(k, 3);
  for (const auto& x1 : {q(k, 0), q(k, 1) + i, q(k, 1) - i}) CHECK(r.evaluate({q(k, 1), x1, q(k, 0)}).is_zero());
}

TEST_CASE("divisibility examples") {
  CHECK(divides_as_factor(X(0), poly("X0*X1")) == X(1));
  CHECK(divides_as_factor(poly("X0+X1"), poly("X0^2-X1^2")) == poly("X0-X1"));
  CHECK_FALSE(divides_as_factor(poly("X0+X1"), poly("X0^2+X1^2")).has_value());
  CHECK_FALSE(divides_as_factor(poly("X0^2"), poly("X0")).has_value());
}

TEST_CASE("univariate roots in the field") {
  auto k4 = field(4);
  UnivariatePoly p(k4, {q(k4, 1), q(k4, 0), q(k4, 1)});
  auto r = univariate_roots_in_field(p);
  CHECK_FALSE(r.unresolved);
  REQUIRE(r.roots.size() == 2);
  CHECK(((r.roots[0].first == z(k4, 1) && r.roots[1].first == -z(k4, 1)) ||
         (r.roots[1].first == z(k4, 1) && r.roots[0].first == -z(k4, 1))));

  UnivariatePoly p2(k4, {q(k4, -2), q(k4, 0), q(k4, 1)});
  auto r2 = univariate_roots_in_field(p2);
  CHECK(r2.unresolved);
  CHECK(r2.roots.empty());

  auto k = field();
  Matrix m{{q(k, 0), q(k, 0), q(k, 1)}, {q(k, -1), q(k, 0), q(k, 1)}, {q(k, 0), q(k, -1), q(k, 1)}};
  auto r3 = univariate_roots_in_field(UnivariatePoly(k, characteristic_polynomial(m)));
  CHECK_FALSE(r3.unresolved);
  CHECK(r3.roots.size() == 3);
  for (const auto& [root, mult] : r3.roots) CHECK(mult == 1);

  // multiplicities and mixed factors
  auto lin = [&](const Scalar& s) { return UnivariatePoly::linear(s); };
  UnivariatePoly big = lin(z(k, 1)) * lin(z(k, 1)) * lin(q(k, -3, 2)) * lin(z(k, 4) * Rational(5));
  auto r4 = univariate_roots_in_field(big);
  CHECK_FALSE(r4.unresolved);
  CHECK(r4.roots.size() == 3);

  // the fifth cyclotomic polynomial splits over Q(zeta_5)
  auto k5 = field(5);
  UnivariatePoly phi5(k5, {q(k5, 1), q(k5, 1), q(k5, 1), q(k5, 1), q(k5, 1)});
  auto r5 = univariate_roots_in_field(phi5);
  CHECK_FALSE(r5.unresolved);
  CHECK(r5.roots.size() == 4);
}

TEST_CASE("rational roots of integer polynomials") {
  // (2x - 3)(x + 5)(x^2 + 1)
  auto roots = rational_roots({-15, 7, -13, 7, 2});
  CHECK(roots == std::vector<Rational>{Rational(-5), Rational(3, 2)});
}

TEST_CASE("smoothness of plane curves") {
  CHECK(is_smooth_plane_curve(poly("X0^3+X1^3+X2^3")).smooth);
  CHECK_FALSE(is_smooth_plane_curve(poly("X0*X1*X2")).smooth);
  CHECK_FALSE(is_smooth_plane_curve(poly("X1^2*X2-X0^3-X0^2*X2")).smooth);  // nodal cubic
  CHECK(is_smooth_plane_curve(poly("X0^2+X1^2+X2^2")).smooth);
  auto sq = is_smooth_plane_curve(poly("X0^2*X1"));
  CHECK_FALSE(sq.smooth);
  CHECK_FALSE(sq.squarefree);
}

TEST_CASE("smoothness of cubic surfaces") {
  CHECK(is_smooth_surface(poly("X0^3+X1^3+X2^3+X3^3", 4)).smooth);
  CHECK(is_smooth_surface(poly("X0^2*X1+X2^2*X0+X3^2*X2+X1^2*X3", 4)).smooth);
  CHECK_FALSE(is_smooth_surface(poly("X0*X1*X2+X3^3", 4)).smooth);
}

TEST_CASE("Euler identity for random forms" * doctest::test_suite("properties")) {
  Random rng(11);
  auto k = field();
  for (int t = 0; t < 40; ++t) {
    int vars = static_cast<int>(rng.integer(3, 4));
    int d = static_cast<int>(rng.integer(1, 5));
    Polynomial f = rng.form(k, vars, d, 6);
    Polynomial s(k, vars);
    for (int i = 0; i < vars; ++i) s += Polynomial::variable(k, vars, i) * f.derivative(i);
    CHECK(s == f * q(k, d));
  }
}

TEST_CASE("substitution is functorial" * doctest::test_suite("properties")) {
  Random rng(12);
  auto k = field();
  for (int t = 0; t < 15; ++t) {
    Polynomial f = rng.form(k, 3, 2, 3);
    std::vector<Polynomial> g, h;
    for (int i = 0; i < 3; ++i) g.push_back(rng.form(k, 3, 2, 3));
    for (int i = 0; i < 3; ++i) h.push_back(rng.form(k, 3, 1, 3));
    std::vector<Polynomial> gh;
    for (const auto& gi : g) gh.push_back(substitute_map(gi, h));
    CHECK(substitute_map(substitute_map(f, g), h) == substitute_map(f, gh));
  }
}

TEST_CASE("gcd pulls out common factors" * doctest::test_suite("properties")) {
  Random rng(13);
  auto k = field();
  for (int t = 0; t < 25; ++t) {
    Polynomial f = rng.form(k, 3, static_cast<int>(rng.integer(1, 3)));
    Polynomial g = rng.form(k, 3, static_cast<int>(rng.integer(1, 3)));
    Polynomial h = rng.form(k, 3, static_cast<int>(rng.integer(1, 2)));
    CHECK(gcd_homogeneous(f * h, g * h) == (h * gcd_homogeneous(f, g)).monic());
  }
}

TEST_CASE("resultant is antisymmetric" * doctest::test_suite("properties")) {
  Random rng(14);
  auto k = field();
  for (int t = 0; t < 25; ++t) {
    Polynomial f = rng.form(k, 3, static_cast<int>(rng.integer(1, 3))) + poly("X2") * poly("X2");
    Polynomial g = rng.form(k, 3, 2) + poly("X2^2");
    f = f.homogeneous_part(f.total_degree());
    if (!f.is_homogeneous() || f.degree_in(2) == 0) continue;
    Polynomial a = resultant_eliminate(f, g, 2), b = resultant_eliminate(g, f, 2);
    CHECK((a == b || a == -b));
  }
}

TEST_CASE("exact division recovers the cofactor" * doctest::test_suite("properties")) {
  Random rng(15);
  auto k = field();
  for (int t = 0; t < 30; ++t) {
    Polynomial f = rng.form(k, 3, static_cast<int>(rng.integer(1, 3)));
    Polynomial qf = rng.form(k, 3, static_cast<int>(rng.integer(0, 3)));
    auto got = divides_as_factor(f, f * qf);
    REQUIRE(got.has_value());
    CHECK(*got == qf);
  }
}
