#include <algorithm>

#include "doctest.h"
#include "support.hpp"

using namespace kecert;
using namespace kecert::testing;

namespace {

Matrix int_matrix(const FieldPtr& k, std::initializer_list<std::initializer_list<long>> rows) {
  Matrix m;
  for (auto row : rows) {
    Vector v;
    for (long x : row) v.push_back(q(k, x));
    m.push_back(v);
  }
  return m;
}

std::vector<ProjectivePoint> plane_points(const FixedLocus& fl, bool blown_up) {
  std::vector<ProjectivePoint> out;
  for (const auto& p : fl.plane_points)
    if (p.blown_up == blown_up) out.push_back(p.point);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ProjectivePoint> sorted(std::vector<ProjectivePoint> v) {
  std::sort(v.begin(), v.end());
  return v;
}

PolynomialMap sigma_display(const FieldPtr& k, long a, long b, long c) {
  auto P = [&](const std::string& s) { return parse_polynomial(s, k, 3); };
  auto A = std::to_string(a), B = std::to_string(b), C = std::to_string(c);
  std::string bracket = "(" + A + "*(" + C + "-" + B + ")*X1*X2+" + B + "*(" + A + "-" + C + ")*X0*X2+" + C + "*(" + B + "-" + A +
                        ")*X0*X1)";
  return PolynomialMap({P("-" + A + "*X1*X2*((" + C + "-" + B + ")*X0+(" + A + "-" + C + ")*X1+(" + B + "-" + A + ")*X2)"),
                        P("X1*" + bracket), P("X2*" + bracket)});
}

}  // namespace

TEST_CASE("projective points normalize") {
  auto k = field();
  CHECK(pt(k, {2, 4, 6}) == pt(k, {1, 2, 3}));
  CHECK(pt(k, {0, -3, 3}) == pt(k, {0, 1, -1}));
  CHECK(pt(k, {0, -3, 3}).chart() == 1);
  CHECK_THROWS_AS(pt(k, {0, 0, 0}), Error);
}

TEST_CASE("projective equality of maps") {
  auto k = field();
  PolynomialMap cr = standard_cremona(k);
  PolynomialMap id = PolynomialMap::identity(k, 3);
  CHECK(proj_maps_equal(compose_maps(cr, cr), id));
  CHECK_FALSE(proj_maps_equal(cr, id));
  CHECK(proj_maps_equal(PolynomialMap::from_matrix(int_matrix(k, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}})), id));
  auto pts = standard_points(k, 5);
  PolynomialMap s1 = sigma(pts, 1);
  CHECK(proj_maps_equal(compose_maps(s1, s1), id));
}

TEST_CASE("composition") {
  auto k = field();
  PolynomialMap cr = standard_cremona(k);
  PolynomialMap crcr = compose_maps(cr, cr);
  CHECK(crcr.degree() == 1);
  CHECK(is_identity_map(crcr));
  Matrix a = int_matrix(k, {{1, 2, 0}, {0, 1, 3}, {1, 0, 1}}), b = int_matrix(k, {{0, 1, 0}, {1, 0, 0}, {2, 0, 1}});
  PolynomialMap ab = compose_maps(PolynomialMap::from_matrix(a), PolynomialMap::from_matrix(b));
  CHECK(ab.is_projectivity());
  CHECK(proj_maps_equal(ab, PolynomialMap::from_matrix(mat_mul(a, b))));
  auto pts = standard_points(k, 5);
  PolynomialMap cr45 = cr_pair_swap(pts, 4, 5);
  CHECK(is_identity_map(compose_maps(cr45, cr45)));
  CHECK(proj_maps_equal(compose_maps(PolynomialMap::from_matrix(a), inverse_projectivity(PolynomialMap::from_matrix(a))),
                        PolynomialMap::identity(k, 3)));
}

TEST_CASE("map construction errors") {
  auto k = field();
  CHECK_THROWS_AS(PolynomialMap({poly("X0"), poly("X1^2"), poly("X2")}), Error);
  CHECK_THROWS_AS(PolynomialMap({poly("X0"), poly("X1", 4)}), Error);
  try {
    PolynomialMap({Polynomial(k, 3), Polynomial(k, 3), Polynomial(k, 3)});
    FAIL("expected ZeroMap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroMap);
  }
  // A common factor is stripped.
  PolynomialMap f({poly("X0*X2"), poly("X1*X2"), poly("X2^2")});
  CHECK(f.degree() == 1);
  CHECK(is_identity_map(f));
}

TEST_CASE("indeterminacy loci") {
  auto k = field();
  CHECK(sorted(indeterminacy_locus(standard_cremona(k)).points) == sorted({pt(k, {1, 0, 0}), pt(k, {0, 1, 0}), pt(k, {0, 0, 1})}));
  CHECK(indeterminacy_locus(PolynomialMap::from_matrix(int_matrix(k, {{0, 0, 1}, {-1, 0, 1}, {0, -1, 1}}))).points.empty());
  auto pts = standard_points(k, 5);
  auto cr45 = indeterminacy_locus(cr_pair_swap(pts, 4, 5));
  CHECK_FALSE(cr45.unresolved);
  CHECK(sorted(cr45.points) == sorted({pts[0], pts[1], pts[2]}));
  auto s1 = indeterminacy_locus(sigma(pts, 1));
  CHECK(std::find(s1.points.begin(), s1.points.end(), pts[0]) != s1.points.end());
}

TEST_CASE("fixed locus of the order-four projectivity") {
  auto k = field();
  FixedLocus fl = fixed_locus(PolynomialMap::from_matrix(int_matrix(k, {{0, 0, 1}, {-1, 0, 1}, {0, -1, 1}})), standard_points(k, 4));
  CHECK_FALSE(fl.unresolved);
  CHECK_FALSE(fl.identity_map);
  CHECK(fl.curve_components.empty());
  CHECK(plane_points(fl, true).empty());
  CHECK(plane_points(fl, false) == sorted({spt(k, {"1", "0", "1"}), spt(k, {"1", "1+z^3", "z^3"}), spt(k, {"1", "1-z^3", "-z^3"})}));
}

TEST_CASE("fixed locus of the Cremona map fixing the fourth point") {
  auto k = field();
  auto pts = standard_points(k, 4);
  FixedLocus fl = fixed_locus(cremona_fixing(pts, 4), pts);
  CHECK_FALSE(fl.unresolved);
  CHECK(fl.curve_components.empty());
  CHECK(plane_points(fl, false) == sorted({pt(k, {-1, 1, 1}), pt(k, {1, 1, -1}), pt(k, {1, -1, 1})}));
  CHECK(plane_points(fl, true) == std::vector<ProjectivePoint>{pt(k, {1, 1, 1})});
  REQUIRE(fl.exceptional.size() == 1);
  CHECK(fl.exceptional[0].point == pt(k, {1, 1, 1}));
  CHECK(fl.exceptional[0].whole_curve);
}

TEST_CASE("fixed locus of the identity is a marker") {
  auto k = field();
  FixedLocus fl = fixed_locus(PolynomialMap::identity(k, 3), standard_points(k, 3));
  CHECK(fl.identity_map);
}

TEST_CASE("fixed locus with a curve part") {
  auto k = field();
  // diag(1, 1, -1): the line X2 = 0 and the point [0,0,1]
  FixedLocus fl = fixed_locus(PolynomialMap::from_matrix(int_matrix(k, {{1, 0, 0}, {0, 1, 0}, {0, 0, -1}})), {});
  REQUIRE(fl.curve_components.size() == 1);
  CHECK(fl.curve_components[0] == poly("X2"));
  CHECK(plane_points(fl, false) == std::vector<ProjectivePoint>{pt(k, {0, 0, 1})});
}

TEST_CASE("fixed directions on an exceptional curve") {
  auto k = field();
  // diag(1, 2, 3) fixes [1,0,0]; the differential there is diag(2, 3), so E has two fixed points.
  FixedLocus fl = fixed_locus(PolynomialMap::from_matrix(int_matrix(k, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}})), {pt(k, {1, 0, 0})});
  REQUIRE(fl.exceptional.size() == 1);
  CHECK_FALSE(fl.exceptional[0].whole_curve);
  CHECK(fl.exceptional[0].directions.size() == 2);
}

TEST_CASE("differentials") {
  auto k = field();
  Matrix j = jacobian_matrix(PolynomialMap::identity(k, 3), pt(k, {1, 2, 3}), 0);
  CHECK(j == identity_matrix(k, 2));
  Matrix c = jacobian_matrix(standard_cremona(k), pt(k, {1, 1, 1}), 0);
  Matrix minus = identity_matrix(k, 2);
  for (auto& row : minus)
    for (auto& x : row) x = -x;
  CHECK(c == minus);
  Scalar lam = z(k, 1), mu = q(k, 7);
  Matrix d{{q(k, 1), q(k, 0), q(k, 0)}, {q(k, 0), lam, q(k, 0)}, {q(k, 0), q(k, 0), mu}};
  CHECK(jacobian_matrix(PolynomialMap::from_matrix(d), pt(k, {1, 0, 0}), 0) == Matrix{{lam, q(k, 0)}, {q(k, 0), mu}});

  try {
    jacobian_matrix(PolynomialMap::identity(k, 3), pt(k, {0, 1, 1}), 0);
    FAIL("expected PointOnHyperplaneAtInfinity");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PointOnHyperplaneAtInfinity);
  }
  try {
    jacobian_matrix(standard_cremona(k), pt(k, {1, 0, 0}), 0);
    FAIL("expected IndeterminatePoint");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IndeterminatePoint);
  }
}

TEST_CASE("eigen-decomposition of projectivities") {
  auto k = field();
  auto id = projectivity_fixed_points(identity_matrix(k, 3));
  REQUIRE(id.spaces.size() == 1);
  CHECK(id.spaces[0].basis.size() == 3);

  auto d = projectivity_fixed_points(int_matrix(k, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}));
  REQUIRE(d.spaces.size() == 3);
  std::vector<ProjectivePoint> found;
  for (const auto& s : d.spaces) {
    REQUIRE(s.basis.size() == 1);
    found.push_back(ProjectivePoint(s.basis[0]));
  }
  CHECK(sorted(found) == sorted({pt(k, {1, 0, 0}), pt(k, {0, 1, 0}), pt(k, {0, 0, 1})}));

  // the coordinate cycle preserving the cyclic cubic: X0 -> X1 -> X3 -> X2 -> X0
  Matrix cyc = int_matrix(k, {{0, 0, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}});
  CHECK(characteristic_polynomial(cyc) == std::vector<Scalar>{q(k, -1), q(k, 0), q(k, 0), q(k, 0), q(k, 1)});
  auto e = projectivity_fixed_points(cyc);
  CHECK_FALSE(e.unresolved);
  REQUIRE(e.spaces.size() == 4);
  for (const auto& s : e.spaces) CHECK(s.eigenvalue.pow(4).is_one());
  Polynomial cubic = poly("X0^2*X1+X2^2*X0+X3^2*X2+X1^2*X3", 4);
  CHECK(substitute_map(cubic, PolynomialMap::from_matrix(cyc).components()) == cubic);
}

TEST_CASE("general position") {
  auto k = field();
  CHECK(general_position_check(standard_points(k, 4)).ok);
  auto bad = general_position_check({pt(k, {1, 0, 0}), pt(k, {0, 1, 0}), pt(k, {1, 1, 0})});
  CHECK_FALSE(bad.ok);
  CHECK(bad.violation == "collinear");
  CHECK(bad.witness == std::vector<std::size_t>{0, 1, 2});
  CHECK(general_position_check(standard_points(k, 5)).ok);
  CHECK_THROWS_AS(general_position_check({pt(k, {1, 0, 0}), pt(k, {2, 0, 0})}), Error);

  // six points on the conic X0 X1 = X2^2
  std::vector<ProjectivePoint> conic;
  for (long t : {1, 2, 3, -1, -2, 5}) conic.push_back(pt(k, {1, t * t, t}));
  auto c = general_position_check(conic);
  CHECK_FALSE(c.ok);
  CHECK(c.violation == "six_on_conic");

  // eight points: seven on the nodal cubic X1^2 X2 = X0^3 + X0^2 X2, node [0,0,1] as the eighth
  std::vector<ProjectivePoint> nodal;
  for (long t : {2, 3, -2, -3, 4, 6, 7}) nodal.push_back(pt(k, {t * t - 1, t * (t * t - 1), 1}));  // x = t^2 - 1, y = t x
  nodal.push_back(pt(k, {0, 0, 1}));
  auto n = general_position_check(nodal);
  CHECK_FALSE(n.ok);
  CHECK(n.violation == "cubic_with_double_point");

  std::vector<ProjectivePoint> good{pt(k, {1, 0, 0}), pt(k, {0, 1, 0}), pt(k, {0, 0, 1}), pt(k, {1, 1, 1}),
                                    pt(k, {2, 3, 5}), pt(k, {3, 7, 2}), pt(k, {5, -1, 4}), pt(k, {7, 11, -13})};
  auto g = general_position_check(good);
  CHECK(g.ok);
}

TEST_CASE("named maps match their formulas") {
  auto k = field();
  auto cr = standard_cremona(k).components();
  CHECK(cr == std::vector<Polynomial>{poly("X1*X2"), poly("X0*X2"), poly("X0*X1")});
  auto pts = standard_points(k, 5);
  CHECK(proj_maps_equal(cr_pair_swap(pts, 4, 5), PolynomialMap({poly("2*X1*X2"), poly("3*X0*X2"), poly("5*X0*X1")})));
  CHECK(proj_maps_equal(sigma(pts, 1), sigma_display(k, 2, 3, 5)));
  CHECK(coordinate_permutation(k, {1, 2, 0}).components() == std::vector<Polynomial>{poly("X1"), poly("X2"), poly("X0")});
  CHECK(proj_maps_equal(klein_four(k, 1, 0), PolynomialMap({poly("X0"), poly("-X1"), poly("X2")})));
  CHECK_THROWS_AS(cr_pair_swap(pts, 2, 2), Error);
  CHECK_THROWS_AS(sigma(pts, 6), Error);
  CHECK_THROWS_AS(cremona_fixing(pts, 1), Error);  // needs exactly four points
}

TEST_CASE("the fixed cubic of sigma_1 is the displayed curve") {
  auto k = field();
  auto pts = standard_points(k, 5);
  Polynomial c = gcd_all(sigma(pts, 1).cross_polynomials());
  // b(a-c) X0^2 X2 + c(b-a) X0^2 X1 + a(a-c) X1^2 X2 + a(b-a) X1 X2^2 + 2a(c-b) X0 X1 X2 at (2,3,5)
  Polynomial displayed = poly("-9*X0^2*X2+5*X0^2*X1-6*X1^2*X2+2*X1*X2^2+8*X0*X1*X2");
  CHECK(c.monic() == displayed.monic());
}

TEST_CASE("unknown descriptor kinds are rejected") {
  auto k = field();
  try {
    make_named_map({{"kind", "nonsense"}}, standard_points(k, 3), k, 3);
    FAIL("expected UnknownKind");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownKind);
  }
  PolynomialMap m = make_named_map({{"matrix", {{0, 1, 0}, {1, 0, 0}, {0, 0, "z^3"}}}}, {}, k, 3);
  CHECK(m.is_projectivity());
  PolynomialMap c = make_named_map({{"components", {"X1*X2", "X0*X2", "X0*X1"}}}, {}, k, 3);
  CHECK(proj_maps_equal(c, standard_cremona(k)));
}

TEST_CASE("every quadratic and cubic involution squares to the identity" * doctest::test_suite("properties")) {
  auto k = field();
  auto pts5 = standard_points(k, 5);
  auto id = PolynomialMap::identity(k, 3);
  CHECK(proj_maps_equal(compose_maps(standard_cremona(k), standard_cremona(k)), id));
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      PolynomialMap c = cr_pair_swap(pts5, i, j);
      CHECK(proj_maps_equal(compose_maps(c, c), id));
      // exchanges P_i and P_j
      CHECK(c.image(pts5[static_cast<std::size_t>(i - 1)]) == pts5[static_cast<std::size_t>(j - 1)]);
      CHECK(c.image(pts5[static_cast<std::size_t>(j - 1)]) == pts5[static_cast<std::size_t>(i - 1)]);
    }
  for (int i = 1; i <= 5; ++i) {
    PolynomialMap s = sigma(pts5, i);
    CHECK(s.degree() == 3);
    CHECK(proj_maps_equal(compose_maps(s, s), id));
  }
  auto pts4 = standard_points(k, 4);
  for (int i = 1; i <= 4; ++i) {
    PolynomialMap c = cremona_fixing(pts4, i);
    CHECK(proj_maps_equal(compose_maps(c, c), id));
    CHECK(c.image(pts4[static_cast<std::size_t>(i - 1)]) == pts4[static_cast<std::size_t>(i - 1)]);
  }
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 1; ++j) CHECK(proj_maps_equal(compose_maps(klein_four(k, i, j), klein_four(k, i, j)), id));
}

TEST_CASE("the same constructions work for another fifth point" * doctest::test_suite("properties")) {
  auto k = field();
  std::vector<ProjectivePoint> pts{pt(k, {1, 0, 0}), pt(k, {0, 1, 0}), pt(k, {0, 0, 1}), pt(k, {1, 1, 1}), spt(k, {"3", "-1", "z^3"})};
  REQUIRE(general_position_check(pts).ok);
  auto id = PolynomialMap::identity(k, 3);
  for (int i = 1; i <= 5; ++i) CHECK(proj_maps_equal(compose_maps(sigma(pts, i), sigma(pts, i)), id));
  PolynomialMap c45 = cr_pair_swap(pts, 4, 5);
  CHECK(c45.image(pts[3]) == pts[4]);
  CHECK(c45.image(pts[4]) == pts[3]);
  Polynomial c = gcd_all(sigma(pts, 1).cross_polynomials());
  CHECK(c.total_degree() == 3);
  CHECK(is_smooth_plane_curve(c).smooth);
}

TEST_CASE("fixed loci of projectivities agree with eigenvectors" * doctest::test_suite("properties")) {
  auto k = field();
  Random rng(21);
  for (int t = 0; t < 25; ++t) {
    // A = S D S^-1 with small integer S and a diagonal of distinct roots of unity times integers.
    Matrix s;
    do {
      s = Matrix(3, Vector(3, q(k, 0)));
      for (auto& row : s)
        for (auto& x : row) x = q(k, rng.integer(-2, 2));
    } while (determinant(s).is_zero());
    Matrix dm = Matrix(3, Vector(3, q(k, 0)));
    dm[0][0] = q(k, 1);
    dm[1][1] = z(k, rng.integer(1, 11));
    dm[2][2] = z(k, rng.integer(1, 11)) * Rational(rng.integer(2, 3));
    Matrix a = mat_mul(mat_mul(s, dm), *inverse(s));
    auto eig = projectivity_fixed_points(a);
    CHECK_FALSE(eig.unresolved);
    FixedLocus fl = fixed_locus(PolynomialMap::from_matrix(a), {});
    CHECK_FALSE(fl.unresolved);
    std::vector<ProjectivePoint> eig_points;
    for (const auto& sp : eig.spaces)
      if (sp.basis.size() == 1) eig_points.push_back(ProjectivePoint(sp.basis[0]));
    CHECK(plane_points(fl, false) == sorted(eig_points));
    for (const auto& p : fl.plane_points) {
      for (const auto& cp : PolynomialMap::from_matrix(a).cross_polynomials()) CHECK(cp.evaluate(p.point.coords()).is_zero());
    }
    for (const auto& c : fl.curve_components) {
      for (const auto& cp : PolynomialMap::from_matrix(a).cross_polynomials()) CHECK(exact_divide(cp, c).has_value());
    }
  }
}

TEST_CASE("images off the indeterminacy locus are projective points" * doctest::test_suite("properties")) {
  auto k = field();
  Random rng(22);
  auto pts = standard_points(k, 5);
  std::vector<PolynomialMap> maps{standard_cremona(k), cr_pair_swap(pts, 1, 3), sigma(pts, 2), cremona_fixing(standard_points(k, 4), 2)};
  for (const auto& f : maps) {
    auto bad = indeterminacy_locus(f);
    for (int t = 0; t < 20; ++t) {
      ProjectivePoint p({q(k, rng.integer(-5, 5)), q(k, rng.integer(-5, 5)), q(k, rng.integer(1, 5))});
      bool indeterminate = std::find(bad.points.begin(), bad.points.end(), p) != bad.points.end();
      auto img = f.image(p);
      CHECK(img.has_value() == !indeterminate);
      if (img) CHECK(img->size() == 3);
    }
  }
}
