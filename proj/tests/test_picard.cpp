#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace kecert;
using namespace kecert::testing;

namespace {

DivisorClass h(int r) { return DivisorClass::hyperplane(r); }
DivisorClass e(int r, int i) { return DivisorClass::exceptional(r, i); }

}  // namespace

TEST_CASE("intersection pairing") {
  CHECK(intersection_pairing(DivisorClass::canonical(5), DivisorClass::canonical(5)) == 4);
  CHECK(intersection_pairing(h(4), h(4)) == 1);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) CHECK(intersection_pairing(e(4, i), e(4, j)) == (i == j ? -1 : 0));
  DivisorClass l = h(3) - e(3, 1) - e(3, 2);
  CHECK(intersection_pairing(l, l) == -1);
  try {
    intersection_pairing(h(3), h(4));
    FAIL("expected RankMismatch");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::RankMismatch);
  }
  CHECK(DivisorClass::canonical(2).to_string() == "(-3;-1,-1)");
  CHECK(DivisorClass::from_coeffs({2, 1, 1, 1, 1, 1}) == 2 * h(5) - e(5, 1) - e(5, 2) - e(5, 3) - e(5, 4) - e(5, 5));
}

TEST_CASE("lines") {
  CHECK(enumerate_lines(1) == std::vector<DivisorClass>{e(1, 1)});
  auto l5 = enumerate_lines(5);
  REQUIRE(l5.size() == 16);
  int exc = 0, through_two = 0, conic = 0;
  for (const auto& c : l5) {
    if (c.degree() == 0) ++exc;
    if (c.degree() == 1) ++through_two;
    if (c.degree() == 2) ++conic;
  }
  CHECK(exc == 5);
  CHECK(through_two == 10);
  CHECK(conic == 1);
  CHECK(std::find(l5.begin(), l5.end(), DivisorClass::from_coeffs({2, 1, 1, 1, 1, 1})) != l5.end());
  CHECK(enumerate_lines(8).size() == 240);
  CHECK(std::is_sorted(l5.begin(), l5.end()));
}

TEST_CASE("roots") {
  auto r3 = enumerate_roots(3);
  CHECK(r3.size() == 8);
  CHECK(std::find(r3.begin(), r3.end(), h(3) - e(3, 1) - e(3, 2) - e(3, 3)) != r3.end());
  CHECK(enumerate_roots(8).size() == 240);
  CHECK(enumerate_roots(6).size() == 72);
  CHECK(enumerate_roots(7).size() == 126);
}

TEST_CASE("reflections") {
  LatticeIsometry s = reflect_in_root(e(4, 1) - e(4, 2));
  CHECK(s.apply(e(4, 1)) == e(4, 2));
  CHECK(s.apply(e(4, 2)) == e(4, 1));
  CHECK(s.apply(h(4)) == h(4));
  CHECK(s.apply(e(4, 3)) == e(4, 3));
  CHECK(s.compose(s) == LatticeIsometry::identity(4));
  LatticeIsometry c = reflect_in_root(h(3) - e(3, 1) - e(3, 2) - e(3, 3));
  CHECK(c.apply(h(3)) == 2 * h(3) - e(3, 1) - e(3, 2) - e(3, 3));
  try {
    reflect_in_root(h(3));
    FAIL("expected NotARoot");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotARoot);
  }
}

TEST_CASE("lifts of projectivities") {
  CHECK(lift_plane_automorphism({1, 2, 3}) == LatticeIsometry::identity(3));
  LatticeIsometry t = lift_plane_automorphism({2, 1, 3});
  CHECK(t.apply(e(3, 1)) == e(3, 2));
  CHECK(t.apply(h(3)) == h(3));
  LatticeIsometry c5 = lift_plane_automorphism({2, 3, 4, 5, 1});
  LatticeIsometry p = c5;
  int order = 1;
  while (!(p == LatticeIsometry::identity(5))) {
    p = p.compose(c5);
    ++order;
  }
  CHECK(order == 5);
}

TEST_CASE("lifts of quadratic maps") {
  CHECK(lift_cremona(3, 1, 2, 3, std::nullopt) == reflect_in_root(h(3) - e(3, 1) - e(3, 2) - e(3, 3)));
  LatticeIsometry c45 = lift_pair_swap(4, 5);
  CHECK(c45.compose(c45) == LatticeIsometry::identity(5));
  CHECK(c45.apply(e(5, 4)) == e(5, 5));
  CHECK(c45.apply(e(5, 1)) == h(5) - e(5, 2) - e(5, 3));
  CHECK(c45.apply(h(5)) == 2 * h(5) - e(5, 1) - e(5, 2) - e(5, 3));
  auto lines = enumerate_lines(5);
  auto p12 = lift_pair_swap(1, 2).compose(lift_pair_swap(2, 3)).line_permutation(lines);
  auto p13 = lift_pair_swap(1, 3).line_permutation(lines);
  REQUIRE(p12);
  CHECK(p12 == p13);
  try {
    lift_cremona(5, 1, 2, 3, std::make_pair(3, 4));
    FAIL("expected BadIndices");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::BadIndices);
  }
}

TEST_CASE("relation algebra of the order-16 group") {
  RelationReport rep = verify_relation_algebra();
  for (const auto& c : rep.checks) CHECK_MESSAGE(c.holds, c.relation);
  CHECK(rep.all_hold());
  CHECK(rep.group_order == 16);
  CHECK(rep.elementary_abelian);
  CHECK(rep.checks.size() >= 20);
}

TEST_CASE("line counts and canonical degree" * doctest::test_suite("properties")) {
  const std::vector<std::size_t> counts{1, 3, 6, 10, 16, 27, 56, 240};
  for (int r = 1; r <= 8; ++r) {
    CHECK(enumerate_lines(r).size() == counts[static_cast<std::size_t>(r - 1)]);
    CHECK(intersection_pairing(DivisorClass::canonical(r), DivisorClass::canonical(r)) == 9 - r);
    for (const auto& l : enumerate_lines(r)) {
      CHECK(intersection_pairing(l, l) == -1);
      CHECK(intersection_pairing(l, DivisorClass::canonical(r)) == -1);
    }
  }
}

TEST_CASE("constructed isometries preserve the lattice structure" * doctest::test_suite("properties")) {
  std::vector<LatticeIsometry> isos;
  for (int r = 3; r <= 8; ++r) {
    for (const auto& root : enumerate_roots(r)) isos.push_back(reflect_in_root(root));
  }
  for (int i = 1; i <= 5; ++i) {
    isos.push_back(lift_sigma(i));
    for (int j = i + 1; j <= 5; ++j) isos.push_back(lift_pair_swap(i, j));
  }
  isos.push_back(lift_plane_automorphism({3, 1, 2, 5, 4}));
  isos.push_back(lift_cremona(4, 1, 2, 3, std::nullopt));
  for (const auto& g : isos) {
    CHECK(g.is_isometry());
    CHECK(g.apply(DivisorClass::canonical(g.r())) == DivisorClass::canonical(g.r()));
    auto lines = enumerate_lines(g.r());
    auto perm = g.line_permutation(lines);
    REQUIRE(perm);
    CHECK(std::set<int>(perm->begin(), perm->end()).size() == lines.size());
    CHECK(g.compose(g.inverse()) == LatticeIsometry::identity(g.r()));
  }
}
