#include "kecert/named_maps.hpp"

#include <algorithm>

namespace kecert {

namespace {

Polynomial var(const FieldPtr& ctx, int i) { return Polynomial::variable(ctx, 3, i); }

PolynomialMap conjugate(const PolynomialMap& a, const PolynomialMap& f) {
  return compose_maps(compose_maps(a, f), inverse_projectivity(a));
}

void require_count(const std::vector<ProjectivePoint>& points, std::size_t n, const char* what) {
  if (points.size() != n) throw Error(ErrorKind::BadParams, std::string(what) + " needs exactly " + std::to_string(n) + " points");
  for (const auto& p : points)
    if (p.size() != 3) throw Error(ErrorKind::ArityMismatch, "points must lie in P^2");
}

int checked_index(int i, std::size_t n) {
  if (i < 1 || i > static_cast<int>(n)) throw Error(ErrorKind::BadIndices, "point index " + std::to_string(i) + " out of range");
  return i;
}

const ProjectivePoint& at(const std::vector<ProjectivePoint>& points, int i) {
  return points[static_cast<std::size_t>(i - 1)];
}

}  // namespace

PolynomialMap standard_cremona(const FieldPtr& ctx) {
  return PolynomialMap({var(ctx, 1) * var(ctx, 2), var(ctx, 0) * var(ctx, 2), var(ctx, 0) * var(ctx, 1)});
}

PolynomialMap coordinate_permutation(const FieldPtr& ctx, const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    if (sorted[static_cast<std::size_t>(i)] != i) throw Error(ErrorKind::BadParams, "not a permutation of the coordinates");
  std::vector<Polynomial> comps;
  for (int p : perm) comps.push_back(Polynomial::variable(ctx, n, p));
  return PolynomialMap(std::move(comps));
}

PolynomialMap klein_four(const FieldPtr& ctx, int i, int j) {
  auto sign = [](int e) { return e % 2 == 0 ? 1L : -1L; };
  return PolynomialMap({var(ctx, 0), var(ctx, 1) * Scalar(ctx, Rational(sign(i))), var(ctx, 2) * Scalar(ctx, Rational(sign(j)))});
}

Matrix frame_matrix(const std::vector<ProjectivePoint>& four) {
  if (four.size() != 4) throw Error(ErrorKind::BadParams, "a frame consists of four points");
  const FieldPtr& ctx = four[0][0].context();
  Matrix q = zero_matrix(ctx, 3, 3);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t row = 0; row < 3; ++row) q[row][k] = four[k][row];
  auto lambda = solve(q, four[3].coords());
  if (!lambda || rank(q) < 3 || std::any_of(lambda->begin(), lambda->end(), [](const Scalar& x) { return x.is_zero(); })) {
    throw Error(ErrorKind::BadParams, "frame points are not in general position");
  }
  for (std::size_t row = 0; row < 3; ++row)
    for (std::size_t k = 0; k < 3; ++k) q[row][k] *= (*lambda)[k];
  return q;
}

PolynomialMap point_permutation(const std::vector<ProjectivePoint>& points, const std::vector<int>& images) {
  const std::size_t n = points.size();
  if (n < 3 || images.size() != n) throw Error(ErrorKind::BadParams, "point permutation needs one image per point and at least three points");
  std::vector<int> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < n; ++k)
    if (sorted[k] != static_cast<int>(k + 1)) throw Error(ErrorKind::BadIndices, "images must permute 1..r");
  std::vector<ProjectivePoint> src(points.begin(), points.begin() + 3);
  std::vector<ProjectivePoint> dst;
  for (std::size_t k = 0; k < 3; ++k) dst.push_back(at(points, images[k]));
  if (n >= 4) {
    src.push_back(points[3]);
    dst.push_back(at(points, images[3]));
  } else {
    // With three points, also fix the image of [1,1,1] under the frame of P1..P3.
    const FieldPtr& ctx = points[0][0].context();
    Matrix q = zero_matrix(ctx, 3, 3);
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t row = 0; row < 3; ++row) q[row][k] = points[k][row];
    ProjectivePoint unit(mat_vec(q, Vector(3, Scalar::one(ctx))));
    src.push_back(unit);
    Matrix qd = zero_matrix(ctx, 3, 3);
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t row = 0; row < 3; ++row) qd[row][k] = dst[k][row];
    dst.push_back(ProjectivePoint(mat_vec(qd, Vector(3, Scalar::one(ctx)))));
  }
  Matrix a = mat_mul(frame_matrix(dst), *inverse(frame_matrix(src)));
  PolynomialMap map = PolynomialMap::from_matrix(a);
  for (std::size_t k = 0; k < n; ++k) {
    if (*map.image(points[k]) != at(points, images[k])) {
      throw Error(ErrorKind::BadParams, "no projectivity realizes this permutation of the points");
    }
  }
  return map;
}

PolynomialMap cremona_fixing(const std::vector<ProjectivePoint>& points, int i) {
  require_count(points, 4, "cremona_fixing");
  checked_index(i, 4);
  PolynomialMap frame = PolynomialMap::from_matrix(frame_matrix(points));
  PolynomialMap cr4 = conjugate(frame, standard_cremona(frame.context()));
  if (i == 4) return cr4;
  std::vector<int> images{1, 2, 3, 4};
  std::swap(images[static_cast<std::size_t>(i - 1)], images[3]);
  return conjugate(point_permutation(points, images), cr4);
}

PolynomialMap cr_pair_swap(const std::vector<ProjectivePoint>& points, int i, int j) {
  require_count(points, 5, "cr_pair_swap");
  checked_index(i, 5);
  checked_index(j, 5);
  if (i == j) throw Error(ErrorKind::BadIndices, "pair indices must differ");
  std::vector<ProjectivePoint> frame_points;
  for (int k = 1; k <= 5; ++k)
    if (k != i && k != j) frame_points.push_back(at(points, k));
  frame_points.push_back(at(points, i));
  Matrix a = frame_matrix(frame_points);
  Vector w = mat_vec(*inverse(a), at(points, j).coords());
  if (std::any_of(w.begin(), w.end(), [](const Scalar& x) { return x.is_zero(); })) {
    throw Error(ErrorKind::BadParams, "P_j lies on a line through two base points");
  }
  const FieldPtr& ctx = w[0].context();
  Matrix d = zero_matrix(ctx, 3, 3);
  for (std::size_t k = 0; k < 3; ++k) d[k][k] = w[k];
  PolynomialMap scaled = compose_maps(PolynomialMap::from_matrix(d), standard_cremona(ctx));
  return conjugate(PolynomialMap::from_matrix(a), scaled);
}

PolynomialMap sigma(const std::vector<ProjectivePoint>& points, int j) {
  require_count(points, 5, "sigma");
  checked_index(j, 5);
  if (j != 1) return compose_maps(cr_pair_swap(points, 1, j), sigma(points, 1));
  Matrix b = frame_matrix({points[0], points[1], points[2], points[3]});
  Vector abc = mat_vec(*inverse(b), points[4].coords());
  const Scalar &a = abc[0], &bb = abc[1], &c = abc[2];
  const FieldPtr& ctx = a.context();
  const Polynomial x0 = var(ctx, 0), x1 = var(ctx, 1), x2 = var(ctx, 2);
  Polynomial linear = x0 * (c - bb) + x1 * (a - c) + x2 * (bb - a);
  Polynomial bracket = x1 * x2 * (a * (c - bb)) + x0 * x2 * (bb * (a - c)) + x0 * x1 * (c * (bb - a));
  PolynomialMap local({x1 * x2 * linear * (-a), x1 * bracket, x2 * bracket});
  return conjugate(PolynomialMap::from_matrix(b), local);
}

}  // namespace kecert
