#include "kecert/projgeom.hpp"

#include <algorithm>

namespace kecert {

ProjectivePoint::ProjectivePoint(const std::vector<Scalar>& coords) : coords_(normalize_projective(coords)) {}

std::size_t ProjectivePoint::chart() const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (!coords_[i].is_zero()) return i;
  return 0;
}

std::string ProjectivePoint::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? "," : "") + coords_[i].to_string();
  return s + "]";
}

bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
}

namespace {

Matrix linear_coefficients(const std::vector<Polynomial>& comps) {
  const FieldPtr& ctx = comps.front().context();
  const int n = comps.front().num_vars();
  Matrix m = zero_matrix(ctx, comps.size(), static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (int j = 0; j < n; ++j) {
      Exponent e{};
      e[static_cast<std::size_t>(j)] = 1;
      m[i][static_cast<std::size_t>(j)] = comps[i].coefficient(e);
    }
  return m;
}

Polynomial poly_determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Polynomial det(m[0][0].context(), m[0][0].num_vars());
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][c] * poly_determinant(minor);
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

}  // namespace

PolynomialMap::PolynomialMap(std::vector<Polynomial> components) : components_(std::move(components)) {
  if (components_.empty()) throw Error(ErrorKind::ArityMismatch, "map without components");
  const int nv = components_.front().num_vars();
  int degree = -1;
  std::vector<Polynomial> nonzero;
  for (const auto& c : components_) {
    if (c.num_vars() != nv) throw Error(ErrorKind::ArityMismatch, "components in different variable counts");
    if (c.is_zero()) continue;
    if (!c.is_homogeneous() || (degree >= 0 && c.total_degree() != degree)) {
      throw Error(ErrorKind::InhomogeneousComponents, "map components must be forms of one degree");
    }
    degree = c.total_degree();
    nonzero.push_back(c);
  }
  if (nonzero.empty()) throw Error(ErrorKind::ZeroMap, "all components vanish identically");
  bool independent_linear = degree == 1 && rank(linear_coefficients(components_)) >= 2;
  if (degree > 0 && !independent_linear) {
    Polynomial g = gcd_all(nonzero);
    if (!g.is_constant()) {
      for (auto& c : components_)
        if (!c.is_zero()) c = *exact_divide(c, g);
      degree -= g.total_degree();
    }
  }
  if (degree < 1) throw Error(ErrorKind::ZeroMap, "map is constant after removing the common factor");
  degree_ = degree;
  for (const auto& c : components_) {
    if (c.is_zero()) continue;
    Scalar inv = c.leading_coefficient().inverse();
    for (auto& d : components_) d *= inv;
    break;
  }
  projectivity_ = degree_ == 1 && static_cast<int>(components_.size()) == nv &&
                  rank(linear_coefficients(components_)) == static_cast<std::size_t>(nv);
  for (std::size_t i = 0; i < components_.size(); ++i) key_ += (i ? ";" : "") + components_[i].to_string();
}

PolynomialMap PolynomialMap::identity(const FieldPtr& ctx, int num_vars) {
  std::vector<Polynomial> comps;
  for (int i = 0; i < num_vars; ++i) comps.push_back(Polynomial::variable(ctx, num_vars, i));
  return PolynomialMap(std::move(comps));
}

PolynomialMap PolynomialMap::from_matrix(const Matrix& m) {
  if (m.empty()) throw Error(ErrorKind::BadParams, "empty matrix");
  const FieldPtr& ctx = m[0][0].context();
  const int n = static_cast<int>(m[0].size());
  std::vector<Polynomial> comps;
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::ArityMismatch, "ragged matrix");
    Polynomial p(ctx, n);
    for (int j = 0; j < n; ++j) p += Polynomial::variable(ctx, n, j) * row[static_cast<std::size_t>(j)];
    comps.push_back(std::move(p));
  }
  return PolynomialMap(std::move(comps));
}

Matrix PolynomialMap::matrix() const {
  if (degree_ != 1) throw Error(ErrorKind::BadParams, "matrix of a nonlinear map");
  return linear_coefficients(components_);
}

std::vector<Scalar> PolynomialMap::evaluate(const std::vector<Scalar>& point) const {
  std::vector<Scalar> out;
  for (const auto& c : components_) out.push_back(c.evaluate(point));
  return out;
}

std::optional<ProjectivePoint> PolynomialMap::image(const ProjectivePoint& p) const {
  auto v = evaluate(p.coords());
  for (const auto& x : v)
    if (!x.is_zero()) return ProjectivePoint(v);
  return std::nullopt;
}

bool PolynomialMap::is_regular_at(const ProjectivePoint& p) const { return image(p).has_value(); }

std::vector<Polynomial> PolynomialMap::cross_polynomials() const {
  const int n = num_vars();
  if (static_cast<int>(components_.size()) != n) throw Error(ErrorKind::ArityMismatch, "not a self-map");
  const FieldPtr& ctx = context();
  std::vector<Polynomial> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      out.push_back(Polynomial::variable(ctx, n, i) * components_[static_cast<std::size_t>(j)] -
                    Polynomial::variable(ctx, n, j) * components_[static_cast<std::size_t>(i)]);
    }
  return out;
}

Polynomial PolynomialMap::jacobian_determinant() const {
  std::vector<std::vector<Polynomial>> m;
  for (const auto& c : components_) {
    std::vector<Polynomial> row;
    for (int j = 0; j < num_vars(); ++j) row.push_back(c.derivative(j));
    m.push_back(std::move(row));
  }
  if (m.size() != m[0].size()) throw Error(ErrorKind::ArityMismatch, "not a self-map");
  return poly_determinant(m);
}

bool proj_maps_equal(const PolynomialMap& f, const PolynomialMap& g) {
  const auto& a = f.components();
  const auto& b = g.components();
  if (a.size() != b.size() || f.num_vars() != g.num_vars()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  // cross minors alone cannot see a map that vanishes where the other does not
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].is_zero() != b[i].is_zero()) return false;
  return true;
}

bool is_identity_map(const PolynomialMap& f) {
  if (static_cast<int>(f.components().size()) != f.num_vars()) return false;
  return proj_maps_equal(f, PolynomialMap::identity(f.context(), f.num_vars()));
}

PolynomialMap compose_maps(const PolynomialMap& f, const PolynomialMap& g) {
  if (f.num_vars() != static_cast<int>(g.components().size())) {
    throw Error(ErrorKind::ArityMismatch, "maps do not compose");
  }
  std::vector<Polynomial> comps;
  for (const auto& c : f.components()) comps.push_back(c.compose(g.components()));
  return PolynomialMap(std::move(comps));
}

PolynomialMap inverse_projectivity(const PolynomialMap& f) {
  if (!f.is_projectivity()) throw Error(ErrorKind::BadParams, "inverse of a non-projectivity");
  return PolynomialMap::from_matrix(*inverse(f.matrix()));
}

Matrix jacobian_matrix(const PolynomialMap& f, const ProjectivePoint& p, std::size_t chart) {
  const std::size_t n = p.size();
  if (chart >= n || p[chart].is_zero()) {
    throw Error(ErrorKind::PointOnHyperplaneAtInfinity, p.to_string() + " is not in chart " + std::to_string(chart));
  }
  std::vector<Scalar> x;
  Scalar inv = p[chart].inverse();
  for (const auto& c : p.coords()) x.push_back(c * inv);
  std::vector<Scalar> fx = f.evaluate(x);
  std::size_t target = chart;
  if (target >= fx.size() || fx[target].is_zero()) {
    target = fx.size();
    for (std::size_t i = 0; i < fx.size(); ++i)
      if (!fx[i].is_zero()) {
        target = i;
        break;
      }
    if (target == fx.size()) throw Error(ErrorKind::IndeterminatePoint, "map undefined at " + p.to_string());
  }
  const FieldPtr& ctx = f.context();
  const Scalar denom_inv = (fx[target] * fx[target]).inverse();
  Matrix jac;
  for (std::size_t k = 0; k < fx.size(); ++k) {
    if (k == target) continue;
    Vector row;
    for (std::size_t l = 0; l < n; ++l) {
      if (l == chart) continue;
      auto li = static_cast<int>(l);
      Scalar dk = f.components()[k].derivative(li).evaluate(x);
      Scalar dt = f.components()[target].derivative(li).evaluate(x);
      row.push_back((dk * fx[target] - fx[k] * dt) * denom_inv);
    }
    jac.push_back(std::move(row));
  }
  (void)ctx;
  return jac;
}

IndeterminacyResult indeterminacy_locus(const PolynomialMap& f) {
  IndeterminacyResult out;
  if (f.is_projectivity()) return out;
  if (f.num_vars() != 3) throw Error(ErrorKind::BadParams, "indeterminacy locus is computed for maps of the plane");
  auto pts = solve_points(f.components());
  out.unresolved = pts.unresolved;
  for (const auto& p : pts.points) out.points.emplace_back(p);
  std::sort(out.points.begin(), out.points.end());
  return out;
}

CurveSplit split_plane_curve(const Polynomial& f) {
  CurveSplit out;
  const FieldPtr& ctx = f.context();
  const Scalar zero = Scalar::zero(ctx);
  const Scalar one = Scalar::one(ctx);
  Polynomial rest = f.monic();
  auto push = [&](const Polynomial& factor) {
    Polynomial m = factor.monic();
    if (std::find(out.factors.begin(), out.factors.end(), m) == out.factors.end()) out.factors.push_back(m);
    while (rest.total_degree() > 0) {
      auto q = exact_divide(rest, m);
      if (!q) break;
      rest = *q;
    }
  };
  const Polynomial x0 = Polynomial::variable(ctx, 3, 0);
  const Polynomial x1 = Polynomial::variable(ctx, 3, 1);
  const Polynomial x2 = Polynomial::variable(ctx, 3, 2);

  // Lines free of X2 divide every coefficient with respect to X2.
  Polynomial binary = content_in(rest, 2);
  if (binary.total_degree() > 0) {
    if (binary.specialize(0, zero).is_zero()) push(x0);
    binary = content_in(rest, 2);
    UnivariatePoly u = to_univariate(binary.specialize(0, one), 1);
    if (u.degree() > 0) {
      auto roots = univariate_roots_in_field(u);
      out.unresolved = out.unresolved || roots.unresolved;
      for (const auto& [t, mult] : roots.roots) push(x1 - x0 * t);
    }
  }
  // Lines X2 = a X0 + b X1: a is a root of rest(1, 0, t), b of rest(0, 1, t).
  while (rest.total_degree() > 1) {
    UnivariatePoly ua = to_univariate(rest.specialize(0, one).specialize(1, zero), 2);
    UnivariatePoly ub = to_univariate(rest.specialize(0, zero).specialize(1, one), 2);
    if (ua.degree() <= 0 || ub.degree() <= 0) break;
    auto ra = univariate_roots_in_field(ua);
    auto rb = univariate_roots_in_field(ub);
    bool found = false;
    for (const auto& [a, ma] : ra.roots) {
      for (const auto& [b, mb] : rb.roots) {
        Polynomial line = x2 - x0 * a - x1 * b;
        if (exact_divide(rest, line)) {
          push(line);
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) break;
  }
  if (rest.total_degree() > 0) {
    Polynomial m = rest.monic();
    if (std::find(out.factors.begin(), out.factors.end(), m) == out.factors.end()) out.factors.push_back(m);
  }
  return out;
}

FixedLocus fixed_locus(const PolynomialMap& f, const std::vector<ProjectivePoint>& blown_up) {
  if (f.num_vars() != 3 || f.components().size() != 3) throw Error(ErrorKind::BadParams, "fixed loci are computed on P^2");
  for (std::size_t i = 0; i < blown_up.size(); ++i)
    for (std::size_t j = i + 1; j < blown_up.size(); ++j)
      if (blown_up[i] == blown_up[j]) throw Error(ErrorKind::DuplicatePoints, "blown-up points must be distinct");
  FixedLocus out;
  if (is_identity_map(f)) {
    out.identity_map = true;
    return out;
  }
  const FieldPtr& ctx = f.context();
  auto cross = f.cross_polynomials();
  Polynomial curve = gcd_all(cross);
  std::vector<Polynomial> residual = cross;
  if (!curve.is_constant()) {
    CurveSplit split = split_plane_curve(curve);
    out.curve_components = split.factors;
    out.unresolved = out.unresolved || split.unresolved;
    for (auto& c : residual)
      if (!c.is_zero()) c = *exact_divide(c, curve);
  }
  PointSolveResult pts = solve_points(residual);
  out.unresolved = out.unresolved || pts.unresolved;
  for (const auto& coords : pts.points) {
    ProjectivePoint p(coords);
    if (!f.is_regular_at(p)) continue;
    if (std::find(blown_up.begin(), blown_up.end(), p) != blown_up.end()) continue;
    if (!curve.is_constant() && curve.evaluate(p.coords()).is_zero()) continue;
    out.plane_points.push_back({p, false});
  }
  for (const auto& b : blown_up) {
    auto img = f.image(b);
    if (!img || *img != b) continue;
    out.plane_points.push_back({b, true});
    ExceptionalData ex;
    ex.point = b;
    ex.chart = b.chart();
    ex.differential = jacobian_matrix(f, b, ex.chart);
    if (is_scalar_matrix(ex.differential)) {
      ex.whole_curve = true;
    } else {
      EigenResult eig = projectivity_fixed_points(ex.differential);
      ex.unresolved = eig.unresolved;
      out.unresolved = out.unresolved || eig.unresolved;
      for (const auto& space : eig.spaces)
        for (const auto& v : space.basis) ex.directions.emplace_back(v);
      std::sort(ex.directions.begin(), ex.directions.end());
    }
    out.exceptional.push_back(std::move(ex));
  }
  std::sort(out.plane_points.begin(), out.plane_points.end(),
            [](const FixedPlanePoint& a, const FixedPlanePoint& b) { return a.point < b.point; });
  (void)ctx;
  return out;
}

EigenResult projectivity_fixed_points(const Matrix& m) {
  EigenResult out;
  if (m.empty() || m.size() != m[0].size()) throw Error(ErrorKind::BadParams, "square matrix expected");
  const FieldPtr& ctx = m[0][0].context();
  UnivariatePoly chi(ctx, characteristic_polynomial(m));
  auto roots = univariate_roots_in_field(chi);
  out.unresolved = roots.unresolved;
  for (const auto& [lambda, mult] : roots.roots) {
    Matrix shifted = m;
    for (std::size_t i = 0; i < m.size(); ++i) shifted[i][i] -= lambda;
    Eigenspace space{lambda, kernel(shifted)};
    for (auto& v : space.basis) v = normalize_projective(v);
    out.spaces.push_back(std::move(space));
  }
  return out;
}

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

Vector monomial_row(const ProjectivePoint& p, int degree) {
  Vector row;
  for (const auto& e : monomials_of_degree(3, degree)) {
    Polynomial m = Polynomial::monomial(p[0].context(), 3, e, Scalar::one(p[0].context()));
    row.push_back(m.evaluate(p.coords()));
  }
  return row;
}

}  // namespace

GeneralPositionResult general_position_check(const std::vector<ProjectivePoint>& points) {
  if (points.empty() || points.size() > 8) throw Error(ErrorKind::BadParams, "expected between 1 and 8 points");
  for (const auto& p : points)
    if (p.size() != 3) throw Error(ErrorKind::ArityMismatch, "points must lie in P^2");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) {
        throw Error(ErrorKind::DuplicatePoints, "points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
      }
  GeneralPositionResult out;
  const std::size_t n = points.size();
  if (n >= 3) {
    std::vector<std::size_t> idx{0, 1, 2};
    do {
      Matrix m{points[idx[0]].coords(), points[idx[1]].coords(), points[idx[2]].coords()};
      if (determinant(m).is_zero()) {
        out.ok = false;
        out.violation = "collinear";
        out.witness = idx;
        return out;
      }
    } while (next_combination(idx, n));
  }
  if (n >= 6) {
    std::vector<std::size_t> idx{0, 1, 2, 3, 4, 5};
    do {
      Matrix m;
      for (auto i : idx) m.push_back(monomial_row(points[i], 2));
      if (rank(m) < 6) {
        out.ok = false;
        out.violation = "six_on_conic";
        out.witness = idx;
        return out;
      }
    } while (next_combination(idx, n));
  }
  if (n == 8) {
    const FieldPtr& ctx = points[0][0].context();
    const auto cubics = monomials_of_degree(3, 3);
    for (std::size_t p = 0; p < n; ++p) {
      Matrix m;
      for (std::size_t q = 0; q < n; ++q)
        if (q != p) m.push_back(monomial_row(points[q], 3));
      for (int v = 0; v < 3; ++v) {
        Vector row;
        for (const auto& e : cubics) {
          Polynomial mono = Polynomial::monomial(ctx, 3, e, Scalar::one(ctx));
          row.push_back(mono.derivative(v).evaluate(points[p].coords()));
        }
        m.push_back(std::move(row));
      }
      if (rank(m) < cubics.size()) {
        out.ok = false;
        out.violation = "cubic_with_double_point";
        out.witness = {p};
        return out;
      }
    }
  }
  return out;
}

}  // namespace kecert
