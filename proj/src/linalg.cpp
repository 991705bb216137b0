#include "kecert/linalg.hpp"

namespace kecert {

Matrix identity_matrix(const FieldPtr& ctx, std::size_t n) {
  Matrix m = zero_matrix(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar::one(ctx);
  return m;
}

Matrix zero_matrix(const FieldPtr& ctx, std::size_t rows, std::size_t cols) {
  return Matrix(rows, Vector(cols, Scalar::zero(ctx)));
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.empty() || b.empty()) return {};
  if (a[0].size() != b.size()) throw Error(ErrorKind::ArityMismatch, "matrix shapes do not compose");
  const FieldPtr& ctx = a[0][0].context();
  Matrix c = zero_matrix(ctx, a.size(), b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Vector mat_vec(const Matrix& a, const Vector& v) {
  if (a.empty()) return {};
  if (a[0].size() != v.size()) throw Error(ErrorKind::ArityMismatch, "matrix and vector sizes differ");
  Vector out(a.size(), Scalar::zero(v.front().context()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!a[i][j].is_zero() && !v[j].is_zero()) out[i] += a[i][j] * v[j];
  return out;
}

Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix t(a[0].size(), Vector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Scalar inv = m[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!m[r][j].is_zero()) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

Scalar determinant(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(ErrorKind::BadParams, "determinant of empty matrix");
  const FieldPtr ctx = m[0][0].context();
  Scalar det = Scalar::one(ctx);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return Scalar::zero(ctx);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    Scalar inv = m[c][c].inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      Scalar f = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!m[c][j].is_zero()) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::vector<Vector> kernel(const Matrix& m) {
  std::vector<Vector> basis;
  if (m.empty()) return basis;
  Matrix r = m;
  const std::size_t cols = m[0].size();
  auto pivots = row_reduce(r);
  const FieldPtr ctx = m[0][0].context();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, Scalar::zero(ctx));
    v[free] = Scalar::one(ctx);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Matrix{};
  const FieldPtr ctx = m[0][0].context();
  Matrix aug = zero_matrix(ctx, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = Scalar::one(ctx);
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv = zero_matrix(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ArityMismatch, "right-hand side length");
  if (a.empty()) return Vector{};
  const std::size_t cols = a[0].size();
  const FieldPtr ctx = b[0].context();
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vector x(cols, Scalar::zero(ctx));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][cols];
  return x;
}

bool is_scalar_matrix(const Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i != j && !m[i][j].is_zero()) return false;
      if (i == j && m[i][i] != m[0][0]) return false;
    }
  return true;
}

std::vector<Scalar> characteristic_polynomial(const Matrix& m) {
  // Faddeev-LeVerrier; exact division by k is fine in characteristic zero.
  const std::size_t n = m.size();
  const FieldPtr ctx = m[0][0].context();
  std::vector<Scalar> c(n + 1, Scalar::zero(ctx));
  c[n] = Scalar::one(ctx);
  Matrix mk = zero_matrix(ctx, n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix am = mat_mul(m, mk);
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    mk = std::move(am);
    Matrix prod = mat_mul(m, mk);
    Scalar tr = Scalar::zero(ctx);
    for (std::size_t i = 0; i < n; ++i) tr += prod[i][i];
    c[n - k] = -tr * Rational(1, static_cast<long>(k));
  }
  return c;
}

}  // namespace kecert
