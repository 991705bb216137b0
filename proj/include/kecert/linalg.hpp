#pragma once

// Dense linear algebra over the cyclotomic field.  Plain Gaussian elimination;
// the arithmetic is exact, so any nonzero pivot will do.

#include <optional>
#include <vector>

#include "kecert/numfield.hpp"

namespace kecert {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;

Matrix identity_matrix(const FieldPtr& ctx, std::size_t n);
Matrix zero_matrix(const FieldPtr& ctx, std::size_t rows, std::size_t cols);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Vector mat_vec(const Matrix& a, const Vector& v);
Matrix transpose(const Matrix& a);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);
std::size_t rank(Matrix m);
Scalar determinant(Matrix m);
/// Basis of the right null space.
std::vector<Vector> kernel(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// Some solution of a x = b, if consistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

bool is_scalar_matrix(const Matrix& m);
/// Characteristic polynomial det(x I - m), lowest degree first.
std::vector<Scalar> characteristic_polynomial(const Matrix& m);

}  // namespace kecert
