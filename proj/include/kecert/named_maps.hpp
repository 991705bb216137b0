#pragma once

// Constructors for the specific projectivities and Cremona maps used on
// blown-up planes.  Point indices are 1-based.

#include <vector>

#include "kecert/projgeom.hpp"

namespace kecert {

/// [X1 X2, X0 X2, X0 X1]
PolynomialMap standard_cremona(const FieldPtr& ctx);
/// [X_perm[0], ..., X_perm[n-1]]
PolynomialMap coordinate_permutation(const FieldPtr& ctx, const std::vector<int>& perm);
/// [X0, (-1)^i X1, (-1)^j X2]
PolynomialMap klein_four(const FieldPtr& ctx, int i, int j);

/// Matrix sending e1, e2, e3, [1,1,1] to the four given points; BadParams if three are collinear.
Matrix frame_matrix(const std::vector<ProjectivePoint>& four);
/// The projectivity sending P_k to P_images[k-1], checked on every point.
PolynomialMap point_permutation(const std::vector<ProjectivePoint>& points, const std::vector<int>& images);

/// Quadratic map fixing P_i whose base points are the other three (four points in total).
/// Cr_4 is the standard Cremona transported by the frame of P1..P4; Cr_i is Cr_4
/// conjugated by the projectivity exchanging P_i and P_4.
PolynomialMap cremona_fixing(const std::vector<ProjectivePoint>& points, int i);

/// Quadratic map with base points the three points outside {i, j}, exchanging P_i and P_j
/// (five points in total).
PolynomialMap cr_pair_swap(const std::vector<ProjectivePoint>& points, int i, int j);

/// sigma_1 is the cubic involution with a double base point at P_1, written in the
/// frame of P1..P4 with P_5 = [a, b, c]; sigma_j = Cr_1j o sigma_1.
PolynomialMap sigma(const std::vector<ProjectivePoint>& points, int j);

}  // namespace kecert
