#pragma once

// Exact decisions about common zeros of polynomial systems over the algebraic
// closure of Q(zeta_n).
//
// Elimination works chart by chart.  To project out the last variable y from
// g_1, ..., g_k we shear so that g_1 has a constant leading coefficient in y
// and form R_t = Res_y(g_1, sum_j t^j g_j).  For fixed values of the other
// variables, R_t vanishes identically in t exactly when all g_j share a root
// with g_1, and R_t has t-degree at most deg(g_1) (k - 1), so that many + 1
// sample values of t cut out the projection exactly.

#include <optional>
#include <string>
#include <vector>

#include "kecert/polyring.hpp"
#include "kecert/univariate.hpp"

namespace kecert {

using PointCoords = std::vector<Scalar>;

/// Scales so the first nonzero coordinate is 1; throws BadParams for the zero vector.
PointCoords normalize_projective(const PointCoords& p);

enum class ZeroSetKind { empty, finite_nonempty, positive_dimensional };

struct ZeroSetDecision {
  ZeroSetKind kind = ZeroSetKind::empty;
  std::optional<PointCoords> witness;  // present when a field-rational witness was found
  std::string evidence;
};

/// Common zeros in affine 2-space of polynomials in (X0, X1), outside the excluded points.
ZeroSetDecision decide_affine_zeros(const std::vector<Polynomial>& polys, const std::vector<PointCoords>& excluded);

/// Common projective zeros of forms in three variables, outside the excluded points.
ZeroSetDecision decide_common_zeros(const std::vector<Polynomial>& forms, const std::vector<PointCoords>& excluded);

struct PointSolveResult {
  std::vector<PointCoords> points;  // normalized, sorted
  bool unresolved = false;          // some common zero is not rational over the field
  bool positive_dimensional = false;
};

/// All field-rational common projective zeros of forms in three variables.
PointSolveResult solve_points(const std::vector<Polynomial>& forms);

/// Polynomials in the first n-1 variables whose common zeros are exactly the
/// projection of the common zeros of polys (in n variables) along the last
/// variable, after the shear X_i -> X_i + shear_i X_{n-1} recorded in the result.
struct Projection {
  std::vector<Polynomial> eliminants;
  std::vector<Scalar> shear;
  bool contains_nonzero_constant = false;
};
Projection project_out_last(const std::vector<Polynomial>& polys);

struct SmoothnessResult {
  bool smooth = false;
  bool squarefree = true;
  std::string certificate;
};

/// Plane curve f(X0, X1, X2) = 0 is smooth iff f and its partials have no common zero.
SmoothnessResult is_smooth_plane_curve(const Polynomial& f);
/// Same test for a surface F(Z0..Z3) = 0 in projective 3-space.
SmoothnessResult is_smooth_surface(const Polynomial& f);

}  // namespace kecert
