#pragma once

// Projective points, polynomial self-maps of P^2 and P^3, fixed loci and
// general-position tests.

#include <optional>
#include <string>
#include <vector>

#include "kecert/linalg.hpp"
#include "kecert/polyring.hpp"
#include "kecert/zero_set.hpp"

namespace kecert {

class ProjectivePoint {
 public:
  ProjectivePoint() = default;
  /// Normalizes so the first nonzero coordinate is 1.
  explicit ProjectivePoint(const std::vector<Scalar>& coords);

  const std::vector<Scalar>& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  /// Index of the first nonzero coordinate (which equals 1).
  std::size_t chart() const;
  std::string to_string() const;

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) { return !(a == b); }
  friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b);

 private:
  std::vector<Scalar> coords_;
};

class PolynomialMap {
 public:
  PolynomialMap() = default;
  /// Validates the components, strips their common factor and fixes the scale.
  explicit PolynomialMap(std::vector<Polynomial> components);

  static PolynomialMap identity(const FieldPtr& ctx, int num_vars);
  /// x -> M x
  static PolynomialMap from_matrix(const Matrix& m);

  const std::vector<Polynomial>& components() const { return components_; }
  const FieldPtr& context() const { return components_.front().context(); }
  int degree() const { return degree_; }
  int num_vars() const { return components_.front().num_vars(); }
  bool is_projectivity() const { return projectivity_; }
  /// Coefficient matrix of a degree-one map.
  Matrix matrix() const;
  /// Canonical text key; equal keys mean projectively equal maps.
  const std::string& key() const { return key_; }

  /// Raw component values; all zero at an indeterminacy point.
  std::vector<Scalar> evaluate(const std::vector<Scalar>& point) const;
  std::optional<ProjectivePoint> image(const ProjectivePoint& p) const;
  bool is_regular_at(const ProjectivePoint& p) const;
  /// X_i F_j - X_j F_i for i < j.
  std::vector<Polynomial> cross_polynomials() const;
  Polynomial jacobian_determinant() const;

 private:
  std::vector<Polynomial> components_;
  int degree_ = 0;
  bool projectivity_ = false;
  std::string key_;
};

/// Cross-minor test F_i G_j = F_j G_i.
bool proj_maps_equal(const PolynomialMap& f, const PolynomialMap& g);
bool is_identity_map(const PolynomialMap& f);
/// f o g
PolynomialMap compose_maps(const PolynomialMap& f, const PolynomialMap& g);
PolynomialMap inverse_projectivity(const PolynomialMap& f);

/// Differential of the dehomogenized map at p: source chart `chart`, target
/// chart `chart` when the image lies in it, otherwise the first nonzero image coordinate.
Matrix jacobian_matrix(const PolynomialMap& f, const ProjectivePoint& p, std::size_t chart);

struct IndeterminacyResult {
  std::vector<ProjectivePoint> points;
  bool unresolved = false;
};
IndeterminacyResult indeterminacy_locus(const PolynomialMap& f);

struct FixedPlanePoint {
  ProjectivePoint point;
  bool blown_up = false;
};

struct ExceptionalData {
  ProjectivePoint point;
  std::size_t chart = 0;
  Matrix differential;
  bool whole_curve = false;
  std::vector<ProjectivePoint> directions;  // fixed tangent directions in chart coordinates
  bool unresolved = false;
};

struct FixedLocus {
  bool identity_map = false;
  std::vector<FixedPlanePoint> plane_points;
  std::vector<Polynomial> curve_components;
  std::vector<ExceptionalData> exceptional;
  bool unresolved = false;
};

FixedLocus fixed_locus(const PolynomialMap& f, const std::vector<ProjectivePoint>& blown_up);

/// Linear factors of a form in three variables that split over the field, plus the cofactor.
struct CurveSplit {
  std::vector<Polynomial> factors;  // monic; the last entry may be a reducible leftover
  bool unresolved = false;
};
CurveSplit split_plane_curve(const Polynomial& f);

struct Eigenspace {
  Scalar eigenvalue;
  std::vector<Vector> basis;
};
struct EigenResult {
  std::vector<Eigenspace> spaces;
  bool unresolved = false;
};
EigenResult projectivity_fixed_points(const Matrix& m);

struct GeneralPositionResult {
  bool ok = true;
  std::string violation;            // collinear, six_on_conic, cubic_with_double_point
  std::vector<std::size_t> witness; // point indices (0-based)
};
GeneralPositionResult general_position_check(const std::vector<ProjectivePoint>& points);

}  // namespace kecert
