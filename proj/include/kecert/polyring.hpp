#pragma once

// Sparse multivariate polynomials over Q(zeta_n) in at most four variables
// X0..X3.  Terms are kept in graded lexicographic order (X0 > X1 > X2 > X3),
// so the leading term is the last map entry.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kecert/numfield.hpp"

namespace kecert {

constexpr int kMaxVars = 4;
using Exponent = std::array<std::int16_t, kMaxVars>;

int exponent_degree(const Exponent& e);

struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Exponent, Scalar, GrlexLess>;

  Polynomial() = default;
  Polynomial(FieldPtr ctx, int num_vars);

  static Polynomial constant(const FieldPtr& ctx, int num_vars, const Scalar& c);
  static Polynomial constant(const FieldPtr& ctx, int num_vars, long c);
  static Polynomial variable(const FieldPtr& ctx, int num_vars, int index);
  static Polynomial monomial(const FieldPtr& ctx, int num_vars, const Exponent& e, const Scalar& c);

  const FieldPtr& context() const { return ctx_; }
  int num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(int var) const;
  int min_degree_in(int var) const;
  bool is_homogeneous() const;
  bool uses_var(int var) const { return degree_in(var) > 0; }

  Scalar coefficient(const Exponent& e) const;
  const Exponent& leading_exponent() const;
  const Scalar& leading_coefficient() const;
  Scalar constant_term() const;

  void add_term(const Exponent& e, const Scalar& c);
  /// this += c * X^shift * other
  void add_scaled(const Polynomial& other, const Scalar& c, const Exponent& shift);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned e) const;
  Scalar evaluate(const std::vector<Scalar>& point) const;
  /// f(g_0, ..., g_{k-1}) with no homogeneity requirements.
  Polynomial compose(const std::vector<Polynomial>& args) const;
  Polynomial derivative(int var) const;
  /// Sets X_var = value; the variable count is unchanged.
  Polynomial specialize(int var, const Scalar& value) const;
  Polynomial homogeneous_part(int degree) const;
  /// Homogenizes with respect to X_var up to the given total degree.
  Polynomial homogenize(int var, int degree) const;
  /// Scales so the grlex-leading coefficient is 1 (zero stays zero).
  Polynomial monic() const;
  /// Same terms viewed in a ring with a different variable count.
  Polynomial with_num_vars(int num_vars) const;
  /// Renames variables: X_i -> X_{perm[i]}.
  Polynomial permute_vars(const std::vector<int>& perm, int new_num_vars) const;

  /// Coefficients with respect to X_var, index = power; entries do not involve X_var.
  std::vector<Polynomial> coefficients_in(int var) const;
  static Polynomial from_coefficients_in(int var, const std::vector<Polynomial>& coeffs);

  std::string to_string() const;

 private:
  void check_same(const Polynomial& other) const;

  FieldPtr ctx_;
  int num_vars_ = 0;
  TermMap terms_;
};

Polynomial parse_polynomial(std::string_view text, const FieldPtr& ctx, int num_vars);

/// f(components) for homogeneous components of a common degree.
Polynomial substitute_map(const Polynomial& f, const std::vector<Polynomial>& components);

/// Exact quotient f / g, or nullopt when g does not divide f.
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g);

/// Monic greatest common divisor (gcd(0, 0) = 0).
Polynomial gcd(const Polynomial& f, const Polynomial& g);
/// gcd for homogeneous inputs; pulls out the X0 power and works in the X0 = 1 chart.
Polynomial gcd_homogeneous(const Polynomial& f, const Polynomial& g);
Polynomial gcd_all(const std::vector<Polynomial>& polys);

/// Content with respect to X_var (gcd of the coefficients) and the primitive part.
Polynomial content_in(const Polynomial& f, int var);
Polynomial primitive_part_in(const Polynomial& f, int var);

/// Sylvester resultant with respect to X_var (degrees taken in X_var).
Polynomial resultant(const Polynomial& f, const Polynomial& g, int var);
/// Resultant of homogeneous forms; DegenerateLeadingForm when neither form
/// reaches its total degree in X_var.
Polynomial resultant_eliminate(const Polynomial& f, const Polynomial& g, int var);

/// Quotient q with g = q f, found by solving for q's coefficients.
std::optional<Polynomial> divides_as_factor(const Polynomial& f, const Polynomial& g);

/// All exponent vectors of the given total degree in num_vars variables, grlex ascending.
std::vector<Exponent> monomials_of_degree(int num_vars, int degree);

}  // namespace kecert
