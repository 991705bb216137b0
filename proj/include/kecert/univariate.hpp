#pragma once

// Dense univariate polynomials over Q(zeta_n) and root finding inside the field.

#include <string>
#include <utility>
#include <vector>

#include "kecert/numfield.hpp"
#include "kecert/polyring.hpp"

namespace kecert {

class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(FieldPtr ctx) : ctx_(std::move(ctx)) {}
  UnivariatePoly(FieldPtr ctx, std::vector<Scalar> coeffs);

  static UnivariatePoly constant(const FieldPtr& ctx, const Scalar& c);
  /// x - root
  static UnivariatePoly linear(const Scalar& root);

  const FieldPtr& context() const { return ctx_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& leading() const { return coeffs_.back(); }
  Scalar coeff(int k) const;

  UnivariatePoly operator-() const;
  friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b);
  friend UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b);
  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
  friend UnivariatePoly operator*(const UnivariatePoly& a, const Scalar& c);
  friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UnivariatePoly& a, const UnivariatePoly& b) { return !(a == b); }

  /// Quotient and remainder.
  std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& d) const;
  UnivariatePoly monic() const;
  UnivariatePoly derivative() const;
  Scalar evaluate(const Scalar& x) const;
  /// Image under z -> z^k on every coefficient.
  UnivariatePoly galois(long k) const;
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  FieldPtr ctx_;
  std::vector<Scalar> coeffs_;
};

UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b);

/// Squarefree decomposition: pairs (factor, multiplicity) with monic squarefree factors.
std::vector<std::pair<UnivariatePoly, int>> squarefree_decomposition(const UnivariatePoly& p);

/// Converts a polynomial that only involves X_var.
UnivariatePoly to_univariate(const Polynomial& f, int var);
Polynomial from_univariate(const UnivariatePoly& p, int var, int num_vars);

struct RootResult {
  std::vector<std::pair<Scalar, int>> roots;  // sorted by the canonical element order
  bool unresolved = false;                   // some nonconstant factor had no certified split
};

/// Roots of p lying in Q(zeta_n): rational multiples of roots of unity, plus
/// closed forms for leftover factors of degree at most two.
RootResult univariate_roots_in_field(const UnivariatePoly& p);

/// Rational roots of an integer polynomial (lowest degree first), found
/// p-adically and certified by exact evaluation.
std::vector<Rational> rational_roots(const std::vector<Integer>& coeffs);

}  // namespace kecert
