#pragma once

// Exact arithmetic in the cyclotomic fields Q(zeta_n).
//
// Elements are stored in the power basis 1, z, ..., z^(phi(n)-1) with z a
// primitive n-th root of unity, always reduced modulo the n-th cyclotomic
// polynomial.  Because the representation is canonical, equality is a plain
// coordinate comparison.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kecert/error.hpp"

namespace kecert {

using Integer = mpz_class;
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

class FieldContext {
 public:
  /// Shared context for conductor n (cached; thread-safe).
  static std::shared_ptr<const FieldContext> get(int conductor);

  int conductor() const { return conductor_; }
  int degree() const { return degree_; }
  /// Coefficients of Phi_n, lowest degree first (monic, integer).
  const std::vector<long>& minimal_polynomial() const { return minpoly_; }

  /// z^k in the power basis, for 0 <= k < power_count().
  const std::vector<long>& power_row(int k) const { return power_rows_[static_cast<std::size_t>(k)]; }
  int power_count() const { return static_cast<int>(power_rows_.size()); }

  explicit FieldContext(int conductor);

 private:
  int conductor_;
  int degree_;
  std::vector<long> minpoly_;
  std::vector<std::vector<long>> power_rows_;
};

using FieldPtr = std::shared_ptr<const FieldContext>;

/// Euler totient.
int euler_phi(int n);
/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<long> cyclotomic_polynomial(int n);

class CyclotomicElement {
 public:
  CyclotomicElement() = default;
  explicit CyclotomicElement(FieldPtr ctx);  // zero
  CyclotomicElement(FieldPtr ctx, const Rational& q);
  CyclotomicElement(FieldPtr ctx, std::vector<Rational> coords);

  static CyclotomicElement zero(const FieldPtr& ctx) { return CyclotomicElement(ctx); }
  static CyclotomicElement one(const FieldPtr& ctx) { return CyclotomicElement(ctx, Rational(1)); }
  /// z^k for any integer k (negative allowed).
  static CyclotomicElement root_of_unity(const FieldPtr& ctx, long k);

  const FieldPtr& context() const { return ctx_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the element lies in Q (only the constant coordinate may be nonzero).
  bool is_rational() const;
  const Rational& rational_part() const { return coords_[0]; }

  CyclotomicElement operator-() const;
  CyclotomicElement& operator+=(const CyclotomicElement& other);
  CyclotomicElement& operator-=(const CyclotomicElement& other);
  CyclotomicElement& operator*=(const CyclotomicElement& other);
  CyclotomicElement& operator*=(const Rational& q);

  friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
  friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
  friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator*(CyclotomicElement a, const Rational& q) { return a *= q; }
  friend CyclotomicElement operator/(const CyclotomicElement& a, const CyclotomicElement& b);

  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);
  friend bool operator!=(const CyclotomicElement& a, const CyclotomicElement& b) { return !(a == b); }
  /// Arbitrary but fixed total order (coordinate-lexicographic), for canonical sorting.
  friend bool operator<(const CyclotomicElement& a, const CyclotomicElement& b);

  CyclotomicElement inverse() const;
  CyclotomicElement pow(long e) const;
  /// Image under the Galois automorphism z -> z^k (gcd(k, n) = 1).
  CyclotomicElement galois(long k) const;

  /// Square root inside the field, if one exists and can be certified.
  std::optional<CyclotomicElement> sqrt() const;

  /// Text form over the symbol "z", e.g. "1+z^3" or "-1/2*z^2".
  std::string to_string() const;
  /// True when to_string() is a single signed rational (no z).
  bool prints_as_atom() const;

 private:
  void check_same(const CyclotomicElement& other) const;

  FieldPtr ctx_;
  std::vector<Rational> coords_;
};

using Scalar = CyclotomicElement;

Scalar embed_rational(const Rational& q, const FieldPtr& ctx);
/// Parses the text encoding used in configs ("1+z^3", "-3/7", "(1+z)*z^2").
Scalar parse_element(std::string_view text, const FieldPtr& ctx);

/// Primitive square root of a rational inside Q(zeta_n) built from Gauss sums.
std::optional<Scalar> sqrt_rational(const Rational& q, const FieldPtr& ctx);

}  // namespace kecert
