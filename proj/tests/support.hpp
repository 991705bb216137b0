#pragma once

#include <random>
#include <string>

#include "kecert/nadel.hpp"
#include "kecert/named_maps.hpp"

namespace kecert::testing {

inline FieldPtr field(int n = 12) { return FieldContext::get(n); }

inline Scalar z(const FieldPtr& k, long e) { return Scalar::root_of_unity(k, e); }
inline Scalar q(const FieldPtr& k, long num, long den = 1) { return Scalar(k, Rational(num, den)); }

inline Polynomial poly(const std::string& text, int vars = 3, int n = 12) { return parse_polynomial(text, field(n), vars); }

inline ProjectivePoint pt(const FieldPtr& k, std::initializer_list<long> c) {
  std::vector<Scalar> v;
  for (long x : c) v.push_back(q(k, x));
  return ProjectivePoint(v);
}

inline ProjectivePoint spt(const FieldPtr& k, std::initializer_list<const char*> c) {
  std::vector<Scalar> v;
  for (const char* x : c) v.push_back(parse_element(x, k));
  return ProjectivePoint(v);
}

inline std::vector<ProjectivePoint> standard_points(const FieldPtr& k, int r) {
  std::vector<ProjectivePoint> p{pt(k, {1, 0, 0}), pt(k, {0, 1, 0}), pt(k, {0, 0, 1}), pt(k, {1, 1, 1}), pt(k, {2, 3, 5})};
  p.resize(static_cast<std::size_t>(r));
  return p;
}

// Small random elements: coordinates p/q with |p| <= 9, 1 <= q <= 4.
class Random {
 public:
  explicit Random(unsigned seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  Scalar element(const FieldPtr& k) {
    std::vector<Rational> c;
    for (int i = 0; i < k->degree(); ++i) c.emplace_back(integer(-9, 9), integer(1, 4));
    for (auto& x : c) x.canonicalize();
    return Scalar(k, c);
  }

  Scalar small_element(const FieldPtr& k) {
    std::vector<Rational> c(static_cast<std::size_t>(k->degree()), Rational(0));
    c[0] = integer(-3, 3);
    c[static_cast<std::size_t>(integer(0, k->degree() - 1))] += integer(-2, 2);
    return Scalar(k, c);
  }

  // Random homogeneous form of the given degree with a few terms.
  Polynomial form(const FieldPtr& k, int vars, int degree, int terms = 4) {
    auto mons = monomials_of_degree(vars, degree);
    Polynomial f(k, vars);
    while (f.is_zero()) {
      for (int t = 0; t < terms; ++t) {
        f.add_term(mons[static_cast<std::size_t>(integer(0, static_cast<long>(mons.size()) - 1))], small_element(k));
      }
    }
    return f;
  }

 private:
  std::mt19937 gen_;
};

inline nlohmann::json scenario(const std::string& name) {
  return read_json_file(std::string(KECERT_SCENARIO_DIR) + "/" + name + ".json");
}

}  // namespace kecert::testing
