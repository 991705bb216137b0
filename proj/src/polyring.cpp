#include "kecert/polyring.hpp"

#include <algorithm>
#include <functional>

#include "kecert/expr_parser.hpp"
#include "kecert/linalg.hpp"

namespace kecert {

int exponent_degree(const Exponent& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  int da = exponent_degree(a);
  int db = exponent_degree(b);
  if (da != db) return da < db;
  return a < b;
}

namespace {

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent r{};
  for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::int16_t>(a[i] + b[i]);
  return r;
}

bool divides_exponent(const Exponent& a, const Exponent& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent sub_exponents(const Exponent& b, const Exponent& a) {
  Exponent r{};
  for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::int16_t>(b[i] - a[i]);
  return r;
}

}  // namespace

Polynomial::Polynomial(FieldPtr ctx, int num_vars) : ctx_(std::move(ctx)), num_vars_(num_vars) {
  if (num_vars < 0 || num_vars > kMaxVars) throw Error(ErrorKind::ArityMismatch, "unsupported variable count");
}

Polynomial Polynomial::constant(const FieldPtr& ctx, int num_vars, const Scalar& c) {
  Polynomial p(ctx, num_vars);
  p.add_term(Exponent{}, c);
  return p;
}

Polynomial Polynomial::constant(const FieldPtr& ctx, int num_vars, long c) {
  return constant(ctx, num_vars, Scalar(ctx, Rational(c)));
}

Polynomial Polynomial::variable(const FieldPtr& ctx, int num_vars, int index) {
  if (index < 0 || index >= num_vars) throw Error(ErrorKind::ArityMismatch, "variable index out of range");
  Exponent e{};
  e[static_cast<std::size_t>(index)] = 1;
  return monomial(ctx, num_vars, e, Scalar::one(ctx));
}

Polynomial Polynomial::monomial(const FieldPtr& ctx, int num_vars, const Exponent& e, const Scalar& c) {
  Polynomial p(ctx, num_vars);
  p.add_term(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && exponent_degree(terms_.begin()->first) == 0);
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return exponent_degree(terms_.rbegin()->first);
}

int Polynomial::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[static_cast<std::size_t>(var)]));
  return d;
}

int Polynomial::min_degree_in(int var) const {
  if (terms_.empty()) return 0;
  int d = 1 << 15;
  for (const auto& [e, c] : terms_) d = std::min(d, static_cast<int>(e[static_cast<std::size_t>(var)]));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree();
  for (const auto& [e, c] : terms_)
    if (exponent_degree(e) != d) return false;
  return true;
}

Scalar Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(ctx_) : it->second;
}

const Exponent& Polynomial::leading_exponent() const {
  if (terms_.empty()) throw Error(ErrorKind::BadParams, "leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const Scalar& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorKind::BadParams, "leading term of zero polynomial");
  return terms_.rbegin()->second;
}

Scalar Polynomial::constant_term() const { return coefficient(Exponent{}); }

void Polynomial::add_term(const Exponent& e, const Scalar& c) {
  if (c.is_zero()) return;
  for (int i = num_vars_; i < kMaxVars; ++i)
    if (e[static_cast<std::size_t>(i)] != 0) throw Error(ErrorKind::ArityMismatch, "exponent uses a missing variable");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::add_scaled(const Polynomial& other, const Scalar& c, const Exponent& shift) {
  check_same(other);
  for (const auto& [e, v] : other.terms_) add_term(add_exponents(e, shift), v * c);
}

void Polynomial::check_same(const Polynomial& other) const {
  if (num_vars_ != other.num_vars_) {
    throw Error(ErrorKind::ArityMismatch, "polynomials in " + std::to_string(num_vars_) + " and " +
                                              std::to_string(other.num_vars_) + " variables");
  }
  if (ctx_ && other.ctx_ && ctx_->conductor() != other.ctx_->conductor()) {
    throw Error(ErrorKind::ContextMismatch, "polynomials over different fields");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same(b);
  Polynomial r(a.ctx_, a.num_vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(add_exponents(ea, eb), ca * cb);
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  a.check_same(b);
  return a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ctx_, num_vars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
  if (static_cast<int>(point.size()) != num_vars_) throw Error(ErrorKind::ArityMismatch, "point dimension");
  Scalar sum = Scalar::zero(ctx_);
  std::vector<std::vector<Scalar>> powers(point.size());
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < point.size(); ++i) {
      auto k = static_cast<std::size_t>(e[i]);
      if (k == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Scalar::one(ctx_));
      while (pw.size() <= k) pw.push_back(pw.back() * point[i]);
      t *= pw[k];
    }
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& args) const {
  if (static_cast<int>(args.size()) != num_vars_) {
    throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(num_vars_) + " substitutions, got " +
                                              std::to_string(args.size()));
  }
  if (args.empty()) return *this;
  const int out_vars = args[0].num_vars();
  for (const auto& a : args)
    if (a.num_vars() != out_vars) throw Error(ErrorKind::ArityMismatch, "substituted polynomials disagree on arity");
  Polynomial result(ctx_, out_vars);
  std::vector<std::vector<Polynomial>> powers(args.size());
  for (const auto& [e, c] : terms_) {
    Polynomial t = constant(ctx_, out_vars, c);
    for (std::size_t i = 0; i < args.size(); ++i) {
      auto k = static_cast<std::size_t>(e[i]);
      if (k == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(ctx_, out_vars, 1));
      while (pw.size() <= k) pw.push_back(pw.back() * args[i]);
      t = t * pw[k];
    }
    result += t;
  }
  return result;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial r(ctx_, num_vars_);
  auto v = static_cast<std::size_t>(var);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponent d = e;
    d[v] = static_cast<std::int16_t>(d[v] - 1);
    r.add_term(d, c * Rational(e[v]));
  }
  return r;
}

Polynomial Polynomial::specialize(int var, const Scalar& value) const {
  Polynomial r(ctx_, num_vars_);
  auto v = static_cast<std::size_t>(var);
  std::vector<Scalar> powers{Scalar::one(ctx_)};
  for (const auto& [e, c] : terms_) {
    auto k = static_cast<std::size_t>(e[v]);
    while (powers.size() <= k) powers.push_back(powers.back() * value);
    Exponent d = e;
    d[v] = 0;
    r.add_term(d, c * powers[k]);
  }
  return r;
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial r(ctx_, num_vars_);
  for (const auto& [e, c] : terms_)
    if (exponent_degree(e) == degree) r.terms_.emplace(e, c);
  return r;
}

Polynomial Polynomial::homogenize(int var, int degree) const {
  Polynomial r(ctx_, num_vars_);
  auto v = static_cast<std::size_t>(var);
  for (const auto& [e, c] : terms_) {
    int missing = degree - exponent_degree(e);
    if (missing < 0) throw Error(ErrorKind::BadParams, "homogenization degree too small");
    Exponent h = e;
    h[v] = static_cast<std::int16_t>(h[v] + missing);
    r.add_term(h, c);
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || leading_coefficient().is_one()) return *this;
  return *this * leading_coefficient().inverse();
}

Polynomial Polynomial::with_num_vars(int num_vars) const {
  Polynomial r(ctx_, num_vars);
  for (const auto& [e, c] : terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::permute_vars(const std::vector<int>& perm, int new_num_vars) const {
  Polynomial r(ctx_, new_num_vars);
  for (const auto& [e, c] : terms_) {
    Exponent f{};
    for (int i = 0; i < num_vars_; ++i) {
      auto k = static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]);
      f[k] = static_cast<std::int16_t>(f[k] + e[static_cast<std::size_t>(i)]);
    }
    r.add_term(f, c);
  }
  return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(int var) const {
  auto v = static_cast<std::size_t>(var);
  std::vector<Polynomial> out;
  int deg = degree_in(var);
  if (deg < 0) return out;
  out.assign(static_cast<std::size_t>(deg) + 1, Polynomial(ctx_, num_vars_));
  for (const auto& [e, c] : terms_) {
    Exponent d = e;
    d[v] = 0;
    out[static_cast<std::size_t>(e[v])].terms_.emplace(d, c);
  }
  return out;
}

Polynomial Polynomial::from_coefficients_in(int var, const std::vector<Polynomial>& coeffs) {
  if (coeffs.empty()) throw Error(ErrorKind::BadParams, "empty coefficient list");
  Polynomial r(coeffs[0].ctx_, coeffs[0].num_vars_);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Exponent shift{};
    shift[static_cast<std::size_t>(var)] = static_cast<std::int16_t>(k);
    r.add_scaled(coeffs[k], Scalar::one(r.ctx_), shift);
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int i = 0; i < num_vars_; ++i) {
      int k = e[static_cast<std::size_t>(i)];
      if (k == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "X" + std::to_string(i);
      if (k > 1) mono += "^" + std::to_string(k);
    }
    std::string coeff = c.prints_as_atom() ? c.to_string() : "(" + c.to_string() + ")";
    std::string term;
    if (mono.empty()) {
      term = coeff;
    } else if (c.is_one()) {
      term = mono;
    } else if (c.is_rational() && c.rational_part() == -1) {
      term = "-" + mono;
    } else {
      term = coeff + "*" + mono;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

namespace {

struct PolynomialOps {
  using Value = Polynomial;
  FieldPtr ctx;
  int num_vars;
  Value constant(const Rational& q) const { return Polynomial::constant(ctx, num_vars, Scalar(ctx, q)); }
  Value symbol(std::string_view name) const {
    if (name == "z") return Polynomial::constant(ctx, num_vars, Scalar::root_of_unity(ctx, 1));
    if (name.size() == 2 && name[0] == 'X' && name[1] >= '0' && name[1] < '0' + num_vars) {
      return Polynomial::variable(ctx, num_vars, name[1] - '0');
    }
    throw Error(ErrorKind::ParseError, "unknown symbol \"" + std::string(name) + "\"");
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }
  Value divide(const Value& a, const Value& b) const {
    if (!b.is_constant() || b.is_zero()) throw Error(ErrorKind::ParseError, "division only by nonzero constants");
    return a * b.constant_term().inverse();
  }
  Value pow(const Value& a, long e) const { return a.pow(static_cast<unsigned>(e)); }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const FieldPtr& ctx, int num_vars) {
  return detail::parse_expression(text, PolynomialOps{ctx, num_vars});
}

Polynomial substitute_map(const Polynomial& f, const std::vector<Polynomial>& components) {
  if (static_cast<int>(components.size()) != f.num_vars()) {
    throw Error(ErrorKind::ArityMismatch, "component count does not match variable count");
  }
  int degree = -1;
  for (const auto& g : components) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous() || (degree >= 0 && g.total_degree() != degree)) {
      throw Error(ErrorKind::InhomogeneousComponents, "components must be forms of one degree");
    }
    degree = g.total_degree();
  }
  return f.compose(components);
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  Polynomial q(f.context(), f.num_vars());
  if (f.is_zero()) return q;
  if (g.is_constant()) return f * g.constant_term().inverse();
  Polynomial r = f;
  const Exponent& lg = g.leading_exponent();
  const Scalar inv = g.leading_coefficient().inverse();
  while (!r.is_zero()) {
    const Exponent lr = r.leading_exponent();
    if (!divides_exponent(lg, lr)) return std::nullopt;
    Exponent shift = sub_exponents(lr, lg);
    Scalar c = r.leading_coefficient() * inv;
    q.add_term(shift, c);
    r.add_scaled(g, -c, shift);
  }
  return q;
}

namespace {

Polynomial must_divide(const Polynomial& f, const Polynomial& g) {
  auto q = exact_divide(f, g);
  if (!q) throw Error(ErrorKind::BadParams, "internal: expected exact division");
  return *q;
}

int main_var(const Polynomial& f, const Polynomial& g) {
  for (int v = f.num_vars() - 1; v >= 0; --v)
    if (f.uses_var(v) || g.uses_var(v)) return v;
  return -1;
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, int var) {
  auto v = static_cast<std::size_t>(var);
  const int db = b.degree_in(var);
  auto bc = b.coefficients_in(var);
  const Polynomial& lcb = bc.back();
  const bool field_lead = lcb.is_constant();
  const Scalar lcb_inv = field_lead ? lcb.constant_term().inverse() : Scalar();
  Polynomial r = a;
  while (!r.is_zero()) {
    int dr = r.degree_in(var);
    if (dr < db) break;
    Polynomial lcr = r.coefficients_in(var).back();
    Exponent shift{};
    shift[v] = static_cast<std::int16_t>(dr - db);
    if (field_lead) {
      Polynomial t = lcr * lcb_inv;
      Polynomial sb(b.context(), b.num_vars());
      sb.add_scaled(b, Scalar::one(b.context()), shift);
      r -= t * sb;
    } else {
      Polynomial sb(b.context(), b.num_vars());
      sb.add_scaled(b, Scalar::one(b.context()), shift);
      r = lcb * r - lcr * sb;
    }
  }
  return r;
}

}  // namespace

Polynomial content_in(const Polynomial& f, int var) {
  auto coeffs = f.coefficients_in(var);
  Polynomial c(f.context(), f.num_vars());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    if (it->is_zero()) continue;
    c = gcd(c, *it);
    if (c.is_constant()) break;
  }
  return c;
}

Polynomial primitive_part_in(const Polynomial& f, int var) {
  if (f.is_zero()) return f;
  return must_divide(f, content_in(f, var)).monic();
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  if (f.num_vars() != g.num_vars()) throw Error(ErrorKind::ArityMismatch, "gcd arity");
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  const FieldPtr& ctx = f.context();
  const int nv = f.num_vars();
  const int v = main_var(f, g);
  if (v < 0 || f.is_constant() || g.is_constant()) return Polynomial::constant(ctx, nv, 1);
  if (!f.uses_var(v)) return gcd(f, content_in(g, v));
  if (!g.uses_var(v)) return gcd(content_in(f, v), g);

  Polynomial cf = content_in(f, v);
  Polynomial cg = content_in(g, v);
  Polynomial c = gcd(cf, cg);
  Polynomial a = must_divide(f, cf).monic();
  Polynomial b = must_divide(g, cg).monic();
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  for (;;) {
    Polynomial r = pseudo_remainder(a, b, v);
    if (r.is_zero()) break;
    if (!r.uses_var(v)) return c.monic();
    a = std::move(b);
    b = primitive_part_in(r, v);
  }
  return (c * primitive_part_in(b, v)).monic();
}

Polynomial gcd_homogeneous(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (!f.is_homogeneous() || !g.is_homogeneous() || f.num_vars() < 2) return gcd(f, g);
  const FieldPtr& ctx = f.context();
  const int nv = f.num_vars();
  const int a = f.min_degree_in(0);
  const int b = g.min_degree_in(0);
  Exponent down_a{};
  down_a[0] = static_cast<std::int16_t>(-a);
  Exponent down_b{};
  down_b[0] = static_cast<std::int16_t>(-b);
  Polynomial fr(ctx, nv);
  fr.add_scaled(f, Scalar::one(ctx), down_a);
  Polynomial gr(ctx, nv);
  gr.add_scaled(g, Scalar::one(ctx), down_b);
  Polynomial h = gcd(fr.specialize(0, Scalar::one(ctx)), gr.specialize(0, Scalar::one(ctx)));
  Polynomial result = h.homogenize(0, h.total_degree());
  Exponent up{};
  up[0] = static_cast<std::int16_t>(std::min(a, b));
  Polynomial shifted(ctx, nv);
  shifted.add_scaled(result, Scalar::one(ctx), up);
  return shifted.monic();
}

Polynomial gcd_all(const std::vector<Polynomial>& polys) {
  if (polys.empty()) throw Error(ErrorKind::BadParams, "gcd of an empty family");
  Polynomial g(polys[0].context(), polys[0].num_vars());
  bool homogeneous = true;
  for (const auto& p : polys) homogeneous = homogeneous && p.is_homogeneous();
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    g = homogeneous ? gcd_homogeneous(g, p) : gcd(g, p);
    if (g.is_constant()) break;
  }
  return g;
}

namespace {

Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m, const FieldPtr& ctx, int nv) {
  const std::size_t n = m.size();
  Polynomial prev = Polynomial::constant(ctx, nv, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return Polynomial(ctx, nv);
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = must_divide(t, prev);
      }
      m[i][k] = Polynomial(ctx, nv);
    }
    prev = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace

Polynomial resultant(const Polynomial& f, const Polynomial& g, int var) {
  if (f.num_vars() != g.num_vars()) throw Error(ErrorKind::ArityMismatch, "resultant arity");
  const FieldPtr& ctx = f.context();
  const int nv = f.num_vars();
  if (f.is_zero() || g.is_zero()) return Polynomial(ctx, nv);
  const int m = f.degree_in(var);
  const int n = g.degree_in(var);
  if (m == 0 && n == 0) return Polynomial::constant(ctx, nv, 1);
  if (m == 0) return f.pow(static_cast<unsigned>(n));
  if (n == 0) return g.pow(static_cast<unsigned>(m));
  auto fc = f.coefficients_in(var);
  auto gc = g.coefficients_in(var);
  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Polynomial>> syl(size, std::vector<Polynomial>(size, Polynomial(ctx, nv)));
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
    for (std::size_t k = 0; k <= static_cast<std::size_t>(m); ++k) syl[i][i + k] = fc[static_cast<std::size_t>(m) - k];
  for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i)
    for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k)
      syl[static_cast<std::size_t>(n) + i][i + k] = gc[static_cast<std::size_t>(n) - k];
  return bareiss_determinant(std::move(syl), ctx, nv);
}

Polynomial resultant_eliminate(const Polynomial& f, const Polynomial& g, int var) {
  if (f.num_vars() != g.num_vars()) throw Error(ErrorKind::ArityMismatch, "resultant arity");
  if (f.degree_in(var) < f.total_degree() && g.degree_in(var) < g.total_degree()) {
    throw Error(ErrorKind::DegenerateLeadingForm,
                "neither form has a constant leading coefficient in X" + std::to_string(var));
  }
  return resultant(f, g, var);
}

std::vector<Exponent> monomials_of_degree(int num_vars, int degree) {
  std::vector<Exponent> out;
  if (degree < 0) return out;
  Exponent e{};
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == num_vars - 1) {
      e[static_cast<std::size_t>(var)] = static_cast<std::int16_t>(left);
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(var)] = static_cast<std::int16_t>(k);
      rec(var + 1, left - k);
    }
    e[static_cast<std::size_t>(var)] = 0;
  };
  if (num_vars == 0) {
    if (degree == 0) out.push_back(e);
    return out;
  }
  rec(0, degree);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

std::optional<Polynomial> divides_as_factor(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero()) throw Error(ErrorKind::DivisionByZero, "divisibility test by zero");
  const FieldPtr& ctx = f.context();
  const int nv = f.num_vars();
  if (g.is_zero()) return Polynomial(ctx, nv);
  const int dq = g.total_degree() - f.total_degree();
  if (dq < 0) return std::nullopt;
  std::vector<Exponent> unknowns;
  if (f.is_homogeneous() && g.is_homogeneous()) {
    unknowns = monomials_of_degree(nv, dq);
  } else {
    for (int d = 0; d <= dq; ++d) {
      auto ms = monomials_of_degree(nv, d);
      unknowns.insert(unknowns.end(), ms.begin(), ms.end());
    }
  }
  std::map<Exponent, std::size_t, GrlexLess> rows;
  for (const auto& [e, c] : g.terms()) rows.emplace(e, 0);
  for (const auto& u : unknowns)
    for (const auto& [e, c] : f.terms()) rows.emplace(add_exponents(u, e), 0);
  std::size_t idx = 0;
  for (auto& [e, i] : rows) i = idx++;
  Matrix a = zero_matrix(ctx, rows.size(), unknowns.size());
  Vector rhs(rows.size(), Scalar::zero(ctx));
  for (std::size_t j = 0; j < unknowns.size(); ++j)
    for (const auto& [e, c] : f.terms()) a[rows.at(add_exponents(unknowns[j], e))][j] = c;
  for (const auto& [e, c] : g.terms()) rhs[rows.at(e)] = c;
  auto x = solve(a, rhs);
  if (!x) return std::nullopt;
  Polynomial q(ctx, nv);
  for (std::size_t j = 0; j < unknowns.size(); ++j) q.add_term(unknowns[j], (*x)[j]);
  if (q * f != g) return std::nullopt;
  return q;
}

}  // namespace kecert
