#include "kecert/univariate.hpp"

#include <algorithm>

namespace kecert {

UnivariatePoly::UnivariatePoly(FieldPtr ctx, std::vector<Scalar> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  trim();
}

void UnivariatePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UnivariatePoly UnivariatePoly::constant(const FieldPtr& ctx, const Scalar& c) { return UnivariatePoly(ctx, {c}); }

UnivariatePoly UnivariatePoly::linear(const Scalar& root) {
  return UnivariatePoly(root.context(), {-root, Scalar::one(root.context())});
}

Scalar UnivariatePoly::coeff(int k) const {
  if (k < 0 || k > degree()) return Scalar::zero(ctx_);
  return coeffs_[static_cast<std::size_t>(k)];
}

UnivariatePoly UnivariatePoly::operator-() const {
  UnivariatePoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
  const FieldPtr& ctx = a.ctx_ ? a.ctx_ : b.ctx_;
  std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar::zero(ctx));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return UnivariatePoly(ctx, std::move(c));
}

UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) { return a + (-b); }

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
  const FieldPtr& ctx = a.ctx_ ? a.ctx_ : b.ctx_;
  if (a.is_zero() || b.is_zero()) return UnivariatePoly(ctx);
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(ctx));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (!b.coeffs_[j].is_zero()) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UnivariatePoly(ctx, std::move(c));
}

UnivariatePoly operator*(const UnivariatePoly& a, const Scalar& c) {
  std::vector<Scalar> r = a.coeffs_;
  for (auto& x : r) x *= c;
  return UnivariatePoly(a.ctx_, std::move(r));
}

std::pair<UnivariatePoly, UnivariatePoly> UnivariatePoly::divmod(const UnivariatePoly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "univariate division by zero");
  if (degree() < d.degree()) return {UnivariatePoly(ctx_), *this};
  std::vector<Scalar> r = coeffs_;
  std::vector<Scalar> q(coeffs_.size() - d.coeffs_.size() + 1, Scalar::zero(ctx_));
  const Scalar inv = d.leading().inverse();
  const std::size_t dd = d.coeffs_.size() - 1;
  for (std::size_t i = r.size(); i-- > dd;) {
    if (r[i].is_zero()) continue;
    Scalar c = r[i] * inv;
    q[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j)
      if (!d.coeffs_[j].is_zero()) r[i - dd + j] -= c * d.coeffs_[j];
  }
  r.resize(dd);
  return {UnivariatePoly(ctx_, std::move(q)), UnivariatePoly(ctx_, std::move(r))};
}

UnivariatePoly UnivariatePoly::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return *this * leading().inverse();
}

UnivariatePoly UnivariatePoly::derivative() const {
  if (coeffs_.size() <= 1) return UnivariatePoly(ctx_);
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  return UnivariatePoly(ctx_, std::move(d));
}

Scalar UnivariatePoly::evaluate(const Scalar& x) const {
  Scalar acc = Scalar::zero(ctx_ ? ctx_ : x.context());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UnivariatePoly UnivariatePoly::galois(long k) const {
  std::vector<Scalar> c;
  for (const auto& x : coeffs_) c.push_back(x.galois(k));
  return UnivariatePoly(ctx_, std::move(c));
}

std::string UnivariatePoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Scalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
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

UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b) {
  UnivariatePoly x = a.monic();
  UnivariatePoly y = b.monic();
  while (!y.is_zero()) {
    UnivariatePoly r = x.divmod(y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::vector<std::pair<UnivariatePoly, int>> squarefree_decomposition(const UnivariatePoly& p) {
  std::vector<std::pair<UnivariatePoly, int>> out;
  if (p.degree() <= 0) return out;
  UnivariatePoly f = p.monic();
  UnivariatePoly fp = f.derivative();
  UnivariatePoly a = gcd(f, fp);
  UnivariatePoly b = f.divmod(a).first;
  UnivariatePoly c = fp.divmod(a).first;
  UnivariatePoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    UnivariatePoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = b.divmod(g).first;
    c = d.divmod(g).first;
    d = c - b.derivative();
  }
  return out;
}

UnivariatePoly to_univariate(const Polynomial& f, int var) {
  std::vector<Scalar> c;
  auto coeffs = f.coefficients_in(var);
  for (const auto& k : coeffs) {
    if (!k.is_constant()) throw Error(ErrorKind::ArityMismatch, "polynomial involves more than one variable");
    c.push_back(k.is_zero() ? Scalar::zero(f.context()) : k.constant_term());
  }
  return UnivariatePoly(f.context(), std::move(c));
}

Polynomial from_univariate(const UnivariatePoly& p, int var, int num_vars) {
  Polynomial r(p.context(), num_vars);
  for (int k = 0; k <= p.degree(); ++k) {
    Exponent e{};
    e[static_cast<std::size_t>(var)] = static_cast<std::int16_t>(k);
    r.add_term(e, p.coeffs()[static_cast<std::size_t>(k)]);
  }
  return r;
}

namespace {

using ModPoly = std::vector<unsigned long>;

unsigned long mod_eval(const std::vector<Integer>& f, unsigned long x, unsigned long p) {
  unsigned long acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    unsigned long c = mpz_fdiv_ui(it->get_mpz_t(), p);
    acc = static_cast<unsigned long>((static_cast<unsigned __int128>(acc) * x + c) % p);
  }
  return acc;
}

void mod_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned long mod_inv(unsigned long a, unsigned long p) {
  Integer r;
  Integer ai(a);
  Integer pi(p);
  mpz_invert(r.get_mpz_t(), ai.get_mpz_t(), pi.get_mpz_t());
  return r.get_ui();
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, unsigned long p) {
  const unsigned long inv = mod_inv(b.back(), p);
  while (a.size() >= b.size()) {
    unsigned long c = static_cast<unsigned long>((static_cast<unsigned __int128>(a.back()) * inv) % p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      unsigned long t = static_cast<unsigned long>((static_cast<unsigned __int128>(c) * b[j]) % p);
      a[shift + j] = (a[shift + j] + p - t) % p;
    }
    mod_trim(a);
  }
  return a;
}

bool squarefree_mod(const std::vector<Integer>& f, unsigned long p) {
  ModPoly a;
  for (const auto& c : f) a.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
  ModPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(static_cast<unsigned long>((static_cast<unsigned __int128>(a[i]) * i) % p));
  mod_trim(a);
  mod_trim(d);
  if (d.empty()) return false;
  while (!d.empty()) {
    ModPoly r = mod_rem(a, d, p);
    a = std::move(d);
    d = std::move(r);
  }
  return a.size() == 1;
}

Integer eval_mod(const std::vector<Integer>& f, const Integer& x, const Integer& m) {
  Integer acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc = acc * x + *it;
    mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return acc;
}

std::optional<Rational> reconstruct(const Integer& x, const Integer& m) {
  Integer bound;
  Integer half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Integer r0 = m;
  Integer r1 = x;
  Integer s0 = 0;
  Integer s1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (s1 == 0 || abs(s1) > bound) return std::nullopt;
  Rational q(r1, s1);
  q.canonicalize();
  return q;
}

Rational eval_rational(const std::vector<Integer>& f, const Rational& x) {
  Rational acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

// Squarefree part over Q of an integer polynomial, returned primitive with integer coefficients.
std::vector<Integer> squarefree_integer(const std::vector<Integer>& f) {
  FieldPtr q = FieldContext::get(1);
  std::vector<Scalar> c;
  for (const auto& x : f) c.emplace_back(q, Rational(x));
  UnivariatePoly p(q, std::move(c));
  UnivariatePoly g = gcd(p, p.derivative());
  UnivariatePoly s = p.divmod(g).first;
  Integer den = 1;
  for (const auto& x : s.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.rational_part().get_den_mpz_t());
  std::vector<Integer> out;
  Integer cont = 0;
  for (const auto& x : s.coeffs()) {
    Rational v = x.rational_part() * den;
    out.push_back(v.get_num());
    mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), v.get_num_mpz_t());
  }
  if (cont != 0)
    for (auto& x : out) x /= cont;
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Integer>& coeffs) {
  std::vector<Integer> f = coeffs;
  while (!f.empty() && f.back() == 0) f.pop_back();
  std::vector<Rational> roots;
  if (f.size() <= 1) return roots;
  std::size_t zeros = 0;
  while (f[zeros] == 0) ++zeros;
  if (zeros > 0) {
    roots.emplace_back(0);
    f.erase(f.begin(), f.begin() + static_cast<long>(zeros));
  }
  if (f.size() <= 1) return roots;
  f = squarefree_integer(f);
  if (f.size() == 2) {
    Rational r(-f[0], f[1]);
    r.canonicalize();
    roots.push_back(r);
    std::sort(roots.begin(), roots.end());
    return roots;
  }

  Integer prime = 10007;
  for (;;) {
    if (mpz_divisible_p(f.back().get_mpz_t(), prime.get_mpz_t()) == 0 && squarefree_mod(f, prime.get_ui())) break;
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
  }
  const unsigned long p = prime.get_ui();
  Integer bound = abs(f.front());
  if (abs(f.back()) > bound) bound = abs(f.back());
  Integer target = 2 * bound * bound;

  std::vector<Integer> df;
  for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * static_cast<unsigned long>(i));

  for (unsigned long x0 = 0; x0 < p; ++x0) {
    if (mod_eval(f, x0, p) != 0) continue;
    Integer x = x0;
    Integer m = p;
    while (m <= target) {
      Integer m2 = m * m;
      Integer fx = eval_mod(f, x, m2);
      Integer dfx = eval_mod(df, x, m2);
      Integer inv;
      if (mpz_invert(inv.get_mpz_t(), dfx.get_mpz_t(), m2.get_mpz_t()) == 0) break;
      x = x - fx * inv;
      mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m2.get_mpz_t());
      m = m2;
    }
    auto r = reconstruct(x, m);
    if (r && eval_rational(f, *r) == 0 && std::find(roots.begin(), roots.end(), *r) == roots.end()) {
      roots.push_back(*r);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

// Rational roots of a polynomial with coefficients in Q(zeta_n).
std::vector<Rational> rational_roots_of(const UnivariatePoly& p) {
  const FieldPtr q = FieldContext::get(1);
  const int deg = p.context()->degree();
  UnivariatePoly g(q);
  for (int j = 0; j < deg; ++j) {
    std::vector<Scalar> c;
    for (const auto& x : p.coeffs()) c.emplace_back(q, x.coords()[static_cast<std::size_t>(j)]);
    UnivariatePoly part(q, std::move(c));
    if (part.is_zero()) continue;
    g = g.is_zero() ? part.monic() : gcd(g, part);
    if (g.degree() <= 0) return {};
  }
  if (g.degree() <= 0) return {};
  Integer den = 1;
  for (const auto& x : g.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.rational_part().get_den_mpz_t());
  std::vector<Integer> ints;
  for (const auto& x : g.coeffs()) ints.push_back(Rational(x.rational_part() * den).get_num());
  return rational_roots(ints);
}

UnivariatePoly scale_argument(const UnivariatePoly& p, const Scalar& s) {
  std::vector<Scalar> c = p.coeffs();
  Scalar pw = Scalar::one(p.context());
  for (auto& x : c) {
    x *= pw;
    pw *= s;
  }
  return UnivariatePoly(p.context(), std::move(c));
}

// Roots of a squarefree polynomial; returns true when it split completely.
bool squarefree_roots(UnivariatePoly rem, std::vector<Scalar>& out) {
  const FieldPtr& ctx = rem.context();
  const long n = ctx->conductor();
  auto take = [&](const Scalar& r) {
    out.push_back(r);
    rem = rem.divmod(UnivariatePoly::linear(r)).first;
  };
  if (rem.coeff(0).is_zero()) take(Scalar::zero(ctx));
  for (long k = 0; k < n && rem.degree() > 0; ++k) {
    Scalar unit = Scalar::root_of_unity(ctx, k);
    for (const auto& r : rational_roots_of(scale_argument(rem, unit))) {
      if (sgn(r) == 0) continue;
      Scalar root = unit * Scalar(ctx, r);
      if (rem.evaluate(root).is_zero()) take(root);
    }
  }
  if (rem.degree() == 1) {
    take(-rem.coeff(0) / rem.coeff(1));
  } else if (rem.degree() == 2) {
    const Scalar& a = rem.coeff(2);
    const Scalar& b = rem.coeff(1);
    const Scalar& c = rem.coeff(0);
    Scalar disc = b * b - a * c * Rational(4);
    auto s = disc.sqrt();
    if (!s) return false;
    Scalar two_a = a * Rational(2);
    Scalar r1 = (-b + *s) / two_a;
    Scalar r2 = (-b - *s) / two_a;
    take(r1);
    take(r2);
  }
  return rem.degree() <= 0;
}

}  // namespace

RootResult univariate_roots_in_field(const UnivariatePoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::BadParams, "roots of the zero polynomial");
  RootResult result;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    std::vector<Scalar> roots;
    if (!squarefree_roots(factor, roots)) result.unresolved = true;
    for (auto& r : roots) result.roots.emplace_back(r, mult);
  }
  std::sort(result.roots.begin(), result.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return result;
}

}  // namespace kecert
