#include "kecert/numfield.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "kecert/expr_parser.hpp"

namespace kecert {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::InhomogeneousComponents: return "InhomogeneousComponents";
    case ErrorKind::DegenerateLeadingForm: return "DegenerateLeadingForm";
    case ErrorKind::PointOnHyperplaneAtInfinity: return "PointOnHyperplaneAtInfinity";
    case ErrorKind::IndeterminatePoint: return "IndeterminatePoint";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::ZeroMap: return "ZeroMap";
    case ErrorKind::DuplicatePoints: return "DuplicatePoints";
    case ErrorKind::UnknownKind: return "UnknownKind";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::BadIndices: return "BadIndices";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::UnresolvedRoots: return "UnresolvedRoots";
  }
  return "Unknown";
}

Rational parse_rational(std::string_view text) {
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) {
    throw Error(ErrorKind::ParseError, "bad rational literal \"" + std::string(text) + "\"");
  }
  if (q.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in \"" + std::string(text) + "\"");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Exact division of integer polynomials by a monic divisor.
std::vector<long> poly_div_monic(std::vector<long> num, const std::vector<long>& den) {
  std::size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long c = num[i];
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(int n) {
  if (n < 1) throw Error(ErrorKind::BadParams, "conductor must be positive");
  std::vector<long> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) num = poly_div_monic(num, cyclotomic_polynomial(d));
  }
  return num;
}

FieldContext::FieldContext(int conductor)
    : conductor_(conductor), degree_(euler_phi(conductor)), minpoly_(cyclotomic_polynomial(conductor)) {
  const auto deg = static_cast<std::size_t>(degree_);
  const int count = std::max(conductor_, 2 * degree_ - 1);
  power_rows_.reserve(static_cast<std::size_t>(count));
  std::vector<long> row(deg, 0);
  row[0] = 1;
  for (int k = 0; k < count; ++k) {
    power_rows_.push_back(row);
    // multiply by z and reduce with z^deg = -sum minpoly[i] z^i
    long top = row[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) row[i] = row[i - 1];
    row[0] = 0;
    for (std::size_t i = 0; i < deg; ++i) row[i] -= top * minpoly_[i];
  }
}

std::shared_ptr<const FieldContext> FieldContext::get(int conductor) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const FieldContext>> cache;
  if (conductor < 1) throw Error(ErrorKind::BadParams, "conductor must be positive");
  std::lock_guard lock(mutex);
  auto it = cache.find(conductor);
  if (it != cache.end()) return it->second;
  auto ctx = std::make_shared<const FieldContext>(conductor);
  cache.emplace(conductor, ctx);
  return ctx;
}

CyclotomicElement::CyclotomicElement(FieldPtr ctx)
    : ctx_(std::move(ctx)), coords_(static_cast<std::size_t>(ctx_->degree())) {}

CyclotomicElement::CyclotomicElement(FieldPtr ctx, const Rational& q) : CyclotomicElement(std::move(ctx)) {
  coords_[0] = q;
}

CyclotomicElement::CyclotomicElement(FieldPtr ctx, std::vector<Rational> coords)
    : ctx_(std::move(ctx)), coords_(std::move(coords)) {
  const auto deg = static_cast<std::size_t>(ctx_->degree());
  if (coords_.size() > deg) {
    // reduce higher powers
    std::vector<Rational> reduced(deg);
    for (std::size_t k = 0; k < coords_.size(); ++k) {
      if (sgn(coords_[k]) == 0) continue;
      if (k < deg) {
        reduced[k] += coords_[k];
      } else {
        CyclotomicElement p = root_of_unity(ctx_, static_cast<long>(k));
        for (std::size_t j = 0; j < deg; ++j) reduced[j] += coords_[k] * p.coords_[j];
      }
    }
    coords_ = std::move(reduced);
  }
  coords_.resize(deg);
  for (auto& c : coords_) c.canonicalize();
}

CyclotomicElement CyclotomicElement::root_of_unity(const FieldPtr& ctx, long k) {
  const long n = ctx->conductor();
  long r = ((k % n) + n) % n;
  const auto& row = ctx->power_row(static_cast<int>(r));
  CyclotomicElement e(ctx);
  for (std::size_t i = 0; i < row.size(); ++i) e.coords_[i] = row[i];
  return e;
}

bool CyclotomicElement::is_zero() const {
  for (const auto& c : coords_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CyclotomicElement::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (sgn(coords_[i]) != 0) return false;
  return true;
}

bool CyclotomicElement::is_one() const { return is_rational() && coords_[0] == 1; }

void CyclotomicElement::check_same(const CyclotomicElement& other) const {
  if (!ctx_ || !other.ctx_) throw Error(ErrorKind::ContextMismatch, "uninitialised field element");
  if (ctx_ != other.ctx_ && ctx_->conductor() != other.ctx_->conductor()) {
    throw Error(ErrorKind::ContextMismatch, "conductors " + std::to_string(ctx_->conductor()) + " and " +
                                                std::to_string(other.ctx_->conductor()));
  }
}

CyclotomicElement CyclotomicElement::operator-() const {
  CyclotomicElement r(*this);
  for (auto& c : r.coords_) c = -c;
  return r;
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& other) {
  check_same(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& other) {
  check_same(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const Rational& q) {
  for (auto& c : coords_) c *= q;
  return *this;
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
  a.check_same(b);
  if (b.is_rational()) return CyclotomicElement(a) *= b.coords_[0];
  if (a.is_rational()) return CyclotomicElement(b) *= a.coords_[0];
  const std::size_t deg = a.coords_.size();
  std::vector<Rational> conv(2 * deg - 1);
  for (std::size_t i = 0; i < deg; ++i) {
    if (sgn(a.coords_[i]) == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (sgn(b.coords_[j]) == 0) continue;
      conv[i + j] += a.coords_[i] * b.coords_[j];
    }
  }
  CyclotomicElement r(a.ctx_);
  for (std::size_t k = 0; k < conv.size(); ++k) {
    if (sgn(conv[k]) == 0) continue;
    if (k < deg) {
      r.coords_[k] += conv[k];
      continue;
    }
    const auto& row = a.ctx_->power_row(static_cast<int>(k));
    for (std::size_t j = 0; j < deg; ++j)
      if (row[j] != 0) r.coords_[j] += conv[k] * row[j];
  }
  return r;
}

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& other) {
  *this = *this * other;
  return *this;
}

CyclotomicElement CyclotomicElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (is_rational()) return CyclotomicElement(ctx_, 1 / coords_[0]);
  // Solve (multiplication-by-this matrix) x = e_0 over Q.
  const std::size_t deg = coords_.size();
  std::vector<std::vector<Rational>> m(deg, std::vector<Rational>(deg + 1));
  for (std::size_t j = 0; j < deg; ++j) {
    CyclotomicElement col = *this * root_of_unity(ctx_, static_cast<long>(j));
    for (std::size_t i = 0; i < deg; ++i) m[i][j] = col.coords_[i];
  }
  m[0][deg] = 1;
  for (std::size_t c = 0; c < deg; ++c) {
    std::size_t p = c;
    while (p < deg && sgn(m[p][c]) == 0) ++p;
    std::swap(m[p], m[c]);
    Rational inv = 1 / m[c][c];
    for (std::size_t j = c; j <= deg; ++j) m[c][j] *= inv;
    for (std::size_t i = 0; i < deg; ++i) {
      if (i == c || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j <= deg; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<Rational> x(deg);
  for (std::size_t i = 0; i < deg; ++i) x[i] = m[i][deg];
  return CyclotomicElement(ctx_, std::move(x));
}

CyclotomicElement operator/(const CyclotomicElement& a, const CyclotomicElement& b) { return a * b.inverse(); }

CyclotomicElement CyclotomicElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CyclotomicElement result = one(ctx_);
  CyclotomicElement base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

CyclotomicElement CyclotomicElement::galois(long k) const {
  const long n = ctx_->conductor();
  if (std::gcd(((k % n) + n) % n, n) != 1) throw Error(ErrorKind::BadParams, "Galois exponent not a unit");
  CyclotomicElement r(ctx_);
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (sgn(coords_[j]) == 0) continue;
    r += root_of_unity(ctx_, static_cast<long>(j) * k) * coords_[j];
  }
  return r;
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
  a.check_same(b);
  return a.coords_ == b.coords_;
}

bool operator<(const CyclotomicElement& a, const CyclotomicElement& b) {
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    int c = cmp(a.coords_[i], b.coords_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

namespace {

// Gauss sum for an odd prime p dividing n; squares to (-1)^((p-1)/2) p.
CyclotomicElement gauss_sum(const FieldPtr& ctx, long p) {
  const long n = ctx->conductor();
  CyclotomicElement g(ctx);
  for (long a = 1; a < p; ++a) {
    int leg = mpz_legendre(Integer(a).get_mpz_t(), Integer(p).get_mpz_t());
    CyclotomicElement t = CyclotomicElement::root_of_unity(ctx, a * (n / p));
    if (leg > 0) g += t; else g -= t;
  }
  return g;
}

std::vector<long> prime_divisors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

std::optional<Scalar> sqrt_rational(const Rational& q, const FieldPtr& ctx) {
  if (sgn(q) == 0) return Scalar(ctx);
  const long n = ctx->conductor();
  Integer m = q.get_num() * q.get_den();
  const int sign = sgn(m);
  m = abs(m);
  Scalar result = Scalar::one(ctx);
  int piece_sign = 1;
  std::vector<long> primes = prime_divisors(2 * n);
  for (long p : primes) {
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
      m /= p;
      ++e;
    }
    Integer half;
    mpz_ui_pow_ui(half.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e / 2));
    result *= Rational(half);
    if (e % 2 == 0) continue;
    if (p == 2) {
      if (n % 8 != 0) return std::nullopt;
      // sqrt(2) = zeta_8 + zeta_8^-1
      result *= Scalar::root_of_unity(ctx, n / 8) + Scalar::root_of_unity(ctx, -n / 8);
    } else {
      if (n % p != 0) return std::nullopt;
      result *= gauss_sum(ctx, p);
      if (p % 4 == 3) piece_sign = -piece_sign;
    }
  }
  if (!mpz_perfect_square_p(m.get_mpz_t())) return std::nullopt;
  result *= Rational(sqrt(m));
  if (piece_sign != sign) {
    if (n % 4 != 0) return std::nullopt;
    result *= Scalar::root_of_unity(ctx, n / 4);
  }
  result *= Rational(1) / Rational(q.get_den());
  if (result * result != Scalar(ctx, q)) return std::nullopt;
  return result;
}


namespace {

Integer mod_pow(const Integer& b, const Integer& e, const Integer& m) {
  Integer r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer mod_inv(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) throw Error(ErrorKind::DivisionByZero, "not invertible mod m");
  return r;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Tonelli-Shanks; a must be a nonzero quadratic residue mod the odd prime p.
Integer sqrt_mod_prime(const Integer& a, const Integer& p) {
  Integer q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  Integer nonres = 2;
  while (mpz_legendre(nonres.get_mpz_t(), p.get_mpz_t()) != -1) ++nonres;
  Integer c = mod_pow(nonres, q, p);
  Integer x = mod_pow(a, (q + 1) / 2, p);
  Integer t = mod_pow(a, q, p);
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    for (Integer tt = t; tt != 1; tt = mod(tt * tt, p)) ++i;
    Integer b = c;
    for (unsigned long j = 0; j + 1 < m - i; ++j) b = mod(b * b, p);
    x = mod(x * b, p);
    c = mod(b * b, p);
    t = mod(t * c, p);
    m = i;
  }
  return x;
}

// Square root of a general element by working in the completions at a split prime.
// With p = 1 mod n the cyclotomic polynomial has phi(n) distinct roots r_k in Z_p.
// If d is the common denominator of a, then d * sqrt(a) is an algebraic integer with
// integer power-basis coordinates; their size is bounded below, so one lift to a large
// enough power of p followed by interpolation and every sign choice decides the question.
std::optional<Scalar> sqrt_padic(const Scalar& a) {
  const FieldPtr& ctx = a.context();
  const long n = ctx->conductor();
  const int phi = ctx->degree();

  Integer d = 1;
  for (const auto& c : a.coords()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> alpha;  // d * a
  Integer alpha_norm = 0;
  for (const auto& c : a.coords()) {
    alpha.push_back(Rational(c * d).get_num());
    alpha_norm += abs(alpha.back());
  }
  // Coordinates of beta = d sqrt(a) satisfy |c_j| <= phi * H * 2^n / n * max |sigma(beta)|,
  // where H bounds the coefficients of Phi_n / (x - zeta) and |sigma(beta)|^2 <= d * |alpha|_1.
  Integer height = 0;
  for (long c : ctx->minimal_polynomial()) height += std::abs(c);
  Integer bound = Integer(phi) * height * (d * alpha_norm + 1);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  bound = 2 * bound + 1;

  std::vector<long> coprime;
  for (long k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) coprime.push_back(k);
  std::vector<long> prime_factors;
  for (long x = n, f = 2; x > 1; ++f) {
    if (x % f == 0) prime_factors.push_back(f);
    while (x % f == 0) x /= f;
  }

  Integer p = 1000 * n + 1;
  for (;; p += n) {
    if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0 || mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) continue;
    // primitive n-th root of unity mod p
    Integer root = 0;
    for (Integer g = 2;; ++g) {
      Integer cand = mod_pow(g, (p - 1) / n, p);
      bool primitive = true;
      for (long f : prime_factors)
        if (mod_pow(cand, Integer(n / f), p) == 1) primitive = false;
      if (primitive) {
        root = cand;
        break;
      }
    }
    std::vector<Integer> images;
    bool usable = true;
    for (long k : coprime) {
      Integer rk = mod_pow(root, Integer(k), p), v = 0, pw = 1;
      for (const auto& x : alpha) {
        v = mod(v + x * pw, p);
        pw = mod(pw * rk, p);
      }
      v = mod(v * d, p);
      if (v == 0) usable = false;
      images.push_back(v);
    }
    if (!usable) continue;
    for (const auto& v : images)
      if (mpz_legendre(v.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;

    // Lift the root of unity and the square roots to modulus p^(2^j) >= bound.
    Integer m = p;
    Integer r = root;
    std::vector<Integer> roots;
    for (const auto& v : images) roots.push_back(sqrt_mod_prime(v, p));
    while (m < bound) {
      Integer m2 = m * m;
      Integer rn1 = mod_pow(r, Integer(n - 1), m2);
      r = mod(r - (mod(rn1 * r, m2) - 1) * mod_inv(mod(Integer(n) * rn1, m2), m2), m2);
      std::vector<Integer> rks;
      for (long k : coprime) rks.push_back(mod_pow(r, Integer(k), m2));
      for (std::size_t k = 0; k < coprime.size(); ++k) {
        Integer v = 0, pw = 1;
        for (const auto& x : alpha) {
          v = mod(v + x * pw, m2);
          pw = mod(pw * rks[k], m2);
        }
        v = mod(v * d, m2);
        Integer y = roots[k];
        roots[k] = mod(y - (y * y - v) * mod_inv(mod(2 * y, m2), m2), m2);
      }
      m = m2;
    }
    std::vector<Integer> rks;
    for (long k : coprime) rks.push_back(mod_pow(r, Integer(k), m));

    // Lagrange basis: row k holds the coefficients of prod_{l != k} (x - r_l) / (r_k - r_l).
    std::vector<std::vector<Integer>> basis;
    for (std::size_t k = 0; k < rks.size(); ++k) {
      std::vector<Integer> poly{1};
      Integer denom = 1;
      for (std::size_t l = 0; l < rks.size(); ++l) {
        if (l == k) continue;
        std::vector<Integer> next(poly.size() + 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
          next[i + 1] = mod(next[i + 1] + poly[i], m);
          next[i] = mod(next[i] - poly[i] * rks[l], m);
        }
        poly = std::move(next);
        denom = mod(denom * (rks[k] - rks[l]), m);
      }
      Integer inv = mod_inv(denom, m);
      for (auto& c : poly) c = mod(c * inv, m);
      basis.push_back(std::move(poly));
    }

    const Integer half = m / 2;
    const std::size_t combos = std::size_t{1} << (rks.size() - 1);
    for (std::size_t mask = 0; mask < combos; ++mask) {
      std::vector<Rational> coords(static_cast<std::size_t>(phi), Rational(0));
      for (int j = 0; j < phi; ++j) {
        Integer c = 0;
        for (std::size_t k = 0; k < rks.size(); ++k) {
          const bool flip = k > 0 && ((mask >> (k - 1)) & 1U);
          c += basis[k][static_cast<std::size_t>(j)] * (flip ? m - roots[k] : roots[k]);
        }
        c = mod(c, m);
        if (c > half) c -= m;
        coords[static_cast<std::size_t>(j)] = Rational(c, d);
        coords[static_cast<std::size_t>(j)].canonicalize();
      }
      Scalar y(ctx, coords);
      if (y * y == a) return y;
    }
    return std::nullopt;
  }
}

}  // namespace

std::optional<CyclotomicElement> CyclotomicElement::sqrt() const {
  if (is_zero()) return *this;
  if (is_rational()) return sqrt_rational(coords_[0], ctx_);
  const long n = ctx_->conductor();
  for (long k = 0; k < n; ++k) {
    CyclotomicElement b = *this * root_of_unity(ctx_, -k);
    if (!b.is_rational()) continue;
    long half;
    if (n % 2 == 1) {
      half = k * ((n + 1) / 2);
    } else if (k % 2 == 0) {
      half = k / 2;
    } else {
      continue;
    }
    auto s = sqrt_rational(b.coords_[0], ctx_);
    if (!s) continue;
    CyclotomicElement r = *s * root_of_unity(ctx_, half);
    if (r * r == *this) return r;
  }
  return sqrt_padic(*this);
}

std::string CyclotomicElement::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    const Rational& c = coords_[k];
    if (sgn(c) == 0) continue;
    std::string term;
    if (k == 0) {
      term = kecert::to_string(c);
    } else {
      std::string power = k == 1 ? "z" : "z^" + std::to_string(k);
      if (c == 1) {
        term = power;
      } else if (c == -1) {
        term = "-" + power;
      } else {
        term = kecert::to_string(c) + "*" + power;
      }
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

bool CyclotomicElement::prints_as_atom() const { return is_rational(); }

Scalar embed_rational(const Rational& q, const FieldPtr& ctx) { return Scalar(ctx, q); }

namespace {

struct ScalarOps {
  using Value = Scalar;
  FieldPtr ctx;
  Value constant(const Rational& q) const { return Scalar(ctx, q); }
  Value symbol(std::string_view name) const {
    if (name == "z") return Scalar::root_of_unity(ctx, 1);
    throw Error(ErrorKind::ParseError, "unknown symbol \"" + std::string(name) + "\"");
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }
  Value divide(const Value& a, const Value& b) const {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero in literal");
    return a / b;
  }
  Value pow(const Value& a, long e) const { return a.pow(e); }
};

}  // namespace

Scalar parse_element(std::string_view text, const FieldPtr& ctx) {
  return detail::parse_expression(text, ScalarOps{ctx});
}

}  // namespace kecert
