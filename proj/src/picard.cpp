#include "kecert/picard.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "kecert/error.hpp"

namespace kecert {

DivisorClass DivisorClass::hyperplane(int r) { return DivisorClass(1, std::vector<long>(static_cast<std::size_t>(r), 0)); }

DivisorClass DivisorClass::exceptional(int r, int i) {
  if (i < 1 || i > r) throw Error(ErrorKind::BadIndices, "exceptional index out of range");
  std::vector<long> m(static_cast<std::size_t>(r), 0);
  m[static_cast<std::size_t>(i - 1)] = -1;
  return DivisorClass(0, std::move(m));
}

DivisorClass DivisorClass::canonical(int r) { return DivisorClass(-3, std::vector<long>(static_cast<std::size_t>(r), -1)); }

std::vector<long> DivisorClass::coeffs() const {
  std::vector<long> c{d_};
  c.insert(c.end(), m_.begin(), m_.end());
  return c;
}

DivisorClass DivisorClass::from_coeffs(const std::vector<long>& c) {
  if (c.empty()) throw Error(ErrorKind::BadParams, "empty coefficient vector");
  return DivisorClass(c[0], std::vector<long>(c.begin() + 1, c.end()));
}

std::string DivisorClass::to_string() const {
  std::string s = "(" + std::to_string(d_) + ";";
  for (std::size_t i = 0; i < m_.size(); ++i) s += (i ? "," : "") + std::to_string(m_[i]);
  return s + ")";
}

namespace {

void require_same_rank(const DivisorClass& a, const DivisorClass& b) {
  if (a.r() != b.r()) throw Error(ErrorKind::RankMismatch, "classes live in lattices of different rank");
}

}  // namespace

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  require_same_rank(a, b);
  DivisorClass c = a;
  c.d_ += b.d_;
  for (std::size_t i = 0; i < c.m_.size(); ++i) c.m_[i] += b.m_[i];
  return c;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return a + (-1) * b; }

DivisorClass operator*(long k, const DivisorClass& a) {
  DivisorClass c = a;
  c.d_ *= k;
  for (auto& x : c.m_) x *= k;
  return c;
}

long intersection_pairing(const DivisorClass& a, const DivisorClass& b) {
  require_same_rank(a, b);
  long s = a.degree() * b.degree();
  for (std::size_t i = 0; i < a.multiplicities().size(); ++i) s -= a.multiplicities()[i] * b.multiplicities()[i];
  return s;
}

namespace {

// All m in Z^r with sum m = target_sum and sum m^2 = target_sq.
void enumerate_multiplicities(int r, long target_sum, long target_sq, std::vector<long>& cur,
                              std::vector<std::vector<long>>& out) {
  const int left = r - static_cast<int>(cur.size());
  if (left == 0) {
    if (target_sum == 0 && target_sq == 0) out.push_back(cur);
    return;
  }
  // Cauchy-Schwarz: target_sum^2 <= left * target_sq.
  if (target_sq < 0 || target_sum * target_sum > static_cast<long>(left) * target_sq) return;
  const long bound = static_cast<long>(std::sqrt(static_cast<double>(target_sq))) + 1;
  for (long m = -bound; m <= bound; ++m) {
    if (m * m > target_sq) continue;
    cur.push_back(m);
    enumerate_multiplicities(r, target_sum - m, target_sq - m * m, cur, out);
    cur.pop_back();
  }
}

// Classes with D.D = self and D.K = with_k.
std::vector<DivisorClass> enumerate_classes(int r, long self, long with_k) {
  std::vector<DivisorClass> out;
  // sum m = 3d + with_k, sum m^2 = d^2 - self; Cauchy-Schwarz bounds d.
  for (long d = -20; d <= 20; ++d) {
    long sum = 3 * d + with_k;
    long sq = d * d - self;
    if (sum * sum > static_cast<long>(r) * sq) continue;
    std::vector<long> cur;
    std::vector<std::vector<long>> ms;
    enumerate_multiplicities(r, sum, sq, cur, ms);
    for (auto& m : ms) out.emplace_back(d, std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<DivisorClass> enumerate_lines(int r) {
  if (r < 1 || r > 8) throw Error(ErrorKind::BadParams, "lines are enumerated for 1 <= r <= 8");
  return enumerate_classes(r, -1, -1);
}

std::vector<DivisorClass> enumerate_roots(int r) {
  if (r < 3 || r > 8) throw Error(ErrorKind::BadParams, "roots are enumerated for 3 <= r <= 8");
  return enumerate_classes(r, -2, 0);
}

LatticeIsometry::LatticeIsometry(IntMatrix m) : m_(std::move(m)) {
  for (const auto& row : m_)
    if (row.size() != m_.size()) throw Error(ErrorKind::RankMismatch, "lattice isometry must be square");
}

LatticeIsometry LatticeIsometry::identity(int r) {
  IntMatrix m(static_cast<std::size_t>(r + 1), std::vector<long>(static_cast<std::size_t>(r + 1), 0));
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = 1;
  return LatticeIsometry(std::move(m));
}

DivisorClass LatticeIsometry::apply(const DivisorClass& c) const {
  if (c.r() != r()) throw Error(ErrorKind::RankMismatch, "class and isometry have different rank");
  auto v = c.coeffs();
  std::vector<long> w(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) w[i] += m_[i][j] * v[j];
  return DivisorClass::from_coeffs(w);
}

LatticeIsometry LatticeIsometry::compose(const LatticeIsometry& other) const {
  if (other.r() != r()) throw Error(ErrorKind::RankMismatch, "isometries have different rank");
  const std::size_t n = m_.size();
  IntMatrix p(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) p[i][j] += m_[i][k] * other.m_[k][j];
  return LatticeIsometry(std::move(p));
}

LatticeIsometry LatticeIsometry::inverse() const {
  const std::size_t n = m_.size();
  IntMatrix p(n, std::vector<long>(n, 0));
  auto sign = [](std::size_t i) { return i == 0 ? 1L : -1L; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p[i][j] = sign(i) * m_[j][i] * sign(j);
  return LatticeIsometry(std::move(p));
}

std::string LatticeIsometry::key() const {
  std::string s;
  for (const auto& row : m_) {
    for (long x : row) s += std::to_string(x) + ",";
    s += ";";
  }
  return s;
}

bool LatticeIsometry::is_isometry() const {
  const int rr = r();
  std::vector<DivisorClass> basis{DivisorClass::hyperplane(rr)};
  for (int i = 1; i <= rr; ++i) basis.push_back(DivisorClass::exceptional(rr, i));
  for (const auto& a : basis)
    for (const auto& b : basis)
      if (intersection_pairing(apply(a), apply(b)) != intersection_pairing(a, b)) return false;
  return apply(DivisorClass::canonical(rr)) == DivisorClass::canonical(rr);
}

std::optional<std::vector<int>> LatticeIsometry::line_permutation(const std::vector<DivisorClass>& lines) const {
  std::vector<int> perm;
  for (const auto& l : lines) {
    auto it = std::lower_bound(lines.begin(), lines.end(), apply(l));
    if (it == lines.end() || !(*it == apply(l))) return std::nullopt;
    perm.push_back(static_cast<int>(it - lines.begin()));
  }
  return perm;
}

LatticeIsometry reflect_in_root(const DivisorClass& root) {
  const int r = root.r();
  if (intersection_pairing(root, root) != -2 || intersection_pairing(root, DivisorClass::canonical(r)) != 0) {
    throw Error(ErrorKind::NotARoot, root.to_string() + " is not a root");
  }
  IntMatrix m(static_cast<std::size_t>(r + 1), std::vector<long>(static_cast<std::size_t>(r + 1), 0));
  std::vector<DivisorClass> basis{DivisorClass::hyperplane(r)};
  for (int i = 1; i <= r; ++i) basis.push_back(DivisorClass::exceptional(r, i));
  // Columns are images of the coordinate vectors; coordinate j>0 is -e_j.
  for (std::size_t j = 0; j < basis.size(); ++j) {
    DivisorClass unit = j == 0 ? basis[0] : (-1) * basis[j];
    DivisorClass img = unit + intersection_pairing(unit, root) * root;
    auto c = img.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) m[i][j] = c[i];
  }
  return LatticeIsometry(std::move(m));
}

LatticeIsometry lift_plane_automorphism(const std::vector<int>& images) {
  const int r = static_cast<int>(images.size());
  std::vector<int> seen(static_cast<std::size_t>(r), 0);
  for (int x : images) {
    if (x < 1 || x > r || seen[static_cast<std::size_t>(x - 1)]++) {
      throw Error(ErrorKind::BadIndices, "not a permutation of the blown-up points");
    }
  }
  IntMatrix m(static_cast<std::size_t>(r + 1), std::vector<long>(static_cast<std::size_t>(r + 1), 0));
  m[0][0] = 1;
  for (int i = 1; i <= r; ++i) m[static_cast<std::size_t>(images[static_cast<std::size_t>(i - 1)])][static_cast<std::size_t>(i)] = 1;
  return LatticeIsometry(std::move(m));
}

LatticeIsometry lift_cremona(int r, int i, int j, int k, std::optional<std::pair<int, int>> swap) {
  std::set<int> base{i, j, k};
  for (int x : base)
    if (x < 1 || x > r) throw Error(ErrorKind::BadIndices, "base index out of range");
  if (base.size() != 3) throw Error(ErrorKind::BadIndices, "base indices must be distinct");
  DivisorClass root = DivisorClass::hyperplane(r) - DivisorClass::exceptional(r, i) - DivisorClass::exceptional(r, j) -
                      DivisorClass::exceptional(r, k);
  LatticeIsometry refl = reflect_in_root(root);
  if (!swap) return refl;
  auto [a, b] = *swap;
  if (a < 1 || a > r || b < 1 || b > r || a == b || base.count(a) || base.count(b)) {
    throw Error(ErrorKind::BadIndices, "swap pair must be distinct and disjoint from the base");
  }
  std::vector<int> images(static_cast<std::size_t>(r));
  for (int x = 1; x <= r; ++x) images[static_cast<std::size_t>(x - 1)] = x == a ? b : x == b ? a : x;
  return lift_plane_automorphism(images).compose(refl);
}

LatticeIsometry lift_pair_swap(int i, int j) {
  if (i == j || i < 1 || j < 1 || i > 5 || j > 5) throw Error(ErrorKind::BadIndices, "pair indices must be distinct in 1..5");
  std::vector<int> base;
  for (int x = 1; x <= 5; ++x)
    if (x != i && x != j) base.push_back(x);
  return lift_cremona(5, base[0], base[1], base[2], std::make_pair(i, j));
}

LatticeIsometry lift_sigma(int j) {
  if (j < 1 || j > 5) throw Error(ErrorKind::BadIndices, "sigma index must be in 1..5");
  LatticeIsometry s1 = lift_pair_swap(2, 3).compose(lift_pair_swap(4, 5));
  return j == 1 ? s1 : lift_pair_swap(1, j).compose(s1);
}

bool RelationReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.holds; }) && group_order == 16 &&
         elementary_abelian;
}

RelationReport verify_relation_algebra() {
  RelationReport report;
  const auto lines = enumerate_lines(5);
  auto perm = [&](const LatticeIsometry& g) {
    auto p = g.line_permutation(lines);
    if (!p) throw Error(ErrorKind::BadParams, "lift does not permute the lines");
    return *p;
  };
  auto cr = [](int i, int j) { return lift_pair_swap(std::min(i, j), std::max(i, j)); };
  auto name = [](int i, int j) { return "Cr" + std::to_string(std::min(i, j)) + std::to_string(std::max(i, j)); };
  auto add = [&](std::string rel, const LatticeIsometry& lhs, const LatticeIsometry& rhs) {
    report.checks.push_back({std::move(rel), perm(lhs) == perm(rhs)});
  };

  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) pairs.emplace_back(i, j);

  for (auto [i, j] : pairs) add(name(i, j) + "^2=id", cr(i, j).compose(cr(i, j)), LatticeIsometry::identity(5));
  for (auto [i, j] : pairs)
    for (auto [k, l] : pairs) {
      if (std::set<int>{i, j, k, l}.size() != 4 || std::make_pair(i, j) >= std::make_pair(k, l)) continue;
      add(name(i, j) + "o" + name(k, l) + "=" + name(k, l) + "o" + name(i, j), cr(i, j).compose(cr(k, l)),
          cr(k, l).compose(cr(i, j)));
    }
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j)
      for (int k = 1; k <= 5; ++k) {
        if (i == j || j == k || i == k) continue;
        add(name(i, j) + "o" + name(j, k) + "=" + name(i, k), cr(i, j).compose(cr(j, k)), cr(i, k));
      }
  for (int m = 1; m <= 5; ++m) {
    std::vector<int> rest;
    for (int x = 1; x <= 5; ++x)
      if (x != m) rest.push_back(x);
    // the three ways to split the other four indices into two pairs
    const int splits[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& s : splits) {
      int i = rest[static_cast<std::size_t>(s[0])], j = rest[static_cast<std::size_t>(s[1])];
      int k = rest[static_cast<std::size_t>(s[2])], l = rest[static_cast<std::size_t>(s[3])];
      add("sigma" + std::to_string(m) + "=" + name(i, j) + "o" + name(k, l), lift_sigma(m), cr(i, j).compose(cr(k, l)));
    }
  }
  for (int j = 2; j <= 5; ++j) {
    add("sigma" + std::to_string(j) + "=" + name(1, j) + "osigma1", lift_sigma(j), cr(1, j).compose(lift_sigma(1)));
  }

  // closure of all fifteen lifts
  std::map<std::vector<int>, LatticeIsometry> elements;
  std::vector<LatticeIsometry> gens;
  for (auto [i, j] : pairs) gens.push_back(cr(i, j));
  for (int m = 1; m <= 5; ++m) gens.push_back(lift_sigma(m));
  std::vector<LatticeIsometry> frontier{LatticeIsometry::identity(5)};
  elements.emplace(perm(frontier[0]), frontier[0]);
  while (!frontier.empty()) {
    std::vector<LatticeIsometry> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        LatticeIsometry h = g.compose(e);
        if (elements.emplace(perm(h), h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  report.group_order = static_cast<int>(elements.size());
  report.elementary_abelian = true;
  for (const auto& [p, a] : elements) {
    if (!(a.compose(a) == LatticeIsometry::identity(5))) report.elementary_abelian = false;
    for (const auto& [q, b] : elements)
      if (!(a.compose(b) == b.compose(a))) report.elementary_abelian = false;
  }
  return report;
}

}  // namespace kecert
