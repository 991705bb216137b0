#include "kecert/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace kecert {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<int> generators)
    : table_(std::move(table)), inverse_(table_.size(), -1), generators_(std::move(generators)) {
  const std::size_t n = table_.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[a].size() != n) throw Error(ErrorKind::BadParams, "multiplication table must be square");
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] == 0) inverse_[a] = static_cast<int>(b);
    if (inverse_[a] < 0) throw Error(ErrorKind::BadParams, "element without inverse");
  }
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = multiply(a, x)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  const auto n = static_cast<int>(order());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (multiply(a, b) != multiply(b, a)) return false;
  return true;
}

std::vector<int> FiniteGroup::subgroup_generated(const std::vector<int>& gens) const {
  std::vector<char> in(order(), 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int g : gens) {
      int x = multiply(g, elems[i]);
      if (!in[static_cast<std::size_t>(x)]) {
        in[static_cast<std::size_t>(x)] = 1;
        elems.push_back(x);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

Permutation compose_permutations(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw Error(ErrorKind::ArityMismatch, "permutations of different degree");
  Permutation r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = p[static_cast<std::size_t>(q[x])];
  return r;
}

FiniteGroup permutation_group(const std::vector<Permutation>& gens, std::size_t cap) {
  if (gens.empty()) throw Error(ErrorKind::BadParams, "no generators");
  Permutation id(gens[0].size());
  std::iota(id.begin(), id.end(), 0);
  auto key = [](const Permutation& p) {
    std::string s;
    for (int x : p) s += std::to_string(x) + ",";
    return s;
  };
  return generate_closure(id, gens, compose_permutations, key, cap).group;
}

std::string GroupFingerprint::to_string() const {
  std::string s = "order " + std::to_string(order) + (is_abelian ? ", abelian" : ", nonabelian") + ", element orders {";
  bool first = true;
  for (const auto& [o, c] : element_orders) {
    s += (first ? "" : ", ") + std::to_string(o) + ":" + std::to_string(c);
    first = false;
  }
  return s + "}";
}

GroupFingerprint fingerprint(const FiniteGroup& g) {
  GroupFingerprint f;
  f.order = g.order();
  for (int a = 0; a < static_cast<int>(g.order()); ++a) ++f.element_orders[g.element_order(a)];
  f.is_abelian = g.is_abelian();
  return f;
}

namespace {

bool is_dihedral(const FiniteGroup& g, std::string& evidence) {
  const auto n = static_cast<int>(g.order());
  if (n < 4 || n % 2 != 0) return false;
  const int half = n / 2;
  for (int c = 0; c < n; ++c) {
    if (g.element_order(c) != half) continue;
    std::vector<char> in_cyclic(g.order(), 0);
    for (int x = 0, k = 0; k < half; ++k, x = g.multiply(c, x)) in_cyclic[static_cast<std::size_t>(x)] = 1;
    for (int t = 0; t < n; ++t) {
      if (in_cyclic[static_cast<std::size_t>(t)] || g.element_order(t) != 2) continue;
      if (g.multiply(g.multiply(t, c), t) == g.inverse(c)) {
        evidence = "cyclic subgroup of index 2 generated by element " + std::to_string(c) + ", inverted by involution " +
                   std::to_string(t);
        return true;
      }
    }
  }
  return false;
}

}  // namespace

ForbiddenResult identify_forbidden(const FiniteGroup& g) {
  ForbiddenResult r;
  const GroupFingerprint f = fingerprint(g);
  const auto n = static_cast<int>(f.order);
  if (f.element_orders.count(n)) {
    r.forbidden = true;
    r.name = "cyclic";
    r.evidence = "an element has order " + std::to_string(n) + " = |G|";
    return r;
  }
  std::string dihedral_evidence;
  if (is_dihedral(g, dihedral_evidence)) {
    r.forbidden = true;
    r.name = "dihedral";
    r.evidence = dihedral_evidence;
    return r;
  }
  const std::map<int, int> a4{{1, 1}, {2, 3}, {3, 8}};
  const std::map<int, int> s4{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
  const std::map<int, int> a5{{1, 1}, {2, 15}, {3, 20}, {5, 24}};
  for (const auto& [name, stats, size] : {std::tuple{"A4", a4, 12}, std::tuple{"S4", s4, 24}, std::tuple{"A5", a5, 60}}) {
    if (n == size && f.element_orders == stats) {
      r.forbidden = true;
      r.name = name;
      r.evidence = "order and element-order statistics match " + std::string(name) + ": " + f.to_string();
      return r;
    }
  }
  r.evidence = f.to_string() + "; no element of order |G|";
  r.evidence += n % 2 == 0 ? "; no index-2 cyclic subgroup inverted by an involution" : "; odd order, not dihedral";
  r.evidence += "; statistics differ from A4, S4 and A5";
  return r;
}

FiniteGroup pointwise_stabilizer_quotient(const FiniteGroup& g, const std::vector<int>& normal) {
  const auto n = static_cast<int>(g.order());
  std::vector<char> in(g.order(), 0);
  for (int x : normal) {
    if (x < 0 || x >= n) throw Error(ErrorKind::BadParams, "element index out of range");
    in[static_cast<std::size_t>(x)] = 1;
  }
  std::vector<int> members;
  for (int x = 0; x < n; ++x)
    if (in[static_cast<std::size_t>(x)]) members.push_back(x);
  if (!in[0]) throw Error(ErrorKind::NotNormal, "subset does not contain the identity");
  for (int a : members)
    for (int b : members)
      if (!in[static_cast<std::size_t>(g.multiply(a, b))]) throw Error(ErrorKind::NotNormal, "subset is not a subgroup");
  for (int x = 0; x < n; ++x)
    for (int a : members)
      if (!in[static_cast<std::size_t>(g.multiply(g.multiply(x, a), g.inverse(x)))]) {
        throw Error(ErrorKind::NotNormal, "subgroup is not normal");
      }
  // coset of x = {x a}; label by first-seen order
  std::vector<int> coset(g.order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset[static_cast<std::size_t>(x)] >= 0) continue;
    const int label = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int a : members) coset[static_cast<std::size_t>(g.multiply(x, a))] = label;
  }
  std::vector<std::vector<int>> table(reps.size(), std::vector<int>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) table[i][j] = coset[static_cast<std::size_t>(g.multiply(reps[i], reps[j]))];
  std::vector<int> gens;
  for (int x : g.generators()) gens.push_back(coset[static_cast<std::size_t>(x)]);
  return FiniteGroup(std::move(table), std::move(gens));
}

}  // namespace kecert
