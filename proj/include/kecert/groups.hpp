#pragma once

// Finite groups given by generators.  Elements are opaque to the engine: the
// caller supplies composition and a canonical key, the closure records the
// multiplication table on element indices, and everything afterwards works on
// that table.

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "kecert/error.hpp"

namespace kecert {

constexpr std::size_t kDefaultGroupCap = 10000;

class FiniteGroup {
 public:
  FiniteGroup() = default;
  /// table[a][b] is the index of a*b; index 0 must be the identity.
  explicit FiniteGroup(std::vector<std::vector<int>> table, std::vector<int> generators = {});

  std::size_t order() const { return table_.size(); }
  int multiply(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int element_order(int a) const;
  const std::vector<int>& generators() const { return generators_; }
  bool is_abelian() const;
  /// Subgroup generated by the given elements, as sorted indices.
  std::vector<int> subgroup_generated(const std::vector<int>& gens) const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<int> generators_;
};

/// Breadth-first closure under left multiplication by the generators.
/// Element 0 is the identity; elements[k] corresponds to index k of the group.
template <class T>
struct Closure {
  std::vector<T> elements;
  FiniteGroup group;
};

template <class T, class Compose, class Key>
Closure<T> generate_closure(const T& identity, const std::vector<T>& gens, Compose compose, Key key,
                            std::size_t cap = kDefaultGroupCap) {
  Closure<T> out;
  std::unordered_map<std::string, int> index;
  out.elements.push_back(identity);
  index.emplace(key(identity), 0);
  // parent[e] = (generator, element) with e = gen * element
  std::vector<std::pair<int, int>> parent{{-1, -1}};
  std::vector<std::vector<int>> left(gens.size());
  for (std::size_t e = 0; e < out.elements.size(); ++e) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      T prod = compose(gens[g], out.elements[e]);
      std::string k = key(prod);
      auto it = index.find(k);
      int idx;
      if (it == index.end()) {
        if (out.elements.size() >= cap) {
          throw Error(ErrorKind::CapExceeded, "group closure exceeded " + std::to_string(cap) + " elements");
        }
        idx = static_cast<int>(out.elements.size());
        index.emplace(std::move(k), idx);
        out.elements.push_back(std::move(prod));
        parent.emplace_back(static_cast<int>(g), static_cast<int>(e));
      } else {
        idx = it->second;
      }
      left[g].push_back(idx);
    }
  }
  // Left multiplication by element e as a permutation of indices: L_e = L_g o L_parent.
  const std::size_t n = out.elements.size();
  std::vector<std::vector<int>> table(n);
  table[0].resize(n);
  for (std::size_t x = 0; x < n; ++x) table[0][x] = static_cast<int>(x);
  for (std::size_t e = 1; e < n; ++e) {
    const auto [g, p] = parent[e];
    table[e].resize(n);
    for (std::size_t x = 0; x < n; ++x) {
      table[e][x] = left[static_cast<std::size_t>(g)][static_cast<std::size_t>(table[static_cast<std::size_t>(p)][x])];
    }
  }
  std::vector<int> gen_idx;
  for (std::size_t g = 0; g < gens.size(); ++g) gen_idx.push_back(left[g][0]);
  out.group = FiniteGroup(std::move(table), std::move(gen_idx));
  return out;
}

using Permutation = std::vector<int>;
/// (p o q)(x) = p(q(x))
Permutation compose_permutations(const Permutation& p, const Permutation& q);
FiniteGroup permutation_group(const std::vector<Permutation>& gens, std::size_t cap = kDefaultGroupCap);

struct GroupFingerprint {
  std::size_t order = 0;
  std::map<int, int> element_orders;  // order -> count
  bool is_abelian = false;
  std::string to_string() const;
};
GroupFingerprint fingerprint(const FiniteGroup& g);

struct ForbiddenResult {
  bool forbidden = false;
  std::string name;  // cyclic, dihedral, A4, S4, A5 when forbidden
  std::string evidence;
};
/// Membership in the list of finite subgroups of PGL(2, C).
ForbiddenResult identify_forbidden(const FiniteGroup& g);

/// G / N for a normal subgroup N given by element indices; throws NotNormal.
FiniteGroup pointwise_stabilizer_quotient(const FiniteGroup& g, const std::vector<int>& normal);

}  // namespace kecert
