#pragma once

// Permutation models of small groups.

#include <array>
#include <numeric>
#include <vector>

#include "kecert/groups.hpp"

namespace kecert::testing {

inline Permutation cycle(std::vector<int> points, int degree) {
  Permutation p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) p[static_cast<std::size_t>(points[i])] = points[(i + 1) % points.size()];
  return p;
}

inline Permutation n_cycle(int n) {
  std::vector<int> pts(static_cast<std::size_t>(n));
  std::iota(pts.begin(), pts.end(), 0);
  return cycle(pts, n);
}

inline FiniteGroup cyclic_group(int n) { return permutation_group({n_cycle(n)}); }

// Symmetries of the n-gon, order 2n (n >= 2; n = 2 is the Klein four group acting on four points).
inline FiniteGroup dihedral_group(int n) {
  if (n == 2) return permutation_group({{1, 0, 3, 2}, {2, 3, 0, 1}});
  Permutation flip(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) flip[static_cast<std::size_t>(i)] = (n - i) % n;
  return permutation_group({n_cycle(n), flip});
}

inline FiniteGroup symmetric_group(int n) {
  std::vector<Permutation> gens{n_cycle(n)};
  if (n > 1) gens.push_back(cycle({0, 1}, n));
  return permutation_group(gens);
}

inline FiniteGroup alternating_group(int n) {
  std::vector<Permutation> gens;
  for (int k = 2; k < n; ++k) gens.push_back(cycle({0, 1, k}, n));
  return permutation_group(gens);
}

// (Z_2)^k acting on 2k points.
inline FiniteGroup elementary_abelian(int k) {
  std::vector<Permutation> gens;
  for (int i = 0; i < k; ++i) gens.push_back(cycle({2 * i, 2 * i + 1}, 2 * k));
  return permutation_group(gens);
}

// Direct product of permutation groups given by generators on disjoint point sets.
inline std::vector<Permutation> product_generators(const std::vector<Permutation>& a, int deg_a, const std::vector<Permutation>& b,
                                                   int deg_b) {
  std::vector<Permutation> out;
  for (const auto& g : a) {
    Permutation p(static_cast<std::size_t>(deg_a + deg_b));
    std::iota(p.begin(), p.end(), 0);
    for (int i = 0; i < deg_a; ++i) p[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(i)];
    out.push_back(p);
  }
  for (const auto& g : b) {
    Permutation p(static_cast<std::size_t>(deg_a + deg_b));
    std::iota(p.begin(), p.end(), 0);
    for (int i = 0; i < deg_b; ++i) p[static_cast<std::size_t>(deg_a + i)] = deg_a + g[static_cast<std::size_t>(i)];
    out.push_back(p);
  }
  return out;
}

}  // namespace kecert::testing

namespace kecert::testing {

// Group generated by 2x2 matrices over F_p, acting on the nonzero vectors of F_p^2.
inline FiniteGroup matrix_group_mod_p(const std::vector<std::array<int, 4>>& mats, int p) {
  auto index = [p](int x, int y) { return x * p + y - 1; };
  std::vector<Permutation> gens;
  for (const auto& m : mats) {
    Permutation perm(static_cast<std::size_t>(p * p - 1));
    for (int x = 0; x < p; ++x)
      for (int y = 0; y < p; ++y) {
        if (x == 0 && y == 0) continue;
        int u = ((m[0] * x + m[1] * y) % p + p) % p, v = ((m[2] * x + m[3] * y) % p + p) % p;
        perm[static_cast<std::size_t>(index(x, y))] = index(u, v);
      }
    gens.push_back(perm);
  }
  return permutation_group(gens);
}

}  // namespace kecert::testing
