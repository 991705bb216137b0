#pragma once

// The lattice Z^{1,r} of divisor classes on the plane blown up in r points.
// A class (d; m_1..m_r) stands for d h - sum m_i e_i.

#include <optional>
#include <string>
#include <vector>

namespace kecert {

class DivisorClass {
 public:
  DivisorClass() = default;
  DivisorClass(long d, std::vector<long> m) : d_(d), m_(std::move(m)) {}

  static DivisorClass hyperplane(int r);
  /// e_i for 1 <= i <= r.
  static DivisorClass exceptional(int r, int i);
  static DivisorClass canonical(int r);

  int r() const { return static_cast<int>(m_.size()); }
  long degree() const { return d_; }
  const std::vector<long>& multiplicities() const { return m_; }
  /// (d, m_1, ..., m_r)
  std::vector<long> coeffs() const;
  static DivisorClass from_coeffs(const std::vector<long>& c);
  std::string to_string() const;

  friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
  friend DivisorClass operator*(long k, const DivisorClass& a);
  friend bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.d_ == b.d_ && a.m_ == b.m_; }
  friend bool operator<(const DivisorClass& a, const DivisorClass& b) { return a.coeffs() < b.coeffs(); }

 private:
  long d_ = 0;
  std::vector<long> m_;
};

/// d_a d_b - sum m_a m_b; throws RankMismatch.
long intersection_pairing(const DivisorClass& a, const DivisorClass& b);

/// Classes with D.D = -1 and D.K = -1, sorted by coefficients.
std::vector<DivisorClass> enumerate_lines(int r);
/// Classes with D.D = -2 and D.K = 0, sorted by coefficients.
std::vector<DivisorClass> enumerate_roots(int r);

using IntMatrix = std::vector<std::vector<long>>;

/// Integer matrix acting on coefficient vectors (d, m_1, ..., m_r).
class LatticeIsometry {
 public:
  LatticeIsometry() = default;
  explicit LatticeIsometry(IntMatrix m);

  static LatticeIsometry identity(int r);
  int r() const { return static_cast<int>(m_.size()) - 1; }
  const IntMatrix& matrix() const { return m_; }
  DivisorClass apply(const DivisorClass& c) const;
  /// this o other
  LatticeIsometry compose(const LatticeIsometry& other) const;
  /// Inverse through the form: J M^T J.
  LatticeIsometry inverse() const;
  std::string key() const;

  /// Preserves the pairing on basis vectors and fixes K.
  bool is_isometry() const;
  /// Positions in `lines` of the images of `lines`; nullopt if some image is not a line.
  std::optional<std::vector<int>> line_permutation(const std::vector<DivisorClass>& lines) const;

  friend bool operator==(const LatticeIsometry& a, const LatticeIsometry& b) { return a.m_ == b.m_; }

 private:
  IntMatrix m_;
};

/// x -> x + (x.root) root; throws NotARoot.
LatticeIsometry reflect_in_root(const DivisorClass& root);
/// e_i -> e_{images[i-1]} (1-based images), h fixed.
LatticeIsometry lift_plane_automorphism(const std::vector<int>& images);
/// Reflection in h - e_i - e_j - e_k, then the transposition of the swap pair.
LatticeIsometry lift_cremona(int r, int i, int j, int k, std::optional<std::pair<int, int>> swap);

/// Lattice action of the quadratic map with base points i < j among points 1..5
/// complementary to {i, j}, exchanging P_i and P_j.
LatticeIsometry lift_pair_swap(int i, int j);
/// sigma_1 = Cr_23 o Cr_45 and sigma_j = Cr_1j o sigma_1.
LatticeIsometry lift_sigma(int j);

struct RelationCheck {
  std::string relation;
  bool holds = false;
};
struct RelationReport {
  std::vector<RelationCheck> checks;
  int group_order = 0;
  bool elementary_abelian = false;
  bool all_hold() const;
};
/// Relations among the pair swaps and sigma lifts at r = 5, compared as
/// permutations of the 16 lines.
RelationReport verify_relation_algebra();

}  // namespace kecert
