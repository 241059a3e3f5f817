#pragma once

#include <string>
#include <vector>

#include "genus_forge/localization.hpp"
#include "genus_forge/partition.hpp"
#include "genus_forge/sparse_poly.hpp"

namespace genus_forge {

using RootVector = std::vector<long>;

/// Root systems of type A_m (coordinates x_1..x_{m+1}) and B_m (coordinates x_1..x_m).
class RootSystem {
 public:
  RootSystem(char family, int rank);

  char family() const { return family_; }
  int rank() const { return rank_; }
  /// Number of ambient coordinates.
  int dim() const { return family_ == 'A' ? rank_ + 1 : rank_; }

  /// alpha_1..alpha_m: x_j - x_{j+1}, and x_m as the last one for B_m.
  std::vector<RootVector> simple_roots() const;
  std::vector<RootVector> positive_roots() const;
  /// Coordinates of a root in the basis of simple roots.
  std::vector<long> simple_coordinates(const RootVector& root) const;
  std::string name() const;

  friend bool operator==(const RootSystem&, const RootSystem&) = default;

 private:
  char family_;
  int rank_;
};

/// A root is positive when its first nonzero coordinate is positive.
bool is_positive_root(const RootVector& r);

/// Signed permutation of the ambient coordinates: x_i -> sign(image[i]) x_{|image[i]|}, 1-based.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(std::vector<int> image);
  static WeylElement identity(int dim);
  /// The simple reflection s_j (1-based).
  static WeylElement simple_reflection(const RootSystem& rs, int j);

  const std::vector<int>& image() const { return image_; }
  RootVector apply(const RootVector& root) const;
  /// P(w(x_1), ..., w(x_n)); a homomorphism: (v*w).act(P) == v.act(w.act(P)).
  SparsePoly act(const SparsePoly& p) const { return p.act(image_); }

  /// Composition (v*w)(x) = v(w(x)).
  friend WeylElement operator*(const WeylElement& v, const WeylElement& w);
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

 private:
  std::vector<int> image_;
};

/// Number of positive roots sent to negative roots.
int weyl_length(const RootSystem& rs, const WeylElement& w);
/// Reduced word j_1..j_l with w = s_{j_1} ... s_{j_l}, peeling the smallest right descent first.
std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w);
/// Every reduced word of w.
std::vector<std::vector<int>> all_reduced_words(const RootSystem& rs, const WeylElement& w);
WeylElement from_word(const RootSystem& rs, const std::vector<int>& word);
/// All elements of W, memoized per root system.
const std::vector<WeylElement>& weyl_group(const RootSystem& rs);

/// alpha_j as a linear polynomial in x1..x_dim.
SparsePoly root_polynomial(const RootSystem& rs, const RootVector& root);

/// (P - s_j P) / alpha_j
SparsePoly divided_difference(const RootSystem& rs, int j, const SparsePoly& p);
/// d_{j_1} o ... o d_{j_l}; the last letter acts first.
SparsePoly divided_difference_word(const RootSystem& rs, const std::vector<int>& word, const SparsePoly& p);

/// Coadjoint orbit through a point with stabilizer generated by the simple roots J.
class OrbitSpec {
 public:
  /// J holds 1-based simple-root indices.
  OrbitSpec(RootSystem rs, std::vector<int> J);

  const RootSystem& root_system() const { return rs_; }
  const std::vector<int>& J() const { return J_; }
  /// R+ minus the roots spanned by J.
  const std::vector<RootVector>& complement_roots() const { return complement_; }
  int n() const { return static_cast<int>(complement_.size()); }
  /// Minimal length coset representatives of W/W_J, ordered by length then word.
  const std::vector<WeylElement>& coset_representatives() const { return reps_; }
  const WeylElement& longest_representative() const { return longest_; }
  std::size_t stabilizer_order() const { return stabilizer_order_; }

 private:
  RootSystem rs_;
  std::vector<int> J_;
  std::vector<RootVector> complement_;
  std::vector<WeylElement> reps_;
  WeylElement longest_;
  std::size_t stabilizer_order_ = 0;
};

/// CP^n as the A_n orbit with J = {2, ..., n}.
OrbitSpec cpn_orbit(int n);
/// Oriented 2-planes in R^{2m+1} as the B_m orbit with J = {2, ..., m}.
OrbitSpec grassmannian_orbit(int m);

/// d_{w-bar} m_I(roots of R+ minus <J>) in the ambient coordinates.
SparsePoly q_I_via_divided_diff(const OrbitSpec& orbit, const Partition& I);

/// One fixed point per coset w W_J with weights <w(alpha), xi>.
FixedPointData orbit_fixed_points(const OrbitSpec& orbit, const std::vector<long>& xi);

struct CrosscheckResult {
  bool ok = false;
  Rational divided_difference_value;
  Rational localization_value;
};

CrosscheckResult crosscheck_qI(const OrbitSpec& orbit, const Partition& I, const std::vector<long>& xi);

/// Equal as multisets of weight multisets.
bool same_fixed_points_up_to_reordering(const FixedPointData& a, const FixedPointData& b);

}  // namespace genus_forge
