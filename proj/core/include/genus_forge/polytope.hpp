#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genus_forge/upoly.hpp"

namespace genus_forge {

/// h_j = sum_{r<=j} (-1)^{j-r} C(n-r, n-j) f_{n-r}; f has n+1 entries (f_0..f_n).
std::vector<long> h_from_f(const std::vector<long>& f);
/// Inverse transform: f_{n-r} = sum_{j<=r} C(n-j, r-j) h_j.
std::vector<long> f_from_h(const std::vector<long>& h);

using LatticePoint = std::vector<long>;

struct LatticeEdge {
  LatticePoint from;
  LatticePoint to;
};

/// gcd of the coordinates of to - from.
long affine_length(const LatticeEdge& e);
/// gcd of the affine lengths of all edges.
long combinatorial_index(const std::vector<LatticeEdge>& edges);

struct HDivision {
  bool divisible = false;
  UPoly quotient;
  UPoly remainder;
};

/// Divides sum h_j y^j by 1 + y + ... + y^{k0-1}.
HDivision h_divisibility(const std::vector<long>& h, int k0);

struct BettiPattern {
  /// 1..4 for k0 = n+1, n, n-1, n-2; 0 when no case applies or the pattern is violated.
  int which = 0;
  /// Free parameter of cases 3 and 4.
  std::optional<long> m;
  /// Reason when which == 0.
  std::string violation;
};

/// Matches even Betti numbers b_0..b_n against the patterns forced by the index k0.
BettiPattern betti_pattern(int n, int k0, const std::vector<long>& b);

/// f-vectors (f_0..f_n) of the standard polytopes.
std::vector<long> simplex_f_vector(int n);
std::vector<long> cube_f_vector(int n);
std::vector<long> product_f_vector(const std::vector<long>& p, const std::vector<long>& q);

/// Edges of conv{0, s e_1, ..., s e_n}.
std::vector<LatticeEdge> dilated_simplex_edges(int n, long s);
/// Edges of the unit n-cube.
std::vector<LatticeEdge> unit_cube_edges(int n);

}  // namespace genus_forge
