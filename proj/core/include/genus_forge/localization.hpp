#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genus_forge/partition.hpp"
#include "genus_forge/series.hpp"
#include "genus_forge/upoly.hpp"

namespace genus_forge {

struct FixedPoint {
  std::string label;
  std::vector<long> weights;

  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

/// A circle action with isolated fixed points, given by the weights at each fixed point.
struct FixedPointData {
  int n = 0;
  std::vector<FixedPoint> points;
  /// Index k0 asserted by the caller (it cannot be derived from the weights).
  std::optional<int> asserted_index;

  friend bool operator==(const FixedPointData&, const FixedPointData&) = default;
};

/// Throws ValidationError naming the offending point and slot.
void validate(const FixedPointData& fpd);

struct ActionType {
  bool balanced = true;
  /// Common residue of the weight sums mod N when balanced.
  long residue = 0;
  /// Indices of two points with different residues otherwise.
  std::optional<std::pair<std::size_t, std::size_t>> witnesses;
};

ActionType action_type(const FixedPointData& fpd, long N);

/// C_lambda by localization; lambda must be a partition of n and the result an integer.
Rational chern_number(const FixedPointData& fpd, const Partition& lambda);
std::map<Partition, Rational> chern_numbers(const FixedPointData& fpd);

/// sum_P (-y)^{number of negative weights at P}
UPoly chi_y_from_counts(const FixedPointData& fpd);

/// q_I = sum_P m_I(w(P)) / prod_j w_j(P)
Rational relation_coefficient(const FixedPointData& fpd, const Partition& I);

/// Formal combination sum_I q_I G_{I,N} over partitions of k with at most n parts.
struct Relation {
  int n = 0;
  int k = 0;
  int N = 2;
  std::vector<std::pair<Partition, Rational>> terms;
  std::string provenance;

  /// "5*G[4,3] + 4*G[1,3]*G[3,3] + G[2,3]^2 = 0"; zero terms omitted.
  std::string to_string() const;

  /// The same relation scaled to coprime integer coefficients with the first nonzero one positive.
  Relation primitive() const;
  bool is_trivial() const;

  friend bool operator==(const Relation&, const Relation&) = default;
};

Relation build_relation(const FixedPointData& fpd, int N, int k);

/// prod_i G_{I_i,N} through q^{precision-1}; the empty product is 1.
QSeries eisenstein_product(const Partition& I, int N, long precision);

struct RelationCheck {
  bool ok = false;
  QSeries residual;
};

RelationCheck verify_relation(const Relation& rel, long precision);

/// sum_{|I|=n} q_I G_{I,N}: the level-N elliptic genus as a q-series.
QSeries genus_qexp(const FixedPointData& fpd, int N, long precision);

/// c * t^exponent
struct LaurentTerm {
  Rational exponent;
  Rational coeff;
};
using TLaurent = std::vector<LaurentTerm>;

/// lim_{t->1} sum_P t^{lift_P} numerator_P(t) / prod_j (1 - t^{-w_j(P)}).
Rational equivariant_index_limit(const FixedPointData& fpd, const std::vector<TLaurent>& numerators,
                                 const std::vector<Rational>& lifts);

/// ind(L^k (x) wedge^m T^*) with the lift sum_j w_j(P) x = -N c_1(L)|_P.
Rational hilbert_value(const FixedPointData& fpd, int N, int m, long k);

struct HilbertData {
  int n = 0;
  int m = 0;
  UPoly polynomial;
};

/// Interpolates H_m at k = 1..n+1 and checks k = n+2.
HilbertData hilbert_polynomial(const FixedPointData& fpd, int N, int m);

/// (-1)^n/(m!(n-m)!) (x-1)...(x-(n-m)) (x+1)...(x+m)
UPoly cpn_hilbert_closed_form(int n, int m);

/// Standard circle action on CP^n; asserted index n+1.
FixedPointData cpn_fixed_points(const std::vector<long>& weights);

struct DivisionResult {
  bool divisible = false;
  UPoly quotient;
  UPoly remainder;
};

/// Divides by sum_{j<k0} (-y)^j.
DivisionResult divides_chi_y(const UPoly& chi_y, int k0);

struct GeneralRelationReport {
  bool ok = false;
  /// "G0=1" or "omit-zero"; which convention made the identity hold (empty if neither).
  std::string convention;
  bool g0_one_ok = false;
  bool omit_zero_ok = false;
  QSeries lhs;
  QSeries rhs;
};

/// Checks the CP^n identity between sums of products of Eisenstein series.
GeneralRelationReport general_relation_cpn(int n, int N, int k, long precision);

}  // namespace genus_forge
