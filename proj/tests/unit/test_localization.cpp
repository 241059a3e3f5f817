#include <doctest.h>

#include <random>

#include "genus_forge/error.hpp"
#include "genus_forge/localization.hpp"
#include "genus_forge/selftest.hpp"
#include "genus_forge/symfunc.hpp"

using namespace genus_forge;

namespace {

Rational cpn_chern(int n, const Partition& lambda) {
  Rational v{1};
  for (int part : lambda.parts()) v *= binomial(n + 1, part);
  return v;
}

}  // namespace

TEST_CASE("validation names the offending slot") {
  FixedPointData empty{2, {}, std::nullopt};
  CHECK_THROWS_WITH_AS(validate(empty), "no fixed points", ValidationError);
  FixedPointData ragged{2, {{"A", {1, 2}}, {"B", {1}}}, std::nullopt};
  CHECK_THROWS_AS(validate(ragged), ValidationError);
  FixedPointData zero{2, {{"A", {1, 2}}, {"B", {0, 3}}}, std::nullopt};
  CHECK_THROWS_WITH_AS(validate(zero), "zero weight at point 1 (B), slot 0", ValidationError);
}

TEST_CASE("CP^2 Chern numbers and chi_y") {
  const FixedPointData cp2 = cpn_fixed_points({1, 2});
  CHECK(cp2.points.size() == 3);
  CHECK(cp2.asserted_index == 3);
  CHECK(chern_number(cp2, Partition({1, 1})) == Rational(9));
  CHECK(chern_number(cp2, Partition({2})) == Rational(3));
  CHECK(chi_y_from_counts(cp2).to_string() == "1 - y + y^2");
  CHECK_THROWS_AS(chern_number(cp2, Partition({2, 1})), ValidationError);
}

TEST_CASE("Chern numbers of CP^n do not depend on the weights") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const FixedPointData cpn = cpn_fixed_points(random_cpn_weights(n, 9, rng));
      for (const auto& lambda : partitions_of(n)) CHECK(chern_number(cpn, lambda) == cpn_chern(n, lambda));
    }
  }
}

TEST_CASE("non-manifold data is rejected by integrality") {
  // one fixed point with weights (1, 2): c_2 = 1/(1*2)*(1*2) = 1 but c_1^2 = 9/2
  FixedPointData bogus{2, {{"P", {1, 2}}}, std::nullopt};
  CHECK_THROWS_AS(chern_number(bogus, Partition({1, 1})), ConsistencyError);
  // relation coefficients below degree n need not vanish for such data
  FixedPointData point{2, {{"P", {1, 1}}}, std::nullopt};
  CHECK(relation_coefficient(point, Partition({1})) == Rational(2));
}

TEST_CASE("relation coefficients vanish below degree n on genuine models") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const FixedPointData fpd = random_manifold_data(4, 9, rng);
    for (int k = 0; k < fpd.n; ++k)
      for (const auto& I : partitions_at_most(k, fpd.n)) CHECK(relation_coefficient(fpd, I).is_zero());
  }
}

TEST_CASE("balanced actions") {
  const FixedPointData cp2 = cpn_fixed_points({1, 3});
  const ActionType t3 = action_type(cp2, 3);
  CHECK(t3.balanced);
  CHECK(t3.residue == 1);
  const ActionType t2 = action_type(cp2, 2);
  CHECK_FALSE(t2.balanced);
  CHECK(t2.witnesses.has_value());
}

TEST_CASE("CP^2 relations") {
  const FixedPointData degenerate = cpn_fixed_points({1, 2});
  CHECK(build_relation(degenerate, 3, 4).to_string() == "15*G[4,3] + 12*G[1,3]*G[3,3] + 3*G[2,3]^2 = 0");
  CHECK(build_relation(degenerate, 3, 5).is_trivial());
  CHECK(build_relation(degenerate, 3, 5).to_string() == "0 = 0");

  const FixedPointData cp2 = cpn_fixed_points({1, 3});
  const Relation r7 = build_relation(cp2, 3, 7);
  CHECK(r7.primitive().to_string() == "2*G[7,3] - G[2,3]*G[5,3] - G[3,3]*G[4,3] = 0");
  CHECK(verify_relation(r7, 21).ok);
  CHECK(r7.provenance.find("caller asserts") != std::string::npos);
  CHECK_THROWS_AS(build_relation(cp2, 3, 1), ValidationError);

  Relation broken = r7;
  broken.terms.front().second += Rational{1};
  const RelationCheck bad = verify_relation(broken, 8);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.residual.is_zero());
}

TEST_CASE("the genus from localization equals the sum over f_lambda C_lambda") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 8; ++trial) {
    const FixedPointData fpd = random_manifold_data(3, 7, rng);
    for (int N : {2, 3, 4}) {
      const auto table = f_lambda_table(N, fpd.n, 8);
      const auto chern = chern_numbers(fpd);
      QSeries sum = QSeries::zero_of(table.begin()->second);
      for (const auto& [lambda, f] : table) sum += f * Cyclotomic(N, chern.at(lambda));
      CHECK(genus_qexp(fpd, N, 8) == sum);
    }
  }
  CHECK(genus_qexp(cpn_fixed_points({1, 2}), 3, 12).is_zero());
  CHECK_FALSE(genus_qexp(cpn_fixed_points({1, 2}), 2, 12).is_zero());
}

TEST_CASE("equivariant index limit") {
  // Todd genus of CP^n is 1
  for (int n = 1; n <= 4; ++n) {
    std::vector<long> w;
    for (int i = 1; i <= n; ++i) w.push_back(i * i);
    const FixedPointData cpn = cpn_fixed_points(w);
    const std::vector<TLaurent> ones(cpn.points.size(), TLaurent{{Rational{0}, Rational{1}}});
    const std::vector<Rational> lifts(cpn.points.size(), Rational{0});
    CHECK(equivariant_index_limit(cpn, ones, lifts) == Rational{1});
  }
  FixedPointData single{1, {{"P", {1}}}, std::nullopt};
  CHECK_THROWS_WITH_AS(equivariant_index_limit(single, {TLaurent{{Rational{0}, Rational{1}}}}, {Rational{0}}),
                       "pole at t=1: not a global index", ConsistencyError);
}

TEST_CASE("Hilbert polynomials") {
  const FixedPointData cp2 = cpn_fixed_points({2, 5});
  // sum of weights = -3 c_1(L) makes L = O(-1), so ind(L^k) = (k - 1)(k - 2)/2
  CHECK(hilbert_polynomial(cp2, 3, 0).polynomial.to_string() == "1 - 3/2*x + 1/2*x^2");
  for (long k = -3; k <= 6; ++k) CHECK(hilbert_value(cp2, 3, 0, k) == Rational((k - 1) * (k - 2), 2));
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m <= n; ++m) CHECK(cpn_hilbert_closed_form(n, m)(Rational{}) == Rational(m % 2 == 0 ? 1 : -1));
}

TEST_CASE("chi_y divisibility") {
  const UPoly chi(std::vector<Rational>{1, -1, 1, -1}, "y");
  CHECK(divides_chi_y(chi, 4).divisible);
  CHECK(divides_chi_y(chi, 2).divisible);
  CHECK(divides_chi_y(chi, 2).quotient.to_string() == "1 + y^2");
  CHECK_FALSE(divides_chi_y(chi, 3).divisible);
}

TEST_CASE("identity among Eisenstein products for CP^n uses G_0 = 1") {
  const auto r = general_relation_cpn(2, 3, 4, 10);
  CHECK(r.ok);
  CHECK(r.convention == "G0=1");
  CHECK(r.lhs == r.rhs);
}

TEST_CASE("small fixed-point examples") {
  const FixedPointData cp2 = cpn_fixed_points({1, 2});
  CHECK(cp2.points[0].weights == std::vector<long>{1, 2});
  CHECK(cp2.points[1].weights == std::vector<long>{-1, 1});
  CHECK(cp2.points[2].weights == std::vector<long>{-2, -1});
  const ActionType t = action_type(cp2, 3);
  CHECK(t.balanced);
  CHECK(t.residue == 0);
  CHECK(action_type(FixedPointData{1, {{"P", {5}}}, std::nullopt}, 4).balanced);
  CHECK_FALSE(action_type(FixedPointData{2, {{"A", {1, 1}}, {"B", {1, 2}}}, std::nullopt}, 2).balanced);

  CHECK_THROWS_AS(cpn_fixed_points({1, 1}), ValidationError);
  CHECK_THROWS_AS(cpn_fixed_points({0, 2}), ValidationError);
  CHECK(chern_number(cpn_fixed_points({1, 2, 3}), Partition({1, 1, 1})) == Rational(64));

  for (long w : {1L, 2L, 5L}) {
    const FixedPointData cp1 = cpn_fixed_points({w});
    CHECK(chern_number(cp1, Partition({1})) == Rational(2));
    for (int k = 1; k <= 7; k += 2) CHECK(relation_coefficient(cp1, Partition({k})) == Rational(2 * w).pow(1) * Rational(w).pow(k - 2));
    CHECK(verify_relation(build_relation(cp1, 2, 3), 15).ok);
    CHECK(genus_qexp(cp1, 2, 15).is_zero());
  }
}

TEST_CASE("Hilbert values at zero") {
  // normalize the CP^2 weights so that each point's weight sum is 0 mod 3
  const FixedPointData cp2 = cpn_fixed_points({1, 2});
  CHECK(hilbert_value(cp2, 3, 0, 0) == Rational{1});
  CHECK(hilbert_value(cp2, 3, 1, 0) == Rational{-1});
  const FixedPointData cp3 = cpn_fixed_points({1, 2, 3});
  for (long k = -2; k <= 2; ++k) CHECK(hilbert_value(cp3, 4, 0, k) == Rational(-(k - 1) * (k - 2) * (k - 3), 6));
}

TEST_CASE("chi_y divisibility patterns") {
  const UPoly pattern(std::vector<Rational>{1, -2, 2, -1}, "y");
  CHECK(divides_chi_y(pattern, 3).quotient.to_string() == "1 - y");
  CHECK(divides_chi_y(pattern, 1).quotient == pattern);
  CHECK(divides_chi_y(chi_y_from_counts(cpn_fixed_points({1, 2})), 3).quotient.to_string() == "1");
}

TEST_CASE("identity for small cases") {
  CHECK(general_relation_cpn(1, 2, 3, 15).ok);
  CHECK(general_relation_cpn(3, 2, 5, 12).ok);
}
