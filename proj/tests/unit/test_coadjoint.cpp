#include <doctest.h>

#include <algorithm>
#include <random>

#include "genus_forge/coadjoint.hpp"
#include "genus_forge/error.hpp"

using namespace genus_forge;

namespace {

SparsePoly random_poly(const RootSystem& rs, std::mt19937_64& rng) {
  const auto vars = SparsePoly::indexed_vars("x", static_cast<std::size_t>(rs.dim()));
  std::uniform_int_distribution<int> deg(0, 3), coef(-5, 5);
  SparsePoly p(vars);
  for (int t = 0; t < 6; ++t) {
    Exponent e(vars.size());
    for (auto& x : e) x = deg(rng);
    p.add_term(e, Rational(coef(rng)));
  }
  return p;
}

std::vector<long> generic_xi(const OrbitSpec& orbit, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-12, 12);
  for (;;) {
    std::vector<long> xi(static_cast<std::size_t>(orbit.root_system().dim()));
    for (auto& x : xi) x = d(rng);
    try {
      orbit_fixed_points(orbit, xi);
      return xi;
    } catch (const ValidationError&) {
    }
  }
}

}  // namespace

TEST_CASE("Weyl group orders") {
  CHECK(weyl_group(RootSystem('A', 1)).size() == 2);
  CHECK(weyl_group(RootSystem('A', 2)).size() == 6);
  CHECK(weyl_group(RootSystem('A', 3)).size() == 24);
  CHECK(weyl_group(RootSystem('B', 2)).size() == 8);
  CHECK(weyl_group(RootSystem('B', 3)).size() == 48);
  CHECK(RootSystem('B', 3).positive_roots().size() == 9);
  CHECK(RootSystem('A', 3).name() == "A3");
}

TEST_CASE("lengths count inverted positive roots") {
  for (const RootSystem& rs : {RootSystem('A', 3), RootSystem('B', 3)}) {
    for (const auto& w : weyl_group(rs)) {
      int inversions = 0;
      for (const auto& a : rs.positive_roots())
        if (!is_positive_root(w.apply(a))) ++inversions;
      CHECK(weyl_length(rs, w) == inversions);
      const auto word = reduced_word(rs, w);
      CHECK(static_cast<int>(word.size()) == inversions);
      CHECK(from_word(rs, word) == w);
    }
  }
}

TEST_CASE("divided differences satisfy the nil-Coxeter relations") {
  std::mt19937_64 rng(8);
  const RootSystem a2('A', 2), b2('B', 2);
  for (int trial = 0; trial < 10; ++trial) {
    const SparsePoly p = random_poly(a2, rng);
    CHECK(divided_difference(a2, 1, divided_difference(a2, 1, p)).is_zero());
    CHECK(divided_difference_word(a2, {1, 2, 1}, p) == divided_difference_word(a2, {2, 1, 2}, p));
    const SparsePoly q = random_poly(b2, rng);
    CHECK(divided_difference(b2, 2, divided_difference(b2, 2, q)).is_zero());
    CHECK(divided_difference_word(b2, {1, 2, 1, 2}, q) == divided_difference_word(b2, {2, 1, 2, 1}, q));
  }
  for (int j = 1; j <= 2; ++j) {
    const SparsePoly alpha = root_polynomial(b2, b2.simple_roots()[j - 1]);
    CHECK(divided_difference(b2, j, alpha) == SparsePoly(alpha.vars(), Rational{2}));
  }
}

TEST_CASE("Leibniz rule for a divided difference") {
  std::mt19937_64 rng(12);
  const RootSystem a3('A', 3);
  const WeylElement s2 = WeylElement::simple_reflection(a3, 2);
  for (int trial = 0; trial < 10; ++trial) {
    const SparsePoly p = random_poly(a3, rng), q = random_poly(a3, rng);
    CHECK(divided_difference(a3, 2, p * q) ==
          divided_difference(a3, 2, p) * q + s2.act(p) * divided_difference(a3, 2, q));
  }
}

TEST_CASE("orbit shapes") {
  const OrbitSpec cp3 = cpn_orbit(3);
  CHECK(cp3.n() == 3);
  CHECK(cp3.coset_representatives().size() == 4);
  CHECK(reduced_word(cp3.root_system(), cp3.longest_representative()) == std::vector<int>{3, 2, 1});
  const OrbitSpec gr5 = grassmannian_orbit(2);
  CHECK(gr5.n() == 3);
  CHECK(gr5.coset_representatives().size() == 4);
  CHECK(all_reduced_words(gr5.root_system(), gr5.longest_representative()) == std::vector<std::vector<int>>{{1, 2, 1}});
  const OrbitSpec gr7 = grassmannian_orbit(3);
  CHECK(gr7.n() == 5);
  CHECK(gr7.coset_representatives().size() == 6);
}

TEST_CASE("divided differences agree with localization") {
  std::mt19937_64 rng(31);
  for (const OrbitSpec& orbit : {cpn_orbit(1), cpn_orbit(2), grassmannian_orbit(2)}) {
    for (int rep = 0; rep < 2; ++rep) {
      const auto xi = generic_xi(orbit, rng);
      for (int k = orbit.n(); k <= orbit.n() + 2; ++k)
        for (const auto& I : partitions_at_most(k, orbit.n())) {
          const auto r = crosscheck_qI(orbit, I, xi);
          CHECK(r.ok);
          CHECK(r.divided_difference_value == r.localization_value);
        }
    }
  }
}

TEST_CASE("the A_n orbit is CP^n with its standard action") {
  std::mt19937_64 rng(2);
  for (int n = 1; n <= 3; ++n) {
    const OrbitSpec orbit = cpn_orbit(n);
    const auto xi = generic_xi(orbit, rng);
    std::vector<long> w;
    for (std::size_t i = 1; i < xi.size(); ++i) w.push_back(xi[0] - xi[i]);
    CHECK(same_fixed_points_up_to_reordering(orbit_fixed_points(orbit, xi), cpn_fixed_points(w)));
  }
  CHECK_THROWS_AS(orbit_fixed_points(cpn_orbit(2), {1, 1, 2}), ValidationError);
}

TEST_CASE("Chern numbers of Gr2+(R^5) are independent of the circle") {
  std::mt19937_64 rng(44);
  const OrbitSpec orbit = grassmannian_orbit(2);
  const auto reference = chern_numbers(orbit_fixed_points(orbit, generic_xi(orbit, rng)));
  CHECK(reference.at(Partition({3})) == Rational(4));  // Euler characteristic
  for (int trial = 0; trial < 5; ++trial)
    CHECK(chern_numbers(orbit_fixed_points(orbit, generic_xi(orbit, rng))) == reference);
}

TEST_CASE("small root system examples") {
  const auto b2 = RootSystem('B', 2).positive_roots();
  CHECK(b2.size() == 4);
  for (const RootVector& r : {RootVector{1, -1}, RootVector{1, 1}, RootVector{1, 0}, RootVector{0, 1}})
    CHECK(std::find(b2.begin(), b2.end(), r) != b2.end());
  CHECK(RootSystem('A', 2).positive_roots().size() == 3);

  const RootSystem a1('A', 1);
  const auto vars = SparsePoly::indexed_vars("x", 2);
  const SparsePoly x1 = SparsePoly::variable(vars, 0), x2 = SparsePoly::variable(vars, 1);
  CHECK(divided_difference(a1, 1, x1) == SparsePoly(vars, Rational{1}));
  CHECK(divided_difference(a1, 1, x1 * x1) == x1 + x2);
  CHECK(divided_difference(a1, 1, x1 * x2 + x1 + x2).is_zero());

  const auto q = q_I_via_divided_diff(cpn_orbit(1), Partition({1}));
  CHECK(q.is_constant());
  CHECK(q.constant_term() == Rational{2});
}

TEST_CASE("Gr2+(R^5) crosschecks below and above degree n") {
  const OrbitSpec orbit = grassmannian_orbit(2);
  for (int k = 0; k <= 5; ++k)
    for (const auto& I : partitions_at_most(k, orbit.n())) {
      CHECK(crosscheck_qI(orbit, I, {5, 2}).ok);
      if (k < orbit.n()) CHECK(q_I_via_divided_diff(orbit, I).is_zero());
    }
  CHECK(orbit_fixed_points(orbit, {5, 2}).points.size() == 4);
}
