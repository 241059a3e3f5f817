#include <doctest.h>

#include <random>

#include "genus_forge/error.hpp"
#include "genus_forge/modular.hpp"
#include "genus_forge/symfunc.hpp"

using namespace genus_forge;

namespace {

// Number of partitions of k into at most n parts, by the usual recursion.
long count_partitions(int k, int n) {
  if (k == 0) return 1;
  if (k < 0 || n == 0) return 0;
  return count_partitions(k, n - 1) + count_partitions(k - n, n);
}

// CP^n: c = (1 + h)^{n+1}, so C_lambda = prod binom(n+1, lambda_i).
std::map<Partition, Rational> cpn_chern(int n) {
  std::map<Partition, Rational> c;
  for (const auto& lambda : partitions_of(n)) {
    Rational v{1};
    for (int part : lambda.parts()) v *= binomial(n + 1, part);
    c.emplace(lambda, v);
  }
  return c;
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(Partition::parse("[1,2]") == Partition({2, 1}));
  CHECK(Partition({3, 1, 1}).to_string() == "[3,1,1]");
  CHECK(Partition({2, 2, 1}).multiplicity(2) == 2);
  CHECK_THROWS_AS(Partition({2, 0}), ValidationError);
  CHECK_THROWS_AS(Partition::parse("[2,x]"), ValidationError);

  std::vector<std::string> six;
  for (const auto& p : partitions_at_most(6, 3)) six.push_back(p.to_string());
  CHECK(six == std::vector<std::string>{"[6]", "[5,1]", "[4,2]", "[3,3]", "[4,1,1]", "[3,2,1]", "[2,2,2]"});
  CHECK(partitions_at_most(0, 2).size() == 1);
  for (int k = 0; k <= 12; ++k)
    for (int n = 1; n <= 6; ++n)
      CHECK(static_cast<long>(partitions_at_most(k, n).size()) == count_partitions(k, n));
}

TEST_CASE("monomial symmetric functions by brute force") {
  const std::vector<Rational> x{1, 2, 3};
  // sum over ordered pairs i != j of x_i^2 x_j
  Rational brute;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) brute += x[i] * x[i] * x[j];
  CHECK(monomial_sym_eval(Partition({2, 1}), x) == brute);
  CHECK(brute == Rational(48));
  CHECK(monomial_sym_eval(Partition({1, 1, 1}), x) == Rational(6));
  CHECK(monomial_sym_eval(Partition{}, x) == Rational(1));
  CHECK_THROWS_AS(monomial_sym_eval(Partition({1, 1, 1, 1}), x), ValidationError);
}

TEST_CASE("monomial to elementary conversion round-trips") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<SparsePoly> e;
    for (int j = 1; j <= n; ++j) e.push_back(elementary_symmetric(j, n));
    for (int k = 0; k <= 7; ++k)
      for (const auto& I : partitions_at_most(k, n))
        CHECK(monomial_to_elementary(I, n).substitute(e) == monomial_symmetric(I, n));
  }
  // p_2 = e1^2 - 2 e2
  CHECK(monomial_to_elementary(Partition({2}), 2).to_string() == "e1^2 - 2*e2");
  CHECK(monomial_to_elementary(Partition({3}), 3).to_string() == "e1^3 - 3*e1*e2 + 3*e3");
}

TEST_CASE("genus polynomials agree with the direct product expansion") {
  for (int n = 1; n <= 4; ++n) {
    const auto Q = genus_polynomials(n, true);
    REQUIRE(Q.size() == static_cast<std::size_t>(n));
    // variables a1..an, x1..xn; expand prod_i (1 + a1 x_i + ... + an x_i^n)
    std::vector<std::string> vars = SparsePoly::indexed_vars("a", n);
    for (const auto& v : SparsePoly::indexed_vars("x", n)) vars.push_back(v);
    SparsePoly product(vars, Rational{1});
    for (int i = 0; i < n; ++i) {
      SparsePoly factor(vars, Rational{1});
      for (int j = 1; j <= n; ++j) {
        Exponent e(vars.size(), 0);
        e[j - 1] = 1;
        e[n + i] = j;
        factor.add_term(e, Rational{1});
      }
      product *= factor;
    }
    // substitute y_j = e_j(x) and a0 = 1 into Q_k
    std::vector<SparsePoly> subst;
    for (const auto& name : Q.front().vars()) {
      if (name == "a0") {
        subst.emplace_back(vars, Rational{1});
      } else if (name[0] == 'a') {
        subst.push_back(SparsePoly::variable(vars, std::stoul(name.substr(1)) - 1));
      } else {
        const int j = std::stoi(name.substr(1));
        SparsePoly ej = elementary_symmetric(j, n);
        std::vector<SparsePoly> xs;
        for (int i = 0; i < n; ++i) xs.push_back(SparsePoly::variable(vars, static_cast<std::size_t>(n + i)));
        subst.push_back(ej.substitute(xs));
      }
    }
    SparsePoly degree_parts(vars);
    for (int k = 1; k <= n; ++k) degree_parts += Q[k - 1].substitute(subst);
    // keep the terms of product with x-degree 1..n
    SparsePoly expected(vars);
    for (const auto& [e, c] : product.terms()) {
      int xdeg = 0;
      for (int i = 0; i < n; ++i) xdeg += e[n + i];
      if (xdeg >= 1 && xdeg <= n) expected.add_term(e, c);
    }
    CHECK(degree_parts == expected);
  }
}

TEST_CASE("f_lambda in dimension two") {
  // Q(x1)Q(x2) in degree 2 is a2 (e1^2 - 2 e2) + a1^2 e2
  const auto& f = f_lambda_symbolic(2, true);
  CHECK(f.at(Partition({1, 1})).to_string() == "a2");
  CHECK(f.at(Partition({2})).to_string() == "a1^2 - 2*a2");
}

TEST_CASE("chi_y genus of CP^n") {
  for (int n = 1; n <= 5; ++n) {
    const UPoly chi = genus_value(chi_y_power_series(n), cpn_chern(n), n);
    std::vector<Rational> expected;
    for (int j = 0; j <= n; ++j) expected.push_back(Rational(j % 2 == 0 ? 1 : -1));
    CHECK(chi == UPoly(expected, "y"));
    CHECK(chi(Rational{}) == Rational{1});  // Todd genus
  }
  CHECK_THROWS_AS(genus_value(chi_y_power_series(2), std::map<Partition, Rational>{}, 2), ValidationError);
}

TEST_CASE("f_lambda tables of the level N elliptic genus") {
  const auto two = f_lambda_table(2, 2, 6);
  const auto three = f_lambda_table(3, 2, 6);
  auto coeffs = [](const QSeries& s) {
    std::vector<std::string> out;
    for (long e = 0; e < 6; ++e) out.push_back(s.coeff(e).poly_string());
    return out;
  };
  using V = std::vector<std::string>;
  CHECK(coeffs(two.at(Partition({2}))) == V{"-1/6", "-4", "-4", "-16", "-4", "-24"});
  CHECK(coeffs(two.at(Partition({1, 1}))) == V{"1/12", "2", "2", "8", "2", "12"});
  CHECK(coeffs(three.at(Partition({2}))) == V{"-1/4", "-3", "-9", "-3", "-21", "-18"});
  CHECK(coeffs(three.at(Partition({1, 1}))) == V{"1/12", "1", "3", "1", "7", "6"});

  // f_[1,1] = G_2 and f_[2] = G_1^2 - 2 G_2
  for (int N : {2, 3, 4, 5}) {
    const auto t = f_lambda_table(N, 2, 8);
    const QSeries& g1 = eisenstein_qexp(1, N, 8);
    const QSeries& g2 = eisenstein_qexp(2, N, 8);
    CHECK(t.at(Partition({1, 1})) == g2);
    CHECK(t.at(Partition({2})) == g1 * g1 - g2 * Cyclotomic(N, Rational{2}));
  }
  // CP^2 is rigid for N = 3: sum f_lambda C_lambda = 0
  CHECK((three.at(Partition({2})) * Cyclotomic(3, Rational{3}) + three.at(Partition({1, 1})) * Cyclotomic(3, Rational{9})).is_zero());
}
