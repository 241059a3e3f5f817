#include <doctest.h>

#include <random>

#include "genus_forge/bernoulli.hpp"
#include "genus_forge/cyclotomic.hpp"
#include "genus_forge/error.hpp"
#include "genus_forge/sparse_poly.hpp"
#include "genus_forge/upoly.hpp"

using namespace genus_forge;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-40, 40), den(1, 17);
  return Rational(num(rng), den(rng));
}

Cyclotomic random_cyclotomic(int N, std::mt19937_64& rng) {
  Cyclotomic c(N);
  for (int j = 0; j < N; ++j) c += Cyclotomic::zeta(N, j) * random_rational(rng);
  return c;
}

UPoly random_upoly(std::mt19937_64& rng, int max_degree) {
  std::vector<Rational> c(static_cast<std::size_t>(std::uniform_int_distribution<int>(0, max_degree)(rng) + 1));
  for (auto& x : c) x = random_rational(rng);
  return UPoly(c, "x");
}

// Pascal's rule, independent of the factorial-based binomial.
std::vector<std::vector<long>> pascal(int rows) {
  std::vector<std::vector<long>> t(static_cast<std::size_t>(rows + 1));
  for (int n = 0; n <= rows; ++n) {
    t[n].assign(static_cast<std::size_t>(n + 1), 1);
    for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int i = 1; i <= n; ++i)
    if (n % i == 0) d.push_back(i);
  return d;
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(0, 5).to_string() == "0");
  CHECK(Rational::parse(" 10 / 4 ") == Rational(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational::parse("1/0"), ValidationError);
  CHECK_THROWS_AS(Rational::parse("abc"), ValidationError);
  CHECK_THROWS_AS(Rational(1, 0), ArithmeticError);
  CHECK_THROWS_AS(Rational(0).inverse(), ArithmeticError);
  CHECK_THROWS_AS(Rational(7, 2).to_long(), ArithmeticError);
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(-3, 4) < Rational(-1, 2));
}

TEST_CASE("rational field axioms on random samples") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a - a == Rational{});
    CHECK(Rational::parse(a.to_string()) == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("binomial and factorial agree with Pascal's triangle") {
  const auto t = pascal(30);
  for (int n = 0; n <= 30; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == Rational(t[n][k]));
  CHECK(binomial(5, 7) == Rational{});
  CHECK(factorial(10) == Rational(3628800));
}

TEST_CASE("Bernoulli numbers") {
  const std::vector<Rational> known{1, Rational(-1, 2), Rational(1, 6), 0, Rational(-1, 30), 0, Rational(1, 42),
                                    0, Rational(-1, 30), 0, Rational(5, 66), 0, Rational(-691, 2730), 0, Rational(7, 6)};
  for (std::size_t k = 0; k < known.size(); ++k) CHECK(bernoulli(static_cast<long>(k)) == known[k]);

  // Faulhaber: sum_{j<m} j^k = 1/(k+1) sum_i binom(k+1, i) B_i m^{k+1-i}
  for (long k = 1; k <= 10; ++k) {
    for (long m = 1; m <= 8; ++m) {
      Rational lhs, rhs;
      for (long j = 0; j < m; ++j) lhs += Rational(j).pow(k);
      for (long i = 0; i <= k; ++i) rhs += binomial(k + 1, i) * bernoulli(i) * Rational(m).pow(k + 1 - i);
      CHECK(lhs == rhs / Rational(k + 1));
    }
  }
}

TEST_CASE("cyclotomic polynomials multiply to x^n - 1") {
  for (int n = 1; n <= 24; ++n) {
    UPoly product(Rational{1}, "x");
    for (int d : divisors(n)) product *= UPoly(cyclotomic_polynomial(d), "x");
    std::vector<Rational> expected(static_cast<std::size_t>(n + 1));
    expected.front() = -1;
    expected.back() = 1;
    CHECK(product == UPoly(expected, "x"));
  }
}

TEST_CASE("cyclotomic canonical forms") {
  const Cyclotomic one(5, Rational{1});
  const Cyclotomic z = Cyclotomic::zeta(5);
  CHECK((one + z) * (one + Cyclotomic::zeta(5, 4)) == Cyclotomic::parse(5, "1 - z^2 - z^3"));
  CHECK(Cyclotomic::zeta(5, 5) == one);
  CHECK(Cyclotomic::zeta(5, -1) == Cyclotomic::zeta(5, 4));
  Cyclotomic sum(5);
  for (int j = 0; j < 5; ++j) sum += Cyclotomic::zeta(5, j);
  CHECK(sum.is_zero());

  const Cyclotomic w = Cyclotomic::zeta(3);
  const Cyclotomic inv = (Cyclotomic(3, Rational{1}) - w).inverse();
  CHECK(inv.poly_string() == "2/3 + 1/3*z");
  CHECK(inv.to_string() == "(2/3 + 1/3*z) @ Q(zeta_3)");
  CHECK(Cyclotomic(3, Rational(1, 2)).to_string() == "1/2");
  CHECK_THROWS_AS(Cyclotomic(3).inverse(), ArithmeticError);
  CHECK_THROWS_AS(Cyclotomic(3, Rational{1}) + Cyclotomic(4, Rational{1}), ArithmeticError);
  // zeta_4 = i
  CHECK(Cyclotomic::zeta(4) * Cyclotomic::zeta(4) == Cyclotomic(4, Rational{-1}));
}

TEST_CASE("cyclotomic field axioms on random samples") {
  std::mt19937_64 rng(5);
  for (int N : {3, 4, 5, 6, 7, 8, 12}) {
    for (int trial = 0; trial < 25; ++trial) {
      const Cyclotomic a = random_cyclotomic(N, rng), b = random_cyclotomic(N, rng);
      CHECK(Cyclotomic::parse(N, a.poly_string()) == a);
      CHECK(a.conjugate().conjugate() == a);
      CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
      CHECK((a * b).galois(N - 1) == a.galois(N - 1) * b.galois(N - 1));
      if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(N, Rational{1}));
    }
  }
}

TEST_CASE("univariate polynomials") {
  const UPoly p(std::vector<Rational>{1, -1, 1});
  CHECK(p.to_string() == "1 - y + y^2");
  CHECK(UPoly().to_string() == "0");
  CHECK(p.degree() == 2);
  CHECK(p.reflect() == UPoly(std::vector<Rational>{1, 1, 1}));
  CHECK(p(Rational(-1)) == Rational(3));

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const UPoly a = random_upoly(rng, 6), b = random_upoly(rng, 3);
    if (b.is_zero()) continue;
    const auto [q, r] = a.divmod(b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }

  std::vector<Rational> xs{0, 1, 2, 3}, ys;
  for (const auto& x : xs) ys.push_back(x * x * x - Rational(2) * x);
  CHECK(UPoly::interpolate(xs, ys).to_string() == "-2*x + x^3");
}

TEST_CASE("sparse polynomials in grlex order") {
  const auto vars = SparsePoly::indexed_vars("x", 3);
  const SparsePoly x1 = SparsePoly::variable(vars, 0), x2 = SparsePoly::variable(vars, 1),
                   x3 = SparsePoly::variable(vars, 2);
  const SparsePoly p = x1 * x2 + x3.pow(2) * Rational(3) - x1 + SparsePoly(vars, Rational(2));
  CHECK(p.degree() == 2);
  CHECK(p.leading_term().first == Exponent{1, 1, 0});
  CHECK(p.to_string() == "x1*x2 + 3*x3^2 - x1 + 2");
  CHECK(p.evaluate({1, 2, 3}) == Rational(30));
  CHECK((p * (x1 - x2)).divide_exact(x1 - x2) == p);
  CHECK_THROWS_AS((p + x1).divide_exact(x1 - x2), ConsistencyError);
  // swap x1 and x3, negate x2
  CHECK(p.act({3, -2, 1}) == x3 * x2 * Rational(-1) + x1.pow(2) * Rational(3) - x3 + SparsePoly(vars, Rational(2)));
  CHECK(p.substitute({x1 + x2, x2, x3}).evaluate({1, 2, 3}) == p.evaluate({3, 2, 3}));
  CHECK(evaluate<Rational>(p, {1, 2, 3}, Rational{1}) == Rational(30));
}
