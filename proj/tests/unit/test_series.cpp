#include <doctest.h>

#include <random>

#include "genus_forge/error.hpp"
#include "genus_forge/series.hpp"

using namespace genus_forge;

namespace {

RatSeries series_from(std::vector<Rational> c, long order) {
  RatSeries s("q", order, Rational{1});
  for (std::size_t i = 0; i < c.size(); ++i) s.set(static_cast<long>(i), c[i]);
  return s;
}

RatSeries random_series(std::mt19937_64& rng, long order, bool unit) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  RatSeries s("q", order, Rational{1});
  for (long e = 0; e < order; ++e) s.set(e, Rational(num(rng), den(rng)));
  if (unit && s.coeff(0).is_zero()) s.set(0, Rational{1});
  return s;
}

}  // namespace

TEST_CASE("rendering") {
  CHECK(series_from({Rational(1, 12), 1, 3}, 6).to_string() == "1/12 + q + 3*q^2 + O(q^6)");
  CHECK(RatSeries("q", 6, Rational{1}).to_string() == "0 + O(q^6)");
  QSeries z("q", 3, Cyclotomic(3, Rational{1}));
  z.set(1, Cyclotomic::parse(3, "1/2 + 1/2*z"));
  z.set(2, Cyclotomic(3, Rational{-2}));
  CHECK(z.to_string() == "(1/2 + 1/2*z)*q - 2*q^2 + O(q^3)");
}

TEST_CASE("geometric series inverse") {
  const RatSeries one_minus_q = series_from({1, -1}, 8);
  const RatSeries inv = one_minus_q.inverse();
  for (long e = 0; e < 8; ++e) CHECK(inv.coeff(e) == Rational{1});
  CHECK(inv.limit() == 8);
  CHECK_THROWS_AS(series_from({0, 1}, 8).inverse(), ArithmeticError);
}

TEST_CASE("Laurent inversion loses precision by twice the valuation") {
  RatSeries q_plus = series_from({0, 1, 1}, 8).as_laurent();
  const RatSeries inv = q_plus.inverse();
  CHECK(inv.limit() == 6);
  CHECK(inv.valuation() == -1);
  // 1/(q + q^2) = q^{-1} (1 - q + q^2 - ...)
  for (long e = -1; e < 6; ++e) CHECK(inv.coeff(e) == Rational((e + 1) % 2 == 0 ? 1 : -1));
  CHECK(agree_below(inv * q_plus, RatSeries::constant("q", 8, Rational{1}, 1, true), inv.limit() - 1));
}

TEST_CASE("product truncation accounts for valuations") {
  const RatSeries a = series_from({0, 0, 1}, 5);  // q^2 + O(q^5)
  const RatSeries b = series_from({1, 1}, 9);     // 1 + q + O(q^9)
  const RatSeries p = a * b;
  CHECK(p.limit() == 5);
  CHECK(p.to_string() == "q^2 + q^3 + O(q^5)");
  // never more precise than either factor
  const RatSeries c = series_from({0, 0, 0, 1}, 9);  // q^3 + O(q^9)
  CHECK((a * c).limit() == 5);
  CHECK((a * c).to_string() == "0 + O(q^5)");
}

TEST_CASE("ring axioms and inverses on random series") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const RatSeries a = random_series(rng, 7, false), b = random_series(rng, 7, false),
                    c = random_series(rng, 7, true);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(c * c.inverse() == RatSeries::constant("q", 7, Rational{1}));
    CHECK(c.pow(3) == c * c * c);
  }
}

TEST_CASE("fractional exponents") {
  RatSeries s("u", 2, Rational{1}, 3);
  CHECK(s.limit() == 6);
  s.set(1, Rational{2});
  CHECK((s * s).coeff(2) == Rational{4});
  CHECK_THROWS_AS(RatSeries("u", 2, Rational{1}, 0), ValidationError);
}

TEST_CASE("series with series coefficients") {
  const RatSeries qone = RatSeries::constant("q", 4, Rational{1});
  TruncSeries<RatSeries> x("x", 3, qone);
  x.set(0, qone);
  x.set(1, series_from({0, 1}, 4));
  const auto sq = x * x;
  CHECK(sq.coeff(2) == series_from({0, 0, 1}, 4));
  CHECK(sq.to_string() == "(1 + O(q^4)) + (2*q + O(q^4))*x + (q^2 + O(q^4))*x^2 + O(x^3)");
}

TEST_CASE("small identities") {
  const RatSeries p = series_from({1, 1}, 5) * series_from({1, -1}, 5);
  CHECK(p.to_string() == "1 - q^2 + O(q^5)");
  RatSeries geometric("q", 10, Rational{1});
  for (long e = 0; e < 10; ++e) geometric.set(e, Rational{1});
  CHECK(geometric * series_from({1, -1}, 10) == RatSeries::constant("q", 10, Rational{1}));
  RatSeries inv_q("q", 4, Rational{1}, 1, true);
  inv_q.set(-1, Rational{1});
  RatSeries q("q", 4, Rational{1}, 1, true);
  q.set(1, Rational{1});
  CHECK((inv_q * q).coeff(0) == Rational{1});
  CHECK(RatSeries::constant("q", 4, Rational{2}).inverse() == RatSeries::constant("q", 4, Rational(1, 2)));

  // 1/(1 - zeta_3 q) = 1 + zeta_3 q + zeta_3^2 q^2
  const Cyclotomic one(3, Rational{1});
  QSeries f("q", 3, one);
  f.set(0, one);
  f.set(1, -Cyclotomic::zeta(3));
  const QSeries g = f.inverse();
  CHECK(g.coeff(1) == Cyclotomic::zeta(3));
  CHECK(g.coeff(2) == Cyclotomic::zeta(3, 2));
  CHECK_THROWS_AS(QSeries("q", 3, one) + QSeries("x", 3, one), ArithmeticError);
}
