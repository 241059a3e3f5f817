#include "genus_forge/localization.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "genus_forge/error.hpp"
#include "genus_forge/modular.hpp"
#include "genus_forge/symfunc.hpp"

namespace genus_forge {

namespace {

std::vector<Rational> as_rationals(const std::vector<long>& w) {
  return {w.begin(), w.end()};
}

Rational weight_product(const std::vector<long>& w) {
  Rational p{1};
  for (long x : w) p *= Rational(x);
  return p;
}

/// e_0..e_n of the weights.
std::vector<Rational> elementary_values(const std::vector<long>& w) {
  std::vector<Rational> e(w.size() + 1);
  e[0] = Rational{1};
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j > 0; --j) e[j] += e[j - 1] * Rational(w[i]);
  return e;
}

std::string point_name(const FixedPointData& fpd, std::size_t i) {
  const auto& label = fpd.points[i].label;
  return label.empty() ? "point " + std::to_string(i) : "point " + std::to_string(i) + " (" + label + ")";
}

RatSeries exp_series(const Rational& a, long order) {
  RatSeries s("s", order, Rational{1});
  Rational term{1};
  for (long j = 0; j < order; ++j) {
    if (j > 0) term = term * a / Rational(j);
    s.set(j, term);
  }
  return s;
}

/// (1 - e^{-a s}) / (a s)
RatSeries one_minus_exp_over(const Rational& a, long order) {
  RatSeries s("s", order, Rational{1});
  Rational term{1};
  for (long j = 0; j < order; ++j) {
    if (j > 0) term = -term * a / Rational(j + 1);
    s.set(j, term);
  }
  return s;
}

mpz_class lcm_den(const mpz_class& acc, const Rational& r) {
  mpz_class out;
  mpz_lcm(out.get_mpz_t(), acc.get_mpz_t(), r.denominator().get_mpz_t());
  return out;
}

}  // namespace

void validate(const FixedPointData& fpd) {
  if (fpd.points.empty()) throw ValidationError("no fixed points");
  if (fpd.n < 1) throw ValidationError("dimension n must be positive");
  for (std::size_t i = 0; i < fpd.points.size(); ++i) {
    const auto& w = fpd.points[i].weights;
    if (w.size() != static_cast<std::size_t>(fpd.n))
      throw ValidationError("ragged weight vectors: " + point_name(fpd, i) + " has " +
                            std::to_string(w.size()) + " weights, expected " + std::to_string(fpd.n));
    for (std::size_t j = 0; j < w.size(); ++j)
      if (w[j] == 0)
        throw ValidationError("zero weight at " + point_name(fpd, i) + ", slot " + std::to_string(j));
  }
}

ActionType action_type(const FixedPointData& fpd, long N) {
  validate(fpd);
  if (N < 1) throw ValidationError("N must be positive");
  ActionType out;
  auto residue = [&](std::size_t i) {
    const long s = std::accumulate(fpd.points[i].weights.begin(), fpd.points[i].weights.end(), 0L);
    return ((s % N) + N) % N;
  };
  out.residue = residue(0);
  for (std::size_t i = 1; i < fpd.points.size(); ++i) {
    if (residue(i) != out.residue) {
      out.balanced = false;
      out.witnesses = std::make_pair(std::size_t{0}, i);
      break;
    }
  }
  return out;
}

Rational chern_number(const FixedPointData& fpd, const Partition& lambda) {
  validate(fpd);
  if (lambda.weight() != fpd.n)
    throw ValidationError("Chern number needs a partition of " + std::to_string(fpd.n) + ", got " + lambda.to_string());
  Rational total;
  for (const auto& p : fpd.points) {
    const auto e = elementary_values(p.weights);
    Rational num{1};
    for (int part : lambda.parts()) num *= e[static_cast<std::size_t>(part)];
    total += num / weight_product(p.weights);
  }
  if (!total.is_integer()) throw ConsistencyError("localization integrality violated");
  return total;
}

std::map<Partition, Rational> chern_numbers(const FixedPointData& fpd) {
  std::map<Partition, Rational> out;
  for (const auto& lambda : partitions_of(fpd.n)) out.emplace(lambda, chern_number(fpd, lambda));
  return out;
}

UPoly chi_y_from_counts(const FixedPointData& fpd) {
  validate(fpd);
  std::vector<Rational> c(static_cast<std::size_t>(fpd.n) + 1);
  for (const auto& p : fpd.points) {
    const auto neg = std::count_if(p.weights.begin(), p.weights.end(), [](long w) { return w < 0; });
    c[static_cast<std::size_t>(neg)] += Rational(neg % 2 == 0 ? 1 : -1);
  }
  return UPoly(std::move(c), "y");
}

Rational relation_coefficient(const FixedPointData& fpd, const Partition& I) {
  validate(fpd);
  if (I.length() > fpd.n) return Rational{};
  Rational total;
  for (const auto& p : fpd.points)
    total += monomial_sym_eval(I, as_rationals(p.weights)) / weight_product(p.weights);
  return total;
}

std::string Relation::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [I, c] : terms) {
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = c.abs();
    bool wrote = false;
    if (!mag.is_one() || I.empty()) {
      os << mag;
      wrote = true;
    }
    std::vector<int> parts(I.parts().rbegin(), I.parts().rend());
    for (std::size_t i = 0; i < parts.size();) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      if (wrote) os << '*';
      os << "G[" << parts[i] << ',' << N << ']';
      if (j - i > 1) os << '^' << (j - i);
      wrote = true;
      i = j;
    }
  }
  if (first) os << '0';
  os << " = 0";
  return os.str();
}

bool Relation::is_trivial() const {
  return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second.is_zero(); });
}

Relation Relation::primitive() const {
  Relation out = *this;
  if (is_trivial()) return out;
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  int sign = 0;
  for (const auto& [I, c] : terms) {
    if (c.is_zero()) continue;
    if (sign == 0) sign = c.sign();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  }
  const Rational scale = Rational(den_lcm, num_gcd) * Rational(sign);
  for (auto& [I, c] : out.terms) c *= scale;
  return out;
}

Relation build_relation(const FixedPointData& fpd, int N, int k) {
  validate(fpd);
  if (N < 2) throw ValidationError("level N must be at least 2");
  if (k < fpd.n) throw ValidationError("below localization degree");
  Relation rel{fpd.n, k, N, {}, {}};
  for (const auto& I : partitions_at_most(k, fpd.n)) rel.terms.emplace_back(I, relation_coefficient(fpd, I));
  std::ostringstream os;
  os << fpd.points.size() << " fixed points, n=" << fpd.n << "; caller asserts N | k0";
  if (fpd.asserted_index) {
    os << " (asserted k0=" << *fpd.asserted_index;
    if (*fpd.asserted_index % N != 0) os << ", not divisible by N";
    os << ')';
  }
  rel.provenance = os.str();
  return rel;
}

QSeries eisenstein_product(const Partition& I, int N, long precision) {
  QSeries acc = QSeries::constant("q", precision, Cyclotomic(N, Rational{1}));
  for (int part : I.parts()) acc *= eisenstein_qexp(part, N, precision);
  return acc;
}

RelationCheck verify_relation(const Relation& rel, long precision) {
  QSeries residual("q", precision, Cyclotomic(rel.N, Rational{1}));
  for (const auto& [I, c] : rel.terms) {
    if (c.is_zero()) continue;
    residual += eisenstein_product(I, rel.N, precision) * c;
  }
  return {residual.is_zero(), residual};
}

QSeries genus_qexp(const FixedPointData& fpd, int N, long precision) {
  validate(fpd);
  QSeries acc("q", precision, Cyclotomic(N, Rational{1}));
  for (const auto& I : partitions_at_most(fpd.n, fpd.n)) {
    const Rational c = relation_coefficient(fpd, I);
    if (!c.is_zero()) acc += eisenstein_product(I, N, precision) * c;
  }
  return acc;
}

Rational equivariant_index_limit(const FixedPointData& fpd, const std::vector<TLaurent>& numerators,
                                 const std::vector<Rational>& lifts) {
  validate(fpd);
  if (numerators.size() != fpd.points.size() || lifts.size() != fpd.points.size())
    throw ValidationError("one numerator and one lift per fixed point required");
  // t -> u^D clears the exponent denominators, then u = e^s.
  mpz_class D = 1;
  for (std::size_t i = 0; i < numerators.size(); ++i) {
    D = lcm_den(D, lifts[i]);
    for (const auto& term : numerators[i]) D = lcm_den(D, term.exponent);
  }
  const Rational d(D);
  const long n = fpd.n;
  const long order = n + 2;
  RatSeries total("s", order, Rational{1});
  for (std::size_t i = 0; i < fpd.points.size(); ++i) {
    RatSeries num("s", order, Rational{1});
    for (const auto& term : numerators[i]) {
      const Rational a = (term.exponent + lifts[i]) * d;  // integer exponent of u
      num += exp_series(a, order) * term.coeff;
    }
    RatSeries den = RatSeries::constant("s", order, Rational{1});
    Rational scale{1};
    for (long w : fpd.points[i].weights) {
      const Rational a = Rational(w) * d;
      den *= one_minus_exp_over(a, order);
      scale *= a;
    }
    total += num * den.inverse() * scale.inverse();
  }
  // total carries an overall factor s^{-n}
  for (long j = 0; j < n; ++j)
    if (!total.coeff(j).is_zero()) throw ConsistencyError("pole at t=1: not a global index");
  return total.coeff(n);
}

Rational hilbert_value(const FixedPointData& fpd, int N, int m, long k) {
  validate(fpd);
  if (m < 0 || m > fpd.n) throw ValidationError("exterior power degree out of range");
  if (N == 0) throw ValidationError("N must be nonzero");
  std::vector<TLaurent> numerators;
  std::vector<Rational> lifts;
  for (const auto& p : fpd.points) {
    const long W = std::accumulate(p.weights.begin(), p.weights.end(), 0L);
    lifts.push_back(Rational(-k * W, N));
    // e_m(t^{-w_1}, ..., t^{-w_n}) as a sum over m-subsets
    TLaurent num;
    std::vector<int> mask(static_cast<std::size_t>(fpd.n), 0);
    std::fill(mask.end() - m, mask.end(), 1);
    do {
      long e = 0;
      for (std::size_t j = 0; j < mask.size(); ++j)
        if (mask[j]) e -= p.weights[j];
      num.push_back({Rational(e), Rational{1}});
    } while (std::next_permutation(mask.begin(), mask.end()));
    numerators.push_back(std::move(num));
  }
  return equivariant_index_limit(fpd, numerators, lifts);
}

HilbertData hilbert_polynomial(const FixedPointData& fpd, int N, int m) {
  validate(fpd);
  const int n = fpd.n;
  std::vector<Rational> xs, ys;
  for (long k = 1; k <= n + 1; ++k) {
    xs.emplace_back(k);
    ys.push_back(hilbert_value(fpd, N, m, k));
  }
  UPoly h = UPoly::interpolate(xs, ys, "x");
  if (!(h(Rational(n + 2)) == hilbert_value(fpd, N, m, n + 2)))
    throw ConsistencyError("H_m not polynomial of degree <= n");
  return {n, m, std::move(h)};
}

UPoly cpn_hilbert_closed_form(int n, int m) {
  if (m < 0 || m > n) throw ValidationError("exterior power degree out of range");
  UPoly p(Rational(n % 2 == 0 ? 1 : -1) / (factorial(m) * factorial(n - m)), "x");
  for (int i = 1; i <= n - m; ++i) p *= UPoly(std::vector<Rational>{Rational(-i), Rational{1}}, "x");
  for (int i = 1; i <= m; ++i) p *= UPoly(std::vector<Rational>{Rational(i), Rational{1}}, "x");
  return p;
}

FixedPointData cpn_fixed_points(const std::vector<long>& weights) {
  const int n = static_cast<int>(weights.size());
  if (n < 1) throw ValidationError("CP^n needs n >= 1 weights");
  std::set<long> seen;
  for (long w : weights) {
    if (w == 0) throw ValidationError("zero weight");
    if (!seen.insert(w).second) throw ValidationError("repeated weight " + std::to_string(w));
  }
  FixedPointData fpd{n, {}, n + 1};
  fpd.points.push_back({"P0", weights});
  for (int j = 0; j < n; ++j) {
    // -w_j first, then w_k - w_j in order
    const long wj = weights[static_cast<std::size_t>(j)];
    std::vector<long> w{-wj};
    for (int k = 0; k < n; ++k)
      if (k != j) w.push_back(weights[static_cast<std::size_t>(k)] - wj);
    fpd.points.push_back({"P" + std::to_string(j + 1), std::move(w)});
  }
  return fpd;
}

DivisionResult divides_chi_y(const UPoly& chi_y, int k0) {
  if (k0 < 1) throw ValidationError("k0 must be positive");
  std::vector<Rational> d(static_cast<std::size_t>(k0));
  for (int j = 0; j < k0; ++j) d[static_cast<std::size_t>(j)] = Rational(j % 2 == 0 ? 1 : -1);
  auto [q, r] = chi_y.divmod(UPoly(std::move(d), chi_y.var()));
  return {r.is_zero(), std::move(q), std::move(r)};
}

GeneralRelationReport general_relation_cpn(int n, int N, int k, long precision) {
  if (n < 1) throw ValidationError("n must be positive");
  if (N < 2) throw ValidationError("level N must be at least 2");
  if ((n + 1) % N != 0) throw ValidationError("N must divide n+1");
  if (k < n) throw ValidationError("k must be at least n");
  const QSeries qone = QSeries::constant("q", precision, Cyclotomic(N, Rational{1}));
  using XSeries = TruncSeries<QSeries>;

  auto check = [&](bool with_zero) {
    XSeries a("x", k + 1, qone);
    if (with_zero) a.set(0, qone);
    for (int j = 1; j <= k; ++j) a.set(j, eisenstein_qexp(j, N, precision));
    const XSeries s = a.pow(static_cast<unsigned>(n));
    QSeries lhs = s.coeff(k) * Rational((n + k + 1) % 2 == 0 ? 1 : -1);
    QSeries rhs = QSeries::zero_of(qone);
    for (int l = 0; l <= n - 1; ++l)
      rhs += eisenstein_qexp(k - l, N, precision) * s.coeff(l) * binomial(k - l - 1, n - l - 1);
    return std::make_pair(lhs, rhs);
  };

  GeneralRelationReport report;
  auto [lhs, rhs] = check(true);
  report.g0_one_ok = (lhs - rhs).is_zero();
  auto [lhs2, rhs2] = check(false);
  report.omit_zero_ok = (lhs2 - rhs2).is_zero();
  if (report.g0_one_ok) {
    report.convention = "G0=1";
    report.lhs = lhs;
    report.rhs = rhs;
  } else {
    if (report.omit_zero_ok) report.convention = "omit-zero";
    report.lhs = report.omit_zero_ok ? lhs2 : lhs;
    report.rhs = report.omit_zero_ok ? rhs2 : rhs;
  }
  report.ok = report.g0_one_ok || report.omit_zero_ok;
  return report;
}

}  // namespace genus_forge
