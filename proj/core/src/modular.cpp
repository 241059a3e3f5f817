#include "genus_forge/modular.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "genus_forge/bernoulli.hpp"

namespace genus_forge {

namespace {

using XSeries = TruncSeries<QSeries>;

void check_level(int level) {
  if (level < 2) throw ValidationError("Eisenstein series need level N >= 2");
}

QSeries compute_eisenstein(const EisensteinKey& key) {
  const int N = key.level;
  const int k = key.weight;
  const Cyclotomic one(N, Rational{1});
  QSeries g("q", key.precision, one);
  if (k == 1) {
    const Cyclotomic z = Cyclotomic::zeta(N, key.zeta_power);
    g.set(0, (one + z) * ((one - z) * Rational{2}).inverse());
  } else {
    g.set(0, Cyclotomic(N, bernoulli(k) / factorial(k)));
  }
  const Rational scale = -factorial(k - 1).inverse();
  const Rational sign = (k % 2 == 0) ? Rational{1} : Rational{-1};
  for (long n = 1; n < key.precision; ++n) {
    Cyclotomic acc(N);
    for (long d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      const Cyclotomic t = Cyclotomic::zeta(N, -d * key.zeta_power) +
                           Cyclotomic::zeta(N, d * key.zeta_power) * sign;
      acc += t * Rational(n / d).pow(k - 1);
    }
    g.set(n, acc * scale);
  }
  return g;
}

/// 1 - c * e^{eps x} * q^r as an x-series of q-series.
XSeries exp_factor(const Cyclotomic& c, int eps, long r, long x_order, long q_precision) {
  const QSeries qone = QSeries::constant("q", q_precision, one_like(c));
  XSeries f("x", x_order, qone);
  Rational fact{1};
  const long terms = eps == 0 ? 1 : x_order;
  for (long j = 0; j < terms; ++j) {
    if (j > 0) fact *= Rational(j);
    QSeries coeff = QSeries::zero_of(qone);
    if (j == 0) coeff.set(0, one_like(c));
    const Rational scalar = Rational((eps < 0 && j % 2 == 1) ? -1 : 1) / fact;
    coeff.add(r, -(c * scalar));
    f.set(j, coeff);
  }
  return f;
}

}  // namespace

const QSeries& eisenstein_qexp(const EisensteinKey& key) {
  check_level(key.level);
  if (key.weight < 1) throw ValidationError("Eisenstein weight must be positive");
  if (key.precision < 1) throw ValidationError("precision must be positive");
  static std::mutex mu;
  static std::map<EisensteinKey, std::unique_ptr<QSeries>> memo;
  {
    std::lock_guard lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return *it->second;
  }
  auto value = std::make_unique<QSeries>(compute_eisenstein(key));
  std::lock_guard lock(mu);
  auto [it, inserted] = memo.try_emplace(key, std::move(value));
  return *it->second;
}

std::vector<Cyclotomic> qn_constant_column(int level, long x_order) {
  check_level(level);
  const Cyclotomic one(level, Rational{1});
  const Cyclotomic z = Cyclotomic::zeta(level);
  const Cyclotomic inv = (one - z).inverse();
  // (1 - e^{-x} z)/(1 - z)
  std::vector<Cyclotomic> a(static_cast<std::size_t>(x_order), Cyclotomic(level));
  // x/(1 - e^{-x}) = 1/u with u = sum (-1)^j x^j/(j+1)!
  RatSeries u("x", x_order, Rational{1});
  for (long j = 0; j < x_order; ++j) {
    if (j == 0) a[0] = one;
    else a[static_cast<std::size_t>(j)] = z * inv * (Rational(j % 2 == 0 ? -1 : 1) / factorial(j));
    u.set(j, Rational(j % 2 == 0 ? 1 : -1) / factorial(j + 1));
  }
  const RatSeries uinv = u.inverse();
  std::vector<Cyclotomic> out(static_cast<std::size_t>(x_order), Cyclotomic(level));
  for (long i = 0; i < x_order; ++i)
    for (long j = 0; i + j < x_order; ++j)
      out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * uinv.coeff(j);
  return out;
}

QnExpansion qn_expansion_via_product(int level, long x_order, long q_precision) {
  check_level(level);
  if (x_order < 1 || q_precision < 1) throw ValidationError("orders must be positive");
  const Cyclotomic one(level, Rational{1});
  const Cyclotomic z = Cyclotomic::zeta(level);
  const Cyclotomic zinv = Cyclotomic::zeta(level, -1);
  const QSeries qone = QSeries::constant("q", q_precision, one);

  XSeries result("x", x_order, qone);
  const auto column = qn_constant_column(level, x_order);
  for (long j = 0; j < x_order; ++j)
    result.set(j, QSeries::constant("q", q_precision, column[static_cast<std::size_t>(j)]));

  XSeries num = one_like(result);
  XSeries den = one_like(result);
  for (long r = 1; r < q_precision; ++r) {
    num *= exp_factor(z, -1, r, x_order, q_precision);
    num *= exp_factor(zinv, 1, r, x_order, q_precision);
    const XSeries plain = exp_factor(one, 0, r, x_order, q_precision);
    num *= plain;
    num *= plain;
    den *= exp_factor(one, -1, r, x_order, q_precision);
    den *= exp_factor(one, 1, r, x_order, q_precision);
    den *= exp_factor(z, 0, r, x_order, q_precision);
    den *= exp_factor(zinv, 0, r, x_order, q_precision);
  }
  result *= num;
  result *= den.inverse();

  QnExpansion out{level, x_order, q_precision, {}};
  for (long j = 0; j < x_order; ++j) out.coeffs.push_back(result.coeff(j));
  return out;
}

LemmaReport verify_lemma_eisenstein(int level, int k_max, long precision) {
  LemmaReport report{true, level, k_max, precision, std::nullopt, {}};
  const QnExpansion qn = qn_expansion_via_product(level, k_max + 1, precision);
  for (int k = 1; k <= k_max; ++k) {
    const QSeries& g = eisenstein_qexp(k, level, precision);
    const QSeries& a = qn.coeffs[static_cast<std::size_t>(k)];
    for (long e = 0; e < precision; ++e) {
      if (a.coeff(e) == g.coeff(e)) continue;
      report.ok = false;
      report.mismatch = std::make_pair(k, e);
      std::ostringstream os;
      os << "a_" << k << " differs from G_{" << k << "," << level << "} at q^" << e << ": "
         << a.coeff(e) << " vs " << g.coeff(e);
      report.detail = os.str();
      return report;
    }
  }
  return report;
}

}  // namespace genus_forge
