#include "genus_forge/symfunc.hpp"

#include <memory>
#include <mutex>

#include "genus_forge/bernoulli.hpp"
#include "genus_forge/modular.hpp"

namespace genus_forge {

Rational monomial_sym_eval(const Partition& I, const std::vector<Rational>& values) {
  return monomial_sym_eval<Rational>(I, values, Rational{1});
}

SparsePoly monomial_symmetric(const Partition& I, int n) {
  const auto vars = SparsePoly::indexed_vars("x", static_cast<std::size_t>(n));
  std::vector<int> exps = I.padded(static_cast<std::size_t>(n));
  std::sort(exps.begin(), exps.end());
  SparsePoly out(vars);
  do {
    out.add_term(exps, Rational{1});
  } while (std::next_permutation(exps.begin(), exps.end()));
  return out;
}

SparsePoly elementary_symmetric(int j, int n) {
  const auto vars = SparsePoly::indexed_vars("x", static_cast<std::size_t>(n));
  if (j < 0 || j > n) return SparsePoly(vars);
  Exponent e(static_cast<std::size_t>(n), 0);
  std::fill(e.end() - j, e.end(), 1);
  SparsePoly out(vars);
  do {
    out.add_term(e, Rational{1});
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

Exponent elementary_exponent(const Partition& lambda, int n) {
  Exponent e(static_cast<std::size_t>(n), 0);
  for (int p : lambda.parts()) {
    if (p > n) throw ValidationError("partition " + lambda.to_string() + " has a part above " + std::to_string(n));
    ++e[static_cast<std::size_t>(p - 1)];
  }
  return e;
}

namespace {

SparsePoly build_monomial_to_elementary(const Partition& I, int n) {
  const auto evars = SparsePoly::indexed_vars("e", static_cast<std::size_t>(n));
  std::vector<SparsePoly> es;
  for (int j = 1; j <= n; ++j) es.push_back(elementary_symmetric(j, n));
  const SparsePoly target = monomial_symmetric(I, n);

  SparsePoly rem = target;
  SparsePoly result(evars);
  while (!rem.is_zero()) {
    const auto [alpha, c] = rem.leading_term();
    // leading term x^alpha of e^beta with beta_j = alpha_j - alpha_{j+1}
    Exponent beta(static_cast<std::size_t>(n), 0);
    SparsePoly prod(target.vars(), Rational{1});
    for (int j = 0; j < n; ++j) {
      const int next = j + 1 < n ? alpha[static_cast<std::size_t>(j + 1)] : 0;
      beta[static_cast<std::size_t>(j)] = alpha[static_cast<std::size_t>(j)] - next;
      if (beta[static_cast<std::size_t>(j)] < 0) throw ConsistencyError("non-symmetric remainder in basis conversion");
      if (beta[static_cast<std::size_t>(j)] > 0)
        prod *= es[static_cast<std::size_t>(j)].pow(static_cast<unsigned>(beta[static_cast<std::size_t>(j)]));
    }
    result.add_term(beta, c);
    rem -= prod * c;
  }
  if (n > 0 && !(result.substitute(es) == target))
    throw ConsistencyError("monomial to elementary conversion failed for " + I.to_string());
  return result;
}

}  // namespace

const SparsePoly& monomial_to_elementary(const Partition& I, int n) {
  if (n < I.length()) throw ValidationError("need at least as many variables as parts of " + I.to_string());
  static std::mutex mu;
  static std::map<std::pair<Partition, int>, std::unique_ptr<SparsePoly>> memo;
  const auto key = std::make_pair(I, n);
  {
    std::lock_guard lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return *it->second;
  }
  auto value = std::make_unique<SparsePoly>(build_monomial_to_elementary(I, n));
  std::lock_guard lock(mu);
  return *memo.try_emplace(key, std::move(value)).first->second;
}

std::vector<SparsePoly> genus_polynomials(int n, bool normalized) {
  if (n < 1) throw ValidationError("dimension must be positive");
  auto vars = SparsePoly::indexed_vars("a", static_cast<std::size_t>(n + 1), 0);
  const auto yvars = SparsePoly::indexed_vars("y", static_cast<std::size_t>(n));
  vars.insert(vars.end(), yvars.begin(), yvars.end());
  const std::size_t off = static_cast<std::size_t>(n + 1);

  std::vector<SparsePoly> out;
  for (int k = 1; k <= n; ++k) {
    SparsePoly qk(vars);
    for (const auto& mu : partitions_at_most(k, n)) {
      Exponent a_exp(vars.size(), 0);
      if (!normalized) a_exp[0] = n - mu.length();
      for (int p : mu.parts()) ++a_exp[static_cast<std::size_t>(p)];
      for (const auto& [beta, c] : monomial_to_elementary(mu, n).terms()) {
        Exponent e = a_exp;
        for (std::size_t j = 0; j < beta.size(); ++j) e[off + j] = beta[j];
        qk.add_term(e, c);
      }
    }
    out.push_back(std::move(qk));
  }
  return out;
}

const std::map<Partition, SparsePoly>& f_lambda_symbolic(int n, bool normalized) {
  static std::mutex mu;
  static std::map<std::pair<int, bool>, std::unique_ptr<std::map<Partition, SparsePoly>>> memo;
  const auto key = std::make_pair(n, normalized);
  {
    std::lock_guard lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return *it->second;
  }
  const SparsePoly qn = genus_polynomials(n, normalized).back();
  const auto avars = SparsePoly::indexed_vars("a", static_cast<std::size_t>(n + 1), 0);
  const std::size_t off = static_cast<std::size_t>(n + 1);
  auto table = std::make_unique<std::map<Partition, SparsePoly>>();
  for (const auto& lambda : partitions_of(n)) table->emplace(lambda, SparsePoly(avars));
  for (const auto& [e, c] : qn.terms()) {
    std::vector<int> parts;
    for (int j = 1; j <= n; ++j)
      for (int r = 0; r < e[off + static_cast<std::size_t>(j - 1)]; ++r) parts.push_back(j);
    Exponent a_exp(e.begin(), e.begin() + static_cast<long>(off));
    table->at(Partition(parts)).add_term(a_exp, c);
  }
  std::lock_guard lock(mu);
  return *memo.try_emplace(key, std::move(table)).first->second;
}

GenusSpec<UPoly> chi_y_power_series(int k_max) {
  if (k_max < 0) throw ValidationError("k_max must be non-negative");
  GenusSpec<UPoly> spec{{}, false, UPoly(Rational{1})};
  for (int k = 0; k <= k_max; ++k) {
    Rational c0;
    for (int j = 0; j <= k; ++j) c0 += bernoulli(j) / (factorial(j) * factorial(k - j));
    spec.a.emplace_back(std::vector<Rational>{c0, bernoulli(k) / factorial(k)});
  }
  return spec;
}

std::map<Partition, QSeries> f_lambda_table(int level, int n, long q_precision) {
  const QSeries one = QSeries::constant("q", q_precision, Cyclotomic(level, Rational{1}));
  GenusSpec<QSeries> spec{{one}, true, one};
  for (int k = 1; k <= n; ++k) spec.a.push_back(eisenstein_qexp(k, level, q_precision));
  return f_lambda_values(spec, n);
}

}  // namespace genus_forge
