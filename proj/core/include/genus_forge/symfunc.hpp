#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "genus_forge/error.hpp"
#include "genus_forge/partition.hpp"
#include "genus_forge/series.hpp"
#include "genus_forge/sparse_poly.hpp"
#include "genus_forge/upoly.hpp"

namespace genus_forge {

/// m_I(values): sum over the distinct rearrangements J of I padded with zeros of prod values_i^{J_i}.
template <typename R>
R monomial_sym_eval(const Partition& I, const std::vector<R>& values, const R& one) {
  if (static_cast<std::size_t>(I.length()) > values.size())
    throw ValidationError("monomial symmetric function " + I.to_string() + " needs at least " +
                          std::to_string(I.length()) + " values");
  std::vector<int> exps = I.padded(values.size());
  std::sort(exps.begin(), exps.end());
  const int top = I.empty() ? 0 : I.parts().front();
  std::vector<std::vector<R>> powers(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    powers[i].push_back(one);
    for (int e = 1; e <= top; ++e) powers[i].push_back(powers[i].back() * values[i]);
  }
  R acc = zero_like(one);
  do {
    R term = one;
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] != 0) term = term * powers[i][static_cast<std::size_t>(exps[i])];
    acc = acc + term;
  } while (std::next_permutation(exps.begin(), exps.end()));
  return acc;
}

Rational monomial_sym_eval(const Partition& I, const std::vector<Rational>& values);

/// m_I as a polynomial in x1..xn.
SparsePoly monomial_symmetric(const Partition& I, int n);
/// e_j as a polynomial in x1..xn (zero for j > n, one for j = 0).
SparsePoly elementary_symmetric(int j, int n);

/// The unique Q_I in e1..en with Q_I(e_1(x),...,e_n(x)) = m_I(x). Memoized; the identity is
/// checked by expansion when an entry is first built.
const SparsePoly& monomial_to_elementary(const Partition& I, int n);

/// Exponent vector over e1..en of the e-monomial e_lambda = prod e_{lambda_i}.
Exponent elementary_exponent(const Partition& lambda, int n);

/// Q_1..Q_n of a power series a_0 + a_1 x + ..., as polynomials in a0..an, y1..yn.
/// When `normalized`, a_0 = 1 is substituted and a0 never appears.
std::vector<SparsePoly> genus_polynomials(int n, bool normalized = true);

/// f_lambda for lambda a partition of n, as polynomials in a0..an. Memoized.
const std::map<Partition, SparsePoly>& f_lambda_symbolic(int n, bool normalized = true);

/// A power series a_0 + a_1 x + ... with coefficients in R.
template <typename R>
struct GenusSpec {
  std::vector<R> a;
  bool normalized = true;
  R one;
};

/// f_lambda specialized at the coefficients of `spec`.
template <typename R>
std::map<Partition, R> f_lambda_values(const GenusSpec<R>& spec, int n) {
  if (static_cast<int>(spec.a.size()) < n + 1)
    throw ValidationError("genus needs coefficients a_0..a_" + std::to_string(n));
  if (spec.normalized && !(spec.a[0] == spec.one))
    throw ValidationError("normalized genus needs a_0 = 1");
  std::vector<R> values(spec.a.begin(), spec.a.begin() + n + 1);
  std::map<Partition, R> out;
  for (const auto& [lambda, f] : f_lambda_symbolic(n, spec.normalized))
    out.emplace(lambda, evaluate<R>(f, values, spec.one));
  return out;
}

/// The genus sum_lambda f_lambda C_lambda for Chern numbers indexed by partitions of n.
template <typename R>
R genus_value(const GenusSpec<R>& spec, const std::map<Partition, Rational>& chern, int n) {
  for (const auto& lambda : partitions_of(n))
    if (!chern.count(lambda)) throw ValidationError("missing Chern number for partition " + lambda.to_string());
  R acc = zero_like(spec.one);
  for (const auto& [lambda, f] : f_lambda_values(spec, n)) acc = acc + f * chern.at(lambda);
  return acc;
}

/// Coefficients a_0 = 1 + y, a_k = sum_j B_j/(j!(k-j)!) + y B_k/k! of x(1 + y e^{-x})/(1 - e^{-x}).
GenusSpec<UPoly> chi_y_power_series(int k_max);

/// f_lambda of the level-N elliptic genus in dimension n as q-series.
std::map<Partition, QSeries> f_lambda_table(int level, int n, long q_precision);

}  // namespace genus_forge
