#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genus_forge/series.hpp"

namespace genus_forge {

/// Identifies one Eisenstein expansion: weight k, level N, coefficients of q^0..q^{precision-1}.
struct EisensteinKey {
  int weight = 1;
  int level = 2;
  long precision = 1;
  /// Expand with zeta_N^zeta_power in place of zeta_N (1 for the standard series).
  long zeta_power = 1;

  auto operator<=>(const EisensteinKey&) const = default;
};

/// Fourier expansion of G_{k,N} over Q(zeta_N). Memoized; thread-safe.
const QSeries& eisenstein_qexp(const EisensteinKey& key);
inline const QSeries& eisenstein_qexp(int k, int level, long precision) {
  return eisenstein_qexp(EisensteinKey{k, level, precision, 1});
}

/// The coefficients a_0, a_1, ... of Q_N(x) as q-series.
struct QnExpansion {
  int level = 2;
  long x_order = 0;
  long q_precision = 0;
  std::vector<QSeries> coeffs;
};

/// Expands the product form of Q_N(x) truncated at q^{q_precision} and x^{x_order}.
QnExpansion qn_expansion_via_product(int level, long x_order, long q_precision);

/// x(1 - e^{-x} zeta)/((1 - e^{-x})(1 - zeta)) through x^{x_order-1}: the q^0 column of Q_N.
std::vector<Cyclotomic> qn_constant_column(int level, long x_order);

struct LemmaReport {
  bool ok = true;
  int level = 2;
  int k_max = 0;
  long precision = 0;
  /// First mismatch as (k, exponent of q) when !ok.
  std::optional<std::pair<int, long>> mismatch;
  std::string detail;
};

/// Compares the product-form coefficients a_k with G_{k,N} for 1 <= k <= k_max.
LemmaReport verify_lemma_eisenstein(int level, int k_max, long precision);

}  // namespace genus_forge
