#include "genus_forge/bernoulli.hpp"

#include <mutex>
#include <vector>

#include "genus_forge/error.hpp"

namespace genus_forge {

Rational bernoulli(long k) {
  if (k < 0) throw ValidationError("Bernoulli index must be non-negative");
  static std::mutex mu;
  static std::vector<Rational> table{Rational{1}};
  std::lock_guard lock(mu);
  // sum_{j<=m} C(m+1, j) B_j = 0
  for (long m = static_cast<long>(table.size()); m <= k; ++m) {
    Rational acc;
    for (long j = 0; j < m; ++j) acc += binomial(m + 1, j) * table[static_cast<std::size_t>(j)];
    table.push_back(-acc / Rational(m + 1));
  }
  return table[static_cast<std::size_t>(k)];
}

}  // namespace genus_forge
