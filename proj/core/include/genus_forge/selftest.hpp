#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "genus_forge/localization.hpp"

namespace genus_forge {

inline constexpr std::uint64_t kDefaultSeed = 20231107;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the reproduction suite; one result per criterion, in order.
std::vector<CriterionResult> run_selftest(std::uint64_t seed = kDefaultSeed);

/// "PASS  3  name: detail"
std::string format_result(const CriterionResult& r);

/// Distinct nonzero weights drawn from [-bound, bound] such that every weight of the
/// resulting CP^n data also lies in that range.
std::vector<long> random_cpn_weights(int n, long bound, std::mt19937_64& rng);

/// Random fixed-point data of a genuine manifold model (CP^n, products of projective
/// spaces, the Grassmannian of oriented 2-planes in R^5) with n <= max_n and all weights in [-bound, bound].
FixedPointData random_manifold_data(int max_n, long bound, std::mt19937_64& rng);

/// Cartesian product of two circle actions: fixed points are pairs, weights concatenate.
FixedPointData product_fixed_points(const FixedPointData& a, const FixedPointData& b);

}  // namespace genus_forge
