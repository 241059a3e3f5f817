#pragma once

#include "genus_forge/rational.hpp"

namespace genus_forge {

/// k-th Bernoulli number with B_1 = -1/2, i.e. the coefficients of x/(e^x - 1) = sum B_k x^k / k!.
/// Memoized; safe to call concurrently.
Rational bernoulli(long k);

}  // namespace genus_forge
