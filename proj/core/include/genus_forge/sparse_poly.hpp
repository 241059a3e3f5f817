#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "genus_forge/error.hpp"
#include "genus_forge/rational.hpp"

namespace genus_forge {

using Exponent = std::vector<int>;

/// Graded lexicographic order: total degree first, then lexicographic on the exponent vector.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial over Q with terms kept in graded-lex order.
/// Zero coefficients are never stored.
class SparsePoly {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexLess>;

  SparsePoly() = default;
  explicit SparsePoly(std::vector<std::string> vars);
  SparsePoly(std::vector<std::string> vars, const Rational& constant);

  /// Variable names "prefix1", ..., "prefixN".
  static std::vector<std::string> indexed_vars(const std::string& prefix, std::size_t count,
                                               std::size_t first = 1);
  static SparsePoly variable(const std::vector<std::string>& vars, std::size_t index);
  static SparsePoly monomial(const std::vector<std::string>& vars, const Exponent& exp,
                             const Rational& coeff = Rational{1});

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  Rational constant_term() const;
  Rational coeff(const Exponent& exp) const;
  /// Total degree, or -1 for zero.
  int degree() const;
  /// Greatest term under grlex; throws on zero.
  const TermMap::value_type& leading_term() const;

  void add_term(const Exponent& exp, const Rational& coeff);

  SparsePoly& operator+=(const SparsePoly& rhs);
  SparsePoly& operator-=(const SparsePoly& rhs);
  SparsePoly& operator*=(const SparsePoly& rhs);
  SparsePoly& operator*=(const Rational& rhs);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const Rational& b) { return a *= b; }
  friend SparsePoly operator*(const Rational& a, SparsePoly b) { return b *= a; }
  SparsePoly operator-() const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  SparsePoly pow(unsigned exponent) const;

  Rational evaluate(const std::vector<Rational>& values) const;
  /// Substitutes polys[i] for variable i; the result lives in the variables of the substitutes.
  SparsePoly substitute(const std::vector<SparsePoly>& polys) const;

  /// Action of a signed permutation on variables: x_i -> sign(image[i]) * x_{|image[i]|-1}.
  /// `image` entries are nonzero and 1-based.
  SparsePoly act(const std::vector<int>& image) const;

  /// Exact quotient by `divisor`; throws ConsistencyError when the division leaves a remainder.
  SparsePoly divide_exact(const SparsePoly& divisor) const;

  /// Terms in descending grlex order, e.g. "a2*y1^2 - 2*a2*y2 + a1^2*y2".
  std::string to_string() const;

 private:
  void check_compatible(const SparsePoly& other) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const SparsePoly& p);

inline bool is_zero(const SparsePoly& p) { return p.is_zero(); }
inline SparsePoly zero_like(const SparsePoly& p) { return SparsePoly(p.vars()); }
inline SparsePoly one_like(const SparsePoly& p) { return SparsePoly(p.vars(), Rational{1}); }

/// Evaluates `poly` with values in an arbitrary commutative ring R that supports
/// R*R, R+R and R*Rational. `one` fixes the ring context (level, variable, order).
template <typename R>
R evaluate(const SparsePoly& poly, const std::vector<R>& values, const R& one) {
  if (values.size() != poly.nvars()) throw ValidationError("evaluation needs one value per variable");
  std::vector<std::vector<R>> powers(values.size());
  auto power = [&](std::size_t var, int e) -> const R& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(one);
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * values[var]);
    return cache[static_cast<std::size_t>(e)];
  };
  R acc = zero_like(one);
  for (const auto& [exp, c] : poly.terms()) {
    R term = one * c;
    for (std::size_t i = 0; i < exp.size(); ++i)
      if (exp[i] != 0) term = term * power(i, exp[i]);
    acc = acc + term;
  }
  return acc;
}

}  // namespace genus_forge
