#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "genus_forge/rational.hpp"

namespace genus_forge {

/// Dense univariate polynomial with rational coefficients, constant term first.
/// Trailing zeros are trimmed so the zero polynomial has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs, std::string var = "y");
  UPoly(const Rational& constant, std::string var = "y");  // NOLINT(google-explicit-constructor)

  static UPoly monomial(const Rational& coeff, std::size_t degree, std::string var = "y");
  /// Lagrange interpolation through (x_i, y_i); nodes must be distinct.
  static UPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys,
                           std::string var = "x");

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const std::string& var() const { return var_; }
  UPoly with_var(std::string var) const;

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational{}; }
  Rational leading() const { return coeffs_.empty() ? Rational{} : coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  /// p(-x)
  UPoly reflect() const;

  UPoly& operator+=(const UPoly& rhs);
  UPoly& operator-=(const UPoly& rhs);
  UPoly& operator*=(const UPoly& rhs);
  UPoly& operator*=(const Rational& rhs);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend UPoly operator*(UPoly a, const Rational& b) { return a *= b; }
  friend UPoly operator*(const Rational& a, UPoly b) { return b *= a; }
  UPoly operator-() const;

  /// Coefficient equality; the variable name is presentation only.
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division: returns (quotient, remainder). Throws on a zero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;

  /// Ascending-degree rendering, e.g. "1 - y + y^2".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
  std::string var_ = "y";
};

std::ostream& operator<<(std::ostream& os, const UPoly& p);

inline bool is_zero(const UPoly& p) { return p.is_zero(); }
inline UPoly zero_like(const UPoly& p) { return UPoly(std::vector<Rational>{}, p.var()); }
inline UPoly one_like(const UPoly& p) { return UPoly(Rational{1}, p.var()); }

}  // namespace genus_forge
