#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "genus_forge/rational.hpp"

namespace genus_forge {

/// Euler's totient.
int euler_phi(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
/// Computed once per level by exact division of x^n - 1 by the Phi_d of the proper divisors d.
const std::vector<Rational>& cyclotomic_polynomial(int n);

/// Exact element of Q(zeta_N), stored in the power basis 1, z, ..., z^{phi(N)-1}
/// reduced modulo Phi_N. Two values are equal iff their coefficient vectors are equal.
class Cyclotomic {
 public:
  /// The embedded rational `value` at level `level`.
  explicit Cyclotomic(int level = 1, const Rational& value = Rational{});
  Cyclotomic(int level, std::vector<Rational> coeffs);

  /// zeta_N^power for any integer power.
  static Cyclotomic zeta(int level, long power = 1);

  /// Parses the polynomial part of the canonical rendering, e.g. "1/2 + 1/2*z - z^2".
  static Cyclotomic parse(int level, std::string_view text);

  int level() const { return level_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Constant coefficient; meaningful as the value when is_rational().
  const Rational& rational_part() const { return coeffs_.front(); }

  Cyclotomic inverse() const;
  /// Image under the automorphism zeta -> zeta^{-1} (complex conjugation).
  Cyclotomic conjugate() const;
  /// Image under zeta -> zeta^a for a coprime to the level.
  Cyclotomic galois(long a) const;

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Rational& rhs);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& b) { return a *= b; }
  friend Cyclotomic operator*(const Rational& a, Cyclotomic b) { return b *= a; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.level_ == b.level_ && a.coeffs_ == b.coeffs_;
  }

  /// Polynomial in z without level annotation: "1/2 + 1/2*z", "0", "-z^2".
  std::string poly_string() const;
  /// Canonical rendering "(1/2 + 1/2*z) @ Q(zeta_3)"; rationals render bare.
  std::string to_string() const;

 private:
  void check_level(const Cyclotomic& other) const;
  static std::vector<Rational> reduce(int level, std::vector<Rational> poly);

  int level_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }
inline Cyclotomic inverse(const Cyclotomic& c) { return c.inverse(); }
inline Cyclotomic zero_like(const Cyclotomic& c) { return Cyclotomic(c.level()); }
inline Cyclotomic one_like(const Cyclotomic& c) { return Cyclotomic(c.level(), Rational{1}); }

}  // namespace genus_forge
