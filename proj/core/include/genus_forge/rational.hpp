#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace genus_forge {

/// Arbitrary-precision rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper around GMP's mpq_class; every operation canonicalizes its result.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpz_class& value) : q_(value) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class value);

  /// Parses "p", "-p", "p/q" (whitespace tolerated around the slash).
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Value as a machine integer; throws if not an integer or out of range.
  long to_long() const;

  Rational inverse() const;
  Rational pow(long exponent) const;
  Rational abs() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline Rational inverse(const Rational& r) { return r.inverse(); }
inline Rational zero_like(const Rational&) { return Rational{}; }
inline Rational one_like(const Rational&) { return Rational{1}; }

/// Binomial coefficient C(n, k) as an exact rational (0 when k < 0 or k > n >= 0).
Rational binomial(long n, long k);
Rational factorial(long n);

}  // namespace genus_forge
