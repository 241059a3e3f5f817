#include "genus_forge/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "genus_forge/error.hpp"

namespace genus_forge {

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw ArithmeticError("division by zero");
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (den == 0) throw ArithmeticError("division by zero");
  q_.canonicalize();
}

Rational::Rational(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
  }
  if (cleaned.empty()) throw ValidationError("empty rational literal");
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  auto strip_plus = [](std::string s) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return s;
  };
  const auto slash = cleaned.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(cleaned)) throw ValidationError("malformed rational literal '" + cleaned + "'");
    return Rational(mpz_class(strip_plus(cleaned)));
  }
  const std::string num = cleaned.substr(0, slash);
  const std::string den = cleaned.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-') {
    throw ValidationError("malformed rational literal '" + cleaned + "'");
  }
  const mpz_class d(strip_plus(den));
  if (d == 0) throw ValidationError("zero denominator in '" + cleaned + "'");
  return Rational(mpz_class(strip_plus(num)), d);
}

long Rational::to_long() const {
  if (!is_integer()) throw ArithmeticError("rational " + to_string() + " is not an integer");
  if (!q_.get_num().fits_slong_p()) throw ArithmeticError("integer " + to_string() + " out of range");
  return q_.get_num().get_si();
}

Rational Rational::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
  return Rational(std::move(r));
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational& Rational::operator+=(const Rational& rhs) {
  q_ += rhs.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw ArithmeticError("division by zero");
  q_ /= rhs.q_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(a.q_, b.q_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational{};
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational factorial(long n) {
  if (n < 0) throw ArithmeticError("factorial of a negative integer");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

}  // namespace genus_forge
