#pragma once

#include <algorithm>
#include <iosfwd>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "genus_forge/cyclotomic.hpp"
#include "genus_forge/error.hpp"
#include "genus_forge/rational.hpp"
#include "genus_forge/sparse_poly.hpp"
#include "genus_forge/upoly.hpp"

namespace genus_forge {

inline std::string coeff_string(const Rational& c) { return c.to_string(); }
inline std::string coeff_string(const Cyclotomic& c) { return c.poly_string(); }
inline std::string coeff_string(const UPoly& c) { return c.to_string(); }
inline std::string coeff_string(const SparsePoly& c) { return c.to_string(); }

template <typename C>
class TruncSeries;
template <typename C>
bool is_zero(const TruncSeries<C>& s);
template <typename C>
TruncSeries<C> zero_like(const TruncSeries<C>& s);
template <typename C>
TruncSeries<C> one_like(const TruncSeries<C>& s);
template <typename C>
TruncSeries<C> inverse(const TruncSeries<C>& s);

/// Truncated formal series in one variable with coefficients in C.
///
/// Exponents are integers counted in units of var^(1/D). Every stored exponent is below
/// the limit L = T*D; terms at or beyond L are unknown. Negative exponents require the
/// Laurent flag. C must provide +, -, *, a scalar product with Rational, and the ADL
/// helpers is_zero / zero_like / one_like (inverse for series inversion).
template <typename C>
class TruncSeries {
 public:
  using Coeffs = std::map<long, C>;

  TruncSeries() = default;
  /// Zero series truncated at var^order.
  TruncSeries(std::string var, long order, C one, long denom = 1, bool laurent = false)
      : var_(std::move(var)), denom_(denom), limit_(order * denom), laurent_(laurent),
        one_(std::move(one)) {
    if (denom_ < 1) throw ValidationError("exponent denominator must be positive");
  }

  static TruncSeries constant(std::string var, long order, const C& value, long denom = 1,
                              bool laurent = false) {
    TruncSeries s(std::move(var), order, one_like(value), denom, laurent);
    s.set(0, value);
    return s;
  }

  /// Series with the same variable, denominator, limit and Laurent flag as `like`.
  static TruncSeries zero_of(const TruncSeries& like) {
    TruncSeries s = like;
    s.coeffs_.clear();
    return s;
  }

  const std::string& var() const { return var_; }
  long denom() const { return denom_; }
  /// Truncation limit in units of var^(1/D).
  long limit() const { return limit_; }
  /// Truncation order T; only meaningful when the limit is a multiple of D.
  long order() const { return limit_ / denom_; }
  bool laurent() const { return laurent_; }
  const C& one() const { return one_; }
  const Coeffs& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  /// Smallest stored exponent; the limit for the zero series.
  long valuation() const { return coeffs_.empty() ? limit_ : coeffs_.begin()->first; }

  C coeff(long exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? zero_like(one_) : it->second;
  }

  /// Sets a coefficient; exponents at or beyond the limit are discarded.
  void set(long exp, const C& value) {
    if (exp >= limit_) return;
    if (exp < 0 && !laurent_) throw ArithmeticError("negative exponent in non-Laurent series");
    if (genus_forge::is_zero(value)) {
      coeffs_.erase(exp);
    } else {
      coeffs_.insert_or_assign(exp, value);
    }
  }

  void add(long exp, const C& value) {
    if (exp >= limit_) return;
    auto it = coeffs_.find(exp);
    if (it == coeffs_.end()) {
      set(exp, value);
      return;
    }
    it->second = it->second + value;
    if (genus_forge::is_zero(it->second)) coeffs_.erase(it);
  }

  /// Drops terms at or beyond `new_limit` (units of var^(1/D)); never extends.
  TruncSeries truncated(long new_limit) const {
    TruncSeries r = *this;
    if (new_limit >= limit_) return r;
    r.limit_ = new_limit;
    r.coeffs_.erase(r.coeffs_.lower_bound(new_limit), r.coeffs_.end());
    return r;
  }

  TruncSeries as_laurent() const {
    TruncSeries r = *this;
    r.laurent_ = true;
    return r;
  }

  /// Multiplication by var^(shift/D); the limit moves with the terms.
  TruncSeries shifted(long shift) const {
    TruncSeries r(var_, 0, one_, denom_, laurent_);
    r.limit_ = limit_ + shift;
    for (const auto& [e, c] : coeffs_) r.set(e + shift, c);
    return r;
  }

  template <typename F>
  TruncSeries map_coeffs(F&& f) const {
    TruncSeries r = zero_of(*this);
    for (const auto& [e, c] : coeffs_) r.set(e, f(c));
    return r;
  }

  TruncSeries& operator+=(const TruncSeries& rhs) {
    check_compatible(rhs);
    limit_ = std::min(limit_, rhs.limit_);
    laurent_ = laurent_ || rhs.laurent_;
    coeffs_.erase(coeffs_.lower_bound(limit_), coeffs_.end());
    for (const auto& [e, c] : rhs.coeffs_) add(e, c);
    return *this;
  }

  TruncSeries& operator-=(const TruncSeries& rhs) { return *this += -rhs; }

  TruncSeries operator-() const {
    TruncSeries r = *this;
    for (auto& [e, c] : r.coeffs_) c = zero_like(c) - c;
    return r;
  }

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check_compatible(b);
    const long va = a.coeffs_.empty() ? 0 : a.valuation();
    const long vb = b.coeffs_.empty() ? 0 : b.valuation();
    TruncSeries r(a.var_, 0, a.one_, a.denom_, a.laurent_ || b.laurent_);
    r.limit_ = std::min({a.limit_, b.limit_, a.limit_ + vb, b.limit_ + va});
    for (const auto& [ea, ca] : a.coeffs_) {
      if (ea + vb >= r.limit_) break;
      for (const auto& [eb, cb] : b.coeffs_) {
        if (ea + eb >= r.limit_) break;
        r.add(ea + eb, ca * cb);
      }
    }
    return r;
  }

  TruncSeries& operator*=(const TruncSeries& rhs) { return *this = *this * rhs; }

  friend TruncSeries operator*(TruncSeries a, const C& scalar) {
    for (auto it = a.coeffs_.begin(); it != a.coeffs_.end();) {
      it->second = it->second * scalar;
      it = genus_forge::is_zero(it->second) ? a.coeffs_.erase(it) : std::next(it);
    }
    return a;
  }
  friend TruncSeries operator*(const C& scalar, const TruncSeries& a) { return a * scalar; }

  friend TruncSeries operator*(TruncSeries a, const Rational& scalar)
    requires(!std::is_same_v<C, Rational>)
  {
    for (auto it = a.coeffs_.begin(); it != a.coeffs_.end();) {
      it->second = it->second * scalar;
      it = genus_forge::is_zero(it->second) ? a.coeffs_.erase(it) : std::next(it);
    }
    return a;
  }

  TruncSeries pow(unsigned exponent) const {
    TruncSeries result = zero_of(*this);
    result.set(0, one_);
    TruncSeries base = *this;
    while (exponent > 0) {
      if (exponent & 1U) result *= base;
      exponent >>= 1U;
      if (exponent > 0) base *= base;
    }
    return result;
  }

  /// Multiplicative inverse. The leading coefficient must be a unit of C; a positive
  /// valuation v needs the Laurent flag and lowers the limit from L to L - 2v.
  TruncSeries inverse() const {
    if (coeffs_.empty()) throw ArithmeticError("series not invertible");
    const long v = valuation();
    if (v > 0 && !laurent_) throw ArithmeticError("series not invertible");
    C lead_inv;
    try {
      lead_inv = genus_forge::inverse(coeffs_.begin()->second);
    } catch (const ArithmeticError&) {
      throw ArithmeticError("series not invertible");
    }
    // unit part u = a / var^v, known below L - v
    const long n = limit_ - v;
    TruncSeries r(var_, 0, one_, denom_, laurent_);
    r.limit_ = n;
    if (n <= 0) return r.shifted(-v);
    std::vector<C> u(static_cast<std::size_t>(n), zero_like(one_));
    for (const auto& [e, c] : coeffs_) u[static_cast<std::size_t>(e - v)] = c;
    std::vector<C> b(static_cast<std::size_t>(n), zero_like(one_));
    b[0] = lead_inv;
    for (long i = 1; i < n; ++i) {
      C acc = zero_like(one_);
      for (long j = 1; j <= i; ++j) {
        const C& uj = u[static_cast<std::size_t>(j)];
        if (genus_forge::is_zero(uj)) continue;
        acc = acc + uj * b[static_cast<std::size_t>(i - j)];
      }
      b[static_cast<std::size_t>(i)] = zero_like(one_) - acc * lead_inv;
    }
    for (long i = 0; i < n; ++i) r.set(i, b[static_cast<std::size_t>(i)]);
    return r.shifted(-v);
  }

  /// Exact equality including variable, limit and Laurent flag.
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.var_ == b.var_ && a.denom_ == b.denom_ && a.limit_ == b.limit_ &&
           a.coeffs_ == b.coeffs_;
  }

  /// Ascending rendering with explicit tail, e.g. "1/12 + 2*q + 2*q^2 + O(q^6)".
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
      std::string s = coeff_string(c);
      const bool atomic = s.find(" + ") == std::string::npos && s.find(" - ") == std::string::npos;
      bool negative = false;
      if (atomic && s.front() == '-') {
        negative = true;
        s.erase(0, 1);
      } else if (!atomic) {
        s = "(" + s + ")";
      }
      if (first) {
        if (negative) os << '-';
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      if (e == 0) {
        os << s;
        continue;
      }
      if (s != "1") os << s << '*';
      os << power_string(e);
    }
    if (first) os << '0';
    os << " + O(" << power_string(limit_) << ')';
    return os.str();
  }

 private:
  void check_compatible(const TruncSeries& other) const {
    if (var_ != other.var_ || denom_ != other.denom_)
      throw ArithmeticError("series in different variables");
  }

  std::string power_string(long e) const {
    if (e == 1 && denom_ == 1) return var_;
    if (e % denom_ == 0) return var_ + "^" + std::to_string(e / denom_);
    const long g = std::gcd(std::labs(e), denom_);
    return var_ + "^(" + std::to_string(e / g) + "/" + std::to_string(denom_ / g) + ")";
  }

  std::string var_ = "q";
  long denom_ = 1;
  long limit_ = 0;
  bool laurent_ = false;
  Coeffs coeffs_;
  C one_{};
};

template <typename C>
bool is_zero(const TruncSeries<C>& s) {
  return s.is_zero();
}
template <typename C>
TruncSeries<C> zero_like(const TruncSeries<C>& s) {
  return TruncSeries<C>::zero_of(s);
}
template <typename C>
TruncSeries<C> one_like(const TruncSeries<C>& s) {
  TruncSeries<C> r = TruncSeries<C>::zero_of(s);
  r.set(0, s.one());
  return r;
}
template <typename C>
TruncSeries<C> inverse(const TruncSeries<C>& s) {
  return s.inverse();
}
template <typename C>
std::string coeff_string(const TruncSeries<C>& s) {
  return s.to_string();
}
template <typename C>
std::ostream& operator<<(std::ostream& os, const TruncSeries<C>& s) {
  return os << s.to_string();
}

/// True when a and b agree on every exponent below both limits.
template <typename C>
bool agree_below(const TruncSeries<C>& a, const TruncSeries<C>& b, long limit) {
  const long lim = std::min({limit, a.limit(), b.limit()});
  for (const auto& [e, c] : a.coeffs())
    if (e < lim && !(b.coeff(e) == c)) return false;
  for (const auto& [e, c] : b.coeffs())
    if (e < lim && !(a.coeff(e) == c)) return false;
  return true;
}

using QSeries = TruncSeries<Cyclotomic>;
using RatSeries = TruncSeries<Rational>;

}  // namespace genus_forge
