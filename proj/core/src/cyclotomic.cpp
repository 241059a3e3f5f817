#include "genus_forge/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "genus_forge/error.hpp"

namespace genus_forge {

int euler_phi(int n) {
  if (n < 1) throw ArithmeticError("euler_phi requires a positive argument");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Exact division of polynomials with rational coefficients; divisor must be monic.
std::vector<Rational> divide_exact(std::vector<Rational> num, const std::vector<Rational>& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) return {Rational{}};
  std::vector<Rational> quot(num.size() - dn);
  for (std::size_t i = num.size(); i-- > dn;) {
    const Rational c = num[i];
    quot[i - dn] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (!num[i].is_zero()) throw ArithmeticError("cyclotomic polynomial division left a remainder");
  }
  return quot;
}

std::mutex g_phi_mutex;
std::map<int, std::vector<Rational>> g_phi_cache;

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(int n) {
  if (n < 1) throw ArithmeticError("cyclotomic level must be positive");
  {
    std::lock_guard lock(g_phi_mutex);
    if (auto it = g_phi_cache.find(n); it != g_phi_cache.end()) return it->second;
  }
  std::vector<Rational> poly(static_cast<std::size_t>(n) + 1);
  poly.front() = Rational{-1};
  poly.back() = Rational{1};
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
  }
  std::lock_guard lock(g_phi_mutex);
  // std::map never invalidates references on insert, so handing out a reference is safe.
  return g_phi_cache.emplace(n, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic(int level, const Rational& value) : level_(level) {
  if (level < 1) throw ArithmeticError("cyclotomic level must be positive");
  coeffs_.assign(static_cast<std::size_t>(euler_phi(level)), Rational{});
  coeffs_.front() = value;
}

Cyclotomic::Cyclotomic(int level, std::vector<Rational> coeffs) : level_(level) {
  if (level < 1) throw ArithmeticError("cyclotomic level must be positive");
  coeffs_ = reduce(level, std::move(coeffs));
}

std::vector<Rational> Cyclotomic::reduce(int level, std::vector<Rational> poly) {
  const auto& phi = cyclotomic_polynomial(level);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    const Rational c = poly[i];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= deg; ++j) poly[i - deg + j] -= c * phi[j];
  }
  poly.resize(deg);
  return poly;
}

Cyclotomic Cyclotomic::zeta(int level, long power) {
  if (level < 1) throw ArithmeticError("cyclotomic level must be positive");
  long p = power % level;
  if (p < 0) p += level;
  std::vector<Rational> poly(static_cast<std::size_t>(p) + 1);
  poly.back() = Rational{1};
  return Cyclotomic(level, std::move(poly));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

void Cyclotomic::check_level(const Cyclotomic& other) const {
  if (level_ != other.level_) throw ArithmeticError("incompatible cyclotomic levels");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  check_level(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  check_level(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  check_level(rhs);
  if (coeffs_.size() == 1) {
    coeffs_[0] *= rhs.coeffs_[0];
    return *this;
  }
  std::vector<Rational> prod(2 * coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j].is_zero()) continue;
      prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = reduce(level_, std::move(prod));
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) {
    throw ArithmeticError("division by zero in Q(zeta_" + std::to_string(level_) + ")");
  }
  // Solve M v = e_0 where column j of M is this * z^j in the reduced basis.
  const std::size_t d = coeffs_.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
  Cyclotomic col = *this;
  const Cyclotomic z = zeta(level_, 1);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coeffs_[i];
    col *= z;
  }
  m[0][d] = Rational{1};
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t pivot = c;
    while (pivot < d && m[pivot][c].is_zero()) ++pivot;
    if (pivot == d) throw ArithmeticError("singular multiplication matrix in Q(zeta_N)");
    std::swap(m[pivot], m[c]);
    const Rational inv = m[c][c].inverse();
    for (std::size_t k = c; k <= d; ++k) m[c][k] *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = m[i][d];
  return Cyclotomic(level_, std::move(v));
}

Cyclotomic Cyclotomic::galois(long a) const {
  if (std::gcd(a, static_cast<long>(level_)) != 1) {
    throw ArithmeticError("Galois exponent must be coprime to the level");
  }
  Cyclotomic result(level_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    result += zeta(level_, a * static_cast<long>(i)) * coeffs_[i];
  }
  return result;
}

Cyclotomic Cyclotomic::conjugate() const { return galois(-1); }

std::string Cyclotomic::poly_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << '*';
    os << 'z';
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return rational_part().to_string();
  return "(" + poly_string() + ") @ Q(zeta_" + std::to_string(level_) + ")";
}

Cyclotomic Cyclotomic::parse(int level, std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ValidationError("empty cyclotomic literal");
  std::vector<Rational> poly(1);
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw ValidationError("malformed cyclotomic literal '" + s + "'");
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    const std::string term = s.substr(pos, end - pos);
    pos = end;
    if (term.empty()) throw ValidationError("malformed cyclotomic literal '" + s + "'");
    Rational coeff{1};
    long power = 0;
    const auto zpos = term.find('z');
    if (zpos == std::string::npos) {
      coeff = Rational::parse(term);
    } else {
      std::string head = term.substr(0, zpos);
      if (!head.empty()) {
        if (head.back() != '*') throw ValidationError("malformed cyclotomic term '" + term + "'");
        head.pop_back();
        coeff = Rational::parse(head);
      }
      const std::string tail = term.substr(zpos + 1);
      if (tail.empty()) {
        power = 1;
      } else {
        if (tail[0] != '^' || tail.size() < 2) {
          throw ValidationError("malformed cyclotomic term '" + term + "'");
        }
        power = Rational::parse(tail.substr(1)).to_long();
        if (power < 0) throw ValidationError("negative power in cyclotomic term '" + term + "'");
      }
    }
    if (poly.size() <= static_cast<std::size_t>(power)) poly.resize(static_cast<std::size_t>(power) + 1);
    poly[static_cast<std::size_t>(power)] += sign < 0 ? -coeff : coeff;
  }
  return Cyclotomic(level, std::move(poly));
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

}  // namespace genus_forge
