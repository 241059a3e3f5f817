#include "genus_forge/upoly.hpp"

#include <ostream>
#include <sstream>

#include "genus_forge/error.hpp"

namespace genus_forge {

UPoly::UPoly(std::vector<Rational> coeffs, std::string var)
    : coeffs_(std::move(coeffs)), var_(std::move(var)) {
  trim();
}

UPoly::UPoly(const Rational& constant, std::string var) : var_(std::move(var)) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

UPoly UPoly::monomial(const Rational& coeff, std::size_t degree, std::string var) {
  std::vector<Rational> c(degree + 1);
  c[degree] = coeff;
  return UPoly(std::move(c), std::move(var));
}

UPoly UPoly::interpolate(std::span<const Rational> xs, std::span<const Rational> ys,
                         std::string var) {
  if (xs.size() != ys.size()) throw ValidationError("interpolation needs matching node/value counts");
  UPoly result(std::vector<Rational>{}, var);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UPoly basis(Rational{1}, var);
    Rational denom{1};
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      if (xs[i] == xs[j]) throw ValidationError("interpolation nodes must be distinct");
      basis *= UPoly(std::vector<Rational>{-xs[j], Rational{1}}, var);
      denom *= xs[i] - xs[j];
    }
    result += basis * (ys[i] / denom);
  }
  return result;
}

UPoly UPoly::with_var(std::string var) const {
  UPoly r = *this;
  r.var_ = std::move(var);
  return r;
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

UPoly UPoly::reflect() const {
  UPoly r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

UPoly& UPoly::operator+=(const UPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> prod(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(prod);
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
  if (divisor.is_zero()) throw ArithmeticError("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  if (rem.size() <= dd) return {UPoly(std::vector<Rational>{}, var_), *this};
  std::vector<Rational> quot(rem.size() - dd);
  const Rational lead_inv = divisor.leading().inverse();
  for (std::size_t i = rem.size(); i-- > dd;) {
    const Rational c = rem[i] * lead_inv;
    quot[i - dd] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * divisor.coeffs_[j];
  }
  return {UPoly(std::move(quot), var_), UPoly(std::move(rem), var_)};
}

std::string UPoly::to_string() const {
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
    os << var_;
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << p.to_string(); }

}  // namespace genus_forge
