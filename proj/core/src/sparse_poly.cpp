#include "genus_forge/sparse_poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>

namespace genus_forge {

namespace {

int total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  const int da = total(a);
  const int db = total(b);
  if (da != db) return da < db;
  return a < b;
}

SparsePoly::SparsePoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

SparsePoly::SparsePoly(std::vector<std::string> vars, const Rational& constant)
    : vars_(std::move(vars)) {
  add_term(Exponent(vars_.size(), 0), constant);
}

std::vector<std::string> SparsePoly::indexed_vars(const std::string& prefix, std::size_t count,
                                                  std::size_t first) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(prefix + std::to_string(first + i));
  return out;
}

SparsePoly SparsePoly::variable(const std::vector<std::string>& vars, std::size_t index) {
  if (index >= vars.size()) throw ValidationError("variable index out of range");
  Exponent e(vars.size(), 0);
  e[index] = 1;
  return monomial(vars, e);
}

SparsePoly SparsePoly::monomial(const std::vector<std::string>& vars, const Exponent& exp,
                                const Rational& coeff) {
  if (exp.size() != vars.size()) throw ValidationError("exponent length does not match variables");
  SparsePoly p(vars);
  p.add_term(exp, coeff);
  return p;
}

bool SparsePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

Rational SparsePoly::constant_term() const { return coeff(Exponent(vars_.size(), 0)); }

Rational SparsePoly::coeff(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational{} : it->second;
}

int SparsePoly::degree() const { return terms_.empty() ? -1 : total(terms_.rbegin()->first); }

const SparsePoly::TermMap::value_type& SparsePoly::leading_term() const {
  if (terms_.empty()) throw ArithmeticError("leading term of zero polynomial");
  return *terms_.rbegin();
}

void SparsePoly::add_term(const Exponent& exp, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exp, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

void SparsePoly::check_compatible(const SparsePoly& other) const {
  if (vars_ != other.vars_) throw ArithmeticError("polynomials over different variables");
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.check_compatible(b);
  SparsePoly out(a.vars_);
  Exponent e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& rhs) { return *this = *this * rhs; }

SparsePoly& SparsePoly::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= rhs;
  return *this;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

SparsePoly SparsePoly::pow(unsigned exponent) const {
  SparsePoly result(vars_, Rational{1});
  SparsePoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Rational SparsePoly::evaluate(const std::vector<Rational>& values) const {
  return genus_forge::evaluate<Rational>(*this, values, Rational{1});
}

SparsePoly SparsePoly::substitute(const std::vector<SparsePoly>& polys) const {
  if (polys.size() != vars_.size()) throw ValidationError("substitution needs one polynomial per variable");
  if (polys.empty()) return *this;
  return genus_forge::evaluate<SparsePoly>(*this, polys, one_like(polys.front()));
}

SparsePoly SparsePoly::act(const std::vector<int>& image) const {
  if (image.size() != vars_.size()) throw ValidationError("signed permutation has wrong length");
  SparsePoly out(vars_);
  Exponent e(vars_.size());
  for (const auto& [src, c] : terms_) {
    std::fill(e.begin(), e.end(), 0);
    int sign = 1;
    for (std::size_t i = 0; i < src.size(); ++i) {
      const int target = std::abs(image[i]) - 1;
      e[static_cast<std::size_t>(target)] += src[i];
      if (image[i] < 0 && (src[i] & 1)) sign = -sign;
    }
    out.add_term(e, sign > 0 ? c : -c);
  }
  return out;
}

SparsePoly SparsePoly::divide_exact(const SparsePoly& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) throw ArithmeticError("polynomial division by zero");
  const auto& [lead_exp, lead_coeff] = divisor.leading_term();
  const Rational lead_inv = lead_coeff.inverse();
  SparsePoly rem = *this;
  SparsePoly quot(vars_);
  Exponent shift(vars_.size());
  while (!rem.is_zero()) {
    const auto& [re, rc] = rem.leading_term();
    for (std::size_t i = 0; i < shift.size(); ++i) {
      shift[i] = re[i] - lead_exp[i];
      if (shift[i] < 0) throw ConsistencyError("inexact polynomial division");
    }
    const Rational c = rc * lead_inv;
    quot.add_term(shift, c);
    rem -= monomial(vars_, shift, c) * divisor;
  }
  return quot;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (!mag.is_one() || total(e) == 0) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << vars_[i];
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SparsePoly& p) { return os << p.to_string(); }

}  // namespace genus_forge
