#include "genus_forge/polytope.hpp"

#include <cstdlib>
#include <numeric>

#include "genus_forge/error.hpp"

namespace genus_forge {

namespace {

long choose(long n, long k) { return binomial(n, k).to_long(); }

}  // namespace

std::vector<long> h_from_f(const std::vector<long>& f) {
  if (f.empty()) throw ValidationError("f-vector must have n+1 entries");
  const long n = static_cast<long>(f.size()) - 1;
  std::vector<long> h(f.size(), 0);
  for (long j = 0; j <= n; ++j)
    for (long r = 0; r <= j; ++r)
      h[static_cast<std::size_t>(j)] += ((j - r) % 2 == 0 ? 1 : -1) * choose(n - r, n - j) * f[static_cast<std::size_t>(n - r)];
  return h;
}

std::vector<long> f_from_h(const std::vector<long>& h) {
  if (h.empty()) throw ValidationError("h-vector must have n+1 entries");
  const long n = static_cast<long>(h.size()) - 1;
  std::vector<long> f(h.size(), 0);
  for (long r = 0; r <= n; ++r)
    for (long j = 0; j <= r; ++j)
      f[static_cast<std::size_t>(n - r)] += choose(n - j, r - j) * h[static_cast<std::size_t>(j)];
  return f;
}

long affine_length(const LatticeEdge& e) {
  if (e.from.size() != e.to.size()) throw ValidationError("edge endpoints have different dimensions");
  long g = 0;
  for (std::size_t i = 0; i < e.from.size(); ++i) g = std::gcd(g, std::labs(e.to[i] - e.from[i]));
  if (g == 0) throw ValidationError("edge endpoints coincide");
  return g;
}

long combinatorial_index(const std::vector<LatticeEdge>& edges) {
  if (edges.empty()) throw ValidationError("no edges");
  long g = 0;
  for (const auto& e : edges) g = std::gcd(g, affine_length(e));
  return g;
}

HDivision h_divisibility(const std::vector<long>& h, int k0) {
  if (k0 < 1) throw ValidationError("k0 must be positive");
  const UPoly hp(std::vector<Rational>(h.begin(), h.end()), "y");
  const UPoly d(std::vector<Rational>(static_cast<std::size_t>(k0), Rational{1}), "y");
  auto [q, r] = hp.divmod(d);
  return {r.is_zero(), std::move(q), std::move(r)};
}

BettiPattern betti_pattern(int n, int k0, const std::vector<long>& b) {
  BettiPattern out;
  if (static_cast<int>(b.size()) != n + 1) {
    out.violation = "expected " + std::to_string(n + 1) + " Betti numbers";
    return out;
  }
  if (b.front() != 1 || b.back() != 1) {
    out.violation = "b_0 and b_2n must be 1";
    return out;
  }
  for (int j = 0; j <= n; ++j)
    if (b[static_cast<std::size_t>(j)] != b[static_cast<std::size_t>(n - j)]) {
      out.violation = "Betti numbers are not palindromic";
      return out;
    }
  const int which = n + 2 - k0;
  if (k0 < 1 || which < 1 || which > 4) {
    out.violation = "no pattern for k0 = " + std::to_string(k0) + " when n = " + std::to_string(n);
    return out;
  }
  // sum b_j y^j = (1 + ... + y^{k0-1}) * quotient, and the quotient has the case's shape
  const HDivision div = h_divisibility(b, k0);
  if (!div.divisible) {
    out.violation = "1 + ... + y^" + std::to_string(k0 - 1) + " does not divide the Poincare polynomial";
    return out;
  }
  const auto& q = div.quotient;
  auto c = [&](std::size_t i) { return q.coeff(i); };
  bool shape = q.degree() == which - 1 && c(0).is_one() && c(static_cast<std::size_t>(which - 1)).is_one();
  if (shape && which == 4 && !(c(1) == c(2))) shape = false;
  if (!shape) {
    out.violation = "quotient " + q.to_string() + " does not fit case " + std::to_string(which);
    return out;
  }
  if (which >= 3 && c(1).sign() < 0) {
    out.violation = "negative parameter m in quotient " + q.to_string();
    return out;
  }
  out.which = which;
  if (which >= 3) out.m = c(1).to_long();
  return out;
}

std::vector<long> simplex_f_vector(int n) {
  std::vector<long> f;
  for (int j = 0; j <= n; ++j) f.push_back(choose(n + 1, j + 1));
  return f;
}

std::vector<long> cube_f_vector(int n) {
  std::vector<long> f;
  for (int j = 0; j <= n; ++j) f.push_back(choose(n, j) * (1L << (n - j)));
  return f;
}

std::vector<long> product_f_vector(const std::vector<long>& p, const std::vector<long>& q) {
  if (p.empty() || q.empty()) throw ValidationError("empty f-vector");
  std::vector<long> f(p.size() + q.size() - 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) f[i + j] += p[i] * q[j];
  return f;
}

std::vector<LatticeEdge> dilated_simplex_edges(int n, long s) {
  std::vector<LatticePoint> verts(1, LatticePoint(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    LatticePoint v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(i)] = s;
    verts.push_back(v);
  }
  std::vector<LatticeEdge> edges;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) edges.push_back({verts[i], verts[j]});
  return edges;
}

std::vector<LatticeEdge> unit_cube_edges(int n) {
  std::vector<LatticeEdge> edges;
  for (long mask = 0; mask < (1L << n); ++mask) {
    for (int i = 0; i < n; ++i) {
      if (mask & (1L << i)) continue;
      LatticePoint a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) a[static_cast<std::size_t>(k)] = (mask >> k) & 1L;
      b = a;
      b[static_cast<std::size_t>(i)] = 1;
      edges.push_back({a, b});
    }
  }
  return edges;
}

}  // namespace genus_forge
