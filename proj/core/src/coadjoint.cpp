#include "genus_forge/coadjoint.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "genus_forge/error.hpp"
#include "genus_forge/symfunc.hpp"

namespace genus_forge {

RootSystem::RootSystem(char family, int rank) : family_(family), rank_(rank) {
  if (family != 'A' && family != 'B') throw ValidationError("root system family must be A or B");
  if (rank < 1) throw ValidationError("root system rank must be positive");
}

std::vector<RootVector> RootSystem::simple_roots() const {
  std::vector<RootVector> out;
  const int d = dim();
  for (int j = 0; j < rank_; ++j) {
    RootVector r(static_cast<std::size_t>(d), 0);
    r[static_cast<std::size_t>(j)] = 1;
    if (family_ == 'A' || j + 1 < rank_) r[static_cast<std::size_t>(j + 1)] = -1;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RootVector> RootSystem::positive_roots() const {
  std::vector<RootVector> out;
  const int d = dim();
  auto unit = [d](int i) {
    RootVector r(static_cast<std::size_t>(d), 0);
    r[static_cast<std::size_t>(i)] = 1;
    return r;
  };
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      RootVector r = unit(i);
      r[static_cast<std::size_t>(j)] = -1;
      out.push_back(r);
      if (family_ == 'B') {
        r[static_cast<std::size_t>(j)] = 1;
        out.push_back(r);
      }
    }
    if (family_ == 'B') out.push_back(unit(i));
  }
  return out;
}

std::vector<long> RootSystem::simple_coordinates(const RootVector& root) const {
  std::vector<long> c(static_cast<std::size_t>(rank_));
  long acc = 0;
  for (int j = 0; j < rank_; ++j) {
    acc += root[static_cast<std::size_t>(j)];
    c[static_cast<std::size_t>(j)] = acc;
  }
  return c;
}

std::string RootSystem::name() const { return std::string(1, family_) + std::to_string(rank_); }

bool is_positive_root(const RootVector& r) {
  for (long c : r)
    if (c != 0) return c > 0;
  return false;
}

WeylElement::WeylElement(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    const auto a = static_cast<std::size_t>(std::abs(v));
    if (a == 0 || a > image_.size() || seen[a - 1]) throw ValidationError("not a signed permutation");
    seen[a - 1] = true;
  }
}

WeylElement WeylElement::identity(int dim) {
  std::vector<int> img(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  return WeylElement(std::move(img));
}

WeylElement WeylElement::simple_reflection(const RootSystem& rs, int j) {
  if (j < 1 || j > rs.rank()) throw ValidationError("simple reflection index out of range");
  WeylElement w = identity(rs.dim());
  if (rs.family() == 'B' && j == rs.rank()) {
    w.image_[static_cast<std::size_t>(j - 1)] = -j;
  } else {
    std::swap(w.image_[static_cast<std::size_t>(j - 1)], w.image_[static_cast<std::size_t>(j)]);
  }
  return w;
}

RootVector WeylElement::apply(const RootVector& root) const {
  RootVector out(root.size(), 0);
  for (std::size_t i = 0; i < root.size(); ++i) {
    const int v = image_[i];
    out[static_cast<std::size_t>(std::abs(v) - 1)] += v < 0 ? -root[i] : root[i];
  }
  return out;
}

WeylElement operator*(const WeylElement& v, const WeylElement& w) {
  std::vector<int> img(w.image_.size());
  for (std::size_t i = 0; i < img.size(); ++i) {
    const int wi = w.image_[i];
    const int vi = v.image_[static_cast<std::size_t>(std::abs(wi) - 1)];
    img[i] = wi < 0 ? -vi : vi;
  }
  return WeylElement(std::move(img));
}

int weyl_length(const RootSystem& rs, const WeylElement& w) {
  int len = 0;
  for (const auto& r : rs.positive_roots())
    if (!is_positive_root(w.apply(r))) ++len;
  return len;
}

namespace {

bool right_descent(const RootSystem& rs, const WeylElement& w, int j) {
  return !is_positive_root(w.apply(rs.simple_roots()[static_cast<std::size_t>(j - 1)]));
}

void collect_words(const RootSystem& rs, const WeylElement& w, std::vector<int>& suffix,
                   std::vector<std::vector<int>>& out) {
  bool any = false;
  for (int j = 1; j <= rs.rank(); ++j) {
    if (!right_descent(rs, w, j)) continue;
    any = true;
    suffix.push_back(j);
    collect_words(rs, w * WeylElement::simple_reflection(rs, j), suffix, out);
    suffix.pop_back();
  }
  if (!any) out.emplace_back(suffix.rbegin(), suffix.rend());
}

}  // namespace

std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> rev;
  WeylElement cur = w;
  for (;;) {
    int j = 1;
    while (j <= rs.rank() && !right_descent(rs, cur, j)) ++j;
    if (j > rs.rank()) break;
    rev.push_back(j);
    cur = cur * WeylElement::simple_reflection(rs, j);
  }
  return {rev.rbegin(), rev.rend()};
}

std::vector<std::vector<int>> all_reduced_words(const RootSystem& rs, const WeylElement& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> suffix;
  collect_words(rs, w, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

WeylElement from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElement w = WeylElement::identity(rs.dim());
  for (int j : word) w = w * WeylElement::simple_reflection(rs, j);
  return w;
}

const std::vector<WeylElement>& weyl_group(const RootSystem& rs) {
  static std::mutex mu;
  static std::map<std::pair<char, int>, std::unique_ptr<std::vector<WeylElement>>> memo;
  const auto key = std::make_pair(rs.family(), rs.rank());
  std::lock_guard lock(mu);
  auto it = memo.find(key);
  if (it != memo.end()) return *it->second;
  std::set<WeylElement> seen{WeylElement::identity(rs.dim())};
  std::deque<WeylElement> queue{WeylElement::identity(rs.dim())};
  while (!queue.empty()) {
    const WeylElement w = queue.front();
    queue.pop_front();
    for (int j = 1; j <= rs.rank(); ++j) {
      WeylElement next = w * WeylElement::simple_reflection(rs, j);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  auto group = std::make_unique<std::vector<WeylElement>>(seen.begin(), seen.end());
  return *memo.emplace(key, std::move(group)).first->second;
}

SparsePoly root_polynomial(const RootSystem& rs, const RootVector& root) {
  const auto vars = SparsePoly::indexed_vars("x", static_cast<std::size_t>(rs.dim()));
  SparsePoly p(vars);
  for (std::size_t i = 0; i < root.size(); ++i) {
    if (root[i] == 0) continue;
    Exponent e(vars.size(), 0);
    e[i] = 1;
    p.add_term(e, Rational(root[i]));
  }
  return p;
}

SparsePoly divided_difference(const RootSystem& rs, int j, const SparsePoly& p) {
  const WeylElement s = WeylElement::simple_reflection(rs, j);
  const SparsePoly alpha = root_polynomial(rs, rs.simple_roots()[static_cast<std::size_t>(j - 1)]);
  return (p - s.act(p)).divide_exact(alpha);
}

SparsePoly divided_difference_word(const RootSystem& rs, const std::vector<int>& word, const SparsePoly& p) {
  SparsePoly cur = p;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = divided_difference(rs, *it, cur);
  return cur;
}

OrbitSpec::OrbitSpec(RootSystem rs, std::vector<int> J) : rs_(std::move(rs)), J_(std::move(J)) {
  std::sort(J_.begin(), J_.end());
  J_.erase(std::unique(J_.begin(), J_.end()), J_.end());
  for (int j : J_)
    if (j < 1 || j > rs_.rank()) throw ValidationError("J contains an index outside 1.." + std::to_string(rs_.rank()));
  std::vector<bool> in_j(static_cast<std::size_t>(rs_.rank()), false);
  for (int j : J_) in_j[static_cast<std::size_t>(j - 1)] = true;

  for (const auto& r : rs_.positive_roots()) {
    const auto c = rs_.simple_coordinates(r);
    bool spanned = true;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[j] != 0 && !in_j[j]) spanned = false;
    if (!spanned) complement_.push_back(r);
  }

  const auto simple = rs_.simple_roots();
  std::vector<std::pair<std::pair<int, std::vector<int>>, WeylElement>> keyed;
  for (const auto& w : weyl_group(rs_)) {
    bool minimal = true;
    for (int j : J_)
      if (!is_positive_root(w.apply(simple[static_cast<std::size_t>(j - 1)]))) minimal = false;
    if (minimal) keyed.push_back({{weyl_length(rs_, w), reduced_word(rs_, w)}, w});
    bool in_stabilizer = true;
    for (int j : reduced_word(rs_, w))
      if (!in_j[static_cast<std::size_t>(j - 1)]) in_stabilizer = false;
    if (in_stabilizer) ++stabilizer_order_;
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& kv : keyed) reps_.push_back(kv.second);

  if (reps_.size() * stabilizer_order_ != weyl_group(rs_).size())
    throw ConsistencyError("coset count does not match |W|/|W_J|");
  longest_ = reps_.back();
  if (weyl_length(rs_, longest_) != n()) throw ConsistencyError("longest coset representative has wrong length");
}

OrbitSpec cpn_orbit(int n) {
  std::vector<int> J;
  for (int j = 2; j <= n; ++j) J.push_back(j);
  return OrbitSpec(RootSystem('A', n), J);
}

OrbitSpec grassmannian_orbit(int m) {
  std::vector<int> J;
  for (int j = 2; j <= m; ++j) J.push_back(j);
  return OrbitSpec(RootSystem('B', m), J);
}

SparsePoly q_I_via_divided_diff(const OrbitSpec& orbit, const Partition& I) {
  const auto& rs = orbit.root_system();
  std::vector<SparsePoly> roots;
  for (const auto& r : orbit.complement_roots()) roots.push_back(root_polynomial(rs, r));
  const auto vars = SparsePoly::indexed_vars("x", static_cast<std::size_t>(rs.dim()));
  if (I.length() > orbit.n()) return SparsePoly(vars);
  const SparsePoly m = monomial_sym_eval<SparsePoly>(I, roots, SparsePoly(vars, Rational{1}));
  return divided_difference_word(rs, reduced_word(rs, orbit.longest_representative()), m);
}

FixedPointData orbit_fixed_points(const OrbitSpec& orbit, const std::vector<long>& xi) {
  const auto& rs = orbit.root_system();
  if (static_cast<int>(xi.size()) != rs.dim())
    throw ValidationError("circle direction needs " + std::to_string(rs.dim()) + " coordinates");
  FixedPointData fpd{orbit.n(), {}, std::nullopt};
  for (const auto& w : orbit.coset_representatives()) {
    FixedPoint p;
    for (int j : reduced_word(rs, w)) p.label += "s" + std::to_string(j);
    if (p.label.empty()) p.label = "e";
    for (const auto& alpha : orbit.complement_roots()) {
      const RootVector image = w.apply(alpha);
      long pairing = 0;
      for (std::size_t i = 0; i < image.size(); ++i) pairing += image[i] * xi[i];
      if (pairing == 0) throw ValidationError("non-generic circle direction: zero weight at coset " + p.label);
      p.weights.push_back(pairing);
    }
    fpd.points.push_back(std::move(p));
  }
  return fpd;
}

CrosscheckResult crosscheck_qI(const OrbitSpec& orbit, const Partition& I, const std::vector<long>& xi) {
  const FixedPointData fpd = orbit_fixed_points(orbit, xi);
  CrosscheckResult out;
  out.divided_difference_value = q_I_via_divided_diff(orbit, I).evaluate({xi.begin(), xi.end()});
  out.localization_value = relation_coefficient(fpd, I);
  out.ok = out.divided_difference_value == out.localization_value;
  return out;
}

bool same_fixed_points_up_to_reordering(const FixedPointData& a, const FixedPointData& b) {
  if (a.n != b.n || a.points.size() != b.points.size()) return false;
  auto canon = [](const FixedPointData& f) {
    std::vector<std::vector<long>> pts;
    for (const auto& p : f.points) {
      auto w = p.weights;
      std::sort(w.begin(), w.end());
      pts.push_back(std::move(w));
    }
    std::sort(pts.begin(), pts.end());
    return pts;
  };
  return canon(a) == canon(b);
}

}  // namespace genus_forge
