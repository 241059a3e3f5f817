#include "genus_forge/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

#include "genus_forge/error.hpp"

namespace genus_forge {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw ValidationError("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), '[', ' ');
  std::replace(s.begin(), s.end(), ']', ' ');
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<int> parts;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ValidationError("malformed partition: " + std::string(text));
    }
    if (used != tok.size()) throw ValidationError("malformed partition: " + std::string(text));
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

int Partition::multiplicity(int j) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), j));
}

std::vector<int> Partition::padded(std::size_t size) const {
  if (parts_.size() > size) throw ValidationError("partition " + to_string() + " has too many parts");
  std::vector<int> out = parts_;
  out.resize(size, 0);
  return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  if (auto c = a.parts_.size() <=> b.parts_.size(); c != 0) return c;
  // larger parts first
  return b.parts_ <=> a.parts_;
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

namespace {

// Partitions of k into exactly len parts, each at most max_part, in reverse-lex order.
void exact_length(int k, int len, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (len == 0) {
    if (k == 0) out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(k - (len - 1), max_part); p >= 1; --p) {
    if (p * len < k) break;
    prefix.push_back(p);
    exact_length(k - p, len - 1, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_at_most(int k, int n) {
  if (k < 0) throw ValidationError("partition weight must be non-negative");
  if (n < 1) throw ValidationError("maximal number of parts must be positive");
  std::vector<Partition> out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> prefix;
  for (int len = 1; len <= std::min(k, n); ++len) exact_length(k, len, k, prefix, out);
  return out;
}

std::vector<Partition> partitions_of(int k) { return partitions_at_most(k, std::max(k, 1)); }

}  // namespace genus_forge
