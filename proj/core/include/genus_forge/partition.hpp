#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace genus_forge {

/// Integer partition with strictly positive, non-increasing parts.
///
/// Ordered by weight, then by number of parts, then reverse-lexicographically, so
/// partitions of 6 with at most 3 parts come out as [6],[5,1],[4,2],[3,3],[4,1,1],[3,2,1],[2,2,2].
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts descending; throws on a non-positive part.
  explicit Partition(std::vector<int> parts);

  /// Parses "[2,1]", "2,1" or "[]".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Number of parts equal to j.
  int multiplicity(int j) const;
  /// Parts padded with zeros to `size` entries.
  std::vector<int> padded(std::size_t size) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

  /// "[2,1]"
  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Partitions of k with at most n parts in the order above; k = 0 gives the empty partition.
std::vector<Partition> partitions_at_most(int k, int n);
/// All partitions of k.
std::vector<Partition> partitions_of(int k);

}  // namespace genus_forge
