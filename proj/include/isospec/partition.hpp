#pragma once

#include <span>
#include <string>
#include <vector>

namespace isospec {

/// Multiset of positive integers a_1 <= ... <= a_s, an s-partition of
/// their sum r. Indexes the members of each isospectral family.
class Partition {
 public:
  /// Sorts the parts. Throws InvalidPartition on an empty list or a part < 1.
  static Partition from_parts(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  int total() const noexcept { return total_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }

  /// "2+2+2"
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// All s-partitions of r, lexicographic in their ascending parts.
/// Throws InvalidRange unless 1 <= s <= r.
std::vector<Partition> enumerate_partitions(int r, int s);

}  // namespace isospec
