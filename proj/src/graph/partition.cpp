#include "isospec/partition.hpp"

#include <algorithm>
#include <numeric>

#include "isospec/error.hpp"

namespace isospec {

Partition Partition::from_parts(std::vector<int> parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidPartition, "a partition needs at least one part");
  for (int a : parts) {
    if (a < 1) throw Error(ErrorKind::InvalidPartition, "parts must be positive, got " + std::to_string(a));
  }
  std::sort(parts.begin(), parts.end());
  Partition p;
  p.total_ = std::accumulate(parts.begin(), parts.end(), 0);
  p.parts_ = std::move(parts);
  return p;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

void extend(int remaining, int slots, int floor, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (slots == 1) {
    if (remaining >= floor) {
      prefix.push_back(remaining);
      out.push_back(Partition::from_parts(prefix));
      prefix.pop_back();
    }
    return;
  }
  // The current part is the smallest of the remaining `slots` parts.
  for (int a = floor; a * slots <= remaining; ++a) {
    prefix.push_back(a);
    extend(remaining - a, slots - 1, a, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int r, int s) {
  if (s < 1 || s > r) {
    throw Error(ErrorKind::InvalidRange,
                "need 1 <= s <= r, got r=" + std::to_string(r) + " s=" + std::to_string(s));
  }
  std::vector<Partition> out;
  std::vector<int> prefix;
  prefix.reserve(s);
  extend(r, s, 1, prefix, out);
  return out;
}

}  // namespace isospec
