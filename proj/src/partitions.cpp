#include "gnewton/partitions.hpp"

#include <numeric>
#include <string>

#include "gnewton/errors.hpp"

namespace gnewton {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InvalidParam("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidParam("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw InvalidParam("cannot partition a negative integer: " + std::to_string(n));
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Successor rule for reverse-lexicographic order: strip trailing 1s, decrease
  // the last part > 1 by one, and refill greedily with that new value.
  std::vector<int> parts{n};
  while (true) {
    out.emplace_back(parts);
    int ones = 0;
    while (!parts.empty() && parts.back() == 1) {
      parts.pop_back();
      ++ones;
    }
    if (parts.empty()) break;
    int value = parts.back() - 1;
    parts.pop_back();
    int remaining = ones + value + 1;
    while (remaining >= value) {
      parts.push_back(value);
      remaining -= value;
    }
    if (remaining > 0) parts.push_back(remaining);
  }
  return out;
}

std::map<int, int> multiplicities(const Partition& lambda) {
  std::map<int, int> counts;
  for (int p : lambda.parts()) ++counts[p];
  return counts;
}

}  // namespace gnewton
