#pragma once

#include <map>
#include <vector>

namespace gnewton {

/// Integer partition: weakly decreasing positive parts. The empty partition is
/// the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidParam unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  std::size_t length() const { return parts_.size(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n in reverse-lexicographic order, starting from (n).
std::vector<Partition> enumerate_partitions(int n);

/// part value -> number of parts equal to it
std::map<int, int> multiplicities(const Partition& lambda);

}  // namespace gnewton
