#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace qhook {

/// Weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// ignored for equality but the declared length is kept for positional use:
/// (4,3,1) == (4,3,1,0) while padded(4) makes the length explicit.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> p);
  explicit Partition(std::vector<int> p);

  /// Staircase (n-1, n-2, ..., 1, 0).
  static Partition staircase(int n);

  int part(int i) const;  // 1-based; 0 beyond the declared length
  int declared_length() const { return static_cast<int>(parts.size()); }
  int length() const;  // number of nonzero parts
  long sum() const;
  bool is_strict() const;  // no equal nonzero parts
  Partition padded(int len) const;
  Partition normalized() const;  // trailing zeros stripped

  bool operator==(const Partition& o) const;
  bool operator!=(const Partition& o) const { return !(*this == o); }
  bool operator<(const Partition& o) const;  // on normalized parts, for map keys

  std::string str() const;  // "2,1" ; "0" for the empty partition
  static Partition parse(const std::string& text);
};

Partition operator+(const Partition& a, const Partition& b);  // part-wise

/// The partition appearing when an alternant a_{mu+delta_n} is expanded along
/// its last variable: parts i < ell are bumped by one, part ell is dropped.
/// Result has n-1 declared parts.
Partition alternant_expansion_partition(const Partition& mu, int n, int ell);

/// All partitions with at most n parts, each part <= max_part, in a fixed
/// deterministic order.
std::vector<Partition> partitions_in_box(int n, int max_part);

}  // namespace qhook
