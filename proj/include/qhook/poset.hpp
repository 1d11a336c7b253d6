#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhook/partition.hpp"

namespace qhook {

/// Small dynamic bitset over element ids.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int n) : n_(n), w_(static_cast<size_t>((n + 63) / 64), 0) {}
  int size() const { return n_; }
  void set(int i) { w_[static_cast<size_t>(i) >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(int i) { w_[static_cast<size_t>(i) >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1; }
  int count() const;
  bool is_subset_of(const BitVec& o) const;
  BitVec operator&(const BitVec& o) const;
  BitVec operator|(const BitVec& o) const;
  bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator<(const BitVec& o) const { return w_ < o.w_; }
  std::vector<int> elements() const;

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

/// Finite poset on elements 0..size-1. The stored cover relation is the
/// transitive reduction of the relation generated by the constructor pairs;
/// the full order is cached as down-set bitsets. Immutable after construction.
class Poset {
 public:
  Poset() = default;
  /// relations: (lower, upper) generator pairs, not necessarily covers.
  Poset(int n, std::vector<std::pair<int, int>> relations,
        std::vector<std::string> labels = {});

  int size() const { return n_; }
  bool leq(int a, int b) const { return down_[static_cast<size_t>(b)].test(a); }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  std::vector<int> upper_covers(int v) const;
  std::vector<int> lower_covers(int v) const;
  std::vector<int> maximal_elements() const;
  std::vector<int> minimal_elements() const;
  int unique_maximal() const;  // throws std::domain_error if not unique
  const BitVec& down_set(int v) const { return down_[static_cast<size_t>(v)]; }
  const BitVec& up_set(int v) const { return up_[static_cast<size_t>(v)]; }
  /// {u : a <= u <= b}; empty when !leq(a,b).
  BitVec interval(int a, int b) const;
  std::vector<int> linear_extension() const;  // deterministic (smallest id first)

  const std::string& label(int v) const { return labels_[static_cast<size_t>(v)]; }

  bool has_diagonal() const { return !diag_.empty(); }
  const std::vector<int>& diagonal() const { return diag_; }
  void set_diagonal(std::vector<int> diag);  // must be a chain

  /// Sub-poset induced on the kept elements (ids compacted, order preserved).
  Poset induced(const std::vector<int>& keep) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> covers_;
  std::vector<BitVec> down_, up_;
  std::vector<std::string> labels_;
  std::vector<int> diag_;
};

// ---- constructions ---------------------------------------------------------

Poset build_chain(int n);
Poset build_antichain(int n);
Poset build_young(const Partition& lambda);
Poset build_shifted_young(const Partition& lambda);  // lambda strict
Poset disjoint_union(const Poset& a, const Poset& b);

/// New maximum above every element of p.
Poset op_plus(const Poset& p);
/// Remove the unique maximum.
Poset op_minus(const Poset& p);
/// Hang p2 (through its unique maximum) below element x of p1.
/// Returns the new poset; p2's ids are shifted by p1.size().
Poset slant_sum(const Poset& p1, int x, const Poset& p2);

/// Glue the shifted poset of lambda+delta_{n+1} onto the chain
/// chain_elems[0] < ... < chain_elems[n-1] of p, identifying the shifted
/// poset's diagonal cells top-to-bottom with the chain top-to-bottom.
Poset attach_D(const Poset& p, const std::vector<int>& chain_elems, const Partition& lambda);

struct XEntry {
  Partition lambda;
  int ni = 0;  // number of diagonal entries spanned
  int si = 0;  // 1-based start position on the diagonal
};
using XSet = std::vector<XEntry>;

/// The poset P_n(X): a chain x_1 < ... < x_n with one shifted poset glued per
/// X entry. The diagonal annotation is populated.
Poset build_PnX(int n, const XSet& x);
/// P_n^m(X): P_n(X) with a chain of m extra elements above x_n.
Poset build_PnmX(int n, int m, const XSet& x);

/// Extend p (unique maximum y1, with y2 covered by y1) by a chain
/// z_m > ... > z_1 > z_0 > z_{-1} > ... > z_{-k} and an extra element y0,
/// with z_1 > y_0 > y_1, z_0 > y_1 and z_{-1} > y_2. m >= 0, k >= 1.
Poset build_Dmk(const Poset& p, int y2, int m, int k);
/// The same with z_m..z_1 and y_0 removed.
Poset build_Dk(const Poset& p, int y2, int k);

// ---- queries ---------------------------------------------------------------

/// All order ideals (down-closed subsets) as bitsets, sorted by (size, bits).
/// Throws std::runtime_error when more than `guard` ideals exist.
std::vector<BitVec> order_ideals(const Poset& p, size_t guard = 1000000);

struct DCompleteReport {
  bool ok = true;
  std::string witness;  // human-readable reason when !ok
};

/// Check Proctor's three d-completeness conditions by structural enumeration
/// of d_k intervals and d_k^- convex sets.
DCompleteReport is_d_complete(const Poset& p);

using HookMap = std::vector<int>;  // element id -> hook length

/// Recursive hook lengths of a d-complete poset. Throws std::domain_error if
/// the structural uniqueness the recursion needs fails (non-d-complete input).
HookMap hook_lengths(const Poset& p);

/// Level census of a poset with a diagonal annotation: entry i-1 counts the
/// elements y with y <= x_i and y !<= x_{i-1}. Elements above the diagonal's
/// top (an attached chain) are not counted.
std::vector<int> levels(const Poset& p);

/// True when v is in the top tree and in no d_k-interval neck.
bool is_acyclic_element(const Poset& p, int v);

// ---- text format ------------------------------------------------------------
//
// Line-based: `elem <id>`, `cover <lo> <hi>`, optional `diag <id...>`;
// whitespace-separated, `#` starts a comment. Ids are arbitrary nonnegative
// integers and are compacted in listing order.

Poset parse_poset(const std::string& text);
std::string format_poset(const Poset& p);

}  // namespace qhook
