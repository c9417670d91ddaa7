#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace blockscope {

/// Least non-negative representative of `a` modulo `m`.
constexpr int mod(long long a, int m) {
  const long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

/// A weakly decreasing sequence of positive integers.  Immutable.
class Partition {
 public:
  Partition() = default;

  /// Throws ValidationError unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Part in 1-based row `row`; zero beyond the length.
  int part(int row) const noexcept {
    return row >= 1 && row <= length() ? parts_[row - 1] : 0;
  }

  bool contains(int row, int col) const noexcept {
    return col >= 1 && col <= part(row);
  }

  /// [this] is a subset of [other].
  bool inside(const Partition& other) const noexcept;

  /// "(3,2,2,2,1)", or "∅" for the empty partition.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Strips trailing zeros, then validates.
Partition make_partition(std::span<const int> parts);
Partition make_partition(std::initializer_list<int> parts);

/// A box (row, col), both 1-based, English notation.
struct Node {
  int row = 1;
  int col = 1;

  int content() const noexcept { return col - row; }
  int residue(int e) const noexcept { return mod(content(), e); }

  friend bool operator==(const Node&, const Node&) = default;
  friend auto operator<=>(const Node&, const Node&) = default;
};

/// Multiset of elements of Z/eZ, stored as a count per residue.
class ResidueMultiset {
 public:
  explicit ResidueMultiset(int modulus);
  ResidueMultiset(int modulus, std::vector<int> counts);

  int modulus() const noexcept { return modulus_; }
  const std::vector<int>& counts() const noexcept { return counts_; }
  int count(int residue) const { return counts_.at(mod(residue, modulus_)); }
  int total() const noexcept;
  void add(int residue, int times = 1);

  /// True when every residue occurs at most once.
  bool repetition_free() const noexcept;
  /// True when every residue occurs exactly once.
  bool is_full_set() const noexcept;

  /// "{0:3, 1:3, 2:4}", zero counts omitted.
  std::string to_string() const;

  ResidueMultiset& operator-=(const ResidueMultiset& other);
  friend ResidueMultiset operator-(ResidueMultiset a, const ResidueMultiset& b) {
    return a -= b;
  }
  friend bool operator==(const ResidueMultiset&, const ResidueMultiset&) = default;

 private:
  int modulus_;
  std::vector<int> counts_;
};

ResidueMultiset e_content(const Partition& nu, int e);
ResidueMultiset residues_of(std::span<const Node> nodes, int e);

/// Nodes of [nu], row by row.
std::vector<Node> diagram(const Partition& nu);

/// Nodes of [outer] \ [inner]; requires inner inside outer.
std::vector<Node> diagram_difference(const Partition& outer, const Partition& inner);

enum class HookKind { removable, addable };

/// A rim hook.  `nodes` are listed in increasing content, so the foot node
/// (south-west end) comes first and the hand node (north-east end) last.
struct Hook {
  Node hand;
  Node foot;
  std::vector<Node> nodes;
  HookKind kind = HookKind::removable;

  int length() const noexcept { return static_cast<int>(nodes.size()); }
};

/// All removable h-hooks, sorted by the content of the foot node.
std::vector<Hook> removable_hooks(const Partition& nu, int h);
/// All addable h-hooks, sorted by the content of the foot node.
std::vector<Hook> addable_hooks(const Partition& nu, int h);

/// Throw ValidationError when the result is not a Young diagram.
Partition remove_hook(const Partition& nu, const Hook& hook);
Partition add_hook(const Partition& nu, const Hook& hook);

inline constexpr int kDefaultPartitionCap = 40;

/// All partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> enumerate_partitions(int n, int cap = kDefaultPartitionCap);

/// All kappa inside mu with |mu| - |kappa| = removed, reverse lexicographic.
std::vector<Partition> inner_partitions(const Partition& mu, int removed);
/// All kappa containing lambda with |kappa| - |lambda| = added, reverse lexicographic.
std::vector<Partition> outer_partitions(const Partition& lambda, int added);

}  // namespace blockscope
