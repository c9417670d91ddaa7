#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockscope/partition.hpp"

namespace blockscope {

/// James abacus display with `runners()` runners and `charge()` beads.
///
/// Row j of the encoded partition puts a bead at position nu_j - j + C.  The
/// charge is always a multiple of the number of runners, so position x lies on
/// runner x mod e and runner labels do not move when the charge grows.
/// Positions below zero are treated as beads: the display behaves as if it
/// had infinite charge, which makes hook moves charge-independent.
class AbacusDisplay {
 public:
  /// Throws ValidationError unless charge >= length(nu) and charge % e == 0.
  static AbacusDisplay from_partition(const Partition& nu, int e, int charge);

  int runners() const noexcept { return runners_; }
  int charge() const noexcept { return charge_; }
  /// Sorted ascending.
  const std::vector<int>& beads() const noexcept { return beads_; }

  bool is_bead(int position) const;
  int runner_of(int position) const noexcept { return mod(position, runners_); }

  /// Bead counts b_0, ..., b_{e-1}; they sum to the charge.
  std::vector<int> runner_counts() const;

  Partition to_partition() const;

  /// Rows of `b` (bead) and `-` (space), one character per runner, down to
  /// the row holding the last bead.
  std::string render() const;

  friend bool operator==(const AbacusDisplay&, const AbacusDisplay&) = default;

 private:
  AbacusDisplay(int e, int charge, std::vector<int> beads)
      : runners_(e), charge_(charge), beads_(std::move(beads)) {}

  int runners_;
  int charge_;
  std::vector<int> beads_;
};

/// Least positive multiple of e that is at least length(nu).
int default_charge(const Partition& nu, int e);

Partition p_core(const Partition& nu, int e);
int p_weight(const Partition& nu, int e);
bool is_core(const Partition& nu, int e);

/// Component i reads runner i as a one-runner abacus.  Quotients do not
/// depend on the charge as long as it is a multiple of e; the default charge
/// is used when none is given.
std::vector<Partition> p_quotient(const Partition& nu, int e,
                                  std::optional<int> charge = std::nullopt);

struct HookMoves {
  bool removable = false;  ///< a bead at x = runner (mod e) with a space at x - h
  bool addable = false;    ///< a bead at x = runner (mod e) with a space at x + h
};

HookMoves hook_move_available(const Partition& nu, int e, int charge, int h, int runner);

/// Every partition with e-core `core` and e-weight `weight`, reverse
/// lexicographic.  Throws PreconditionError if `core` is not an e-core.
std::vector<Partition> enumerate_block_partitions(const Partition& core, int e, int weight);

/// Two partitions in one e-block, alpha with a removable h-hook at `runner`.
/// Returns whether alpha has an addable h-hook at runner - h or beta has a
/// removable h-hook at `runner`.  Throws PreconditionError when the inputs
/// are not in one block or alpha has no such hook.
bool check_prop6em(const Partition& alpha, const Partition& beta, int e, int h, int runner);

}  // namespace blockscope
