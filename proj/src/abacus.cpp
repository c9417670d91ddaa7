#include "blockscope/abacus.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "blockscope/error.hpp"

namespace blockscope {

namespace {

void check_modulus(int e) {
  if (e < 2) throw ValidationError("number of runners must be at least 2");
}

// Partition read from a bead set of size `charge` (sorted ascending).
Partition read_beads(const std::vector<int>& ascending) {
  const int charge = static_cast<int>(ascending.size());
  std::vector<int> parts;
  for (int j = 1; j <= charge; ++j) {
    const int part = ascending[charge - j] + j - charge;
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

}  // namespace

AbacusDisplay AbacusDisplay::from_partition(const Partition& nu, int e, int charge) {
  check_modulus(e);
  if (charge < nu.length()) {
    throw ValidationError("charge " + std::to_string(charge) +
                          " is smaller than the length of " + nu.to_string());
  }
  if (charge % e != 0) {
    throw ValidationError("charge " + std::to_string(charge) +
                          " is not a multiple of " + std::to_string(e));
  }
  std::vector<int> beads;
  beads.reserve(static_cast<std::size_t>(charge));
  for (int j = charge; j >= 1; --j) beads.push_back(nu.part(j) - j + charge);
  return AbacusDisplay(e, charge, std::move(beads));
}

bool AbacusDisplay::is_bead(int position) const {
  return position < 0 || std::binary_search(beads_.begin(), beads_.end(), position);
}

std::vector<int> AbacusDisplay::runner_counts() const {
  std::vector<int> counts(static_cast<std::size_t>(runners_), 0);
  for (int x : beads_) ++counts[runner_of(x)];
  return counts;
}

Partition AbacusDisplay::to_partition() const { return read_beads(beads_); }

std::string AbacusDisplay::render() const {
  std::ostringstream out;
  const int last_row = beads_.empty() ? 0 : beads_.back() / runners_;
  for (int row = 0; row <= last_row; ++row) {
    for (int r = 0; r < runners_; ++r) out << (is_bead(row * runners_ + r) ? 'b' : '-');
    out << '\n';
  }
  return out.str();
}

int default_charge(const Partition& nu, int e) {
  check_modulus(e);
  const int len = std::max(nu.length(), 1);
  return (len + e - 1) / e * e;
}

Partition p_core(const Partition& nu, int e) {
  const auto ab = AbacusDisplay::from_partition(nu, e, default_charge(nu, e));
  const auto counts = ab.runner_counts();
  std::vector<int> beads;
  for (int r = 0; r < e; ++r) {
    for (int k = 0; k < counts[r]; ++k) beads.push_back(r + k * e);
  }
  std::sort(beads.begin(), beads.end());
  return read_beads(beads);
}

int p_weight(const Partition& nu, int e) { return (nu.size() - p_core(nu, e).size()) / e; }

bool is_core(const Partition& nu, int e) { return p_core(nu, e) == nu; }

std::vector<Partition> p_quotient(const Partition& nu, int e, std::optional<int> charge) {
  const auto ab = AbacusDisplay::from_partition(nu, e, charge.value_or(default_charge(nu, e)));
  std::vector<std::vector<int>> runner_beads(static_cast<std::size_t>(e));
  for (int x : ab.beads()) runner_beads[ab.runner_of(x)].push_back(x / e);
  std::vector<Partition> quotient;
  for (auto& beads : runner_beads) quotient.push_back(read_beads(beads));
  return quotient;
}

HookMoves hook_move_available(const Partition& nu, int e, int charge, int h, int runner) {
  if (h < 1) throw ValidationError("hook length must be positive");
  const auto ab = AbacusDisplay::from_partition(nu, e, charge);
  const int i = mod(runner, e);
  HookMoves moves;
  for (int x : ab.beads()) {
    if (ab.runner_of(x) == i && x - h >= 0 && !ab.is_bead(x - h)) moves.removable = true;
  }
  // Addable moves may start from a conceptual bead below position zero.
  const int lowest = -h;
  const int highest = ab.beads().empty() ? 0 : ab.beads().back();
  for (int x = lowest; x <= highest; ++x) {
    if (ab.runner_of(x) == i && ab.is_bead(x) && !ab.is_bead(x + h)) moves.addable = true;
  }
  return moves;
}

std::vector<Partition> enumerate_block_partitions(const Partition& core, int e, int weight) {
  check_modulus(e);
  if (weight < 0) throw ValidationError("weight must be non-negative");
  if (!is_core(core, e)) {
    throw PreconditionError(core.to_string() + " is not a " + std::to_string(e) + "-core");
  }
  // Enough charge that every runner carries at least `weight` beads.
  int charge = core.length() + e * weight;
  charge = std::max(e, (charge + e - 1) / e * e);
  const auto counts =
      AbacusDisplay::from_partition(core, e, charge).runner_counts();

  std::vector<Partition> out;
  std::vector<Partition> quotient(static_cast<std::size_t>(e));
  std::function<void(int, int)> rec = [&](int runner, int remaining) {
    if (runner == e) {
      if (remaining != 0) return;
      std::vector<int> beads;
      for (int r = 0; r < e; ++r) {
        const int b = counts[r];
        for (int j = 1; j <= b; ++j) {
          beads.push_back(r + e * (b - j + quotient[r].part(j)));
        }
      }
      std::sort(beads.begin(), beads.end());
      out.push_back(read_beads(beads));
      return;
    }
    for (int size = 0; size <= remaining; ++size) {
      for (const auto& q : enumerate_partitions(size, std::max(size, kDefaultPartitionCap))) {
        quotient[runner] = q;
        rec(runner + 1, remaining - size);
      }
    }
  };
  rec(0, weight);
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool check_prop6em(const Partition& alpha, const Partition& beta, int e, int h, int runner) {
  if (alpha.size() != beta.size() || p_core(alpha, e) != p_core(beta, e)) {
    throw PreconditionError(alpha.to_string() + " and " + beta.to_string() +
                            " are not in the same block");
  }
  const int charge = default_charge(alpha.length() > beta.length() ? alpha : beta, e);
  if (!hook_move_available(alpha, e, charge, h, runner).removable) {
    throw PreconditionError(alpha.to_string() + " has no removable " + std::to_string(h) +
                            "-hook at runner " + std::to_string(runner));
  }
  return hook_move_available(alpha, e, charge, h, runner - h).addable ||
         hook_move_available(beta, e, charge, h, runner).removable;
}

}  // namespace blockscope
