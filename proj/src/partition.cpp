#include "blockscope/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "blockscope/error.hpp"

namespace blockscope {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) {
      throw ValidationError("partition parts must be positive (part " +
                            std::to_string(k + 1) + " is " +
                            std::to_string(parts_[k]) + ")");
    }
    if (k > 0 && parts_[k] > parts_[k - 1]) {
      throw ValidationError("partition parts must be weakly decreasing (part " +
                            std::to_string(k + 1) + " exceeds part " +
                            std::to_string(k) + ")");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::inside(const Partition& other) const noexcept {
  if (length() > other.length()) return false;
  for (int r = 1; r <= length(); ++r) {
    if (part(r) > other.part(r)) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "∅";
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out << ',';
    out << parts_[k];
  }
  out << ')';
  return out.str();
}

Partition make_partition(std::span<const int> parts) {
  std::vector<int> v(parts.begin(), parts.end());
  while (!v.empty() && v.back() == 0) v.pop_back();
  return Partition(std::move(v));
}

Partition make_partition(std::initializer_list<int> parts) {
  return make_partition(std::span<const int>(parts.begin(), parts.size()));
}

// ---------------------------------------------------------------------------

ResidueMultiset::ResidueMultiset(int modulus) : modulus_(modulus) {
  if (modulus < 2) throw ValidationError("modulus must be at least 2");
  counts_.assign(static_cast<std::size_t>(modulus), 0);
}

ResidueMultiset::ResidueMultiset(int modulus, std::vector<int> counts)
    : ResidueMultiset(modulus) {
  if (counts.size() != counts_.size()) {
    throw ValidationError("residue count vector has wrong length");
  }
  counts_ = std::move(counts);
}

int ResidueMultiset::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

void ResidueMultiset::add(int residue, int times) {
  counts_[static_cast<std::size_t>(mod(residue, modulus_))] += times;
}

bool ResidueMultiset::repetition_free() const noexcept {
  return std::all_of(counts_.begin(), counts_.end(), [](int c) { return c <= 1; });
}

bool ResidueMultiset::is_full_set() const noexcept {
  return std::all_of(counts_.begin(), counts_.end(), [](int c) { return c == 1; });
}

std::string ResidueMultiset::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int i = 0; i < modulus_; ++i) {
    if (counts_[i] == 0) continue;
    if (!first) out << ", ";
    out << i << ':' << counts_[i];
    first = false;
  }
  out << '}';
  return out.str();
}

ResidueMultiset& ResidueMultiset::operator-=(const ResidueMultiset& other) {
  if (other.modulus_ != modulus_) throw ValidationError("modulus mismatch");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] -= other.counts_[i];
  return *this;
}

ResidueMultiset residues_of(std::span<const Node> nodes, int e) {
  ResidueMultiset out(e);
  for (const Node& n : nodes) out.add(n.residue(e));
  return out;
}

ResidueMultiset e_content(const Partition& nu, int e) {
  const auto nodes = diagram(nu);
  return residues_of(nodes, e);
}

std::vector<Node> diagram(const Partition& nu) {
  return diagram_difference(nu, Partition{});
}

std::vector<Node> diagram_difference(const Partition& outer, const Partition& inner) {
  if (!inner.inside(outer)) {
    throw PreconditionError(inner.to_string() + " does not lie inside " +
                            outer.to_string());
  }
  std::vector<Node> nodes;
  for (int r = 1; r <= outer.length(); ++r) {
    for (int c = inner.part(r) + 1; c <= outer.part(r); ++c) nodes.push_back({r, c});
  }
  return nodes;
}

// ---------------------------------------------------------------------------
// Hooks, computed on beta-numbers: row j of nu sits at position nu_j - j + C.

namespace {

std::vector<int> beta_set(const Partition& nu, int charge) {
  std::vector<int> beads;
  beads.reserve(static_cast<std::size_t>(charge));
  for (int j = 1; j <= charge; ++j) beads.push_back(nu.part(j) - j + charge);
  return beads;  // strictly decreasing
}

Partition from_beta_set(std::vector<int> beads) {
  std::sort(beads.begin(), beads.end(), std::greater<>());
  const int charge = static_cast<int>(beads.size());
  std::vector<int> parts;
  for (int j = 1; j <= charge; ++j) {
    const int part = beads[j - 1] + j - charge;
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

Hook make_hook(std::vector<Node> nodes, HookKind kind) {
  std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
    return a.content() < b.content();
  });
  Hook hook;
  hook.foot = nodes.front();
  hook.hand = nodes.back();
  hook.nodes = std::move(nodes);
  hook.kind = kind;
  return hook;
}

void sort_by_foot(std::vector<Hook>& hooks) {
  std::sort(hooks.begin(), hooks.end(), [](const Hook& a, const Hook& b) {
    return a.foot.content() < b.foot.content();
  });
}

Partition from_node_set(const std::set<Node>& nodes) {
  std::vector<int> parts;
  int row = 1;
  for (;;) {
    int len = 0;
    while (nodes.count({row, len + 1})) ++len;
    if (len == 0) break;
    parts.push_back(len);
    ++row;
  }
  std::size_t counted = std::accumulate(parts.begin(), parts.end(), std::size_t{0},
                                        [](std::size_t a, int b) { return a + b; });
  if (counted != nodes.size()) throw ValidationError("node set is not a Young diagram");
  return Partition(std::move(parts));
}

}  // namespace

std::vector<Hook> removable_hooks(const Partition& nu, int h) {
  if (h < 1) throw ValidationError("hook length must be positive");
  const int charge = nu.length();
  const auto beads = beta_set(nu, charge);
  const std::set<int> occupied(beads.begin(), beads.end());
  std::vector<Hook> hooks;
  for (std::size_t j = 0; j < beads.size(); ++j) {
    const int target = beads[j] - h;
    if (target < 0 || occupied.count(target)) continue;
    auto moved = beads;
    moved[j] = target;
    const Partition kappa = from_beta_set(std::move(moved));
    hooks.push_back(make_hook(diagram_difference(nu, kappa), HookKind::removable));
  }
  sort_by_foot(hooks);
  return hooks;
}

std::vector<Hook> addable_hooks(const Partition& nu, int h) {
  if (h < 1) throw ValidationError("hook length must be positive");
  const int charge = nu.length() + h;
  const auto beads = beta_set(nu, charge);
  const std::set<int> occupied(beads.begin(), beads.end());
  std::vector<Hook> hooks;
  for (std::size_t j = 0; j < beads.size(); ++j) {
    const int target = beads[j] + h;
    if (occupied.count(target)) continue;
    auto moved = beads;
    moved[j] = target;
    const Partition kappa = from_beta_set(std::move(moved));
    hooks.push_back(make_hook(diagram_difference(kappa, nu), HookKind::addable));
  }
  sort_by_foot(hooks);
  return hooks;
}

Partition remove_hook(const Partition& nu, const Hook& hook) {
  const auto all = diagram(nu);
  std::set<Node> nodes(all.begin(), all.end());
  for (const Node& n : hook.nodes) {
    if (!nodes.erase(n)) throw ValidationError("hook node is not in the diagram");
  }
  return from_node_set(nodes);
}

Partition add_hook(const Partition& nu, const Hook& hook) {
  const auto all = diagram(nu);
  std::set<Node> nodes(all.begin(), all.end());
  for (const Node& n : hook.nodes) {
    if (!nodes.insert(n).second) throw ValidationError("hook node is already in the diagram");
  }
  return from_node_set(nodes);
}

// ---------------------------------------------------------------------------

std::vector<Partition> enumerate_partitions(int n, int cap) {
  if (n < 0) throw ValidationError("cannot enumerate partitions of a negative integer");
  if (n > cap) {
    throw CapExceeded("partition enumeration capped at n <= " + std::to_string(cap));
  }
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> inner_partitions(const Partition& mu, int removed) {
  if (removed < 0) throw ValidationError("removed box count must be non-negative");
  std::vector<Partition> out;
  if (removed > mu.size()) return out;
  std::vector<int> current;
  // Row r of kappa lies in [max(0, mu_r - budget), min(mu_r, kappa_{r-1})].
  std::function<void(int, int, int)> rec = [&](int row, int budget, int cap) {
    if (row > mu.length()) {
      if (budget == 0) {
        std::vector<int> parts = current;
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        out.emplace_back(std::move(parts));
      }
      return;
    }
    const int hi = std::min(mu.part(row), cap);
    const int lo = std::max(0, mu.part(row) - budget);
    for (int v = hi; v >= lo; --v) {
      current.push_back(v);
      rec(row + 1, budget - (mu.part(row) - v), v);
      current.pop_back();
    }
  };
  rec(1, removed, mu.part(1));
  return out;
}

std::vector<Partition> outer_partitions(const Partition& lambda, int added) {
  if (added < 0) throw ValidationError("added box count must be non-negative");
  std::vector<Partition> out;
  std::vector<int> current;
  const int rows = lambda.length() + added;
  std::function<void(int, int, int)> rec = [&](int row, int budget, int cap) {
    if (row > rows || (budget == 0 && row > lambda.length())) {
      if (budget == 0) {
        std::vector<int> parts = current;
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        out.emplace_back(std::move(parts));
      }
      return;
    }
    const int lo = lambda.part(row);
    const int hi = std::min(cap, lo + budget);
    for (int v = hi; v >= lo; --v) {
      current.push_back(v);
      rec(row + 1, budget - (v - lo), v);
      current.pop_back();
    }
  };
  rec(1, added, lambda.part(1) + added);
  return out;
}

}  // namespace blockscope
