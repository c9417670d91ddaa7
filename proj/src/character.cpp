#include "blockscope/character.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "blockscope/error.hpp"

namespace blockscope {

void FormalCharacter::add(const Sequence& seq, int mult) {
  if (mult <= 0) throw ValidationError("multiplicity must be positive");
  for (int r : seq) {
    if (r < 0 || r >= p_) throw ValidationError("sequence entry outside [0, p)");
  }
  terms_[seq] += mult;
}

int FormalCharacter::multiplicity(const Sequence& seq) const {
  const auto it = terms_.find(seq);
  return it == terms_.end() ? 0 : it->second;
}

long long FormalCharacter::total() const noexcept {
  long long t = 0;
  for (const auto& [seq, mult] : terms_) t += mult;
  return t;
}

bool FormalCharacter::shares_term_with(const FormalCharacter& other) const {
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    if (a->first == b->first) return true;
    if (a->first < b->first) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

std::string FormalCharacter::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [seq, mult] : terms_) {
    if (!first) out << " + ";
    first = false;
    if (mult != 1) out << mult;
    out << '(';
    for (std::size_t k = 0; k < seq.size(); ++k) out << (k ? "," : "") << seq[k];
    out << ')';
  }
  return out.str();
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& other) {
  if (other.p_ != p_) throw ValidationError("modulus mismatch");
  for (const auto& [seq, mult] : other.terms_) terms_[seq] += mult;
  return *this;
}

// ---------------------------------------------------------------------------

namespace {

// preds[v] = vertices that must precede v.
std::vector<std::uint64_t> predecessor_masks(const ArrowGraph& g) {
  const int p = g.modulus();
  std::vector<std::uint64_t> preds(static_cast<std::size_t>(p), 0);
  for (int i = 0; i < p; ++i) {
    const int j = mod(i + 1, p);
    if (g.edge(i) == Edge::forward) preds[j] |= 1ULL << i;
    if (g.edge(i) == Edge::backward) preds[i] |= 1ULL << j;
  }
  return preds;
}

void check_cap(const ArrowGraph& g, int cap) {
  if (g.vertex_count() > cap) {
    throw CapExceeded("linear extension enumeration capped at " + std::to_string(cap) +
                      " vertices");
  }
}

}  // namespace

std::vector<std::vector<int>> linear_extensions(const ArrowGraph& g, int cap) {
  check_cap(g, cap);
  const auto preds = predecessor_masks(g);
  const auto verts = g.vertices();
  std::vector<std::vector<int>> out;
  std::vector<int> seq;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t placed) {
    if (seq.size() == verts.size()) {
      out.push_back(seq);
      return;
    }
    for (int v : verts) {
      const std::uint64_t bit = 1ULL << v;
      if ((placed & bit) || (preds[v] & ~placed)) continue;
      seq.push_back(v);
      rec(placed | bit);
      seq.pop_back();
    }
  };
  rec(0);
  return out;
}

long long count_linear_extensions(const ArrowGraph& g, int cap) {
  check_cap(g, cap);
  const auto preds = predecessor_masks(g);
  const auto verts = g.vertices();
  // Subset DP over placed vertices, indexed by position in `verts`.
  const int k = static_cast<int>(verts.size());
  std::vector<long long> ways(std::size_t{1} << k, 0);
  ways[0] = 1;
  for (std::size_t s = 0; s < ways.size(); ++s) {
    if (!ways[s]) continue;
    std::uint64_t placed = 0;
    for (int a = 0; a < k; ++a) {
      if (s >> a & 1U) placed |= 1ULL << verts[a];
    }
    for (int a = 0; a < k; ++a) {
      if ((s >> a & 1U) || (preds[verts[a]] & ~placed)) continue;
      ways[s | (std::size_t{1} << a)] += ways[s];
    }
  }
  return ways.back();
}

FormalCharacter character_of(const ArrowGraph& g, int cap) {
  FormalCharacter ch(g.modulus());
  for (const auto& seq : linear_extensions(g, cap)) ch.add(seq);
  return ch;
}

FormalCharacter character_of(const PShape& x, int cap) {
  return character_of(arrow_graph(x), cap);
}

FormalCharacter tableau_character(const SkewShape& s, int p, int cap) {
  FormalCharacter ch(p);
  for (const auto& seq : standard_tableaux_sequences(s, p, cap)) ch.add(seq);
  return ch;
}

// ---------------------------------------------------------------------------

std::vector<int> distance_set(const ArrowGraph& x, const ArrowGraph& y) {
  if (x.modulus() != y.modulus() || x.vertex_mask() != y.vertex_mask()) {
    throw ValidationError("distance needs shapes with the same content");
  }
  std::vector<int> out;
  for (int i = 0; i < x.modulus(); ++i) {
    const Edge a = x.edge(i);
    const Edge b = y.edge(i);
    if (a != Edge::none && b != Edge::none && a != b) out.push_back(i);
  }
  return out;
}

std::vector<int> distance_set(const PShape& x, const PShape& y) {
  return distance_set(arrow_graph(x), arrow_graph(y));
}

int distance(const ArrowGraph& x, const ArrowGraph& y) {
  return static_cast<int>(distance_set(x, y).size());
}

int distance(const PShape& x, const PShape& y) { return distance(arrow_graph(x), arrow_graph(y)); }

std::vector<ArrowGraph> refinements(const ArrowGraph& g) {
  const int p = g.modulus();
  std::vector<int> empty;
  for (int i = 0; i < p; ++i) {
    if (g.slot(i) && g.edge(i) == Edge::none) empty.push_back(i);
  }
  if (empty.size() > 40) throw CapExceeded("too many empty edge slots to refine");
  std::vector<ArrowGraph> out;
  const std::uint64_t fills = 1ULL << empty.size();
  for (std::uint64_t bits = 0; bits < fills; ++bits) {
    auto edges = g.edges();
    for (std::size_t k = 0; k < empty.size(); ++k) {
      edges[empty[k]] = (bits >> k) & 1U ? Edge::backward : Edge::forward;
    }
    if (is_directed_cycle(p, edges)) continue;
    out.emplace_back(p, g.vertex_mask(), std::move(edges));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ArrowGraph> refinements(const PShape& x) { return refinements(arrow_graph(x)); }

bool character_sum_check(const PShape& x, int cap) {
  const ArrowGraph g = arrow_graph(x);
  FormalCharacter sum(x.modulus());
  for (const auto& r : refinements(g)) sum += character_of(r, cap);
  return character_of(g, cap) == sum;
}

bool shares_term(const PShape& x, const PShape& y, int cap) {
  return character_of(x, cap).shares_term_with(character_of(y, cap));
}

bool union_is_directed_cycle(const ArrowGraph& x, const ArrowGraph& y) {
  if (!x.circular() || !y.circular()) return false;
  std::vector<Edge> overlay(static_cast<std::size_t>(x.modulus()));
  for (int i = 0; i < x.modulus(); ++i) {
    overlay[i] = x.edge(i) != Edge::none ? x.edge(i) : y.edge(i);
  }
  return is_directed_cycle(x.modulus(), overlay);
}

bool linkage_test(const ArrowGraph& x, const ArrowGraph& y) {
  if (distance(x, y) != 0) return false;
  return !(x.circular() && union_is_directed_cycle(x, y));
}

bool linkage_test(const PShape& x, const PShape& y) {
  return linkage_test(arrow_graph(x), arrow_graph(y));
}

bool unique_cover_check(int p, std::uint64_t vertices, int cap) {
  const ArrowGraph empty(p, vertices);
  check_cap(empty, cap);
  std::map<std::vector<int>, int> hits;
  for (const auto& g : refinements(empty)) {
    for (const auto& seq : linear_extensions(g, cap)) ++hits[seq];
  }
  // Every ordering of the vertices must be hit exactly once.
  std::vector<int> perm = empty.vertices();
  long long orderings = 0;
  do {
    ++orderings;
    const auto it = hits.find(perm);
    if (it == hits.end() || it->second != 1) return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return orderings == static_cast<long long>(hits.size());
}

}  // namespace blockscope
