#pragma once

#include <map>
#include <string>
#include <vector>

#include "blockscope/skew.hpp"

namespace blockscope {

/// Multiset of residue sequences.  Terms iterate in lexicographic order.
class FormalCharacter {
 public:
  using Sequence = std::vector<int>;

  explicit FormalCharacter(int p) : p_(p) {}

  int modulus() const noexcept { return p_; }
  const std::map<Sequence, int>& terms() const noexcept { return terms_; }

  void add(const Sequence& seq, int mult = 1);
  int multiplicity(const Sequence& seq) const;
  /// Number of distinct terms.
  std::size_t distinct() const noexcept { return terms_.size(); }
  /// Sum of multiplicities.
  long long total() const noexcept;

  bool shares_term_with(const FormalCharacter& other) const;

  /// "(2,0,2) + 2(2,2,0)"
  std::string to_string() const;

  FormalCharacter& operator+=(const FormalCharacter& other);
  friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;

 private:
  int p_;
  std::map<Sequence, int> terms_;
};

inline constexpr int kDefaultCharacterCap = 10;

/// Linear extensions of g: orderings of its vertices with i before j for every
/// arrow i -> j.  Lexicographic.  Throws CapExceeded above `cap` vertices.
std::vector<std::vector<int>> linear_extensions(const ArrowGraph& g,
                                                int cap = kDefaultCharacterCap);
long long count_linear_extensions(const ArrowGraph& g, int cap = 20);

FormalCharacter character_of(const ArrowGraph& g, int cap = kDefaultCharacterCap);
FormalCharacter character_of(const PShape& x, int cap = kDefaultCharacterCap);
/// Character read from standard tableaux, one term per tableau.
FormalCharacter tableau_character(const SkewShape& s, int p, int cap = kDefaultTableauCap);

/// Edges where both graphs carry arrows of opposite orientation.  Throws
/// ValidationError when the moduli or vertex sets differ.
std::vector<int> distance_set(const ArrowGraph& x, const ArrowGraph& y);
std::vector<int> distance_set(const PShape& x, const PShape& y);
int distance(const ArrowGraph& x, const ArrowGraph& y);
int distance(const PShape& x, const PShape& y);

/// Maximal graphs extending g.  For a circular g these are the belts that
/// extend it; otherwise every empty slot is filled both ways.
std::vector<ArrowGraph> refinements(const ArrowGraph& g);
std::vector<ArrowGraph> refinements(const PShape& x);

/// character(x) equals the sum over refinements.
bool character_sum_check(const PShape& x, int cap = kDefaultCharacterCap);

bool shares_term(const PShape& x, const PShape& y, int cap = kDefaultCharacterCap);

/// Requires d(x, y) = 0.  The overlay of the two graphs covers every edge
/// with one orientation.
bool union_is_directed_cycle(const ArrowGraph& x, const ArrowGraph& y);

/// d(x, y) = 0, and for circular graphs the overlay is not a directed cycle.
bool linkage_test(const ArrowGraph& x, const ArrowGraph& y);
bool linkage_test(const PShape& x, const PShape& y);

/// Every ordering of the vertex set is a term of exactly one maximal graph on
/// it (a belt when the set is all of Z/pZ).
bool unique_cover_check(int p, std::uint64_t vertices, int cap = kDefaultCharacterCap);

}  // namespace blockscope
