#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "blockscope/partition.hpp"

namespace blockscope {

/// [outer] \ [inner], with inner inside outer.
class SkewShape {
 public:
  SkewShape() = default;
  /// Throws ValidationError unless inner lies inside outer.
  SkewShape(Partition inner, Partition outer);

  const Partition& inner() const noexcept { return inner_; }
  const Partition& outer() const noexcept { return outer_; }
  int size() const noexcept { return outer_.size() - inner_.size(); }
  std::vector<Node> nodes() const { return diagram_difference(outer_, inner_); }

  /// "(4,1)\(2)"
  std::string to_string() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

 private:
  Partition inner_;
  Partition outer_;
};

/// Named after the argument order (inner first).
SkewShape make_skew(const Partition& lambda, const Partition& mu);

ResidueMultiset skew_content(const SkewShape& s, int p);

/// One connected component of a skew diagram without 2x2 blocks: a ribbon read
/// from its foot.  steps[k] is 'R' when the next box sits to the right and
/// 'U' when it sits above.
struct RibbonComponent {
  int start = 0;
  std::string steps;

  int length() const noexcept { return static_cast<int>(steps.size()) + 1; }

  friend bool operator==(const RibbonComponent&, const RibbonComponent&) = default;
  friend auto operator<=>(const RibbonComponent&, const RibbonComponent&) = default;
};

/// Multiset of residue-labelled ribbon components, sorted by (start, steps).
class PShape {
 public:
  PShape() = default;
  /// Sorts the components.  Throws ValidationError on a bad step letter or
  /// a start outside [0, p).
  PShape(int p, std::vector<RibbonComponent> components);

  int modulus() const noexcept { return p_; }
  const std::vector<RibbonComponent>& components() const noexcept { return components_; }
  int size() const noexcept;
  ResidueMultiset content() const;

  /// "{4:UR}" style, components separated by spaces; "{}" when empty.
  std::string to_string() const;

  friend bool operator==(const PShape&, const PShape&) = default;
  friend auto operator<=>(const PShape&, const PShape&) = default;

 private:
  int p_ = 2;
  std::vector<RibbonComponent> components_;
};

/// Throws ScopeError when a component of the diagram contains a 2x2 block.
PShape p_shape(const SkewShape& s, int p);

enum class Edge : std::uint8_t { none, forward, backward };

/// Directed graph on a subset C of Z/pZ.  edge(i) describes the pair
/// (i, i+1): forward is i -> i+1, backward is i+1 -> i.  Circular graphs
/// (C = Z/pZ) are never directed cycles.
class ArrowGraph {
 public:
  static constexpr int kMaxModulus = 63;

  ArrowGraph() = default;
  /// Throws ValidationError for an edge whose endpoints are not both
  /// vertices, or for a directed cycle.
  ArrowGraph(int p, std::uint64_t vertices, std::vector<Edge> edges);
  /// Arrowless graph on the given vertices.
  ArrowGraph(int p, std::uint64_t vertices);

  int modulus() const noexcept { return p_; }
  std::uint64_t vertex_mask() const noexcept { return vertices_; }
  std::vector<int> vertices() const;
  int vertex_count() const noexcept;
  bool has_vertex(int v) const noexcept { return (vertices_ >> mod(v, p_)) & 1U; }
  Edge edge(int i) const noexcept { return edges_[static_cast<std::size_t>(mod(i, p_))]; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Both endpoints of edge i are vertices.
  bool slot(int i) const noexcept { return has_vertex(i) && has_vertex(i + 1); }
  bool circular() const noexcept;
  /// Every slot carries an arrow.
  bool maximal() const noexcept;
  bool is_belt() const noexcept { return circular() && maximal(); }

  /// Every arrow is forward.
  bool clockwise() const noexcept;

  /// Same graph with edge i replaced.  May throw like the constructor.
  ArrowGraph with_edge(int i, Edge e) const;

  friend bool operator==(const ArrowGraph&, const ArrowGraph&) = default;
  friend auto operator<=>(const ArrowGraph&, const ArrowGraph&) = default;

 private:
  int p_ = 2;
  std::uint64_t vertices_ = 0;
  std::vector<Edge> edges_ = std::vector<Edge>(2, Edge::none);
};

std::uint64_t full_mask(int p);
std::uint64_t mask_of(const ResidueMultiset& content);

/// True when every one of the p edges is present with a single orientation.
bool is_directed_cycle(int p, const std::vector<Edge>& edges);

/// Throws ScopeError when components share a residue.
ArrowGraph arrow_graph(const PShape& x);
/// Throws PreconditionError for a belt, which corresponds to no shape.
PShape shape_from_arrow_graph(const ArrowGraph& g);

inline constexpr int kDefaultTableauCap = 12;

/// One residue sequence per standard tableau, sorted lexicographically.
/// Throws CapExceeded when the shape has more than `cap` boxes.
std::vector<std::vector<int>> standard_tableaux_sequences(const SkewShape& s, int p,
                                                          int cap = kDefaultTableauCap);

inline constexpr int kDefaultBeltCap = 20;

/// All 2^p - 2 belts, ordered by the bitmask with bit i set when edge i is
/// forward.
std::vector<ArrowGraph> enumerate_belts(int p, int cap = kDefaultBeltCap);

}  // namespace blockscope
