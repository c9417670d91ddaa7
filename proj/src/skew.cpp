#include "blockscope/skew.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "blockscope/error.hpp"

namespace blockscope {

SkewShape::SkewShape(Partition inner, Partition outer)
    : inner_(std::move(inner)), outer_(std::move(outer)) {
  if (!inner_.inside(outer_)) {
    throw ValidationError(inner_.to_string() + " does not lie inside " + outer_.to_string());
  }
}

std::string SkewShape::to_string() const {
  return outer_.to_string() + "\\" + inner_.to_string();
}

SkewShape make_skew(const Partition& lambda, const Partition& mu) { return SkewShape(lambda, mu); }

ResidueMultiset skew_content(const SkewShape& s, int p) {
  const auto nodes = s.nodes();
  return residues_of(nodes, p);
}

// ---------------------------------------------------------------------------

PShape::PShape(int p, std::vector<RibbonComponent> components)
    : p_(p), components_(std::move(components)) {
  if (p < 2) throw ValidationError("modulus must be at least 2");
  for (const auto& c : components_) {
    if (c.start < 0 || c.start >= p) {
      throw ValidationError("component start " + std::to_string(c.start) + " is not in [0, p)");
    }
    if (c.steps.find_first_not_of("RU") != std::string::npos) {
      throw ValidationError("step word '" + c.steps + "' may only use R and U");
    }
  }
  std::sort(components_.begin(), components_.end());
}

int PShape::size() const noexcept {
  int n = 0;
  for (const auto& c : components_) n += c.length();
  return n;
}

ResidueMultiset PShape::content() const {
  ResidueMultiset out(p_);
  for (const auto& c : components_) {
    for (int k = 0; k < c.length(); ++k) out.add(c.start + k);
  }
  return out;
}

std::string PShape::to_string() const {
  if (components_.empty()) return "{}";
  std::ostringstream out;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (k) out << ' ';
    out << '{' << components_[k].start << ':' << components_[k].steps << '}';
  }
  return out.str();
}

PShape p_shape(const SkewShape& s, int p) {
  if (p < 2) throw ValidationError("modulus must be at least 2");
  const auto nodes = s.nodes();
  const std::set<Node> cells(nodes.begin(), nodes.end());
  std::set<Node> seen;
  std::vector<RibbonComponent> components;
  for (const Node& root : nodes) {
    if (seen.count(root)) continue;
    std::vector<Node> comp;
    std::vector<Node> stack{root};
    seen.insert(root);
    while (!stack.empty()) {
      const Node n = stack.back();
      stack.pop_back();
      comp.push_back(n);
      for (const Node nb : {Node{n.row - 1, n.col}, Node{n.row + 1, n.col},
                            Node{n.row, n.col - 1}, Node{n.row, n.col + 1}}) {
        if (cells.count(nb) && seen.insert(nb).second) stack.push_back(nb);
      }
    }
    for (const Node& n : comp) {
      if (cells.count({n.row, n.col + 1}) && cells.count({n.row + 1, n.col}) &&
          cells.count({n.row + 1, n.col + 1})) {
        throw ScopeError("skew diagram " + s.to_string() +
                         " has a component that is not a ribbon");
      }
    }
    // A connected diagram with no 2x2 block has one node per content.
    std::sort(comp.begin(), comp.end(),
              [](const Node& a, const Node& b) { return a.content() < b.content(); });
    RibbonComponent rc;
    rc.start = comp.front().residue(p);
    for (std::size_t k = 1; k < comp.size(); ++k) {
      rc.steps += comp[k].row == comp[k - 1].row ? 'R' : 'U';
    }
    components.push_back(std::move(rc));
  }
  return PShape(p, std::move(components));
}

// ---------------------------------------------------------------------------

std::uint64_t full_mask(int p) { return p >= 64 ? ~0ULL : (1ULL << p) - 1; }

std::uint64_t mask_of(const ResidueMultiset& content) {
  std::uint64_t mask = 0;
  for (int r = 0; r < content.modulus(); ++r) {
    if (content.count(r) > 0) mask |= 1ULL << r;
  }
  return mask;
}

bool is_directed_cycle(int p, const std::vector<Edge>& edges) {
  if (static_cast<int>(edges.size()) != p) return false;
  return std::all_of(edges.begin(), edges.end(), [](Edge e) { return e == Edge::forward; }) ||
         std::all_of(edges.begin(), edges.end(), [](Edge e) { return e == Edge::backward; });
}

ArrowGraph::ArrowGraph(int p, std::uint64_t vertices, std::vector<Edge> edges)
    : p_(p), vertices_(vertices), edges_(std::move(edges)) {
  if (p < 2 || p > kMaxModulus) {
    throw ValidationError("arrow graph modulus must lie in [2, " +
                          std::to_string(kMaxModulus) + "]");
  }
  if (vertices_ & ~full_mask(p)) throw ValidationError("vertex outside Z/pZ");
  if (static_cast<int>(edges_.size()) != p) {
    throw ValidationError("arrow graph needs one edge slot per residue");
  }
  for (int i = 0; i < p; ++i) {
    if (edges_[i] != Edge::none && !slot(i)) {
      throw ValidationError("edge " + std::to_string(i) + " joins a non-vertex");
    }
  }
  if (is_directed_cycle(p, edges_)) throw ValidationError("arrow graph is a directed cycle");
}

ArrowGraph::ArrowGraph(int p, std::uint64_t vertices)
    : ArrowGraph(p, vertices, std::vector<Edge>(static_cast<std::size_t>(std::max(p, 0)),
                                                Edge::none)) {}

std::vector<int> ArrowGraph::vertices() const {
  std::vector<int> out;
  for (int v = 0; v < p_; ++v) {
    if (has_vertex(v)) out.push_back(v);
  }
  return out;
}

int ArrowGraph::vertex_count() const noexcept { return std::popcount(vertices_); }

bool ArrowGraph::circular() const noexcept { return vertices_ == full_mask(p_); }

bool ArrowGraph::maximal() const noexcept {
  for (int i = 0; i < p_; ++i) {
    if (slot(i) && edges_[i] == Edge::none) return false;
  }
  return true;
}

bool ArrowGraph::clockwise() const noexcept {
  return std::none_of(edges_.begin(), edges_.end(), [](Edge e) { return e == Edge::backward; });
}

ArrowGraph ArrowGraph::with_edge(int i, Edge e) const {
  auto edges = edges_;
  edges[static_cast<std::size_t>(mod(i, p_))] = e;
  return ArrowGraph(p_, vertices_, std::move(edges));
}

ArrowGraph arrow_graph(const PShape& x) {
  const int p = x.modulus();
  if (!x.content().repetition_free()) {
    throw ScopeError("shape " + x.to_string() + " repeats a residue");
  }
  std::uint64_t vertices = 0;
  std::vector<Edge> edges(static_cast<std::size_t>(p), Edge::none);
  for (const auto& c : x.components()) {
    for (int k = 0; k < c.length(); ++k) vertices |= 1ULL << mod(c.start + k, p);
    for (int k = 0; k + 1 < c.length(); ++k) {
      edges[mod(c.start + k, p)] = c.steps[k] == 'R' ? Edge::forward : Edge::backward;
    }
  }
  return ArrowGraph(p, vertices, std::move(edges));
}

PShape shape_from_arrow_graph(const ArrowGraph& g) {
  if (g.is_belt()) throw PreconditionError("no shape corresponds to a belt");
  const int p = g.modulus();
  std::vector<RibbonComponent> components;
  for (int v : g.vertices()) {
    if (g.edge(v - 1) != Edge::none) continue;  // not a foot
    RibbonComponent rc;
    rc.start = v;
    for (int i = v; g.edge(i) != Edge::none; ++i) {
      rc.steps += g.edge(i) == Edge::forward ? 'R' : 'U';
    }
    components.push_back(std::move(rc));
  }
  return PShape(p, std::move(components));
}

// ---------------------------------------------------------------------------

std::vector<std::vector<int>> standard_tableaux_sequences(const SkewShape& s, int p, int cap) {
  if (p < 2) throw ValidationError("modulus must be at least 2");
  const int n = s.size();
  if (n > cap) {
    throw CapExceeded("tableau enumeration capped at " + std::to_string(cap) + " boxes");
  }
  const Partition& mu = s.outer();
  // filled[r] is the current row length of inner + placed boxes.
  std::vector<int> filled(static_cast<std::size_t>(mu.length() + 1), 0);
  for (int r = 1; r <= mu.length(); ++r) filled[r] = s.inner().part(r);

  std::vector<std::vector<int>> out;
  std::vector<int> seq;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(seq.size()) == n) {
      out.push_back(seq);
      return;
    }
    for (int r = 1; r <= mu.length(); ++r) {
      const int c = filled[r] + 1;
      if (c > mu.part(r)) continue;
      if (r > 1 && filled[r - 1] < c) continue;
      ++filled[r];
      seq.push_back(mod(c - r, p));
      rec();
      seq.pop_back();
      --filled[r];
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ArrowGraph> enumerate_belts(int p, int cap) {
  if (p < 2) throw ValidationError("modulus must be at least 2");
  if (p > cap || p > ArrowGraph::kMaxModulus) {
    throw CapExceeded("belt enumeration capped at p <= " + std::to_string(cap));
  }
  std::vector<ArrowGraph> out;
  const std::uint64_t last = full_mask(p);
  for (std::uint64_t bits = 1; bits < last; ++bits) {
    std::vector<Edge> edges(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) edges[i] = (bits >> i) & 1U ? Edge::forward : Edge::backward;
    out.emplace_back(p, full_mask(p), std::move(edges));
  }
  return out;
}

}  // namespace blockscope
