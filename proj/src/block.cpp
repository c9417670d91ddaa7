#include "blockscope/block.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "blockscope/abacus.hpp"
#include "blockscope/error.hpp"
#include "blockscope/serialize.hpp"

namespace blockscope {

std::string to_string(BlockClass c) {
  switch (c) {
    case BlockClass::ribbon:
      return "ribbon";
    case BlockClass::belt:
      return "belt";
    case BlockClass::other:
      break;
  }
  return "other";
}

BlockClass classify(const ResidueMultiset& content) {
  const int n = content.total();
  const int p = content.modulus();
  if (n < p && content.repetition_free()) return BlockClass::ribbon;
  if (n == p && content.is_full_set()) return BlockClass::belt;
  return BlockClass::other;
}

int CombinatorialBlock::shape_index(const PShape& x) const {
  const auto it = std::lower_bound(shapes.begin(), shapes.end(), x);
  return it != shapes.end() && *it == x ? static_cast<int>(it - shapes.begin()) : -1;
}

namespace {

void check_sizes(int p, int l, int m, int cap) {
  if (p < 2) throw ValidationError("p must be at least 2");
  if (l < 0 || m < l) throw ValidationError("need 0 <= l <= m");
  if (m > cap) {
    throw CapExceeded("block enumeration capped at m <= " + std::to_string(cap));
  }
}

CombinatorialBlock assemble(int p, int l, int m, Partition inner_core, Partition outer_core,
                            std::vector<SkewShape> members) {
  CombinatorialBlock b;
  b.p = p;
  b.l = l;
  b.m = m;
  b.inner_core = std::move(inner_core);
  b.outer_core = std::move(outer_core);
  std::sort(members.begin(), members.end());
  b.members = std::move(members);
  b.content = skew_content(b.members.front(), p);
  b.kind = classify(b.content);
  if (!b.in_scope()) {
    b.member_shape.assign(b.members.size(), -1);
    return b;
  }
  std::vector<PShape> per_member;
  per_member.reserve(b.members.size());
  for (const auto& s : b.members) per_member.push_back(p_shape(s, p));
  b.shapes = per_member;
  std::sort(b.shapes.begin(), b.shapes.end());
  b.shapes.erase(std::unique(b.shapes.begin(), b.shapes.end()), b.shapes.end());
  for (const auto& x : per_member) b.member_shape.push_back(b.shape_index(x));
  return b;
}

}  // namespace

CombinatorialBlock enumerate_block(int p, int l, int m, const Partition& inner_core,
                                   const Partition& outer_core, int cap) {
  check_sizes(p, l, m, cap);
  for (const Partition* core : {&inner_core, &outer_core}) {
    if (!is_core(*core, p)) {
      throw PreconditionError(core->to_string() + " is not a " + std::to_string(p) + "-core");
    }
  }
  const auto empty_block = [&] {
    return PreconditionError("empty combinatorial block for l=" + std::to_string(l) +
                             ", m=" + std::to_string(m) + ", cores " + inner_core.to_string() +
                             " and " + outer_core.to_string());
  };
  const int dl = l - inner_core.size();
  const int dm = m - outer_core.size();
  if (dl < 0 || dm < 0 || dl % p || dm % p) throw empty_block();

  std::vector<SkewShape> members;
  for (const auto& mu : enumerate_block_partitions(outer_core, p, dm / p)) {
    for (const auto& lambda : inner_partitions(mu, m - l)) {
      if (p_core(lambda, p) == inner_core) members.emplace_back(lambda, mu);
    }
  }
  if (members.empty()) throw empty_block();
  return assemble(p, l, m, inner_core, outer_core, std::move(members));
}

std::vector<CombinatorialBlock> enumerate_blocks(int p, int l, int m, int cap) {
  check_sizes(p, l, m, cap);
  std::map<std::pair<Partition, Partition>, std::vector<SkewShape>> groups;
  std::map<Partition, Partition> core_cache;
  const auto core_of = [&](const Partition& nu) -> const Partition& {
    auto it = core_cache.find(nu);
    if (it == core_cache.end()) it = core_cache.emplace(nu, p_core(nu, p)).first;
    return it->second;
  };
  for (const auto& mu : enumerate_partitions(m, cap)) {
    const Partition gamma = core_of(mu);
    for (const auto& lambda : inner_partitions(mu, m - l)) {
      groups[{core_of(lambda), gamma}].emplace_back(lambda, mu);
    }
  }
  std::vector<CombinatorialBlock> out;
  for (auto& [cores, members] : groups) {
    out.push_back(assemble(p, l, m, cores.first, cores.second, std::move(members)));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string graph_label(const ArrowGraph& g) {
  if (!g.is_belt()) return shape_from_arrow_graph(g).to_string();
  std::string label = "belt:";
  for (Edge e : g.edges()) label += e == Edge::forward ? 'F' : 'B';
  return label;
}

std::string DecompositionMatrix::column_label(int c) const { return graph_label(columns[c]); }

DecompositionMatrix decomposition_matrix(const CombinatorialBlock& b, bool keep_empty_columns) {
  if (!b.in_scope()) {
    throw ScopeError("decomposition matrix needs a ribbon or belt block");
  }
  DecompositionMatrix d;
  d.p = b.p;
  d.kind = b.kind;
  d.rows = b.shapes;
  std::vector<std::vector<ArrowGraph>> refs;
  std::set<ArrowGraph> cols;
  for (const auto& x : b.shapes) {
    refs.push_back(refinements(x));
    cols.insert(refs.back().begin(), refs.back().end());
  }
  if (b.kind == BlockClass::belt && keep_empty_columns) {
    for (const auto& belt : enumerate_belts(b.p)) cols.insert(belt);
  }
  d.columns.assign(cols.begin(), cols.end());
  d.entries = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(d.rows.size()),
                                    static_cast<Eigen::Index>(d.columns.size()));
  for (std::size_t r = 0; r < refs.size(); ++r) {
    for (const auto& g : refs[r]) {
      const auto c = std::lower_bound(d.columns.begin(), d.columns.end(), g) - d.columns.begin();
      d.entries(static_cast<Eigen::Index>(r), c) = 1;
    }
  }
  return d;
}

bool is_connected(const Eigen::MatrixXi& d) {
  const Eigen::Index rows = d.rows();
  const Eigen::Index cols = d.cols();
  if (rows == 0 || cols == 0) throw PreconditionError("connectivity of an empty matrix");
  // Vertices 0..rows-1 are rows, rows..rows+cols-1 are columns.
  std::vector<bool> seen(static_cast<std::size_t>(rows + cols), false);
  std::deque<Eigen::Index> queue{0};
  seen[0] = true;
  Eigen::Index reached = 1;
  while (!queue.empty()) {
    const Eigen::Index v = queue.front();
    queue.pop_front();
    const auto visit = [&](Eigen::Index w) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push_back(w);
      }
    };
    if (v < rows) {
      for (Eigen::Index c = 0; c < cols; ++c) {
        if (d(v, c) != 0) visit(rows + c);
      }
    } else {
      for (Eigen::Index r = 0; r < rows; ++r) {
        if (d(r, v - rows) != 0) visit(r);
      }
    }
  }
  return reached == rows + cols;
}

bool is_connected(const DecompositionMatrix& d) { return is_connected(d.entries); }

// ---------------------------------------------------------------------------

namespace {

void require_shape(const PShape& x, const CombinatorialBlock& b) {
  if (!b.in_scope()) throw ScopeError("block is neither ribbon nor belt");
  if (b.shape_index(x) < 0) {
    throw PreconditionError("shape " + x.to_string() + " does not occur in the block");
  }
}

[[noreturn]] void counterexample(const std::string& what, const Json& report) {
  throw TheoremCounterexample(what, report.dump(2));
}

}  // namespace

PShape find_closer_shape(const PShape& x, const PShape& y, const CombinatorialBlock& b) {
  require_shape(x, b);
  require_shape(y, b);
  const ArrowGraph gx = arrow_graph(x);
  const ArrowGraph gy = arrow_graph(y);
  const int d = distance(gx, gy);
  if (d == 0) throw PreconditionError("find_closer_shape needs d(x, y) > 0");
  for (const auto& z : b.shapes) {
    const ArrowGraph gz = arrow_graph(z);
    if (distance(gx, gz) < d && distance(gy, gz) < d) return z;
  }
  Json report;
  report["p"] = b.p;
  report["l"] = b.l;
  report["m"] = b.m;
  report["inner_core"] = to_json(b.inner_core);
  report["outer_core"] = to_json(b.outer_core);
  report["x"] = to_json(x);
  report["y"] = to_json(y);
  report["distance"] = d;
  report["shapes_searched"] = b.shapes.size();
  counterexample("no intermediate shape between " + x.to_string() + " and " + y.to_string(),
                 report);
}

SkewShape find_closer_member(const SkewShape& x, const SkewShape& y, int p) {
  const int l = x.inner().size();
  const int n = x.size();
  if (y.inner().size() != l || y.size() != n) {
    throw PreconditionError("members have different sizes");
  }
  const Partition inner_core = p_core(x.inner(), p);
  const Partition outer_core = p_core(x.outer(), p);
  if (p_core(y.inner(), p) != inner_core || p_core(y.outer(), p) != outer_core) {
    throw PreconditionError(x.to_string() + " and " + y.to_string() +
                            " lie in different blocks");
  }
  if (classify(skew_content(x, p)) == BlockClass::other) {
    throw ScopeError(x.to_string() + " lies in neither a ribbon nor a belt block");
  }
  const ArrowGraph gx = arrow_graph(p_shape(x, p));
  const ArrowGraph gy = arrow_graph(p_shape(y, p));
  const int d = distance(gx, gy);
  if (d == 0) throw PreconditionError("find_closer_member needs d(x, y) > 0");

  long long searched = 0;
  const auto accept = [&](const SkewShape& z) {
    ++searched;
    const ArrowGraph gz = arrow_graph(p_shape(z, p));
    return distance(gx, gz) < d && distance(gy, gz) < d;
  };
  for (const Partition* lambda : {&x.inner(), &y.inner()}) {
    for (const auto& mu : outer_partitions(*lambda, n)) {
      if (p_core(mu, p) != outer_core) continue;
      SkewShape z(*lambda, mu);
      if (accept(z)) return z;
    }
  }
  for (const Partition* mu : {&x.outer(), &y.outer()}) {
    for (const auto& lambda : inner_partitions(*mu, n)) {
      if (p_core(lambda, p) != inner_core) continue;
      SkewShape z(lambda, *mu);
      if (accept(z)) return z;
    }
  }
  Json report;
  report["p"] = p;
  report["x"] = to_json(x);
  report["y"] = to_json(y);
  report["distance"] = d;
  report["candidates_searched"] = searched;
  counterexample("local search found no intermediate member between " + x.to_string() +
                     " and " + y.to_string(),
                 report);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<int>> linkage_adjacency(const CombinatorialBlock& b) {
  if (!b.in_scope()) throw ScopeError("block is neither ribbon nor belt");
  std::vector<ArrowGraph> graphs;
  for (const auto& x : b.shapes) graphs.push_back(arrow_graph(x));
  const int k = static_cast<int>(graphs.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (linkage_test(graphs[i], graphs[j])) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  return adj;
}

// Distances from `source`, -1 when unreachable; parents for path recovery.
std::vector<int> bfs(const std::vector<std::vector<int>>& adj, int source,
                     std::vector<int>* parent = nullptr) {
  std::vector<int> dist(adj.size(), -1);
  if (parent) parent->assign(adj.size(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : adj[v]) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[v] + 1;
      if (parent) (*parent)[w] = v;
      queue.push_back(w);
    }
  }
  return dist;
}

}  // namespace

std::vector<int> linkage_components(const CombinatorialBlock& b) {
  const auto adj = linkage_adjacency(b);
  std::vector<int> label(adj.size(), -1);
  int next = 0;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (label[s] >= 0) continue;
    const auto dist = bfs(adj, static_cast<int>(s));
    for (std::size_t v = 0; v < adj.size(); ++v) {
      if (dist[v] >= 0) label[v] = next;
    }
    ++next;
  }
  return label;
}

std::vector<PShape> linkage_path(const PShape& x, const PShape& y, const CombinatorialBlock& b) {
  require_shape(x, b);
  require_shape(y, b);
  const auto adj = linkage_adjacency(b);
  const int from = b.shape_index(x);
  const int to = b.shape_index(y);
  std::vector<int> parent;
  const auto dist = bfs(adj, from, &parent);
  if (dist[to] < 0) {
    Json report;
    report["p"] = b.p;
    report["l"] = b.l;
    report["m"] = b.m;
    report["inner_core"] = to_json(b.inner_core);
    report["outer_core"] = to_json(b.outer_core);
    report["x"] = to_json(x);
    report["y"] = to_json(y);
    counterexample(x.to_string() + " and " + y.to_string() + " are not linked", report);
  }
  std::vector<PShape> path;
  for (int v = to; v >= 0; v = parent[v]) path.push_back(b.shapes[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

int linkage_diameter(const CombinatorialBlock& b) {
  const auto adj = linkage_adjacency(b);
  int diameter = 0;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    for (int d : bfs(adj, static_cast<int>(s))) {
      if (d < 0) return -1;
      diameter = std::max(diameter, d);
    }
  }
  return diameter;
}

PShape belt_row_shape(int i, int p) {
  return PShape(p, {RibbonComponent{mod(i + 1, p), std::string(static_cast<std::size_t>(p - 1), 'R')}});
}

Partition mu_lambda(const Partition& lambda, int p) {
  if (lambda.empty()) return Partition({p});
  auto parts = lambda.parts();
  parts[0] += p;
  return Partition(std::move(parts));
}

bool clockwise_linkage_check(const CombinatorialBlock& b) {
  if (b.kind != BlockClass::belt) throw ScopeError("clockwise linkage check needs a belt block");
  const auto label = linkage_components(b);
  std::vector<std::pair<int, ArrowGraph>> clockwise;
  for (std::size_t k = 0; k < b.shapes.size(); ++k) {
    ArrowGraph g = arrow_graph(b.shapes[k]);
    if (g.clockwise()) clockwise.emplace_back(static_cast<int>(k), std::move(g));
  }
  for (std::size_t i = 0; i < clockwise.size(); ++i) {
    for (std::size_t j = i + 1; j < clockwise.size(); ++j) {
      if (!union_is_directed_cycle(clockwise[i].second, clockwise[j].second)) continue;
      if (label[clockwise[i].first] != label[clockwise[j].first]) return false;
    }
  }
  return true;
}

}  // namespace blockscope
