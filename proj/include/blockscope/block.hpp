#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "blockscope/character.hpp"
#include "blockscope/skew.hpp"

namespace blockscope {

enum class BlockClass { ribbon, belt, other };

std::string to_string(BlockClass c);

/// ribbon: fewer than p boxes, no repeated residue.  belt: exactly p boxes
/// covering Z/pZ.  Everything else is `other`.
BlockClass classify(const ResidueMultiset& content);

/// Skew pairs (lambda, mu) with |lambda| = l, |mu| = m and fixed p-cores.
struct CombinatorialBlock {
  int p = 2;
  int l = 0;
  int m = 0;
  Partition inner_core;
  Partition outer_core;
  std::vector<SkewShape> members;  ///< sorted
  ResidueMultiset content{2};
  BlockClass kind = BlockClass::other;
  /// Distinct shapes, sorted.  Empty for class `other`.
  std::vector<PShape> shapes;
  /// Index into `shapes` for each member; -1 for class `other`.
  std::vector<int> member_shape;

  int n() const noexcept { return m - l; }
  bool in_scope() const noexcept { return kind != BlockClass::other; }
  /// Index of x in `shapes`, or -1.
  int shape_index(const PShape& x) const;
};

inline constexpr int kDefaultBlockCap = 45;

/// Members are found by running over the partitions of m with the given
/// outer core and removing n boxes in every way.  Throws PreconditionError
/// for non-core inputs or an empty block and CapExceeded when m > cap.
CombinatorialBlock enumerate_block(int p, int l, int m, const Partition& inner_core,
                                   const Partition& outer_core, int cap = kDefaultBlockCap);

/// Every non-empty block with the given p, l, m, ordered by (inner core,
/// outer core).  Scans all partitions of m, so it also serves as a check on
/// enumerate_block.
std::vector<CombinatorialBlock> enumerate_blocks(int p, int l, int m,
                                                 int cap = kDefaultBlockCap);

/// Rows are the block's shapes; columns are maximal shapes (ribbon class) or
/// belts (belt class).  entries(r, c) = 1 when column c refines row r.
struct DecompositionMatrix {
  int p = 2;
  BlockClass kind = BlockClass::ribbon;
  std::vector<PShape> rows;
  std::vector<ArrowGraph> columns;
  Eigen::MatrixXi entries;

  std::string row_label(int r) const { return rows[r].to_string(); }
  std::string column_label(int c) const;
};

/// Text label for a maximal graph: the shape for ribbon columns and
/// "belt:" followed by one F/B letter per edge for belts.
std::string graph_label(const ArrowGraph& g);

/// Throws ScopeError for class `other`.  Columns that refine no row are
/// dropped unless `keep_empty_columns` (which only matters for belts).
DecompositionMatrix decomposition_matrix(const CombinatorialBlock& b,
                                         bool keep_empty_columns = false);

/// The bipartite row/column incidence graph is connected.  Throws
/// PreconditionError on an empty matrix.
bool is_connected(const Eigen::MatrixXi& d);
bool is_connected(const DecompositionMatrix& d);

/// Some Z among b's shapes with d(x, z) < d(x, y) and d(y, z) < d(x, y).
/// Throws PreconditionError when d(x, y) = 0 or x, y are not shapes of b,
/// and TheoremCounterexample when no Z exists.
PShape find_closer_shape(const PShape& x, const PShape& y, const CombinatorialBlock& b);

/// Same contract for blocks too large to enumerate: candidates keep one of
/// the four partitions of x and y and vary the other.  Returns the member
/// found.
SkewShape find_closer_member(const SkewShape& x, const SkewShape& y, int p);

/// Component label of each shape in the graph whose edges are linked pairs.
std::vector<int> linkage_components(const CombinatorialBlock& b);

/// Shortest chain of linked shapes from x to y.  Throws TheoremCounterexample
/// when none exists.
std::vector<PShape> linkage_path(const PShape& x, const PShape& y, const CombinatorialBlock& b);

/// Longest shortest chain (counted in steps) over all pairs, or -1 when the
/// linkage graph is disconnected.
int linkage_diameter(const CombinatorialBlock& b);

/// The one-row ribbon of p boxes whose rightmost residue is i.
PShape belt_row_shape(int i, int p);

/// (lambda_1 + p, lambda_2, ...); the empty partition gives (p).
Partition mu_lambda(const Partition& lambda, int p);

/// Every pair of clockwise shapes whose overlay is a directed cycle lies in
/// one linkage component.  Throws ScopeError unless b is a belt block.
bool clockwise_linkage_check(const CombinatorialBlock& b);

}  // namespace blockscope
