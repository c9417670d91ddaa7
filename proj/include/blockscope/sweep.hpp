#pragma once

#include <functional>
#include <string>
#include <vector>

#include "blockscope/block.hpp"
#include "blockscope/serialize.hpp"

namespace blockscope {

struct SuiteResult {
  std::string name;
  long long checks = 0;
  long long failures = 0;
  /// At most kMaxWitnesses failure records.
  std::vector<Json> witnesses;

  static constexpr std::size_t kMaxWitnesses = 20;

  bool ok() const noexcept { return failures == 0; }
  void pass() { ++checks; }
  void fail(Json witness);
  void check(bool ok, const std::function<Json()>& witness);
  /// Adds the counts and witnesses of `other`.
  void merge(const SuiteResult& other);

  Json to_json() const;
};

/// Every ribbon and belt block with skew size n <= n_max and l <= l_max, in
/// order of (l, n, inner core, outer core).
std::vector<CombinatorialBlock> sweep_blocks(int p, int n_max, int l_max);

/// One JSON object per block: classification, member and shape counts,
/// matrix size, connectivity and linkage diameter.
Json block_summary(const CombinatorialBlock& b);

// Partition sweeps.  n_max bounds the size of the partitions involved.

/// Equal p-cores exactly when the p-contents agree, for partitions of each
/// n <= n_max.
SuiteResult verify_littlewood(int p, int n_max);
/// Hook moves between partitions of one block, for every h <= p.
SuiteResult verify_prop6em(int p, int n_max);
/// Skew pairs with content Z/pZ have equal cores and weights one apart.
SuiteResult verify_beltcore(int p, int n_max);

/// Unique cover over every residue subset of Z/pZ.
SuiteResult verify_disjch(int p);

// Block sweeps.

/// Character of every shape equals the sum over its refinements, and the
/// character read from each member's tableaux equals that of its shape.
SuiteResult verify_refs(const std::vector<CombinatorialBlock>& blocks);
/// Shared term, the linkage criterion and a common refinement agree on every
/// pair of shapes of one class.
SuiteResult verify_equivalences(const std::vector<CombinatorialBlock>& blocks, BlockClass kind);
/// An intermediate shape exists for every pair at positive distance.
SuiteResult verify_closer(const std::vector<CombinatorialBlock>& blocks);
/// D_B rows match refinements and the matrix is connected.
SuiteResult verify_connectivity(const std::vector<CombinatorialBlock>& blocks);
/// Every pair of shapes is joined by a checked linkage path; clockwise pairs
/// of belt blocks lie in one component.
SuiteResult verify_linkage(const std::vector<CombinatorialBlock>& blocks);

/// Every belt and every reference term: relations, closure and character.
SuiteResult verify_beltmod(int p);

/// For every belt and reference term: dropped terms, commutant dimension
/// and the dimensions of the map spaces to and from the module built on the
/// least term.  "uniform" is true when all of these equal 1 for the belt.
Json beltmod_reference_report(int p);

/// Names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs a named suite.  n_max and l_max keep the meanings documented above
/// for each suite.  Throws ValidationError for an unknown name.
SuiteResult run_suite(const std::string& name, int p, int n_max, int l_max);

}  // namespace blockscope
