#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "blockscope/character.hpp"

namespace blockscope {

bool is_prime(int n);

/// An element of Z/pZ for a prime p.
class ModularScalar {
 public:
  /// Throws ValidationError unless p is prime.
  ModularScalar(long long value, int p);

  int modulus() const noexcept { return p_; }
  std::int64_t value() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_ == 0; }

  /// Throws PreconditionError for zero.
  ModularScalar inverse() const;

  ModularScalar operator+(const ModularScalar& o) const { return {v_ + o.v_, p_, raw}; }
  ModularScalar operator-(const ModularScalar& o) const { return {v_ - o.v_ + p_, p_, raw}; }
  ModularScalar operator*(const ModularScalar& o) const { return {v_ * o.v_, p_, raw}; }
  ModularScalar operator/(const ModularScalar& o) const { return *this * o.inverse(); }
  friend bool operator==(const ModularScalar&, const ModularScalar&) = default;

 private:
  struct Raw {};
  static constexpr Raw raw{};
  ModularScalar(std::int64_t value, int p, Raw) : v_(value % p), p_(p) {}

  std::int64_t v_;
  int p_;
};

using ModMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Product reduced into [0, p).
ModMatrix mul_mod(const ModMatrix& a, const ModMatrix& b, int p);
ModMatrix reduce_mod(ModMatrix a, int p);

/// The module on the character terms of a belt.  Positions are 1-based:
/// z[k-1] is z_k, reading position k; s[k-1] is s_k, exchanging positions k
/// and k+1.  Column j of each matrix is the image of basis[j].
struct BeltModule {
  int p = 2;
  ArrowGraph belt;
  std::vector<int> reference;
  std::vector<std::vector<int>> basis;  ///< lexicographic
  std::vector<ModMatrix> z;
  std::vector<ModMatrix> s;
  /// Images of s_k e_b whose target sigma_k b is not a basis label.
  long long dropped_terms = 0;
  /// Dropped terms whose coefficient was not zero.
  long long closure_violations = 0;

  int dim() const noexcept { return static_cast<int>(basis.size()); }
};

/// Throws ValidationError unless g is a belt, p is prime and `reference` is
/// a term of the character of g.
BeltModule belt_module(const ArrowGraph& g, const std::vector<int>& reference);

struct RelationCheck {
  std::string relation;
  bool pass = true;
  int witness = -1;  ///< basis index of a column where the identity fails
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool closure_ok = true;

  bool all_pass() const;
  int failures() const;
};

RelationReport verify_relations(const BeltModule& m);

/// Reads each basis vector's z-eigenvalues off the diagonals.
FormalCharacter module_character(const BeltModule& m);

struct SimplicityReport {
  int dimension = 0;
  int commutant_dimension = 0;
  std::string verdict;
};

/// Dimension of the space of module maps between two modules on one belt
/// (typically built from different reference terms).  Throws ValidationError
/// when the belts differ.
int hom_dimension(const BeltModule& from, const BeltModule& to);

/// Dimension of the algebra of matrices commuting with every generator.
/// Dimension 1 is reported as "consistent with simplicity".
SimplicityReport simplicity_probe(const BeltModule& m);

/// Rank of a matrix over Z/pZ (p prime), by Gaussian elimination.
int rank_mod(ModMatrix a, int p);

}  // namespace blockscope
