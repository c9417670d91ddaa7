#include "blockscope/hecke.hpp"

#include <algorithm>
#include <map>

#include "blockscope/error.hpp"

namespace blockscope {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

ModularScalar::ModularScalar(long long value, int p) : v_(mod(value, p)), p_(p) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
}

ModularScalar ModularScalar::inverse() const {
  if (v_ == 0) throw PreconditionError("zero has no inverse");
  // Fermat: v^(p-2).
  std::int64_t result = 1;
  std::int64_t base = v_;
  for (int e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
  }
  return {result, p_, raw};
}

ModMatrix reduce_mod(ModMatrix a, int p) {
  return a.unaryExpr([p](std::int64_t v) { return static_cast<std::int64_t>(mod(v, p)); });
}

ModMatrix mul_mod(const ModMatrix& a, const ModMatrix& b, int p) {
  return reduce_mod(a * b, p);
}

// ---------------------------------------------------------------------------

BeltModule belt_module(const ArrowGraph& g, const std::vector<int>& reference) {
  if (!g.is_belt()) throw ValidationError("belt_module needs a belt");
  const int p = g.modulus();
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  const auto terms = linear_extensions(g, std::max(p, kDefaultCharacterCap));
  if (!std::binary_search(terms.begin(), terms.end(), reference)) {
    throw ValidationError("reference sequence is not a term of the belt's character");
  }

  BeltModule m;
  m.p = p;
  m.belt = g;
  m.reference = reference;
  m.basis = terms;
  const int d = m.dim();
  std::map<std::vector<int>, int> index;
  for (int j = 0; j < d; ++j) index[m.basis[j]] = j;
  // where[v] = position of the value v in the reference sequence.
  std::vector<int> where(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) where[reference[k]] = k;

  for (int k = 1; k <= p; ++k) {
    ModMatrix zk = ModMatrix::Zero(d, d);
    for (int j = 0; j < d; ++j) zk(j, j) = m.basis[j][k - 1];
    m.z.push_back(std::move(zk));
  }
  const ModularScalar one(1, p);
  for (int k = 1; k < p; ++k) {
    ModMatrix sk = ModMatrix::Zero(d, d);
    for (int j = 0; j < d; ++j) {
      const auto& b = m.basis[j];
      const int bk = b[k - 1];
      const int bk1 = b[k];
      const ModularScalar delta(bk1 - bk, p);
      const ModularScalar inv = delta.inverse();
      sk(j, j) = inv.value();
      const bool after = where[bk] > where[bk1];
      const ModularScalar c = after ? one : one - inv * inv;
      auto swapped = b;
      std::swap(swapped[k - 1], swapped[k]);
      const auto it = index.find(swapped);
      if (it == index.end()) {
        ++m.dropped_terms;
        if (!c.is_zero()) ++m.closure_violations;
        continue;
      }
      sk(it->second, j) = c.value();
    }
    m.s.push_back(std::move(sk));
  }
  return m;
}

// ---------------------------------------------------------------------------

bool RelationReport::all_pass() const { return closure_ok && failures() == 0; }

int RelationReport::failures() const {
  return static_cast<int>(
      std::count_if(checks.begin(), checks.end(), [](const RelationCheck& c) { return !c.pass; }));
}

namespace {

RelationCheck compare(std::string name, const ModMatrix& lhs, const ModMatrix& rhs, int p) {
  RelationCheck check;
  check.relation = std::move(name);
  const ModMatrix diff = reduce_mod(lhs - rhs, p);
  for (Eigen::Index j = 0; j < diff.cols(); ++j) {
    if (diff.col(j).any()) {
      check.pass = false;
      check.witness = static_cast<int>(j);
      break;
    }
  }
  return check;
}

std::string gen(char name, int k) { return std::string(1, name) + "_" + std::to_string(k); }

}  // namespace

RelationReport verify_relations(const BeltModule& m) {
  const int p = m.p;
  const auto& z = m.z;
  const auto& s = m.s;
  const ModMatrix id = ModMatrix::Identity(m.dim(), m.dim());
  RelationReport report;
  report.closure_ok = m.closure_violations == 0;
  auto& out = report.checks;
  for (int i = 1; i <= p; ++i) {
    for (int j = i + 1; j <= p; ++j) {
      out.push_back(compare(gen('z', i) + gen('z', j) + " = " + gen('z', j) + gen('z', i),
                            mul_mod(z[i - 1], z[j - 1], p), mul_mod(z[j - 1], z[i - 1], p), p));
    }
  }
  for (int k = 1; k < p; ++k) {
    out.push_back(compare(gen('s', k) + "^2 = 1", mul_mod(s[k - 1], s[k - 1], p), id, p));
  }
  for (int j = 1; j < p; ++j) {
    for (int k = j + 2; k < p; ++k) {
      out.push_back(compare(gen('s', j) + gen('s', k) + " = " + gen('s', k) + gen('s', j),
                            mul_mod(s[j - 1], s[k - 1], p), mul_mod(s[k - 1], s[j - 1], p), p));
    }
  }
  for (int k = 1; k + 1 < p; ++k) {
    const ModMatrix& a = s[k - 1];
    const ModMatrix& b = s[k];
    out.push_back(compare(gen('s', k) + gen('s', k + 1) + gen('s', k) + " = " + gen('s', k + 1) +
                              gen('s', k) + gen('s', k + 1),
                          mul_mod(mul_mod(a, b, p), a, p), mul_mod(mul_mod(b, a, p), b, p), p));
  }
  for (int k = 1; k < p; ++k) {
    for (int j = 1; j <= p; ++j) {
      if (j == k || j == k + 1) continue;
      out.push_back(compare(gen('s', k) + gen('z', j) + " = " + gen('z', j) + gen('s', k),
                            mul_mod(s[k - 1], z[j - 1], p), mul_mod(z[j - 1], s[k - 1], p), p));
    }
  }
  for (int k = 1; k < p; ++k) {
    out.push_back(compare(gen('s', k) + gen('z', k) + " = " + gen('z', k + 1) + gen('s', k) + " - 1",
                          mul_mod(s[k - 1], z[k - 1], p),
                          mul_mod(z[k], s[k - 1], p) - id, p));
  }
  return report;
}

FormalCharacter module_character(const BeltModule& m) {
  FormalCharacter ch(m.p);
  for (int j = 0; j < m.dim(); ++j) {
    std::vector<int> seq;
    for (const auto& zk : m.z) seq.push_back(static_cast<int>(zk(j, j)));
    ch.add(seq);
  }
  return ch;
}

// ---------------------------------------------------------------------------

int rank_mod(ModMatrix a, int p) {
  a = reduce_mod(std::move(a), p);
  int rank = 0;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r) {
      if (a(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    a.row(pivot).swap(a.row(rank));
    const std::int64_t inv = ModularScalar(a(rank, c), p).inverse().value();
    a.row(rank) = reduce_mod(a.row(rank) * inv, p);
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == rank || a(r, c) == 0) continue;
      a.row(r) = reduce_mod(a.row(r) - a(r, c) * a.row(rank), p);
    }
    ++rank;
  }
  return rank;
}

int hom_dimension(const BeltModule& from, const BeltModule& to) {
  if (from.p != to.p || from.belt != to.belt) {
    throw ValidationError("modules must be built on the same belt");
  }
  const int p = from.p;
  const int da = from.dim();
  const int db = to.dim();
  // A map intertwining the diagonal z_k can only be non-zero where the two
  // basis vectors share every eigenvalue.
  std::map<std::pair<int, int>, int> unknown;
  for (int i = 0; i < db; ++i) {
    for (int j = 0; j < da; ++j) {
      if (to.basis[i] == from.basis[j]) unknown.emplace(std::make_pair(i, j), unknown.size());
    }
  }
  const int u = static_cast<int>(unknown.size());
  // Row echelon basis, kept reduced: pivot column -> row.
  std::map<int, std::vector<std::int64_t>> pivots;
  const auto insert = [&](std::vector<std::int64_t> row) {
    for (const auto& [col, prow] : pivots) {
      if (row[col] == 0) continue;
      const std::int64_t f = row[col];
      for (int c = 0; c < u; ++c) row[c] = mod(row[c] - f * prow[c], p);
    }
    const auto lead = std::find_if(row.begin(), row.end(), [](std::int64_t v) { return v != 0; });
    if (lead == row.end()) return;
    const int col = static_cast<int>(lead - row.begin());
    const std::int64_t inv = ModularScalar(*lead, p).inverse().value();
    for (auto& v : row) v = v * inv % p;
    for (auto& [other_col, prow] : pivots) {
      if (prow[col] == 0) continue;
      const std::int64_t f = prow[col];
      for (int c = 0; c < u; ++c) prow[c] = mod(prow[c] - f * row[c], p);
    }
    pivots.emplace(col, std::move(row));
  };
  // (X A - B X)_{ij} = sum_l X_il A_lj - B_il X_lj.
  for (std::size_t k = 0; k < from.s.size(); ++k) {
    const ModMatrix& a = from.s[k];
    const ModMatrix& b = to.s[k];
    for (int i = 0; i < db; ++i) {
      for (int j = 0; j < da; ++j) {
        std::vector<std::int64_t> row(static_cast<std::size_t>(u), 0);
        bool any = false;
        for (int l = 0; l < da; ++l) {
          if (a(l, j) == 0) continue;
          const auto it = unknown.find({i, l});
          if (it == unknown.end()) continue;
          row[it->second] = mod(row[it->second] + a(l, j), p);
          any = true;
        }
        for (int l = 0; l < db; ++l) {
          if (b(i, l) == 0) continue;
          const auto it = unknown.find({l, j});
          if (it == unknown.end()) continue;
          row[it->second] = mod(row[it->second] - b(i, l), p);
          any = true;
        }
        if (any) insert(std::move(row));
      }
    }
  }
  return u - static_cast<int>(pivots.size());
}

SimplicityReport simplicity_probe(const BeltModule& m) {
  SimplicityReport report;
  report.dimension = m.dim();
  report.commutant_dimension = hom_dimension(m, m);
  report.verdict = report.commutant_dimension == 1
                       ? "consistent with simplicity"
                       : "commutant has dimension " + std::to_string(report.commutant_dimension);
  return report;
}

}  // namespace blockscope
