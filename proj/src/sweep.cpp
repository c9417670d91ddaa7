#include "blockscope/sweep.hpp"

#include <algorithm>
#include <map>

#include "blockscope/abacus.hpp"
#include "blockscope/error.hpp"
#include "blockscope/parallel.hpp"

namespace blockscope {

void SuiteResult::fail(Json witness) {
  ++checks;
  ++failures;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

void SuiteResult::check(bool ok, const std::function<Json()>& witness) {
  if (ok) {
    pass();
  } else {
    fail(witness());
  }
}

void SuiteResult::merge(const SuiteResult& other) {
  checks += other.checks;
  failures += other.failures;
  for (const auto& w : other.witnesses) {
    if (witnesses.size() >= kMaxWitnesses) break;
    witnesses.push_back(w);
  }
}

Json SuiteResult::to_json() const {
  return Json{{"suite", name},
              {"checks", checks},
              {"failures", failures},
              {"pass", ok()},
              {"witnesses", witnesses}};
}

namespace {

Json block_key(const CombinatorialBlock& b) {
  return Json{{"p", b.p},
              {"l", b.l},
              {"m", b.m},
              {"inner_core", blockscope::to_json(b.inner_core)},
              {"outer_core", blockscope::to_json(b.outer_core)}};
}

// Runs `body` on every block in parallel and merges the per-block results in
// block order.
template <class F>
SuiteResult over_blocks(const std::string& name, const std::vector<CombinatorialBlock>& blocks,
                        F body) {
  std::vector<SuiteResult> parts(blocks.size());
  parallel_for(blocks.size(), [&](std::size_t k) { body(blocks[k], parts[k]); });
  SuiteResult total;
  total.name = name;
  for (const auto& part : parts) total.merge(part);
  return total;
}

Json counterexample_json(const TheoremCounterexample& e) {
  Json report = Json::parse(e.report(), nullptr, false);
  return Json{{"error", e.what()}, {"report", report}};
}

}  // namespace

std::vector<CombinatorialBlock> sweep_blocks(int p, int n_max, int l_max) {
  if (n_max < 0 || l_max < 0) throw ValidationError("sweep ranges must be non-negative");
  std::vector<std::pair<int, int>> jobs;
  for (int l = 0; l <= l_max; ++l) {
    for (int n = 0; n <= n_max; ++n) jobs.emplace_back(l, n);
  }
  std::vector<std::vector<CombinatorialBlock>> found(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t k) {
    const auto [l, n] = jobs[k];
    for (auto& b : enumerate_blocks(p, l, l + n)) {
      if (b.in_scope()) found[k].push_back(std::move(b));
    }
  });
  std::vector<CombinatorialBlock> out;
  for (auto& group : found) {
    for (auto& b : group) out.push_back(std::move(b));
  }
  return out;
}

Json block_summary(const CombinatorialBlock& b) {
  Json line = block_key(b);
  line["class"] = to_string(b.kind);
  line["members"] = b.members.size();
  line["shapes"] = b.shapes.size();
  if (b.in_scope()) {
    const auto d = decomposition_matrix(b);
    line["matrix"] = {d.entries.rows(), d.entries.cols()};
    line["connected"] = is_connected(d);
    line["linkage_diameter"] = linkage_diameter(b);
  }
  return line;
}

// ---------------------------------------------------------------------------

SuiteResult verify_littlewood(int p, int n_max) {
  SuiteResult result;
  result.name = "littlewood";
  for (int n = 0; n <= n_max; ++n) {
    const auto parts = enumerate_partitions(n);
    std::vector<Partition> cores;
    std::vector<ResidueMultiset> contents;
    for (const auto& nu : parts) {
      cores.push_back(p_core(nu, p));
      contents.push_back(e_content(nu, p));
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = i; j < parts.size(); ++j) {
        const bool same_core = cores[i] == cores[j];
        const bool same_content = contents[i] == contents[j];
        result.check(same_core == same_content, [&] {
          return Json{{"p", p},
                      {"lambda", to_json(parts[i])},
                      {"mu", to_json(parts[j])},
                      {"same_core", same_core},
                      {"same_content", same_content}};
        });
      }
    }
  }
  return result;
}

SuiteResult verify_prop6em(int p, int n_max) {
  SuiteResult result;
  result.name = "prop6em";
  for (int n = 0; n <= n_max; ++n) {
    std::map<Partition, std::vector<Partition>> blocks;
    for (const auto& nu : enumerate_partitions(n)) blocks[p_core(nu, p)].push_back(nu);
    for (const auto& [core, members] : blocks) {
      for (const auto& alpha : members) {
        const int charge = std::max(default_charge(members.back(), p),
                                    default_charge(alpha, p));
        for (int h = 1; h <= p; ++h) {
          for (int i = 0; i < p; ++i) {
            if (!hook_move_available(alpha, p, charge, h, i).removable) continue;
            for (const auto& beta : members) {
              const bool ok = check_prop6em(alpha, beta, p, h, i);
              result.check(ok, [&] {
                return Json{{"p", p},
                            {"alpha", to_json(alpha)},
                            {"beta", to_json(beta)},
                            {"h", h},
                            {"runner", i}};
              });
            }
          }
        }
      }
    }
  }
  return result;
}

SuiteResult verify_beltcore(int p, int n_max) {
  SuiteResult result;
  result.name = "beltcore";
  for (int m = p; m <= n_max; ++m) {
    for (const auto& mu : enumerate_partitions(m)) {
      const Partition core_mu = p_core(mu, p);
      const int weight_mu = p_weight(mu, p);
      for (const auto& lambda : inner_partitions(mu, p)) {
        if (!skew_content(SkewShape(lambda, mu), p).is_full_set()) continue;
        const bool ok = p_core(lambda, p) == core_mu && p_weight(lambda, p) + 1 == weight_mu;
        result.check(ok, [&] {
          return Json{{"p", p}, {"lambda", to_json(lambda)}, {"mu", to_json(mu)}};
        });
      }
    }
  }
  return result;
}

SuiteResult verify_disjch(int p) {
  SuiteResult result;
  result.name = "disjch";
  const std::uint64_t full = full_mask(p);
  for (std::uint64_t c = 1; c <= full; ++c) {
    result.check(unique_cover_check(p, c), [&] {
      return Json{{"p", p}, {"vertices", ArrowGraph(p, c).vertices()}};
    });
  }
  return result;
}

// ---------------------------------------------------------------------------

SuiteResult verify_refs(const std::vector<CombinatorialBlock>& blocks) {
  return over_blocks("refs", blocks, [](const CombinatorialBlock& b, SuiteResult& r) {
    std::vector<FormalCharacter> chars;
    for (const auto& x : b.shapes) {
      r.check(character_sum_check(x), [&] {
        Json w = block_key(b);
        w["shape"] = to_json(x);
        return w;
      });
      chars.push_back(character_of(x));
    }
    for (std::size_t k = 0; k < b.members.size(); ++k) {
      const auto& s = b.members[k];
      r.check(tableau_character(s, b.p) == chars[b.member_shape[k]], [&] {
        Json w = block_key(b);
        w["member"] = to_json(s);
        return w;
      });
    }
  });
}

SuiteResult verify_equivalences(const std::vector<CombinatorialBlock>& blocks, BlockClass kind) {
  const std::string name = kind == BlockClass::belt ? "beltequiv" : "ribequiv";
  return over_blocks(name, blocks, [kind](const CombinatorialBlock& b, SuiteResult& r) {
    if (b.kind != kind) return;
    std::vector<ArrowGraph> graphs;
    std::vector<FormalCharacter> chars;
    std::vector<std::vector<ArrowGraph>> refs;
    for (const auto& x : b.shapes) {
      graphs.push_back(arrow_graph(x));
      chars.push_back(character_of(graphs.back()));
      refs.push_back(refinements(graphs.back()));
    }
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      for (std::size_t j = i; j < graphs.size(); ++j) {
        const bool term = chars[i].shares_term_with(chars[j]);
        const bool criterion = linkage_test(graphs[i], graphs[j]);
        std::vector<ArrowGraph> common;
        std::set_intersection(refs[i].begin(), refs[i].end(), refs[j].begin(), refs[j].end(),
                              std::back_inserter(common));
        const bool refinement = !common.empty();
        r.check(term == criterion && criterion == refinement, [&] {
          Json w = block_key(b);
          w["x"] = to_json(b.shapes[i]);
          w["y"] = to_json(b.shapes[j]);
          w["shared_term"] = term;
          w["criterion"] = criterion;
          w["common_refinement"] = refinement;
          return w;
        });
      }
    }
  });
}

SuiteResult verify_closer(const std::vector<CombinatorialBlock>& blocks) {
  return over_blocks("grbthm", blocks, [](const CombinatorialBlock& b, SuiteResult& r) {
    std::vector<ArrowGraph> graphs;
    for (const auto& x : b.shapes) graphs.push_back(arrow_graph(x));
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      for (std::size_t j = i + 1; j < graphs.size(); ++j) {
        const int d = distance(graphs[i], graphs[j]);
        if (d == 0) continue;
        try {
          const PShape z = find_closer_shape(b.shapes[i], b.shapes[j], b);
          const ArrowGraph gz = arrow_graph(z);
          r.check(distance(graphs[i], gz) < d && distance(graphs[j], gz) < d, [&] {
            Json w = block_key(b);
            w["x"] = to_json(b.shapes[i]);
            w["y"] = to_json(b.shapes[j]);
            w["z"] = to_json(z);
            return w;
          });
        } catch (const TheoremCounterexample& e) {
          r.fail(counterexample_json(e));
        }
      }
    }
  });
}

SuiteResult verify_connectivity(const std::vector<CombinatorialBlock>& blocks) {
  return over_blocks("connectivity", blocks, [](const CombinatorialBlock& b, SuiteResult& r) {
    const auto d = decomposition_matrix(b);
    for (std::size_t row = 0; row < d.rows.size(); ++row) {
      const auto refs = refinements(d.rows[row]);
      bool ok = refs.size() == static_cast<std::size_t>(d.entries.row(row).sum());
      for (const auto& g : refs) {
        const auto c = std::lower_bound(d.columns.begin(), d.columns.end(), g);
        ok = ok && c != d.columns.end() && *c == g && d.entries(row, c - d.columns.begin()) == 1;
      }
      ok = ok && !refs.empty();
      r.check(ok, [&] {
        Json w = block_key(b);
        w["row"] = to_json(d.rows[row]);
        return w;
      });
    }
    r.check(is_connected(d), [&] {
      Json w = block_key(b);
      w["matrix"] = to_json(d);
      return w;
    });
  });
}

SuiteResult verify_linkage(const std::vector<CombinatorialBlock>& blocks) {
  return over_blocks("linkage", blocks, [](const CombinatorialBlock& b, SuiteResult& r) {
    for (std::size_t k = 1; k < b.shapes.size(); ++k) {
      try {
        const auto path = linkage_path(b.shapes.front(), b.shapes[k], b);
        bool ok = path.front() == b.shapes.front() && path.back() == b.shapes[k];
        for (std::size_t t = 0; t + 1 < path.size(); ++t) {
          ok = ok && linkage_test(path[t], path[t + 1]) && b.shape_index(path[t]) >= 0;
        }
        r.check(ok, [&] {
          Json w = block_key(b);
          w["x"] = to_json(b.shapes.front());
          w["y"] = to_json(b.shapes[k]);
          return w;
        });
      } catch (const TheoremCounterexample& e) {
        r.fail(counterexample_json(e));
      }
    }
    if (b.kind == BlockClass::belt) {
      r.check(clockwise_linkage_check(b), [&] { return block_key(b); });
    }
  });
}

SuiteResult verify_beltmod(int p) {
  const auto belts = enumerate_belts(p);
  std::vector<SuiteResult> parts(belts.size());
  parallel_for(belts.size(), [&](std::size_t k) {
    const ArrowGraph& g = belts[k];
    const FormalCharacter expected = character_of(g, std::max(p, kDefaultCharacterCap));
    for (const auto& [a, mult] : expected.terms()) {
      const BeltModule m = belt_module(g, a);
      const RelationReport report = verify_relations(m);
      const bool ok = report.all_pass() && module_character(m) == expected &&
                      m.dim() == static_cast<int>(expected.distinct());
      parts[k].check(ok, [&] {
        return Json{{"belt", to_json(g)}, {"reference", a}, {"relations", to_json(report)}};
      });
    }
  });
  SuiteResult total;
  total.name = "beltmod";
  for (const auto& part : parts) total.merge(part);
  return total;
}

Json beltmod_reference_report(int p) {
  const auto belts = enumerate_belts(p);
  std::vector<Json> rows(belts.size());
  parallel_for(belts.size(), [&](std::size_t k) {
    const ArrowGraph& g = belts[k];
    const auto terms = linear_extensions(g, std::max(p, kDefaultCharacterCap));
    const BeltModule first = belt_module(g, terms.front());
    Json refs = Json::array();
    bool uniform = true;
    for (const auto& a : terms) {
      const BeltModule m = belt_module(g, a);
      const int forward = hom_dimension(first, m);
      const int backward = hom_dimension(m, first);
      const int commutant = simplicity_probe(m).commutant_dimension;
      const bool same_matrices = m.s == first.s;
      uniform = uniform && forward == 1 && backward == 1 && commutant == 1;
      refs.push_back(Json{{"reference", a},
                          {"dropped_terms", m.dropped_terms},
                          {"commutant_dimension", commutant},
                          {"hom_from_first", forward},
                          {"hom_to_first", backward},
                          {"same_matrices_as_first", same_matrices}});
    }
    rows[k] = Json{{"belt", graph_label(g)}, {"dim", first.dim()}, {"uniform", uniform}, {"references", refs}};
  });
  Json out = Json::array();
  for (auto& r : rows) out.push_back(std::move(r));
  return out;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "littlewood", "prop6em", "beltcore", "disjch",       "refs",   "ribequiv",
      "beltequiv",  "grbthm",  "connectivity", "beltmod", "linkage"};
  return names;
}

SuiteResult run_suite(const std::string& name, int p, int n_max, int l_max) {
  if (name == "littlewood") return verify_littlewood(p, n_max);
  if (name == "prop6em") return verify_prop6em(p, n_max);
  if (name == "beltcore") return verify_beltcore(p, n_max);
  if (name == "disjch") return verify_disjch(p);
  if (name == "beltmod") return verify_beltmod(p);
  const auto is_block_suite = [&] {
    return name == "refs" || name == "ribequiv" || name == "beltequiv" || name == "grbthm" ||
           name == "connectivity" || name == "linkage";
  };
  if (!is_block_suite()) throw ValidationError("unknown suite '" + name + "'");
  const auto blocks = sweep_blocks(p, n_max, l_max);
  if (name == "refs") return verify_refs(blocks);
  if (name == "ribequiv") return verify_equivalences(blocks, BlockClass::ribbon);
  if (name == "beltequiv") return verify_equivalences(blocks, BlockClass::belt);
  if (name == "grbthm") return verify_closer(blocks);
  if (name == "connectivity") return verify_connectivity(blocks);
  return verify_linkage(blocks);
}

}  // namespace blockscope
