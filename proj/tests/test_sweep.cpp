#include "doctest.h"

#include "blockscope/error.hpp"
#include "blockscope/parallel.hpp"
#include "blockscope/sweep.hpp"
#include "oracles.hpp"

using namespace blockscope;

namespace {

// In-scope blocks with n <= n_max and l <= l_max found by brute force:
// (ribbon count, belt count).
std::pair<int, int> brute_block_counts(int p, int n_max, int l_max) {
  int ribbon = 0, belt = 0;
  for (int l = 0; l <= l_max; ++l) {
    for (int n = 0; n <= n_max; ++n) {
      std::map<std::pair<oracle::Parts, oracle::Parts>, std::vector<int>> groups;
      for (const auto& la : oracle::partitions(l)) {
        for (const auto& mu : oracle::partitions(l + n)) {
          if (!oracle::inside(la, mu)) continue;
          auto c = oracle::residue_counts(mu, p);
          const auto d = oracle::residue_counts(la, p);
          for (int i = 0; i < p; ++i) c[i] -= d[i];
          groups[{oracle::core(la, p), oracle::core(mu, p)}] = c;
        }
      }
      for (const auto& [key, c] : groups) {
        const bool free = std::all_of(c.begin(), c.end(), [](int x) { return x <= 1; });
        if (!free) continue;
        (n == p ? belt : ribbon)++;
      }
    }
  }
  return {ribbon, belt};
}

}  // namespace

TEST_SUITE("sweep") {

TEST_CASE("swept blocks match a brute-force count") {
  const auto blocks = sweep_blocks(3, 3, 8);
  int belts = 0;
  for (const auto& b : blocks) {
    CHECK(b.in_scope());
    belts += b.kind == BlockClass::belt ? 1 : 0;
  }
  CHECK(blocks.size() == 126);
  CHECK(belts == 21);
  const auto [ribbon, belt] = brute_block_counts(3, 3, 8);
  CHECK(ribbon + belt == 126);
  CHECK(belt == 21);
  CHECK(sweep_blocks(2, 2, 8).size() == 48);
}

TEST_CASE("block summaries") {
  const auto blocks = sweep_blocks(5, 3, 5);
  for (const auto& b : blocks) {
    const auto j = block_summary(b);
    CHECK(j["connected"] == true);
    CHECK(j["linkage_diameter"].get<int>() >= 0);
    CHECK(j["members"] == b.members.size());
  }
}

TEST_CASE("suite results") {
  SuiteResult r;
  r.name = "demo";
  for (int k = 0; k < 60; ++k) r.check(k % 2 == 0, [k] { return Json{{"k", k}}; });
  CHECK(r.checks == 60);
  CHECK(r.failures == 30);
  CHECK(r.witnesses.size() == SuiteResult::kMaxWitnesses);
  CHECK_FALSE(r.ok());
  SuiteResult other;
  other.pass();
  r.merge(other);
  CHECK(r.checks == 61);
  const auto j = r.to_json();
  CHECK(j["suite"] == "demo");
  CHECK(j["failures"] == 30);
}

TEST_CASE("every suite passes on small inputs") {
  for (int p : {2, 3}) {
    for (const auto& name : suite_names()) {
      const auto r = run_suite(name, p, name == "littlewood" || name == "prop6em" || name == "beltcore" ? 8 : p, 6);
      INFO(name << " at p = " << p);
      CHECK(r.ok());
      CHECK(r.checks > 0);
    }
  }
  CHECK_THROWS_AS(run_suite("nonsense", 3, 3, 3), ValidationError);
}

TEST_CASE("single-node hook moves in blocks") {
  for (int e : {2, 3}) {
    CHECK(verify_prop6em(e, 10).ok());
    CHECK(verify_littlewood(e, 10).ok());
  }
}

TEST_CASE("parallel_for rethrows and covers every index") {
  std::vector<int> hit(100, 0);
  parallel_for(100, [&](std::size_t i) { hit[i]++; });
  CHECK(std::all_of(hit.begin(), hit.end(), [](int x) { return x == 1; }));
  CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) {
                    if (i == 7) throw ValidationError("seven");
                  }),
                  ValidationError);
  CHECK(thread_count() >= 1);
}

}  // TEST_SUITE
