#include "doctest.h"

#include "blockscope/abacus.hpp"
#include "blockscope/error.hpp"
#include "oracles.hpp"

using namespace blockscope;

TEST_SUITE("abacus") {

TEST_CASE("bead positions") {
  const auto a = AbacusDisplay::from_partition(make_partition({7, 3, 2, 2, 1, 1}), 4, 12);
  CHECK(a.beads() == std::vector<int>{0, 1, 2, 3, 4, 5, 7, 8, 10, 11, 13, 18});
  CHECK(a.runner_counts() == std::vector<int>{3, 3, 3, 3});
  CHECK(a.render() == "bbbb\nbb-b\nb-bb\n-b--\n--b-\n");
  CHECK(a.is_bead(-3));
  CHECK_FALSE(a.is_bead(6));

  const auto empty = AbacusDisplay::from_partition(make_partition({}), 5, 5);
  CHECK(empty.beads() == std::vector<int>{0, 1, 2, 3, 4});

  CHECK_THROWS_AS(AbacusDisplay::from_partition(make_partition({1, 1, 1}), 2, 2), ValidationError);
  CHECK_THROWS_AS(AbacusDisplay::from_partition(make_partition({1}), 3, 4), ValidationError);
}

TEST_CASE("round trip") {
  for (int e : {2, 3, 5}) {
    for (int n = 0; n <= 10; ++n) {
      for (const auto& nu : enumerate_partitions(n)) {
        const int c = default_charge(nu, e);
        CHECK(c % e == 0);
        CHECK(c >= nu.length());
        CHECK(AbacusDisplay::from_partition(nu, e, c).to_partition() == nu);
        CHECK(AbacusDisplay::from_partition(nu, e, c + e).to_partition() == nu);
      }
    }
  }
}

TEST_CASE("core, weight and quotient of the worked example") {
  const auto nu = make_partition({12, 7, 7, 5, 4, 2, 1, 1});
  CHECK(p_core(nu, 4) == make_partition({2, 1}));
  CHECK(p_weight(nu, 4) == 9);
  const auto q = p_quotient(nu, 4, 12);
  REQUIRE(q.size() == 4);
  CHECK(q[0] == make_partition({2, 1}));
  CHECK(q[1] == make_partition({1, 1}));
  CHECK(q[2] == make_partition({}));
  CHECK(q[3] == make_partition({3, 1}));
  CHECK(p_quotient(nu, 4) == q);

  CHECK(p_core(make_partition({2, 1}), 4) == make_partition({2, 1}));
  CHECK(p_weight(make_partition({2, 1}), 4) == 0);
  CHECK(is_core(make_partition({2, 1}), 4));
  for (const auto& c : p_quotient(make_partition({2, 1}), 4)) CHECK(c.empty());
}

TEST_CASE("core agrees with hook stripping in every order") {
  for (int e : {2, 3}) {
    for (int n = 0; n <= 9; ++n) {
      for (const auto& nu : enumerate_partitions(n)) {
        const auto all = oracle::cores_all_orders(nu.parts(), e);
        REQUIRE(all.size() == 1);
        CHECK(p_core(nu, e).parts() == all.begin()->first);
        CHECK(p_weight(nu, e) == all.begin()->second);
      }
    }
  }
}

TEST_CASE("weight equals the quotient size; charge covariance") {
  for (int e : {2, 3, 4}) {
    for (int n = 0; n <= 12; ++n) {
      for (const auto& nu : enumerate_partitions(n)) {
        const int w = p_weight(nu, e);
        CHECK(nu.size() == p_core(nu, e).size() + e * w);
        const int c = default_charge(nu, e);
        int total = 0;
        for (const auto& q : p_quotient(nu, e, c)) total += q.size();
        CHECK(total == w);
        CHECK(p_quotient(nu, e, c + e) == p_quotient(nu, e, c));
      }
    }
  }
}

TEST_CASE("hook moves") {
  const auto nu = make_partition({7, 3, 2, 2, 1, 1});
  CHECK(hook_move_available(nu, 4, 12, 3, 2).removable);
  // The move takes the bead at 18 to the space at 15.
  auto hooks = removable_hooks(nu, 3);
  const auto it = std::find_if(hooks.begin(), hooks.end(),
                               [](const Hook& h) { return h.foot == Node{1, 5}; });
  REQUIRE(it != hooks.end());
  const auto after = AbacusDisplay::from_partition(remove_hook(nu, *it), 4, 12);
  CHECK(after.is_bead(15));
  CHECK_FALSE(after.is_bead(18));

  for (int h = 1; h <= 5; ++h) {
    for (int r = 0; r < 4; ++r) CHECK_FALSE(hook_move_available(make_partition({}), 4, 4, h, r).removable);
  }
}

TEST_CASE("hook moves agree with diagram hooks") {
  // The bead of a removable hook sits at its hand node; the bead of an
  // addable hook sits one step before its foot node.
  for (int e : {2, 3, 4}) {
    for (int n = 0; n <= 10; ++n) {
      for (const auto& nu : enumerate_partitions(n)) {
        const int c = default_charge(nu, e);
        for (int h = 1; h <= e + 1; ++h) {
          std::vector<bool> rem(e, false), add(e, false);
          for (const auto& hook : removable_hooks(nu, h)) rem[mod(hook.hand.content() + c, e)] = true;
          for (const auto& hook : addable_hooks(nu, h)) add[mod(hook.foot.content() - 1 + c, e)] = true;
          for (int r = 0; r < e; ++r) {
            const auto moves = hook_move_available(nu, e, c, h, r);
            CHECK(moves.removable == rem[r]);
            CHECK(moves.addable == add[r]);
          }
        }
      }
    }
  }
}

TEST_CASE("block partitions") {
  CHECK(enumerate_block_partitions(make_partition({}), 2, 1) ==
        std::vector<Partition>{make_partition({2}), make_partition({1, 1})});

  const auto b = enumerate_block_partitions(make_partition({2, 1}), 5, 1);
  CHECK(b.size() == 5);
  std::vector<Partition> filtered;
  for (const auto& nu : enumerate_partitions(8)) {
    if (p_core(nu, 5) == make_partition({2, 1})) filtered.push_back(nu);
  }
  CHECK(b == filtered);

  const auto big = enumerate_block_partitions(make_partition({1, 1}), 7, 4);
  CHECK(std::find(big.begin(), big.end(), make_partition({12, 8, 5, 4, 1})) != big.end());

  CHECK_THROWS_AS(enumerate_block_partitions(make_partition({2}), 2, 1), PreconditionError);

  for (int e : {2, 3}) {
    for (int n = 0; n <= 10; ++n) {
      for (const auto& nu : enumerate_partitions(n)) {
        if (!is_core(nu, e)) continue;
        for (int w = 0; nu.size() + e * w <= 10; ++w) {
          std::vector<Partition> expected;
          for (const auto& x : enumerate_partitions(nu.size() + e * w)) {
            if (oracle::core(x.parts(), e) == nu.parts()) expected.push_back(x);
          }
          CHECK(enumerate_block_partitions(nu, e, w) == expected);
        }
      }
    }
  }
}

TEST_CASE("hook moves within a block") {
  const auto a = make_partition({3});
  CHECK(check_prop6em(a, a, 3, 3, mod(3 - 1 + 3, 3)));
  CHECK_THROWS_AS(check_prop6em(make_partition({3}), make_partition({2}), 3, 1, 0), PreconditionError);
}

}  // TEST_SUITE
