#include "doctest.h"

#include "blockscope/abacus.hpp"
#include "blockscope/error.hpp"
#include "blockscope/skew.hpp"
#include "oracles.hpp"

using namespace blockscope;

namespace {

SkewShape sk(std::initializer_list<int> outer, std::initializer_list<int> inner) {
  return SkewShape(make_partition(inner), make_partition(outer));
}

}  // namespace

TEST_SUITE("skew") {

TEST_CASE("skew shapes") {
  const auto s = sk({6, 4, 4, 3, 2}, {3, 2, 2, 2, 1});
  CHECK(s.size() == 9);
  CHECK(s.to_string() == "(6,4,4,3,2)\\(3,2,2,2,1)");
  CHECK(sk({2, 1}, {2, 1}).size() == 0);
  CHECK_THROWS_AS(sk({1, 1}, {2}), ValidationError);
  CHECK(make_skew(make_partition({2}), make_partition({3})) == sk({3}, {2}));
}

TEST_CASE("skew content") {
  const auto c = skew_content(sk({6, 4, 4, 3, 2}, {3, 2, 2, 2, 1}), 4);
  CHECK(c.counts() == std::vector<int>{2, 4, 1, 2});
  CHECK(skew_content(sk({3, 1}, {3, 1}), 4).total() == 0);

  for (int n = 0; n <= 8; ++n) {
    for (const auto& mu : enumerate_partitions(n)) {
      for (int k = 0; k <= n; ++k) {
        for (const auto& la : inner_partitions(mu, k)) {
          CHECK(skew_content(SkewShape(la, mu), 3) == e_content(mu, 3) - e_content(la, 3));
        }
      }
    }
  }
}

TEST_CASE("p-shapes") {
  const auto a = p_shape(sk({4, 1}, {2}), 3);
  const auto b = p_shape(sk({3, 2}, {2}), 3);
  CHECK(a == b);
  CHECK(a.to_string() == "{2:} {2:R}");
  CHECK(p_shape(sk({2}, {2}), 3).components().empty());
  CHECK(p_shape(sk({2}, {2}), 3).to_string() == "{}");

  const auto x = p_shape(sk({14, 14, 7, 5, 2}, {14, 14, 4, 3, 2}), 7);
  CHECK(x == PShape(7, {{0, "RURR"}}));
  CHECK(x.content().counts() == std::vector<int>{1, 1, 1, 1, 1, 0, 0});

  CHECK_THROWS_AS(p_shape(sk({2, 2}, {}), 5), ScopeError);
  CHECK_THROWS_AS(PShape(3, {{0, "RX"}}), ValidationError);
  CHECK_THROWS_AS(PShape(3, {{3, ""}}), ValidationError);
}

TEST_CASE("arrow graph of the seven-residue figure") {
  // Components {3}, {1,2}, {0}, {6}: 1 -> 2 in a row, 3 above 2, 6 above 0.
  const PShape x(7, {{1, "RU"}, {6, "U"}});
  const auto g = arrow_graph(x);
  CHECK(g.vertices() == std::vector<int>{0, 1, 2, 3, 6});
  CHECK(g.edge(1) == Edge::forward);
  CHECK(g.edge(2) == Edge::backward);
  CHECK(g.edge(6) == Edge::backward);
  CHECK(g.edge(0) == Edge::none);
  CHECK_FALSE(g.circular());
  CHECK_FALSE(g.maximal());
  CHECK(shape_from_arrow_graph(g) == x);

  const auto single = arrow_graph(PShape(5, {{2, ""}}));
  CHECK(single.vertex_count() == 1);
  for (int i = 0; i < 5; ++i) CHECK(single.edge(i) == Edge::none);

  CHECK_THROWS_AS(arrow_graph(PShape(3, {{0, "R"}, {1, ""}})), ScopeError);
}

TEST_CASE("arrow graphs agree with the cell oracle and round trip") {
  for (int p : {3, 5}) {
    for (int m = 0; m <= 9; ++m) {
      for (const auto& mu : enumerate_partitions(m)) {
        for (int n = 0; n <= p && n <= m; ++n) {
          for (const auto& la : inner_partitions(mu, n)) {
            const SkewShape s(la, mu);
            if (!skew_content(s, p).repetition_free()) continue;
            const auto x = p_shape(s, p);
            const auto g = arrow_graph(x);
            const auto expected = oracle::arrows(mu.parts(), la.parts(), p);
            for (int i = 0; i < p; ++i) {
              CHECK(static_cast<int>(g.edge(i)) == expected[i]);
            }
            if (!g.is_belt()) CHECK(shape_from_arrow_graph(g) == x);
          }
        }
      }
    }
  }
}

TEST_CASE("arrow graph validation") {
  std::vector<Edge> cycle(3, Edge::forward);
  CHECK(is_directed_cycle(3, cycle));
  CHECK_THROWS_AS(ArrowGraph(3, full_mask(3), cycle), ValidationError);
  CHECK_THROWS_AS(ArrowGraph(5, 0b00011, {Edge::none, Edge::forward, Edge::none, Edge::none, Edge::none}),
                  ValidationError);
  const ArrowGraph belt(3, full_mask(3), {Edge::forward, Edge::forward, Edge::backward});
  CHECK(belt.is_belt());
  CHECK_FALSE(belt.clockwise());
  CHECK_THROWS_AS(shape_from_arrow_graph(belt), PreconditionError);
  CHECK_THROWS_AS(belt.with_edge(2, Edge::forward), ValidationError);
}

TEST_CASE("standard tableaux") {
  const auto seqs = standard_tableaux_sequences(sk({4, 4, 2}, {2, 2, 1}), 3);
  CHECK(seqs.size() == 10);
  CHECK(standard_tableaux_sequences(sk({1}, {}), 3) == std::vector<std::vector<int>>{{0}});
  CHECK(std::is_sorted(seqs.begin(), seqs.end()));
  CHECK_THROWS_AS(standard_tableaux_sequences(sk({13}, {}), 3), CapExceeded);
}

TEST_CASE("belts") {
  CHECK(enumerate_belts(2).size() == 2);
  CHECK(enumerate_belts(3).size() == 6);
  const auto five = enumerate_belts(5);
  CHECK(five.size() == 30);
  for (const auto& g : five) {
    CHECK(g.is_belt());
    CHECK_FALSE(is_directed_cycle(5, g.edges()));
  }
}

}  // TEST_SUITE
