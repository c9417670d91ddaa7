#include "doctest.h"

#include "blockscope/abacus.hpp"
#include "blockscope/block.hpp"
#include "blockscope/error.hpp"
#include "oracles.hpp"

using namespace blockscope;

namespace {

Partition P(std::initializer_list<int> parts) { return make_partition(parts); }

SkewShape sk(std::initializer_list<int> outer, std::initializer_list<int> inner) {
  return SkewShape(P(inner), P(outer));
}

const CombinatorialBlock& small_block() {
  static const CombinatorialBlock b = enumerate_block(5, 5, 8, P({}), P({2, 1}));
  return b;
}

}  // namespace

TEST_SUITE("block") {

TEST_CASE("classification") {
  CHECK(classify(ResidueMultiset(5, {1, 1, 0, 0, 1})) == BlockClass::ribbon);
  CHECK(classify(ResidueMultiset(3, {1, 1, 1})) == BlockClass::belt);
  CHECK(classify(ResidueMultiset(3, {2, 0, 1})) == BlockClass::other);
  CHECK(classify(ResidueMultiset(3)) == BlockClass::ribbon);
  CHECK(to_string(BlockClass::belt) == "belt");
}

TEST_CASE("the p = 5, l = 5, m = 8 block") {
  const auto& b = small_block();
  CHECK(b.kind == BlockClass::ribbon);
  CHECK(b.content.counts() == std::vector<int>{1, 1, 0, 0, 1});
  const std::vector<PShape> drawn{PShape(5, {{4, "RR"}}), PShape(5, {{0, "R"}, {4, ""}}),
                                  PShape(5, {{4, "UR"}}), PShape(5, {{1, ""}, {4, "U"}}),
                                  PShape(5, {{4, "UU"}})};
  CHECK(b.shapes.size() == 5);
  for (const auto& x : drawn) CHECK(b.shape_index(x) >= 0);

  const int x2 = b.shape_index(drawn[1]);
  std::vector<SkewShape> from_x2;
  for (std::size_t i = 0; i < b.members.size(); ++i) {
    if (b.member_shape[i] == x2) from_x2.push_back(b.members[i]);
  }
  std::sort(from_x2.begin(), from_x2.end());
  CHECK(from_x2 == std::vector<SkewShape>{sk({5, 3}, {4, 1}), sk({7, 1}, {5})});

  const auto d = decomposition_matrix(b);
  REQUIRE(d.entries.rows() == 5);
  REQUIRE(d.entries.cols() == 3);
  const int printed[5][3] = {{1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {0, 1, 1}, {0, 0, 1}};
  const std::vector<PShape> columns{drawn[0], drawn[2], drawn[4]};
  for (int r = 0; r < 5; ++r) {
    const int row = b.shape_index(drawn[r]);
    for (int c = 0; c < 3; ++c) {
      const auto it = std::find(d.columns.begin(), d.columns.end(), arrow_graph(columns[c]));
      REQUIRE(it != d.columns.end());
      CHECK(d.entries(row, it - d.columns.begin()) == printed[r][c]);
    }
  }
  CHECK(is_connected(d));
  CHECK(d.column_label(0) == "{4:RR}");
}

TEST_CASE("rows list refinements") {
  const auto& b = small_block();
  const auto d = decomposition_matrix(b);
  for (std::size_t r = 0; r < d.rows.size(); ++r) {
    const auto refs = refinements(d.rows[r]);
    for (std::size_t c = 0; c < d.columns.size(); ++c) {
      const bool in = std::find(refs.begin(), refs.end(), d.columns[c]) != refs.end();
      CHECK(d.entries(r, c) == (in ? 1 : 0));
    }
  }
}

TEST_CASE("trivial blocks") {
  const auto b = enumerate_block(3, 4, 4, P({3, 1}), P({3, 1}));
  REQUIRE(b.members.size() == 1);
  CHECK(b.members[0] == sk({3, 1}, {3, 1}));
  REQUIRE(b.shapes.size() == 1);
  CHECK(b.shapes[0].components().empty());
  const auto d = decomposition_matrix(b);
  CHECK(d.entries.rows() == 1);
  CHECK(d.entries.cols() == 1);
  CHECK(d.entries(0, 0) == 1);
  CHECK(linkage_path(b.shapes[0], b.shapes[0], b).size() == 1);

  CHECK_THROWS_AS(enumerate_block(3, 4, 4, P({2, 2}), P({3, 1})), PreconditionError);
  CHECK_THROWS_AS(enumerate_block(3, 4, 4, P({3, 1}), P({1})), PreconditionError);
  CHECK_THROWS_AS(enumerate_block(3, 4, 46, P({}), P({1})), CapExceeded);
}

TEST_CASE("enumerate_blocks agrees with a brute-force scan") {
  for (int p : {2, 3}) {
    for (int l = 0; l <= 5; ++l) {
      for (int n = 0; n <= 3; ++n) {
        const int m = l + n;
        std::map<std::pair<oracle::Parts, oracle::Parts>, std::vector<SkewShape>> groups;
        for (const auto& la : oracle::partitions(l)) {
          for (const auto& mu : oracle::partitions(m)) {
            if (!oracle::inside(la, mu)) continue;
            groups[{oracle::core(la, p), oracle::core(mu, p)}].push_back(
                SkewShape(Partition(la), Partition(mu)));
          }
        }
        const auto blocks = enumerate_blocks(p, l, m);
        CHECK(blocks.size() == groups.size());
        for (const auto& b : blocks) {
          auto expected = groups[{b.inner_core.parts(), b.outer_core.parts()}];
          std::sort(expected.begin(), expected.end());
          CHECK(b.members == expected);
          const auto single = enumerate_block(p, l, m, b.inner_core, b.outer_core);
          CHECK(single.members == b.members);
        }
      }
    }
  }
}

TEST_CASE("connectivity") {
  Eigen::MatrixXi id = Eigen::MatrixXi::Identity(2, 2);
  CHECK_FALSE(is_connected(id));
  Eigen::MatrixXi chain(2, 2);
  chain << 1, 1, 0, 1;
  CHECK(is_connected(chain));
  CHECK_THROWS_AS(is_connected(Eigen::MatrixXi(0, 0)), PreconditionError);
  std::vector<std::vector<int>> rows{{1, 0, 0}, {0, 1, 1}};
  CHECK_FALSE(oracle::connected(rows));
}

TEST_CASE("the l = 37, m = 42 block at p = 7") {
  const auto x = sk({14, 14, 7, 5, 2}, {14, 14, 4, 3, 2});
  const auto y = sk({9, 8, 7, 5, 5, 4, 4}, {9, 8, 4, 4, 4, 4, 4});
  const auto z = sk({9, 8, 7, 5, 5, 4, 4}, {8, 8, 7, 5, 4, 4, 1});
  CHECK(p_core(x.inner(), 7) == P({7, 3, 2, 2, 2}));
  CHECK(p_core(x.outer(), 7) == P({5, 3, 2, 2, 2}));

  const auto b = enumerate_block(7, 37, 42, P({7, 3, 2, 2, 2}), P({5, 3, 2, 2, 2}));
  CHECK(std::binary_search(b.members.begin(), b.members.end(), x));
  CHECK(std::binary_search(b.members.begin(), b.members.end(), y));
  CHECK(std::binary_search(b.members.begin(), b.members.end(), z));

  const auto sx = p_shape(x, 7);
  const auto sy = p_shape(y, 7);
  const auto sz = p_shape(z, 7);
  CHECK(distance(sx, sy) == 1);
  CHECK(distance(sx, sz) == 0);
  CHECK(distance(sy, sz) == 0);

  const auto found = find_closer_shape(sx, sy, b);
  CHECK(distance(sx, found) < 1);
  CHECK(distance(sy, found) < 1);
  CHECK_THROWS_AS(find_closer_shape(sx, sx, b), PreconditionError);

  const auto path = linkage_path(sx, sy, b);
  REQUIRE(path.size() >= 2);
  CHECK(path.front() == sx);
  CHECK(path.back() == sy);
  for (std::size_t k = 1; k < path.size(); ++k) CHECK(linkage_test(path[k - 1], path[k]));
  CHECK(linkage_diameter(b) >= 1);
  CHECK(is_connected(decomposition_matrix(b)));
}

TEST_CASE("local search in the l = 112, m = 119 belt block") {
  const auto x = sk({20, 18, 17, 16, 12, 12, 12, 12}, {20, 18, 17, 16, 12, 12, 11, 6});
  const auto y = sk({21, 21, 17, 15, 14, 13, 12, 6}, {20, 16, 16, 15, 14, 13, 12, 6});
  const auto z = sk({22, 21, 17, 16, 14, 12, 11, 6}, {20, 18, 17, 16, 12, 12, 11, 6});
  for (const auto& s : {x, y, z}) {
    CHECK(p_core(s.inner(), 7) == P({13, 7, 3, 2, 2, 1}));
    CHECK(p_core(s.outer(), 7) == P({13, 7, 3, 2, 2, 1}));
    CHECK(skew_content(s, 7).is_full_set());
  }
  const auto sx = p_shape(x, 7);
  const auto sy = p_shape(y, 7);
  CHECK(distance_set(sx, sy) == std::vector<int>{0, 4});
  CHECK(distance(sx, p_shape(z, 7)) == 1);
  CHECK(distance(sy, p_shape(z, 7)) == 0);

  const auto found = find_closer_member(x, y, 7);
  CHECK(p_core(found.inner(), 7) == P({13, 7, 3, 2, 2, 1}));
  CHECK(p_core(found.outer(), 7) == P({13, 7, 3, 2, 2, 1}));
  CHECK(found.inner().size() == 112);
  CHECK(found.outer().size() == 119);
  CHECK(distance(sx, p_shape(found, 7)) < 2);
  CHECK(distance(sy, p_shape(found, 7)) < 2);
}

TEST_CASE("one-row belt shapes") {
  const auto la = P({12, 8, 5, 4, 1});
  CHECK(mu_lambda(la, 7) == P({19, 8, 5, 4, 1}));
  CHECK(p_shape(SkewShape(la, mu_lambda(la, 7)), 7) == belt_row_shape(4, 7));
  CHECK(mu_lambda(P({29, 1}), 7) == P({36, 1}));
  CHECK(p_shape(SkewShape(P({29, 1}), P({36, 1})), 7) == belt_row_shape(0, 7));
  CHECK(mu_lambda(P({}), 7) == P({7}));
  for (int i = 0; i < 7; ++i) CHECK(arrow_graph(belt_row_shape(i, 7)).clockwise());

  // (12,12,5,4,4) minus lambda links to X_4 through (14,12,5,4,2) minus lambda.
  const auto x = p_shape(SkewShape(la, P({12, 12, 5, 4, 4})), 7);
  const auto via = p_shape(SkewShape(la, P({14, 12, 5, 4, 2})), 7);
  CHECK(linkage_test(x, via));
  CHECK(linkage_test(via, belt_row_shape(4, 7)));
}

TEST_CASE("clockwise shapes in belt blocks") {
  for (int p : {2, 3}) {
    for (int l = 0; l <= 6; ++l) {
      for (const auto& b : enumerate_blocks(p, l, l + p)) {
        if (b.kind != BlockClass::belt) {
          CHECK_THROWS_AS(clockwise_linkage_check(b), ScopeError);
          continue;
        }
        CHECK(clockwise_linkage_check(b));
      }
    }
  }
}

TEST_CASE("out of scope blocks") {
  const auto blocks = enumerate_blocks(2, 0, 3);
  bool saw_other = false;
  for (const auto& b : blocks) {
    if (b.kind != BlockClass::other) continue;
    saw_other = true;
    CHECK(b.shapes.empty());
    CHECK_THROWS_AS(decomposition_matrix(b), ScopeError);
  }
  CHECK(saw_other);
}

}  // TEST_SUITE
