#include "doctest.h"

#include "blockscope/error.hpp"
#include "blockscope/serialize.hpp"

using namespace blockscope;

TEST_SUITE("serialize") {

TEST_CASE("partitions and skew shapes") {
  const auto nu = make_partition({3, 2, 2});
  CHECK(to_json(nu).dump() == "[3,2,2]");
  CHECK(partition_from_json(to_json(nu)) == nu);
  CHECK(to_json(make_partition({})).dump() == "[]");
  CHECK_THROWS_AS(partition_from_json(Json::parse("[1,2]")), ValidationError);
  CHECK_THROWS_AS(partition_from_json(Json::parse("{\"a\":1}")), ValidationError);
  CHECK_THROWS_AS(partition_from_json(Json::parse("[\"x\"]")), ValidationError);

  const SkewShape s(make_partition({2}), make_partition({4, 1}));
  CHECK(to_json(s).dump() == "{\"inner\":[2],\"outer\":[4,1]}");
  CHECK(skew_from_json(to_json(s)) == s);
  CHECK_THROWS_AS(skew_from_json(Json::parse("{\"inner\":[3],\"outer\":[2]}")), ValidationError);
}

TEST_CASE("content and abacus") {
  CHECK(to_json(ResidueMultiset(4, {2, 4, 1, 2})).dump() ==
        "{\"p\":4,\"counts\":{\"0\":2,\"1\":4,\"2\":1,\"3\":2}}");
  const auto a = AbacusDisplay::from_partition(make_partition({2}), 2, 2);
  CHECK(to_json(a).dump() == "{\"e\":2,\"charge\":2,\"beads\":[0,3]}");
}

TEST_CASE("shapes and arrow graphs round trip") {
  const PShape x(7, {{1, "RU"}, {6, "U"}});
  CHECK(pshape_from_json(to_json(x)) == x);
  const auto g = arrow_graph(x);
  const auto j = to_json(g);
  CHECK(j["vertices"].dump() == "[0,1,2,3,6]");
  CHECK(j["edges"].dump() == "{\"0\":\"none\",\"1\":\"fwd\",\"2\":\"bwd\",\"6\":\"bwd\"}");
  CHECK(arrow_graph_from_json(j) == g);

  for (const auto& belt : enumerate_belts(5)) CHECK(arrow_graph_from_json(to_json(belt)) == belt);

  CHECK_THROWS_AS(arrow_graph_from_json(Json::parse(
                      R"({"p":3,"vertices":[0,1,2],"edges":{"0":"fwd","1":"fwd","2":"fwd"}})")),
                  ValidationError);
  CHECK_THROWS_AS(arrow_graph_from_json(Json::parse(R"({"p":3,"vertices":[0,1],"edges":{"x":"fwd"}})")),
                  ValidationError);
  CHECK_THROWS_AS(pshape_from_json(Json::parse(R"({"p":3,"components":[{"start":0,"steps":"Q"}]})")),
                  ValidationError);
  CHECK(edge_from_name(edge_name(Edge::backward)) == Edge::backward);
  CHECK_THROWS_AS(edge_from_name("sideways"), ValidationError);
}

TEST_CASE("characters round trip") {
  FormalCharacter ch(3);
  ch.add({2, 0, 2});
  ch.add({2, 2, 0}, 2);
  const auto j = to_json(ch);
  CHECK(j.dump() == "{\"p\":3,\"terms\":[{\"seq\":[2,0,2],\"mult\":1},{\"seq\":[2,2,0],\"mult\":2}]}");
  CHECK(character_from_json(j) == ch);
}

TEST_CASE("decomposition matrix exports") {
  const auto b = enumerate_block(5, 5, 8, make_partition({}), make_partition({2, 1}));
  const auto d = decomposition_matrix(b);
  const auto j = to_json(d);
  CHECK(j["entries"].size() == 5);
  CHECK(j["columns"].size() == 3);
  for (std::size_t c = 0; c < 3; ++c) {
    CHECK(arrow_graph_from_json(j["columns"][c]["graph"]) == d.columns[c]);
  }
  for (std::size_t r = 0; r < 5; ++r) CHECK(pshape_from_json(j["rows"][r]) == d.rows[r]);
  CHECK(to_csv(d) ==
        "\"\",\"{4:RR}\",\"{4:UR}\",\"{4:UU}\"\n"
        "\"{0:R} {4:}\",1,1,0\n"
        "\"{1:} {4:U}\",0,1,1\n"
        "\"{4:RR}\",1,0,0\n"
        "\"{4:UR}\",0,1,0\n"
        "\"{4:UU}\",0,0,1\n");

  const auto jb = to_json(b);
  CHECK(jb["class"] == "ribbon");
  CHECK(jb["members"].size() == b.members.size());
  for (std::size_t i = 0; i < b.members.size(); ++i) {
    CHECK(skew_from_json(jb["members"][i]) == b.members[i]);
  }
  // Dumps are byte-stable.
  CHECK(to_json(b).dump() == jb.dump());
}

TEST_CASE("belt modules") {
  const auto g = enumerate_belts(3).front();
  const auto m = belt_module(g, linear_extensions(g).front());
  const auto j = to_json(m);
  CHECK(j["p"] == 3);
  CHECK(j["dim"] == 1);
  CHECK(j["matrices"]["z"].size() == 3);
  CHECK(j["matrices"]["s"].size() == 2);
  CHECK(arrow_graph_from_json(j["belt"]) == g);
  const auto r = to_json(verify_relations(m));
  CHECK(r["failures"] == 0);
  CHECK(r["closure"] == true);
}

}  // TEST_SUITE
