#include <catch2/catch_amalgamated.hpp>

#include "collar/json_io.hpp"
#include "collar/sampling.hpp"

using namespace collar;

TEST_CASE("permutation and group wire format", "[json]") {
  Permutation p({2, 0, 1});
  Json j = to_json(p);
  REQUIRE(j.dump() == "[2,0,1]");
  REQUIRE(permutation_from_json(j) == p);

  PermGroup s3 = PermGroup::symmetric(3);
  Json gj = to_json(s3);
  REQUIRE(gj.at("degree") == 3);
  PermGroup back = perm_group_from_json(gj);
  REQUIRE(back == s3);

  REQUIRE_THROWS_AS(permutation_from_json(Json::parse("[0,0]")), ValidationError);
  REQUIRE_THROWS_AS(perm_group_from_json(Json::parse("{\"degree\":2}")), ValidationError);
}

TEST_CASE("tree pair wire format round-trips", "[json]") {
  Rng rng(107);
  for (int i = 0; i < 300; ++i) {
    TreePair t = random_tree_pair(rng, 8);
    Json j = to_json(t);
    REQUIRE(tree_pair_from_json(j) == t);
  }
  // the documented shape
  TreePair u3 = TreePair::element_of_order(3);
  Json j = to_json(u3);
  REQUIRE(j.at("domain").get<std::string>() == "(*,(*,*))");
  REQUIRE(j.at("perm").get<std::vector<int>>() == std::vector<int>{1, 2, 0});
}

TEST_CASE("free product word wire format", "[json]") {
  Rng rng(109);
  for (int i = 0; i < 200; ++i) {
    FPElement w = random_fp_element(rng);
    REQUIRE(fp_element_from_json(to_json(w)) == w);
  }
  Json j = to_json(FPElement::syllable(2, TreePair::element_of_order(2)));
  REQUIRE(j.is_array());
  REQUIRE(j.at(0).at("factor") == 2);
}

TEST_CASE("presentation wire format", "[json]") {
  Presentation p{{"a", "b"},
                 {GenWord({Letter{"a", 1}, Letter{"b", -1}}),
                  GenWord({Letter{"b", 1}, Letter{"b", 1}})}};
  Json j = to_json(p);
  REQUIRE(j.dump() ==
          R"({"generators":["a","b"],"relators":[[["a",1],["b",-1]],[["b",1],["b",1]]]})");
  Presentation back = presentation_from_json(j);
  REQUIRE(back.generators == p.generators);
  REQUIRE(back.relators == p.relators);
}

TEST_CASE("semidirect data round-trips through JSON", "[json]") {
  SemidirectData sd;
  sd.k_gens = {"x"};
  sd.q_gens = {"y"};
  sd.action["y"]["x"] = GenWord::gen("x", -1);
  sd.inverse_action["y"]["x"] = GenWord::gen("x", -1);
  SemidirectData back = semidirect_from_json(to_json(sd));
  REQUIRE(back.k_gens == sd.k_gens);
  REQUIRE(back.action.at("y").at("x") == sd.action.at("y").at("x"));
  REQUIRE(back.inverse_action.at("y").at("x") == sd.inverse_action.at("y").at("x"));
}

TEST_CASE("prime sequences and tower elements", "[json]") {
  PrimeSeq s({2, 3, 5});
  REQUIRE(to_json(s).dump() == "[2,3,5]");
  REQUIRE(prime_seq_from_json(to_json(s)) == s);
  REQUIRE_THROWS_AS(prime_seq_from_json(Json::parse("[4]")), ValidationError);

  Rng rng(113);
  TowerElement e = random_tower_element(rng, s);
  TowerElement back = tower_element_from_json(to_json(e));
  REQUIRE(back == e);
}

TEST_CASE("group ring matrices round-trip with big coefficients", "[json]") {
  GroupPtr g = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(3));
  GRMatrix m(g, 2, 2);
  m(0, 0) = GroupRingElem(g, {BigInt("123456789012345678901234567890"), BigInt(-1), BigInt(0)});
  m(1, 1) = GroupRingElem::one(g);
  Json j = to_json(m);
  GRMatrix back = gr_matrix_from_json(j);
  REQUIRE(back == m);
}

TEST_CASE("integer matrices round-trip", "[json]") {
  IntMatrix m(2, 3);
  m(0, 0) = BigInt("-987654321987654321987654321");
  m(1, 2) = 7;
  IntMatrix back = int_matrix_from_json(to_json(m));
  REQUIRE(back == m);
}

TEST_CASE("canonical output: keys sorted, integers only", "[json]") {
  Json j;
  j["zeta"] = 1;
  j["alpha"] = 2;
  REQUIRE(j.dump() == R"({"alpha":2,"zeta":1})");
}
