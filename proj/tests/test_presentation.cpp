#include <catch2/catch_amalgamated.hpp>

#include "collar/bs12.hpp"
#include "collar/presentation.hpp"
#include "collar/sampling.hpp"

using namespace collar;

namespace {
GenWord W(std::initializer_list<Letter> ls) { return GenWord(std::vector<Letter>(ls)); }
}  // namespace

TEST_CASE("free reduction", "[presentation]") {
  REQUIRE(W({{"a", 1}, {"a", -1}}).free_reduce().empty());
  REQUIRE(GenWord().free_reduce().empty());
  GenWord w = W({{"a", 1}, {"b", 1}, {"b", -1}, {"a", 1}}).free_reduce();
  REQUIRE(w == W({{"a", 1}, {"a", 1}}));
  // idempotent
  REQUIRE(w.free_reduce() == w);
  // nested cancellation
  REQUIRE(W({{"a", 1}, {"b", 1}, {"b", -1}, {"a", -1}}).free_reduce().empty());
}

TEST_CASE("semidirect presentation: slide relators", "[presentation]") {
  Presentation k{{"x"}, {}};
  Presentation q{{"y"}, {}};

  SECTION("trivial action gives the Z^2 commutator presentation") {
    SemidirectData sd;
    sd.k_gens = {"x"};
    sd.q_gens = {"y"};
    sd.action["y"]["x"] = GenWord::gen("x");
    Presentation p = semidirect_presentation(k, q, sd);
    REQUIRE(p.generators == std::vector<std::string>{"x", "y"});
    REQUIRE(p.relators.size() == 1);
    // y x y^-1 x^-1, the commutator
    REQUIRE(p.relators[0] == W({{"y", 1}, {"x", 1}, {"y", -1}, {"x", -1}}));
  }

  SECTION("inverting action gives the Klein bottle presentation") {
    SemidirectData sd;
    sd.k_gens = {"x"};
    sd.q_gens = {"y"};
    sd.action["y"]["x"] = GenWord::gen("x", -1);
    Presentation p = semidirect_presentation(k, q, sd);
    REQUIRE(p.relators.size() == 1);
    // y x y^-1 (x^-1)^-1 = y x y^-1 x
    REQUIRE(p.relators[0] == W({{"y", 1}, {"x", 1}, {"y", -1}, {"x", 1}}));
  }

  SECTION("relator count = |relK| + |relQ| + |kGens|·|qGens|") {
    Presentation k2{{"x1", "x2"}, {W({{"x1", 1}, {"x1", 1}})}};
    Presentation q2{{"y1", "y2"}, {W({{"y1", 1}, {"y1", 1}, {"y1", 1}})}};
    SemidirectData sd;
    sd.k_gens = k2.generators;
    sd.q_gens = q2.generators;
    for (const auto& y : sd.q_gens)
      for (const auto& x : sd.k_gens) sd.action[y][x] = GenWord::gen(x);
    Presentation p = semidirect_presentation(k2, q2, sd);
    REQUIRE(p.relators.size() == 1 + 1 + 4);
  }

  SECTION("missing action entry is an error") {
    SemidirectData sd;
    sd.k_gens = {"x"};
    sd.q_gens = {"y"};
    REQUIRE_THROWS_AS(semidirect_presentation(k, q, sd), ValidationError);
  }

  SECTION("name collisions are rejected") {
    SemidirectData sd;
    sd.k_gens = {"x"};
    sd.q_gens = {"x"};
    sd.action["x"]["x"] = GenWord::gen("x");
    REQUIRE_THROWS_AS(sd.validate(), ValidationError);
  }
}

TEST_CASE("normal form rewriting", "[presentation]") {
  SemidirectData sd;
  sd.k_gens = {"x"};
  sd.q_gens = {"y"};
  sd.action["y"]["x"] = GenWord::gen("x");
  sd.inverse_action["y"]["x"] = GenWord::gen("x");

  SECTION("trivial action just sorts") {
    GenWord w = W({{"y", 1}, {"x", 1}});
    REQUIRE(normal_form(w, sd) == W({{"x", 1}, {"y", 1}}));
  }

  SECTION("inverting action applies the rule once") {
    SemidirectData inv;
    inv.k_gens = {"x"};
    inv.q_gens = {"y"};
    inv.action["y"]["x"] = GenWord::gen("x", -1);
    inv.inverse_action["y"]["x"] = GenWord::gen("x", -1);
    REQUIRE(normal_form(W({{"y", 1}, {"x", 1}}), inv) == W({{"x", -1}, {"y", 1}}));
  }

  SECTION("already-normal input is unchanged") {
    GenWord w = W({{"x", 1}, {"x", 1}, {"y", -1}});
    REQUIRE(normal_form(w, sd) == w);
  }

  SECTION("inverse q-letters require the inverse action") {
    SemidirectData noinv;
    noinv.k_gens = {"x"};
    noinv.q_gens = {"y"};
    noinv.action["y"]["x"] = GenWord::gen("x", -1);
    REQUIRE_THROWS_AS(normal_form(W({{"y", -1}, {"x", 1}}), noinv), PreconditionError);
    // no crossing needed: no error
    REQUIRE(normal_form(W({{"x", 1}, {"y", -1}}), noinv) == W({{"x", 1}, {"y", -1}}));
  }

  SECTION("unknown generators are rejected") {
    REQUIRE_THROWS_AS(normal_form(W({{"z", 1}}), sd), ValidationError);
  }
}

TEST_CASE("normal form: termination, idempotence, retraction on random words",
          "[presentation]") {
  // towers with <= 3 k-gens and <= 2 q-gens, words up to length 40
  Rng rng(17);
  const std::vector<std::string> kg{"x1", "x2", "x3"};
  const std::vector<std::string> qg{"y1", "y2"};
  for (int trial = 0; trial < 300; ++trial) {
    SemidirectData sd;
    sd.k_gens = kg;
    sd.q_gens = qg;
    for (const auto& y : qg)
      for (const auto& x : kg) {
        // random invertible-looking single-letter action: x -> x'^{±1}
        const std::string tgt = kg[rng.below(kg.size())];
        const int e = rng.flip() ? 1 : -1;
        sd.action[y][x] = GenWord::gen(tgt, e);
        sd.inverse_action[y][x] = GenWord::gen(tgt, -e);
      }
    std::vector<std::string> alphabet = kg;
    alphabet.insert(alphabet.end(), qg.begin(), qg.end());
    GenWord w = random_gen_word(rng, alphabet, 40);
    GenWord nf = normal_form(w, sd);
    // k-letters all precede q-letters
    bool seen_q = false;
    for (const auto& l : nf.letters()) {
      if (sd.is_q(l.gen))
        seen_q = true;
      else
        REQUIRE_FALSE(seen_q);
    }
    // idempotent
    REQUIRE(normal_form(nf, sd) == nf);
    // q-suffix = retraction image: exponent sums per q-generator agree
    for (const auto& y : qg) REQUIRE(nf.exponent_sum(y) == w.exponent_sum(y));
  }
}

TEST_CASE("exhaustive small words terminate", "[presentation]") {
  SemidirectData sd;
  sd.k_gens = {"x1", "x2"};
  sd.q_gens = {"y"};
  sd.action["y"]["x1"] = GenWord::gen("x2");
  sd.action["y"]["x2"] = GenWord::gen("x1", -1);
  sd.inverse_action["y"]["x1"] = GenWord::gen("x2", -1);
  sd.inverse_action["y"]["x2"] = GenWord::gen("x1");
  std::vector<Letter> alphabet{{"x1", 1}, {"x1", -1}, {"x2", 1}, {"x2", -1}, {"y", 1}, {"y", -1}};
  // all words of length <= 4
  std::function<void(GenWord, int)> rec = [&](GenWord w, int left) {
    GenWord nf = normal_form(w, sd);
    REQUIRE(normal_form(nf, sd) == nf);
    if (left == 0) return;
    for (const auto& l : alphabet) rec(w * GenWord(std::vector<Letter>{l}), left - 1);
  };
  rec(GenWord(), 4);
}

TEST_CASE("verify_hom against concrete models", "[presentation]") {
  SECTION("Z^2 into BS(1,2) with alpha -> identity, beta -> t") {
    Presentation z2{{"x", "y"}, {W({{"y", 1}, {"x", 1}, {"y", -1}, {"x", -1}})}};
    BSGroupModel m;
    std::map<std::string, BSElement> images{{"x", BSElement::identity()},
                                            {"y", BSElement::t()}};
    REQUIRE(verify_hom(z2, m, images).verified);
  }

  SECTION("BS(1,2) presentation into the matrix model") {
    BSGroupModel m;
    std::map<std::string, BSElement> images{{"t", BSElement::t()}, {"x", BSElement::x()}};
    REQUIRE(verify_hom(bs12_presentation(), m, images).verified);
  }

  SECTION("x -> t fails with the failing relator reported") {
    BSGroupModel m;
    std::map<std::string, BSElement> images{{"t", BSElement::t()}, {"x", BSElement::t()}};
    auto check = verify_hom(bs12_presentation(), m, images);
    REQUIRE_FALSE(check.verified);
    REQUIRE(check.failing_relator.has_value());
  }

  SECTION("unmapped generators are an error") {
    BSGroupModel m;
    std::map<std::string, BSElement> images{{"t", BSElement::t()}};
    REQUIRE_THROWS_AS(verify_hom(bs12_presentation(), m, images), ValidationError);
  }
}

TEST_CASE("tower presentations G_j", "[presentation]") {
  Presentation g0{{"t0"}, {}};

  SECTION("j = 1 relator matches the schema") {
    Presentation g1 = gt_tower_presentation(g0, "t0", 1);
    REQUIRE(g1.generators == std::vector<std::string>{"t0", "t1"});
    REQUIRE(g1.relators.size() == 1);
    REQUIRE(g1.relators[0] ==
            W({{"t1", -1}, {"t1", -1}, {"t0", -1}, {"t1", 1}, {"t0", 1}}));
  }

  SECTION("j = 2 appends the t2 relator over (t2, t1)") {
    Presentation g2 = gt_tower_presentation(g0, "t0", 2);
    REQUIRE(g2.generators.size() == 3);
    REQUIRE(g2.relators.size() == 2);
    REQUIRE(g2.relators[1] ==
            W({{"t2", -1}, {"t2", -1}, {"t1", -1}, {"t2", 1}, {"t1", 1}}));
  }

  SECTION("generator and relator counts follow the schema") {
    Presentation base{{"a", "t0"}, {W({{"a", 1}, {"a", 1}})}};
    Presentation g3 = gt_tower_presentation(base, "t0", 3);
    REQUIRE(g3.generators.size() == 2 + 3);
    REQUIRE(g3.relators.size() == 1 + 3);
  }

  SECTION("unknown base generator is an error") {
    REQUIRE_THROWS_AS(gt_tower_presentation(g0, "s", 1), ValidationError);
  }
}

TEST_CASE("tower epimorphisms r_j", "[presentation]") {
  Presentation g0{{"t0"}, {}};

  SECTION("t1-relator image freely reduces to empty") {
    TowerEpi epi = gt_tower_epi(g0, "t0", 1);
    REQUIRE(epi.verified);
    REQUIRE(epi.images.at("t1").empty());
    REQUIRE(epi.images.at("t0") == GenWord::gen("t0"));
    Presentation g1 = gt_tower_presentation(g0, "t0", 1);
    REQUIRE(g1.relators[0].substitute(epi.images).free_reduce().empty());
  }

  SECTION("identity generators map through unchanged") {
    TowerEpi epi = gt_tower_epi(g0, "t0", 3);
    REQUIRE(epi.verified);
    REQUIRE(epi.images.at("t1") == GenWord::gen("t1"));
    REQUIRE(epi.images.at("t2") == GenWord::gen("t2"));
    REQUIRE(epi.images.at("t3").empty());
  }

  SECTION("composite r1 ∘ r2 kills both t1 and t2") {
    TowerEpi r2 = gt_tower_epi(g0, "t0", 2);
    TowerEpi r1 = gt_tower_epi(g0, "t0", 1);
    auto composite = compose_images(r2.images, r1.images);
    REQUIRE(composite.at("t2").empty());
    REQUIRE(composite.at("t1").empty());
    REQUIRE(composite.at("t0") == GenWord::gen("t0"));
  }
}
