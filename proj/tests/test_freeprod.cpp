#include <catch2/catch_amalgamated.hpp>

#include "collar/free_product.hpp"
#include "collar/sampling.hpp"

using namespace collar;

namespace {
FPElement syl(int f, const TreePair& t) { return FPElement::syllable(f, t); }
}  // namespace

TEST_CASE("free product words: reduction invariants", "[freeprod]") {
  TreePair g = TreePair::basic_infinite_order();
  TreePair h = TreePair::element_of_order(2);

  SECTION("a times the empty word") {
    FPElement a = syl(1, g) * syl(2, h);
    REQUIRE(a * FPElement::empty_word() == a);
    REQUIRE(a.length() == 2);
  }

  SECTION("syllable cancellation") {
    FPElement w = syl(1, g) * syl(1, g.inverse());
    REQUIRE(w.is_empty());
  }

  SECTION("boundary merging: [P1:g][P2:x] * [P2:x^-1][P1:h] = [P1:gh]") {
    FPElement left = syl(1, g) * syl(2, h);
    FPElement right = syl(2, h.inverse()) * syl(1, h);
    FPElement prod = left * right;
    REQUIRE(prod.length() == 1);
    REQUIRE(prod.syllables()[0].factor == 1);
    REQUIRE(prod.syllables()[0].element == g * h);
  }

  SECTION("identity syllables are dropped on construction") {
    FPElement w = fp_reduce({{1, TreePair::identity()}, {2, h}});
    REQUIRE(w.length() == 1);
    REQUIRE_THROWS_AS(fp_reduce({{3, h}}), ValidationError);
  }

  SECTION("adjacent same-factor syllables merge") {
    FPElement w = fp_reduce({{1, g}, {1, g}});
    REQUIRE(w.length() == 1);
    REQUIRE(w.syllables()[0].element == g * g);
  }
}

TEST_CASE("partial conjugation: definition cases", "[freeprod]") {
  TreePair u = TreePair::element_of_order(3);
  TreePair g = TreePair::basic_infinite_order();

  // P1 syllables are fixed
  FPElement p1 = syl(1, g);
  REQUIRE(partial_conjugation(u, p1) == p1);

  // P2 syllables are conjugated inside the factor copy
  FPElement p2 = syl(2, g);
  FPElement img = partial_conjugation(u, p2);
  REQUIRE(img.length() == 1);
  REQUIRE(img.syllables()[0].factor == 2);
  REQUIRE(img.syllables()[0].element == (u * g) * u.inverse());

  // mixed word: only the P2 syllable moves
  FPElement w = syl(1, g) * syl(2, g) * syl(1, g.inverse());
  FPElement wi = partial_conjugation(u, w);
  REQUIRE(wi.length() == 3);
  REQUIRE(wi.syllables()[0].element == g);
  REQUIRE(wi.syllables()[1].element == (u * g) * u.inverse());
  REQUIRE(wi.syllables()[2].element == g.inverse());

  REQUIRE_THROWS_AS(partial_conjugation(TreePair::identity(), w), ValidationError);
}

TEST_CASE("partial conjugation is a homomorphism with inverse phi_{u^-1}", "[freeprod]") {
  Rng rng(23);
  TreePair u = TreePair::element_of_order(2);
  for (int i = 0; i < 1000; ++i) {
    FPElement a = random_fp_element(rng), b = random_fp_element(rng);
    REQUIRE(partial_conjugation(u, a * b) ==
            partial_conjugation(u, a) * partial_conjugation(u, b));
    REQUIRE(partial_conjugation(u.inverse(), partial_conjugation(u, a)) == a);
  }
}

TEST_CASE("automorphism order check", "[freeprod]") {
  Rng rng(3);
  TreePair x0 = TreePair::basic_infinite_order();

  SECTION("order 2: phi^2 = id on 100 random words") {
    TreePair u = TreePair::element_of_order(2);
    std::vector<FPElement> samples;
    for (int i = 0; i < 100; ++i) samples.push_back(random_fp_element(rng));
    samples.push_back(syl(2, x0));
    AutOrderReport rep = automorphism_order_check(u, samples);
    REQUIRE(rep.declared_order == 2);
    REQUIRE(rep.ok());
  }

  SECTION("order 3 with a moving witness") {
    TreePair u = TreePair::element_of_order(3);
    std::vector<FPElement> samples{syl(2, x0)};
    for (int i = 0; i < 50; ++i) samples.push_back(random_fp_element(rng));
    AutOrderReport rep = automorphism_order_check(u, samples);
    REQUIRE(rep.declared_order == 3);
    REQUIRE(rep.ok());
  }

  SECTION("pure-P1 samples provide no witness") {
    TreePair u = TreePair::element_of_order(2);
    std::vector<FPElement> samples{syl(1, x0)};
    AutOrderReport rep = automorphism_order_check(u, samples);
    REQUIRE(rep.power_is_identity);
    REQUIRE_FALSE(rep.lower_powers_move);
  }

  SECTION("infinite-order u is rejected") {
    std::vector<FPElement> samples{syl(2, x0)};
    REQUIRE_THROWS_AS(automorphism_order_check(x0, samples), PreconditionError);
  }
}

TEST_CASE("phi_u fixes every pure-P1 word", "[freeprod]") {
  Rng rng(9);
  TreePair u = TreePair::element_of_order(5);
  for (int i = 0; i < 500; ++i) {
    std::vector<Syllable> sylls;
    const int len = static_cast<int>(rng.below(4));
    for (int s = 0; s < len; ++s) sylls.push_back({1, random_nonidentity_tree_pair(rng)});
    FPElement w(std::move(sylls));
    REQUIRE(w.pure_p1());
    REQUIRE(partial_conjugation(u, w) == w);
  }
}

TEST_CASE("tuple automorphism", "[freeprod]") {
  TreePair x0 = TreePair::basic_infinite_order();

  SECTION("empty tuple") {
    TupleElement empty = TupleElement::identity(0);
    REQUIRE(tuple_automorphism({}, empty) == empty);
  }

  SECTION("pure-P1 tuples are fixed") {
    TupleElement t;
    t.components = {FPElement::syllable(1, x0), FPElement::syllable(1, x0.inverse())};
    REQUIRE(tuple_automorphism({2, 3}, t) == t);
  }

  SECTION("length mismatch is an error") {
    REQUIRE_THROWS_AS(tuple_automorphism({2, 3}, TupleElement::identity(1)), ValidationError);
  }

  SECTION("power reduction matches iterated application") {
    Rng rng(4);
    std::vector<int> primes{2, 3};
    for (int i = 0; i < 50; ++i) {
      TupleElement t = random_tuple(rng, 2);
      TupleElement once = t;
      for (int k = 0; k < 5; ++k) once = tuple_automorphism(primes, once);
      REQUIRE(tuple_automorphism_power(primes, t, 5) == once);
      REQUIRE(tuple_automorphism_power(primes, t, -1) ==
              tuple_automorphism_power(primes, t, 5));  // -1 ≡ 5 mod 6 componentwise
    }
  }
}

TEST_CASE("straightening pattern classification", "[freeprod]") {
  const std::vector<FPElement> probes = factor_probe_set();
  REQUIRE(probes.size() == 4);

  auto embed = [](const FPElement& w, std::size_t slot, std::size_t m) {
    TupleElement t = TupleElement::identity(m);
    t.components[slot] = w;
    return t;
  };

  SECTION("identity map S^2 -> S^2 is permutation-shaped with diagonal pattern") {
    FactorHom hom;
    hom.domain_factors = 2;
    hom.target_factors = 2;
    for (std::size_t i = 0; i < 2; ++i) {
      std::vector<TupleElement> imgs;
      for (const auto& p : probes) imgs.push_back(embed(p, i, 2));
      hom.images.push_back(std::move(imgs));
    }
    StraighteningPattern pat = straightening_pattern(hom);
    REQUIRE(pat.shape == PatternShape::PermutationShaped);
    REQUIRE(pat.nontrivial[0][0]);
    REQUIRE_FALSE(pat.nontrivial[0][1]);
    REQUIRE(pat.nontrivial[1][1]);
  }

  SECTION("factor swap is permutation-shaped with antidiagonal pattern") {
    FactorHom hom;
    hom.domain_factors = 2;
    hom.target_factors = 2;
    for (std::size_t i = 0; i < 2; ++i) {
      std::vector<TupleElement> imgs;
      for (const auto& p : probes) imgs.push_back(embed(p, 1 - i, 2));
      hom.images.push_back(std::move(imgs));
    }
    StraighteningPattern pat = straightening_pattern(hom);
    REQUIRE(pat.shape == PatternShape::PermutationShaped);
    REQUIRE(pat.nontrivial[0][1]);
    REQUIRE(pat.nontrivial[1][0]);
  }

  SECTION("crush-last-factor S^3 -> S^2 is injection-shaped") {
    FactorHom hom;
    hom.domain_factors = 3;
    hom.target_factors = 2;
    for (std::size_t i = 0; i < 2; ++i) {
      std::vector<TupleElement> imgs;
      for (const auto& p : probes) imgs.push_back(embed(p, i, 2));
      hom.images.push_back(std::move(imgs));
    }
    hom.images.push_back(std::vector<TupleElement>(4, TupleElement::identity(2)));
    StraighteningPattern pat = straightening_pattern(hom);
    REQUIRE(pat.shape == PatternShape::InjectionShaped);
    REQUIRE_FALSE(pat.nontrivial[2][0]);
    REQUIRE_FALSE(pat.nontrivial[2][1]);
  }

  SECTION("componentwise partial conjugation (an automorphism) is permutation-shaped") {
    TreePair u = TreePair::element_of_order(2);
    FactorHom hom;
    hom.domain_factors = 2;
    hom.target_factors = 2;
    for (std::size_t i = 0; i < 2; ++i) {
      std::vector<TupleElement> imgs;
      for (const auto& p : probes) imgs.push_back(embed(partial_conjugation(u, p), i, 2));
      hom.images.push_back(std::move(imgs));
    }
    REQUIRE(straightening_pattern(hom).shape == PatternShape::PermutationShaped);
  }

  SECTION("a map hitting two targets from one factor is 'other'") {
    FactorHom hom;
    hom.domain_factors = 2;
    hom.target_factors = 2;
    std::vector<TupleElement> both;
    for (const auto& p : probes) {
      TupleElement t = TupleElement::identity(2);
      t.components[0] = p;
      t.components[1] = p;
      both.push_back(t);
    }
    hom.images.push_back(both);
    hom.images.push_back(std::vector<TupleElement>(4, TupleElement::identity(2)));
    REQUIRE(straightening_pattern(hom).shape == PatternShape::Other);
  }
}
