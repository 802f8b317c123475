#include <catch2/catch_amalgamated.hpp>

#include "collar/perm_group.hpp"
#include "collar/small_groups.hpp"

using namespace collar;

TEST_CASE("permutation validation and arithmetic", "[perm]") {
  REQUIRE_THROWS_AS(Permutation({0, 0, 1}), ValidationError);
  REQUIRE_THROWS_AS(Permutation({0, 3}), ValidationError);
  Permutation c = Permutation::from_cycles(3, {{0, 1, 2}});
  Permutation t = Permutation::from_cycles(3, {{0, 1}});
  REQUIRE(c.order() == 3);
  REQUIRE(t.order() == 2);
  REQUIRE((c * c.inverse()).is_identity());
  // (t * c)(x) = t(c(x))
  REQUIRE((t * c)(0) == 0);
  REQUIRE((t * c)(2) == 1);
}

TEST_CASE("generate: closure examples", "[perm]") {
  PermGroup inv = PermGroup::generate(2, {Permutation::from_cycles(2, {{0, 1}})});
  REQUIRE(inv.order() == 2);

  PermGroup s3 = PermGroup::generate(3, {Permutation::from_cycles(3, {{0, 1, 2}}),
                                         Permutation::from_cycles(3, {{0, 1}})});
  REQUIRE(s3.order() == 6);

  PermGroup triv = PermGroup::generate(1, {});
  REQUIRE(triv.order() == 1);

  REQUIRE_THROWS_AS(PermGroup::generate(7, {Permutation::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}}),
                                            Permutation::from_cycles(7, {{0, 1}})},
                                        100),
                    SizeLimitError);
  REQUIRE_THROWS_AS(PermGroup::generate(3, {Permutation::from_cycles(4, {{0, 1}})}),
                    ValidationError);
}

TEST_CASE("commutator subgroup and derived series", "[perm]") {
  PermGroup s3 = PermGroup::symmetric(3);
  PermGroup a3 = s3.commutator_subgroup();
  REQUIRE(a3.order() == 3);

  PermGroup a5 = PermGroup::alternating(5);
  REQUIRE(a5.commutator_subgroup().order() == 60);

  REQUIRE(PermGroup::trivial().commutator_subgroup().order() == 1);

  auto series = s3.derived_series();
  REQUIRE(series.size() == 3);
  REQUIRE(series[0].order() == 6);
  REQUIRE(series[1].order() == 3);
  REQUIRE(series[2].order() == 1);

  REQUIRE(a5.derived_series().size() == 1);
  REQUIRE(PermGroup::trivial().derived_series().size() == 1);
}

TEST_CASE("perfect core and the hypo-Abelian predicate", "[perm]") {
  PermGroup s5 = PermGroup::symmetric(5);
  PermGroup core = s5.perfect_core();
  REQUIRE(core.order() == 60);
  REQUIRE(core == PermGroup::alternating(5));
  REQUIRE_FALSE(s5.is_hypo_abelian());

  PermGroup s3 = PermGroup::symmetric(3);
  REQUIRE(s3.perfect_core().is_trivial());
  REQUIRE(s3.is_hypo_abelian());

  PermGroup triv = PermGroup::trivial();
  REQUIRE(triv.perfect_core().is_trivial());
  REQUIRE(triv.is_perfect());
  REQUIRE(triv.is_hypo_abelian());
}

TEST_CASE("derived series is monotone and stabilizes at the perfect core", "[perm]") {
  for (const auto& f : small_group_catalogue(16)) {
    auto series = f.group.derived_series();
    for (std::size_t i = 1; i < series.size(); ++i) {
      REQUIRE(series[i].is_subgroup_of(series[i - 1]));
      REQUIRE(series[i].order() < series[i - 1].order());
    }
    REQUIRE(series.back().is_perfect());
    REQUIRE(f.group.is_hypo_abelian() == series.back().is_trivial());
  }
}

TEST_CASE("extension lemma checks on concrete instances", "[perm]") {
  PermGroup a5 = PermGroup::alternating(5);
  PermGroup big = PermGroup::direct_product(a5, a5);

  SECTION("A5 x A5 with the first factor: perfect-by-perfect") {
    PermGroup first = PermGroup::generate(
        10, [&] {
          std::vector<Permutation> gens;
          for (const auto& g : a5.generators()) {
            std::vector<int> im(10);
            for (int i = 0; i < 5; ++i) im[i] = g(i);
            for (int i = 5; i < 10; ++i) im[i] = i;
            gens.push_back(Permutation(std::move(im)));
          }
          return gens;
        }());
    ExtensionReport rep = check_extension_lemmas(big, first);
    REQUIRE(rep.kernel_perfect);
    REQUIRE(rep.quotient_perfect);
    REQUIRE(rep.perfect_lemma_applicable);
    REQUIRE(rep.perfect_lemma_holds);
    REQUIRE(rep.group_perfect);
  }

  SECTION("S3 with A3: hypo-by-hypo") {
    PermGroup s3 = PermGroup::symmetric(3);
    PermGroup a3 = s3.commutator_subgroup();
    ExtensionReport rep = check_extension_lemmas(s3, a3);
    REQUIRE(rep.kernel_hypo);
    REQUIRE(rep.quotient_hypo);
    REQUIRE(rep.hypo_lemma_applicable);
    REQUIRE(rep.hypo_lemma_holds);
    REQUIRE(rep.quotient_order == 2);
  }

  SECTION("degenerate quotient: A5 with A5") {
    ExtensionReport rep = check_extension_lemmas(a5, a5);
    REQUIRE(rep.quotient_order == 1);
    REQUIRE(rep.perfect_lemma_applicable);
    REQUIRE(rep.perfect_lemma_holds);
  }

  SECTION("non-normal subgroup is rejected") {
    PermGroup s3 = PermGroup::symmetric(3);
    PermGroup sub = PermGroup::generate(3, {Permutation::from_cycles(3, {{0, 1}})});
    REQUIRE_THROWS_AS(check_extension_lemmas(s3, sub), PreconditionError);
  }
}

TEST_CASE("coset-action quotient and its kernel", "[perm]") {
  PermGroup s4 = PermGroup::symmetric(4);
  PermGroup v4 = PermGroup::generate(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                                         Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  REQUIRE(s4.is_normal_subgroup(v4));
  auto act = quotient_by(s4, v4);
  REQUIRE(act.image.order() == 6);            // S4/V4 ≅ S3
  REQUIRE(quotient_kernel(s4, v4) == v4);     // kernel enumerated directly
}

TEST_CASE("composition of surjections with perfect kernels", "[perm]") {
  // A5xA5 → A5 (kernel A5 x 1, perfect) followed by A5 → 1 (kernel A5,
  // perfect): the composite is onto with perfect kernel A5 x A5.
  PermGroup a5 = PermGroup::alternating(5);
  PermGroup big = PermGroup::direct_product(a5, a5);
  auto normals = big.normal_subgroups();
  PermGroup first = PermGroup::trivial();
  for (const auto& n : normals)
    if (n.order() == 60) {
      first = n;
      break;
    }
  REQUIRE(first.order() == 60);
  REQUIRE(first.is_perfect());
  auto step1 = quotient_by(big, first);
  REQUIRE(step1.image.order() == 60);
  // second surjection: quotient of the image by itself (kernel = image)
  REQUIRE(step1.image.is_perfect());
  // composite kernel: preimage of the identity coset chain = all of big
  PermGroup composite_kernel = quotient_kernel(big, big);
  REQUIRE(composite_kernel.order() == big.order());
  REQUIRE(composite_kernel.is_perfect());
}

TEST_CASE("hypo-Abelian iff trivial perfect core across the small fixture", "[perm]") {
  // all fixture groups of order <= 60
  auto fixtures = small_group_catalogue(24);
  fixtures.push_back({"A5", PermGroup::alternating(5)});
  for (const auto& f : fixtures) {
    if (f.group.order() > 60) continue;
    REQUIRE(f.group.is_hypo_abelian() == f.group.perfect_core().is_trivial());
  }
}
