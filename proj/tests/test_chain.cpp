#include <catch2/catch_amalgamated.hpp>

#include "collar/acceptance.hpp"
#include "collar/chain_complex.hpp"

using namespace collar;

namespace {
GroupPtr z2() { return std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2)); }
GroupPtr triv() { return std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(1)); }
}  // namespace

TEST_CASE("chain_check: degenerate complexes", "[chain]") {
  SECTION("zero complex is acyclic") {
    ChainReport r = chain_check({});
    REQUIRE(r.acyclic);
  }

  SECTION("0 -> ZQ -(id)-> ZQ -> 0 is acyclic") {
    ChainReport r = chain_check({GRMatrix::identity(z2(), 1)});
    REQUIRE(r.boundaries_compose_to_zero);
    REQUIRE(r.acyclic);
    REQUIRE(r.homology.size() == 2);
    REQUIRE(r.homology[0].trivial());
    REQUIRE(r.homology[1].trivial());
  }

  SECTION("multiplication by 2 over the trivial group leaves Z/2 homology") {
    GRMatrix m(triv(), 1, 1);
    m(0, 0) = GroupRingElem::basis(triv(), 0, BigInt(2));
    ChainReport r = chain_check({m});
    REQUIRE(r.boundaries_compose_to_zero);
    REQUIRE_FALSE(r.acyclic);
    REQUIRE(r.homology[0].torsion.size() == 1);
    REQUIRE(r.homology[0].torsion[0] == 2);
    REQUIRE(r.homology[1].trivial());  // injective, no kernel
  }

  SECTION("zero boundaries on nonzero modules are not acyclic") {
    GRMatrix zero(z2(), 1, 1);
    ChainReport r = chain_check({zero});
    REQUIRE(r.boundaries_compose_to_zero);
    REQUIRE_FALSE(r.acyclic);
  }

  SECTION("incompatible dimensions are rejected") {
    REQUIRE_THROWS_AS(chain_check({GRMatrix(z2(), 1, 2), GRMatrix(z2(), 1, 1)}),
                      ValidationError);
  }
}

TEST_CASE("kernel_split-derived three-term complexes", "[chain]") {
  Rng rng(103);
  auto groups = acceptance::detail::standard_coefficient_groups();
  for (int inst = 0; inst < 9; ++inst) {
    const GroupPtr& g = groups[static_cast<std::size_t>(inst) % groups.size()];
    const std::size_t rc = 1 + rng.below(2), rb = 1 + rng.below(2);
    auto [theta, split] = acceptance::detail::random_split_instance(rng, g, rc, 0, rb);
    KernelSplitResult ks = kernel_split(theta, split);
    GRMatrix d3(g, split + rb, rb);
    for (std::size_t r = 0; r < split; ++r)
      for (std::size_t c = 0; c < rb; ++c) d3(r, c) = -ks.split.alpha(r, c);
    for (std::size_t c = 0; c < rb; ++c) d3(split + c, c) = GroupRingElem::one(g);

    ChainReport chain = chain_check({theta, d3});
    REQUIRE(chain.boundaries_compose_to_zero);
    REQUIRE(chain.acyclic);

    DualReport dual = cocompact_dual_check(theta, d3);
    REQUIRE(dual.section_found);
    REQUIRE(dual.direct_sum);
    REQUIRE(dual.delta2_injective);
    REQUIRE(dual.delta3_surjective);
    REQUIRE(dual.image_equals_kernel);
  }
}

TEST_CASE("cocompact_dual_check preconditions", "[chain]") {
  SECTION("identity two-term complex passes trivially") {
    GroupPtr g = z2();
    GRMatrix id = GRMatrix::identity(g, 1);
    GRMatrix top(g, 1, 0);  // C3 = 0
    DualReport r = cocompact_dual_check(id, top);
    REQUIRE(r.section_found);
    REQUIRE(r.delta2_injective);
    REQUIRE(r.delta3_surjective);
    REQUIRE(r.image_equals_kernel);
  }

  SECTION("non-acyclic complexes are rejected") {
    GroupPtr g = z2();
    GRMatrix zero2(g, 1, 1);  // zero boundary, nonzero modules
    GRMatrix zero3(g, 1, 1);
    REQUIRE_THROWS_AS(cocompact_dual_check(zero2, zero3), PreconditionError);
  }
}
