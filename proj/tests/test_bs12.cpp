#include <catch2/catch_amalgamated.hpp>

#include "collar/bs12.hpp"
#include "collar/common.hpp"

using namespace collar;

TEST_CASE("dyadic rationals are canonical and exact", "[bs12]") {
  Dyadic zero;
  REQUIRE(zero.is_zero());
  REQUIRE(zero.exponent() == 0);

  Dyadic four(BigInt(4), 0);
  REQUIRE(four.mantissa() == 1);  // 4 = 1·2^2
  REQUIRE(four.exponent() == 2);

  Dyadic half(BigInt(1), -1);
  REQUIRE((half + half) == Dyadic::from_int(1));
  REQUIRE((half - half).is_zero());
  REQUIRE(half.scaled(1) == Dyadic::from_int(1));

  // mixed exponents
  Dyadic x(BigInt(3), -2);   // 3/4
  Dyadic y(BigInt(1), -3);   // 1/8
  Dyadic s = x + y;          // 7/8
  REQUIRE(s.mantissa() == 7);
  REQUIRE(s.exponent() == -3);
}

TEST_CASE("BS(1,2) relator holds exactly in the matrix model", "[bs12]") {
  const BSElement t = BSElement::t(), x = BSElement::x();
  REQUIRE(t * (x * x) * t.inverse() == x);
  // conjugating the other way halves: t^-1 x t = x^2, t x t^-1 has a = 1/2
  BSElement half = t * x * t.inverse();
  REQUIRE(half.k == 0);
  REQUIRE(half.a == Dyadic(BigInt(1), -1));
  REQUIRE(t.inverse() * x * t == x * x);
}

TEST_CASE("identity element and inverses", "[bs12]") {
  BSElement id = BSElement::identity();
  REQUIRE(id.k == 0);
  REQUIRE(id.a.is_zero());
  const BSElement t = BSElement::t(), x = BSElement::x();
  REQUIRE(t * t.inverse() == id);
  REQUIRE(x.inverse() * x == id);
  REQUIRE((t * x).inverse() * (t * x) == id);
}

TEST_CASE("bs_project: exponent sum of t", "[bs12]") {
  const BSElement t = BSElement::t(), x = BSElement::x();
  // x^5 t^3 x^-2
  BSElement e = BSElement::identity();
  for (int i = 0; i < 5; ++i) e = e * x;
  for (int i = 0; i < 3; ++i) e = e * t;
  for (int i = 0; i < 2; ++i) e = e * x.inverse();
  REQUIRE(bs_project(e) == 3);
  REQUIRE(bs_project(BSElement::identity()) == 0);
}

TEST_CASE("associativity and projection homomorphism on random words", "[bs12]") {
  Rng rng(29);
  auto random_bs = [&rng]() {
    BSElement e = BSElement::identity();
    const int len = static_cast<int>(rng.below(10));
    for (int i = 0; i < len; ++i) {
      BSElement g = rng.flip() ? BSElement::t() : BSElement::x();
      if (rng.flip()) g = g.inverse();
      e = e * g;
    }
    return e;
  };
  for (int i = 0; i < 2000; ++i) {
    BSElement a = random_bs(), b = random_bs(), c = random_bs();
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(bs_project(a * b) == bs_project(a) + bs_project(b));
    REQUIRE(bs_project(a.inverse()) == -bs_project(a));
  }
}

TEST_CASE("kernel of bs_project is exactly {k = 0}", "[bs12]") {
  Rng rng(31);
  const BSElement t = BSElement::t(), x = BSElement::x();
  for (int i = 0; i < 500; ++i) {
    // an arbitrary element pushed into the kernel by killing its t-exponent
    BSElement e = BSElement::identity();
    const int len = 1 + static_cast<int>(rng.below(8));
    for (int j = 0; j < len; ++j) {
      BSElement g = rng.flip() ? t : x;
      if (rng.flip()) g = g.inverse();
      e = e * g;
    }
    BSElement killed = e * BSElement{-e.k, Dyadic()};
    REQUIRE(bs_project(killed) == 0);
    REQUIRE(killed.k == 0);
  }
  // elements with k = 0 form Z[1/2] under the group law (here: addition)
  BSElement u{0, Dyadic(BigInt(3), -2)};
  BSElement v{0, Dyadic(BigInt(1), -2)};
  REQUIRE((u * v).k == 0);
  REQUIRE((u * v).a == Dyadic::from_int(1));
}
