#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <numeric>

#include "collar/common.hpp"
#include "collar/int_matrix.hpp"

using namespace collar;

namespace {

IntMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long lo = -6, long hi = 6) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.range(lo, hi);
  return m;
}

BigInt gcd_big(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Independent oracle: gcd of all k x k minors (determinantal divisors).
BigInt minor_gcd(const IntMatrix& m, std::size_t k) {
  std::vector<std::size_t> rows(m.rows()), cols(m.cols());
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  BigInt g = 0;
  std::vector<std::size_t> rsel, csel;
  std::function<void(std::size_t)> pick_cols = [&](std::size_t cstart) {
    if (csel.size() == k) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rsel[i], csel[j]);
      g = gcd_big(g, sub.det());
      return;
    }
    for (std::size_t c = cstart; c < m.cols(); ++c) {
      csel.push_back(c);
      pick_cols(c + 1);
      csel.pop_back();
    }
  };
  std::function<void(std::size_t)> pick_rows = [&](std::size_t rstart) {
    if (rsel.size() == k) {
      pick_cols(0);
      return;
    }
    for (std::size_t r = rstart; r < m.rows(); ++r) {
      rsel.push_back(r);
      pick_rows(r + 1);
      rsel.pop_back();
    }
  };
  pick_rows(0);
  return g;
}

}  // namespace

TEST_CASE("SNF: fixed examples", "[snf]") {
  SECTION("diag(2,3) has invariant factors (1,6)") {
    IntMatrix m(2, 2);
    m(0, 0) = 2;
    m(1, 1) = 3;
    SNFResult s = smith_normal_form(m);
    REQUIRE(s.d(0, 0) == 1);
    REQUIRE(s.d(1, 1) == 6);
    REQUIRE((s.u * m * s.v) == s.d);
  }

  SECTION("zero matrix: D = 0 and the kernel is the full standard basis") {
    IntMatrix m(2, 3);
    SNFResult s = smith_normal_form(m);
    REQUIRE(s.d.is_zero());
    auto kb = integer_kernel_basis(m);
    REQUIRE(kb.size() == 3);
  }

  SECTION("identity: D = identity, kernel empty") {
    IntMatrix m = IntMatrix::identity(3);
    SNFResult s = smith_normal_form(m);
    REQUIRE(s.d == IntMatrix::identity(3));
    REQUIRE(integer_kernel_basis(m).empty());
  }
}

TEST_CASE("SNF: randomized decomposition properties", "[snf]") {
  Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
    IntMatrix m = random_matrix(rng, r, c);
    SNFResult s = smith_normal_form(m);

    REQUIRE((s.u * m * s.v) == s.d);
    // unimodular transforms
    BigInt du = s.u.det(), dv = s.v.det();
    REQUIRE((du == 1 || du == -1));
    REQUIRE((dv == 1 || dv == -1));
    // diagonal with a divisibility chain
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) REQUIRE(s.d(i, j) == 0);
    auto f = s.invariant_factors();
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      REQUIRE(f[i] >= 0);
      if (f[i] != 0) REQUIRE(f[i + 1] % f[i] == 0);
      if (f[i] == 0) REQUIRE(f[i + 1] == 0);
    }
    // kernel vectors annihilate exactly
    for (const auto& v : integer_kernel_basis(m)) {
      auto mv = m.apply(v);
      for (const auto& x : mv) REQUIRE(x == 0);
    }
  }
}

TEST_CASE("SNF matches the determinantal-divisor oracle", "[snf]") {
  Rng rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng.below(3), c = 1 + rng.below(3);
    IntMatrix m = random_matrix(rng, r, c, -4, 4);
    SNFResult s = smith_normal_form(m);
    auto f = s.invariant_factors();
    BigInt prod = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
      prod *= f[k - 1];
      BigInt dk = minor_gcd(m, k);
      // d1·...·dk equals the gcd of k x k minors (both zero past the rank)
      REQUIRE((prod < 0 ? BigInt(-prod) : prod) == dk);
    }
  }
}

TEST_CASE("integer solve: exact preimages", "[snf]") {
  Rng rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng.below(3), c = 1 + rng.below(3);
    IntMatrix m = random_matrix(rng, r, c);
    // build a solvable rhs from a known solution
    std::vector<BigInt> x0(c);
    for (auto& v : x0) v = rng.range(-5, 5);
    std::vector<BigInt> b = m.apply(x0);
    auto x = solve_integer(m, b);
    REQUIRE(x.has_value());
    REQUIRE(m.apply(*x) == b);
  }

  SECTION("unsolvable systems return nothing") {
    IntMatrix m(1, 1);
    m(0, 0) = 2;
    REQUIRE_FALSE(solve_integer(m, {BigInt(1)}).has_value());
    REQUIRE(solve_integer(m, {BigInt(4)}).has_value());
  }
}

TEST_CASE("Bareiss determinant agrees with cofactor expansion", "[snf]") {
  Rng rng(73);
  auto cofactor_det = [](const IntMatrix& m, auto&& self) -> BigInt {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    BigInt acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (m(0, j) == 0) continue;
      IntMatrix sub(n - 1, n - 1);
      for (std::size_t r = 1; r < n; ++r) {
        std::size_t cc = 0;
        for (std::size_t c = 0; c < n; ++c) {
          if (c == j) continue;
          sub(r - 1, cc++) = m(r, c);
        }
      }
      BigInt term = m(0, j) * self(sub, self);
      acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.below(4);
    IntMatrix m = random_matrix(rng, n, n, -5, 5);
    REQUIRE(m.det() == cofactor_det(m, cofactor_det));
  }
}
