#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stirling2adic/dyadic.hpp"
#include "stirling2adic/stirling_exact.hpp"

#include "oracles.hpp"

using namespace s2a;

TEST_CASE("valuation of zero is the distinguished infinite value") {
  CHECK(nu(BigNat(0), 2) == Val2::infinite());
  CHECK_FALSE(nu(BigNat(0), 2).is_finite());
  CHECK_THROWS_AS(nu(BigNat(0), 2).value(), std::domain_error);
  CHECK(nu(BigNat(0), 2).to_string() == "infinite");
}

TEST_CASE("nu at fixed points") {
  CHECK(nu(960, 2) == Val2::of(6));
  CHECK(nu(12, 2) == Val2::of(2));
  CHECK(nu(1, 2) == Val2::of(0));
  CHECK(nu(243, 3) == Val2::of(5));
  CHECK(nu(250, 5) == Val2::of(3));
  CHECK_THROWS_AS(nu(10, 4), std::invalid_argument);
  CHECK_THROWS_AS(nu(10, 1), std::invalid_argument);
}

TEST_CASE("nu is additive on products, min-bounded on sums") {
  oracle::Rng rng(17);
  for (int it = 0; it < 300; ++it) {
    BigNat x = rng.big(3);
    BigNat y = rng.big(3);
    if (x.is_zero() || y.is_zero()) continue;
    for (u64 p : {u64{2}, u64{3}, u64{7}}) {
      u64 vx = nu(x, p).value(), vy = nu(y, p).value();
      CHECK(nu(x * y, p).value() == vx + vy);
      Val2 vs = nu(x + y, p);
      CHECK(vs.is_finite());
      CHECK(vs.value() >= std::min(vx, vy));
      if (vx != vy) CHECK(vs.value() == std::min(vx, vy));
    }
  }
}

TEST_CASE("s2 digit sums") {
  CHECK(s2(u64{0}) == 0);
  CHECK(s2(u64{1700}) == 5);  // 0b11010100100
  for (u64 r = 1; r <= 20; ++r) CHECK(s2((u64{1} << r) - 1) == r);
  CHECK(s2(BigNat::pow(BigNat(2), 100) - BigNat(1)) == 100);
}

TEST_CASE("Kummer digit formula vs exact binomials") {
  CHECK(nu2_binomial(8, 3) == 3);  // C(8,3) = 56 = 2^3 * 7
  for (u64 n = 0; n <= 64; ++n) CHECK(nu2_binomial(n, 0) == 0);
  // (04): C(2^m - 1, 2^(m-1)) is odd
  for (u64 m = 2; m <= 16; ++m)
    CHECK(nu2_binomial((u64{1} << m) - 1, u64{1} << (m - 1)) == 0);
  CHECK_THROWS_AS(nu2_binomial(3, 4), std::invalid_argument);

  auto rows = oracle::pascal_rows(260);
  for (unsigned n = 0; n <= 260; ++n)
    for (unsigned k = 0; k <= n; ++k) {
      CHECK(nu2_binomial(n, k) == oracle::nu2_by_division(rows[n][k]));
      CHECK(s2(u64{k}) + s2(u64{n - k}) >= s2(u64{n}));
    }
}

TEST_CASE("Legendre factorial valuation, two formulas") {
  CHECK(nu2_factorial(7) == 4);
  CHECK(nu2_factorial(1) == 0);
  CHECK(nu2_factorial(8) == 7);
  auto by_sum = [](u64 n) {
    u64 total = 0;
    for (u64 p = 2; p <= n; p *= 2) {
      total += n / p;
      if (p > n / 2) break;
    }
    return total;
  };
  for (u64 n = 1; n <= 1'000'000; n += 997) CHECK(nu2_factorial(n) == by_sum(n));
  for (u64 n : {u64{1}, u64{2}, u64{1} << 20, (u64{1} << 20) - 1})
    CHECK(nu2_factorial(n) == by_sum(n));
  CHECK(nu(factorial_exact(100), 2).value() == nu2_factorial(100));
}

TEST_CASE("ceil_log2 is exact near powers of two") {
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(3) == 2);
  CHECK(ceil_log2(4) == 2);
  for (u64 e = 1; e <= 40; ++e) {
    CHECK(ceil_log2(u64{1} << e) == e);
    CHECK(ceil_log2((u64{1} << e) + 1) == e + 1);
    if (e >= 2) CHECK(ceil_log2((u64{1} << e) - 1) == e);
  }
  CHECK_THROWS_AS(ceil_log2(0), std::invalid_argument);
}

TEST_CASE("delta") {
  CHECK(delta(4) == 2);
  CHECK(delta(8) == 1);
  CHECK(delta(6) == 0);
  CHECK(delta(1) == 0);
  CHECK(delta(2) == 0);  // not > 4
  for (u64 e = 3; e <= 20; ++e) CHECK(delta(u64{1} << e) == 1);
  CHECK_THROWS_AS(delta(0), std::invalid_argument);
}

TEST_CASE("mersenne and power-of-two classifiers") {
  for (u64 m = 1; m <= 20; ++m) {
    CHECK(is_mersenne((u64{1} << m) - 1));
    CHECK(is_power_of_two(u64{1} << m));
  }
  CHECK_FALSE(is_mersenne(4));
  CHECK_FALSE(is_power_of_two(6));
  CHECK_FALSE(is_mersenne(0));
}
