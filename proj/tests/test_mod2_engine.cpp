#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stirling2adic/adaptive.hpp"
#include "stirling2adic/mod2.hpp"
#include "stirling2adic/series.hpp"
#include "stirling2adic/stirling_exact.hpp"

#include "oracles.hpp"

using namespace s2a;

TEST_CASE("modular rows equal exact rows reduced, word path to n = 300") {
  for (unsigned m : {1u, 4u, 8u, 16u, 32u}) {
    StirlingRowStream exact(300);
    Mod2RowStream mod(300, m);
    u64 mask = mask_for(m);
    for (u64 n = 1; n <= 300; ++n) {
      exact.step();
      mod.step();
      for (u64 k = 0; k <= n; ++k) {
        u64 want = exact.at(k).is_zero()
                       ? 0
                       : (exact.at(k).limb(0) & mask);  // low word suffices, m <= 32
        if (mod.at64(k) != want) {
          CAPTURE(m);
          CAPTURE(n);
          CAPTURE(k);
          REQUIRE(mod.at64(k) == want);
        }
      }
    }
  }
}

TEST_CASE("modular rows equal exact rows reduced, wide path") {
  for (unsigned m : {64u, 100u, 150u}) {
    StirlingRowStream exact(40);
    Mod2RowStream mod(40, m);
    for (u64 n = 1; n <= 120; ++n) {
      exact.step();
      mod.step();
      for (u64 k = 0; k <= std::min<u64>(n, 40); ++k)
        CHECK(mod.at(k) == exact.at(k).low_bits(m));
    }
  }
}

TEST_CASE("pinned residues") {
  CHECK(stirling_mod64(8, 3, 4) == 6);     // 966 mod 16
  CHECK(stirling_mod64(12, 7, 4) == 4);    // 627396 mod 16
  for (u64 n = 0; n <= 30; ++n) CHECK(stirling_mod64(n, n, 7) == 1);
  CHECK(stirling_mod(50, 25, 16).to_u64() == 48308);
  CHECK(stirling_mod64(3, 9, 8) == 0);
}

TEST_CASE("column capture mod 2^M") {
  auto col = stirling_column_mod64(40, 3, 10);
  for (u64 n = 0; n <= 40; ++n)
    CHECK(col[n] == stirling_rec(n, 3).low_bits(10).to_u64());
}

TEST_CASE("series inversion: geometric series and random units") {
  ModSeries f = ModSeries::linear(16, 12, 1);  // 1 - x
  ModSeries g = f.inverse();
  for (u32 i = 0; i <= 12; ++i) CHECK(g[i] == 1);

  oracle::Rng rng(2024);
  for (int it = 0; it < 100; ++it) {
    unsigned m = 1 + static_cast<unsigned>(rng.below(64));
    ModSeries h(m, 10);
    for (u32 i = 0; i <= 10; ++i) h.set(i, rng.next());
    h.set(0, rng.next() | 1);  // odd constant term
    ModSeries one = h * h.inverse();
    CHECK(one[0] == 1);
    for (u32 i = 1; i <= 10; ++i) CHECK(one[i] == 0);
  }

  ModSeries even(8, 4);
  even.set(0, 2);
  CHECK_THROWS_AS(even.inverse(), std::domain_error);
}

TEST_CASE("series multiplication agrees with exact polynomial products") {
  // (1+x)^2 * (1+x) == (1+x)^3 coefficientwise mod 2^M
  ModSeries p(10, 6);
  p.set(0, 1);
  p.set(1, 1);
  ModSeries cube = p.pow(3);
  CHECK(cube[0] == 1);
  CHECK(cube[1] == 3);
  CHECK(cube[2] == 3);
  CHECK(cube[3] == 1);
  CHECK(cube[4] == 0);
  ModSeries q(10, 3);
  CHECK_THROWS_AS((void)(p * q), std::invalid_argument);
}

TEST_CASE("series_pow matches repeated squaring") {
  for (unsigned m = 3; m <= 8; ++m) {
    ModSeries base = ModSeries::one(m + 1, 40);
    base.set(2, 3);  // 1 + 3x^2
    ModSeries by_pow = base.pow(u64{1} << (m - 2));
    ModSeries by_mult = ModSeries::one(m + 1, 40);
    for (u64 i = 0; i < (u64{1} << (m - 2)); ++i) by_mult = by_mult * base;
    CHECK(by_pow == by_mult);
  }
}

TEST_CASE("generating function route equals the recurrence") {
  // k = 1: 1/(1-x), all coefficients 1
  auto ones = stirling_via_gf(1, 30, 16);
  for (u64 v : ones) CHECK(v == 1);
  CHECK(stirling_via_gf(3, 1, 16)[1] == 6);   // S(4,3)
  CHECK(stirling_via_gf(7, 5, 4)[5] == 4);    // S(12,7) mod 16
  for (u64 k : {u64{2}, u64{5}, u64{11}, u64{31}, u64{64}}) {
    auto gf = stirling_via_gf(k, 200, 16);
    auto col = stirling_column_mod64(k + 200, k, 16);
    for (u64 j = 0; j <= 200; ++j) CHECK(gf[j] == col[k + j]);
  }
}

TEST_CASE("product congruences of the odd and even factor products") {
  for (unsigned m = 3; m <= 8; ++m) {
    CAPTURE(m);
    CHECK(check_product_odd(m).pass);
    CHECK(check_product_even(m).pass);
  }
  CHECK_THROWS_AS(check_product_odd(2), std::invalid_argument);
  CHECK_THROWS_AS(check_product_even(2), std::invalid_argument);
  // the m=3 even product really is the quadratic special case
  ModSeries lhs = linear_product(4, 3, {2, 4, 6});
  CHECK(lhs[0] == 1);
  CHECK(lhs[1] == 4);
  CHECK(lhs[2] == 12);
  CHECK(lhs[3] == 0);
}

TEST_CASE("precision soundness: nonzero residue pins the valuation") {
  oracle::Rng rng(77);
  for (int it = 0; it < 400; ++it) {
    BigNat x = rng.big(4);
    if (x.is_zero()) continue;
    unsigned m = 1 + static_cast<unsigned>(rng.below(120));
    BigNat residue = x.low_bits(m);
    if (!residue.is_zero()) {
      CHECK(residue.trailing_zero_bits() == x.trailing_zero_bits());
      CHECK(residue.trailing_zero_bits() < m);
    } else {
      CHECK(x.trailing_zero_bits() >= m);
    }
  }
}

TEST_CASE("adaptive valuation: pinned examples") {
  AdaptiveSchedule sched;
  sched.cap = 20;
  CHECK(nu2_diff_adaptive(2, 1, 2, 3, sched) == AdaptiveValuation::exact(6, 12));
  AdaptiveValuation v = nu2_diff_adaptive(2, 1, 3, 3, sched);
  CHECK(v.is_exact());
  CHECK(v.value == 4);
  CHECK(nu2_diff_adaptive(3, 3, 5, 7, sched).kind ==
        AdaptiveValuation::Kind::infinite);
  CHECK_THROWS_AS(nu2_diff_adaptive(1, 2, 2, 3, sched), std::invalid_argument);
}

TEST_CASE("adaptive valuation matches the exact engine where it reaches") {
  oracle::Rng rng(31337);
  AdaptiveSchedule sched;
  for (int it = 0; it < 60; ++it) {
    u64 b = 1 + rng.below(6), a = b + 1 + rng.below(6);
    u64 n = 2 + rng.below(5);
    u64 k = 3 + rng.below(8);
    if (((a << n)) > 5000) continue;
    AdaptiveValuation meas = nu2_diff_adaptive(a, b, n, k, sched);
    BigInt exact = stirling_diff_exact(a, b, n, k);
    if (exact.is_zero()) {
      CHECK(meas.kind == AdaptiveValuation::Kind::at_least);
    } else {
      REQUIRE(meas.is_exact());
      CHECK(meas.value == exact.magnitude().trailing_zero_bits());
      CHECK(meas.value < meas.precision);
    }
  }
}

TEST_CASE("adaptive escalation starts where told and doubles") {
  // start at 5 bits: S(8,3)-S(4,3) = 960 = 2^6*15 needs the second pass
  AdaptiveSchedule sched;
  sched.cap = 64;
  sched.start = 5;
  AdaptiveValuation v = nu2_diff_adaptive(2, 1, 2, 3, sched);
  CHECK(v == AdaptiveValuation::exact(6, 10));
  // a cap below the true valuation yields a first-class at-least
  AdaptiveSchedule capped;
  capped.cap = 5;
  AdaptiveValuation w = nu2_diff_adaptive(2, 1, 2, 3, capped);
  CHECK(w.kind == AdaptiveValuation::Kind::at_least);
  CHECK(w.value == 5);
}
