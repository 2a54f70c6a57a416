#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stirling2adic/defaults.hpp"
#include "stirling2adic/report_io.hpp"

#include "oracles.hpp"

using namespace s2a;

TEST_CASE("thm 1.1 predictor") {
  auto p = predict_thm11(3, 1, 4, 5);
  CHECK(p.kind == Prediction::Kind::exact);
  CHECK(p.value == 4);  // 4 + 1 - 3 + 2 + 0
  CHECK(predict_thm11(2, 1, 3, 4).value == 4);   // 3 - 2 + 1 + 2
  CHECK(predict_thm11(2, 1, 5, 6).value == 4);   // 5 + 0 - 3 + 2 + 0
  CHECK_THROWS_AS(predict_thm11(2, 1, 4, 7), std::invalid_argument);   // Mersenne
  CHECK_THROWS_AS(predict_thm11(2, 1, 2, 5), std::invalid_argument);   // k > 2^n
  CHECK_THROWS_AS(predict_thm11(1, 1, 4, 5), std::invalid_argument);   // a == b
  // cross-checks against the exact engine
  CHECK(stirling_diff_exact(3, 1, 4, 5).magnitude().trailing_zero_bits() == 4);
  CHECK(stirling_diff_exact(2, 1, 3, 4).magnitude().trailing_zero_bits() == 4);
  CHECK(stirling_diff_exact(2, 1, 5, 6).magnitude().trailing_zero_bits() == 4);
}

TEST_CASE("thm 1.2 trichotomy predictors") {
  // k = 3
  auto at = predict_thm12_k3(2, 1, 2);  // 4 == 2+2+0
  CHECK(at.kind == Prediction::Kind::strictly_greater);
  CHECK(at.value == 3);
  auto above = predict_thm12_k3(2, 1, 3);  // 8 > 5
  CHECK(above.kind == Prediction::Kind::exact);
  CHECK(above.value == 4);
  auto below = predict_thm12_k3(17, 1, 2);  // 4 < 2+2+4
  CHECK(below.kind == Prediction::Kind::exact);
  CHECK(below.value == 3);  // b*2^n - 1
  CHECK_THROWS_AS(predict_thm12_k3(2, 1, 1), std::invalid_argument);

  // k = 7
  auto above7 = predict_thm12_k7(2, 1, 3);  // 8 > 6
  CHECK(above7.value == 4);
  auto below7 = predict_thm12_k7(65, 1, 3);  // 8 < 3+3+6
  CHECK(below7.kind == Prediction::Kind::exact);
  CHECK(below7.value == 6);  // b*2^n - 2
  auto at7 = predict_thm12_k7(5, 1, 3);  // 8 == 3+3+2
  CHECK(at7.kind == Prediction::Kind::strictly_greater);
  CHECK(at7.value == 6);
  CHECK_THROWS_AS(predict_thm12_k7(2, 1, 2), std::invalid_argument);

  // measured confirmations
  CHECK(stirling_diff_exact(2, 1, 3, 3).magnitude().trailing_zero_bits() == 4);
  CHECK(stirling_diff_exact(17, 1, 2, 3).magnitude().trailing_zero_bits() == 3);
  CHECK(stirling_diff_exact(65, 1, 3, 7).magnitude().trailing_zero_bits() == 6);
  CHECK(stirling_diff_exact(5, 1, 3, 7).magnitude().trailing_zero_bits() > 6);
}

TEST_CASE("thm 1.2 branch conditions partition the parameter space") {
  for (u64 n = 2; n <= 10; ++n)
    for (u64 a = 2; a <= 24; ++a)
      for (u64 b = 1; b < a; ++b) {
        u64 t = nu(a - b, 2).value();
        int fired = 0;
        if ((b << n) > n + 2 + t) ++fired;
        if ((b << n) == n + 2 + t) ++fired;
        if ((b << n) < n + 2 + t) ++fired;
        CHECK(fired == 1);
        auto p = predict_thm12_k3(a, b, n);
        CHECK((p.kind == Prediction::Kind::exact ||
               p.kind == Prediction::Kind::strictly_greater));
      }
}

TEST_CASE("thm 1.3 predictor and the exceptional instance") {
  auto exc = predict_thm13(1, 2, 2);
  CHECK(exc.kind == Prediction::Kind::exception);
  CHECK(exc.value == 6);
  CHECK(predict_thm13(1, 2, 3).value == 4);
  CHECK(predict_thm13(3, 3, 4).value == 5);
  CHECK(predict_thm13(3, 3, 4).kind == Prediction::Kind::exact);
  CHECK_THROWS_AS(predict_thm13(2, 2, 3), std::invalid_argument);  // even c
  CHECK_THROWS_AS(predict_thm13(1, 1, 3), std::invalid_argument);  // m < 2
  CHECK_THROWS_AS(predict_thm13(1, 4, 3), std::invalid_argument);  // m > n
}

TEST_CASE("scaling consistency between thm 1.3 and thm 1.2 first branches") {
  for (u64 c : {u64{1}, u64{3}, u64{5}, u64{7}})
    for (u64 n = 2; n <= 10; ++n) {
      // the pair (c*2^(n+1), c*2^n) is (a,b) = (2c, c) with nu2(a-b) = nu2(c) = 0
      if ((c << n) > n + 2 + 0) {
        auto k3 = predict_thm12_k3(2 * c, c, n);
        CHECK(k3.kind == Prediction::Kind::exact);
        CHECK(k3.value == predict_thm13(c, 2, n).value);
      }
      if (n >= 3 && (c << n) > n + 3 + 0) {
        auto k7 = predict_thm12_k7(2 * c, c, n);
        CHECK(k7.kind == Prediction::Kind::exact);
        CHECK(k7.value == predict_thm13(c, 3, n).value);
      }
    }
}

TEST_CASE("thm 1.3 verified on a trimmed grid with the exception flagged") {
  GridSpec g = default_grid("thm1.3");
  g.set_range("n", 2, 8);
  auto rep = verify_theorem("thm1.3", g);
  CHECK(rep.status() == Status::pass);
  CHECK(rep.failures.empty());
  u64 exceptions = 0;
  for (const auto& f : rep.flags)
    if (f.kind == "exception-instance") ++exceptions;
  CHECK(exceptions == 1);
  CHECK(rep.counter("branch:exception") == 1);
  CHECK(rep.counter("branch:regular") == rep.checked - 1);
}

TEST_CASE("thm 1.2(i) verified on a trimmed grid, all branches exercised") {
  GridSpec g = default_grid("thm1.2i");
  g.set_range("a", 2, 20);
  g.set_range("b", 1, 19);
  g.set_range("n", 2, 7);
  auto rep = verify_theorem("thm1.2i", g);
  CHECK(rep.status() == Status::pass);
  CHECK(rep.counter("branch:above") > 0);
  CHECK(rep.counter("branch:at") > 0);
  CHECK(rep.counter("branch:below") > 0);
}

TEST_CASE("thm 1.2(ii) verified on a trimmed grid") {
  GridSpec g = default_grid("thm1.2ii");
  g.set_range("a", 2, 20);
  g.set_range("b", 1, 19);
  g.set_range("n", 3, 7);
  auto rep = verify_theorem("thm1.2ii", g);
  CHECK(rep.status() == Status::pass);
  CHECK(rep.counter("branch:above") > 0);
  CHECK(rep.counter("branch:at") > 0);
  CHECK(rep.counter("branch:below") > 0);
}

TEST_CASE("thm 1.1 grid: mismatches become classified findings, not failures") {
  GridSpec g = default_grid("thm1.1");
  g.set("k", {4, 5});
  g.set_range("n", 2, 6);
  g.set_range("a", 2, 6);
  g.set_range("b", 1, 5);
  auto rep = verify_theorem("thm1.1", g);
  CHECK(rep.status() == Status::pass);  // findings never fail the prior-work formula
  CHECK(rep.failures.empty());
  u64 boundary = 0, below = 0, unexplained = 0;
  for (const auto& f : rep.flags) {
    if (f.kind != "formula-mismatch") continue;
    if (f.detail.rfind("k = 2^n boundary", 0) == 0) ++boundary;
    else if (f.detail.rfind("below stabilization", 0) == 0) ++below;
    else ++unexplained;
  }
  CHECK(boundary > 0);      // the k = 2^n boundary misbehaves (open question)
  CHECK(unexplained == 0);  // nothing outside the two known regimes
  CHECK(rep.counter("finding:k = 2^n boundary") == boundary);
}

TEST_CASE("explore_fk: Mersenne k = 3 and 7 give constant f = 0") {
  GridSpec g;
  for (u64 k : {u64{3}, u64{7}}) {
    auto fit = explore_fk(k, g);
    REQUIRE(fit.constant.has_value());
    CHECK(*fit.constant == 0);
    CHECK(fit.censored == 0);
    REQUIRE(fit.stable_from.has_value());
    CHECK(*fit.stable_from <= 4);
  }
}

TEST_CASE("explore_fk: non-Mersenne k agrees with the thm 1.1 value") {
  GridSpec g;
  for (u64 k : {u64{4}, u64{5}, u64{6}, u64{9}, u64{10}, u64{12}}) {
    auto fit = explore_fk(k, g);
    REQUIRE(fit.constant.has_value());
    i64 expect = 1 + static_cast<i64>(ceil_log2(k)) - static_cast<i64>(s2(k)) -
                 static_cast<i64>(delta(k));
    CHECK(*fit.constant == expect);
  }
}

TEST_CASE("explore_fk: stabilization threshold is reported, not assumed") {
  // k = 4 has unstable samples at n = 2 (boundary) and n = 3 (tie) but a
  // clean constant from n = 4 on.
  GridSpec g;
  auto fit = explore_fk(4, g);
  REQUIRE(fit.constant.has_value());
  CHECK(*fit.constant == 0);
  REQUIRE(fit.stable_from.has_value());
  CHECK(*fit.stable_from == 4);
  bool saw_disagreeing_sample = false;
  for (const auto& smp : fit.samples)
    if (smp.n < 4 && smp.f && *smp.f != 0) saw_disagreeing_sample = true;
  CHECK(saw_disagreeing_sample);
}

TEST_CASE("explore_fk: censoring is explicit and excluded from the fit") {
  GridSpec g;
  g.precision_cap = 6;  // far below the true valuations at larger n
  auto fit = explore_fk(3, g);
  CHECK(fit.censored > 0);
  for (const auto& smp : fit.samples)
    if (!smp.f) CHECK(smp.measured.kind == AdaptiveValuation::Kind::at_least);
  CHECK_THROWS_AS(explore_fk(2, g), std::invalid_argument);
}

TEST_CASE("theorem reports are canonical under parallel evaluation") {
  GridSpec g = default_grid("thm1.3");
  g.set_range("n", 2, 7);
  auto serial = verify_theorem("thm1.3", g, 1);
  auto parallel = verify_theorem("thm1.3", g, 2);
  ReportHeader header{"test"};
  CHECK(report_json(serial, header) == report_json(parallel, header));
  CHECK_THROWS_AS(verify_theorem("thm9.9", g), std::invalid_argument);
}
