#pragma once
// Closed-form valuation predictors for the three difference theorems,
// grid comparison against adaptive measurements, and the f(k) explorer
// for the open Mersenne case of the conjecture.

#include <optional>
#include <string>
#include <vector>

#include "stirling2adic/adaptive.hpp"
#include "stirling2adic/dyadic.hpp"
#include "stirling2adic/grid.hpp"
#include "stirling2adic/lemma_verifiers.hpp"
#include "stirling2adic/parallel.hpp"

namespace s2a {

struct Prediction {
  enum class Kind { exact, strictly_greater, exception };

  Kind kind = Kind::exact;
  u64 value = 0;
  std::string source;  // theorem id + branch id

  static Prediction exact(u64 v, std::string src) {
    return {Kind::exact, v, std::move(src)};
  }
  static Prediction strictly_greater(u64 v, std::string src) {
    return {Kind::strictly_greater, v, std::move(src)};
  }
  static Prediction exception(u64 v, std::string src) {
    return {Kind::exception, v, std::move(src)};
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::strictly_greater: return "> " + std::to_string(value);
      case Kind::exception: return "exception(" + std::to_string(value) + ")";
      default: return std::to_string(value);
    }
  }
};

/// nu2(S(a2^n,k) - S(b2^n,k)) = n + nu2(a-b) - ceil(log2 k) + s2(k) + delta(k)
/// for non-Mersenne 3 <= k <= 2^n, a > b.
inline Prediction predict_thm11(u64 a, u64 b, u64 n, u64 k) {
  if (a <= b) throw std::invalid_argument("predict_thm11: requires a > b");
  if (k < 3) throw std::invalid_argument("predict_thm11: requires k >= 3");
  if (is_mersenne(k))
    throw std::invalid_argument("predict_thm11: k of the form 2^m - 1 is excluded");
  if (n > 63 || k > (u64{1} << n))
    throw std::invalid_argument("predict_thm11: requires k <= 2^n");
  i64 v = static_cast<i64>(n) + static_cast<i64>(nu(a - b, 2).value()) -
          static_cast<i64>(ceil_log2(k)) + static_cast<i64>(s2(k)) +
          static_cast<i64>(delta(k));
  return Prediction::exact(static_cast<u64>(v), "thm1.1");
}

/// The k = 3 trichotomy keyed on b*2^n vs n + 2 + nu2(a-b); n >= 2.
inline Prediction predict_thm12_k3(u64 a, u64 b, u64 n) {
  if (a <= b || b < 1) throw std::invalid_argument("predict_thm12_k3: requires a > b >= 1");
  if (n < 2) throw std::invalid_argument("predict_thm12_k3: requires n >= 2");
  const u64 t = nu(a - b, 2).value();
  const u64 lhs = b << n, thr = n + 2 + t;
  if (lhs > thr) return Prediction::exact(n + 1 + t, "thm1.2i/above");
  if (lhs == thr) return Prediction::strictly_greater(n + 1 + t, "thm1.2i/at");
  return Prediction::exact(lhs - 1, "thm1.2i/below");
}

/// The k = 7 trichotomy keyed on b*2^n vs n + 3 + nu2(a-b); n >= 3.
inline Prediction predict_thm12_k7(u64 a, u64 b, u64 n) {
  if (a <= b || b < 1) throw std::invalid_argument("predict_thm12_k7: requires a > b >= 1");
  if (n < 3) throw std::invalid_argument("predict_thm12_k7: requires n >= 3");
  const u64 t = nu(a - b, 2).value();
  const u64 lhs = b << n, thr = n + 3 + t;
  if (lhs > thr) return Prediction::exact(n + 1 + t, "thm1.2ii/above");
  if (lhs == thr) return Prediction::strictly_greater(n + 1 + t, "thm1.2ii/at");
  return Prediction::exact(lhs - 2, "thm1.2ii/below");
}

/// nu2(S(c2^(n+1), 2^m - 1) - S(c2^n, 2^m - 1)) = n + 1 for odd c and
/// 2 <= m <= n, except (c,m,n) = (1,2,2) where the value is 6.
inline Prediction predict_thm13(u64 c, u64 m, u64 n) {
  if (c % 2 == 0 || c == 0) throw std::invalid_argument("predict_thm13: c must be odd");
  if (!(2 <= m && m <= n)) throw std::invalid_argument("predict_thm13: requires 2 <= m <= n");
  if (c == 1 && m == 2 && n == 2) return Prediction::exception(6, "thm1.3/exception");
  return Prediction::exact(n + 1, "thm1.3");
}

namespace detail {

/// Applies a predicted valuation to a measurement.
/// Returns: 0 match, 1 mismatch, 2 inconclusive (capped).
inline int judge(const Prediction& pred, const AdaptiveValuation& meas) {
  switch (meas.kind) {
    case AdaptiveValuation::Kind::infinite:
      return 1;  // a > b grids never produce a zero difference legitimately
    case AdaptiveValuation::Kind::exact:
      if (pred.kind == Prediction::Kind::strictly_greater)
        return meas.value > pred.value ? 0 : 1;
      return meas.value == pred.value ? 0 : 1;
    case AdaptiveValuation::Kind::at_least:
    default:
      // measured >= meas.value with nothing above the cap
      if (pred.kind == Prediction::Kind::strictly_greater)
        return meas.value > pred.value ? 0 : 2;
      return meas.value > pred.value ? 1 : 2;
  }
}

struct TheoremInstance {
  Params params;
  u64 a, b, n, k;
  Prediction pred;
  std::optional<unsigned> start_precision;
  std::string counter;
};

}  // namespace detail

/// Runs one of the theorem claims over its grid. Mismatches against this
/// paper's own theorems (1.2, 1.3) are failures; mismatches against the
/// prior-work formula (1.1) are findings only.
inline VerificationReport verify_theorem(const std::string& claim, const GridSpec& grid,
                                         unsigned workers = 1) {
  VerificationReport rep;
  rep.claim = claim;
  rep.grid = grid;
  const unsigned cap = grid.precision_cap;

  std::vector<detail::TheoremInstance> instances;
  bool hard_fail = true;

  if (claim == "thm1.3") {
    auto cs = grid.get("c", {1, 3, 5, 7});
    auto ns = grid.get("n", detail::iota_vec(2, 10));
    for (i64 c : cs)
      for (i64 n : ns) {
        if (c < 1 || c % 2 == 0 || n < 2) continue;
        for (i64 m = 2; m <= n; ++m) {
          detail::TheoremInstance inst;
          inst.params = {{"c", c}, {"m", m}, {"n", n}};
          inst.a = static_cast<u64>(2 * c);
          inst.b = static_cast<u64>(c);
          inst.n = static_cast<u64>(n);
          inst.k = (u64{1} << m) - 1;
          inst.pred = predict_thm13((u64)c, (u64)m, (u64)n);
          inst.start_precision = static_cast<unsigned>(n) + 3;
          inst.counter = inst.pred.kind == Prediction::Kind::exception
                             ? "branch:exception"
                             : "branch:regular";
          instances.push_back(std::move(inst));
        }
      }
  } else if (claim == "thm1.2i" || claim == "thm1.2ii") {
    const bool k3 = claim == "thm1.2i";
    auto as = grid.get("a", detail::iota_vec(2, 40));
    auto bs = grid.get("b", detail::iota_vec(1, 39));
    auto ns = grid.get("n", detail::iota_vec(k3 ? 2 : 3, 10));
    for (i64 n : ns)
      for (i64 a : as)
        for (i64 b : bs) {
          if (b < 1 || b >= a || n < (k3 ? 2 : 3)) continue;
          detail::TheoremInstance inst;
          inst.params = {{"a", a}, {"b", b}, {"n", n}};
          inst.a = (u64)a;
          inst.b = (u64)b;
          inst.n = (u64)n;
          inst.k = k3 ? 3 : 7;
          inst.pred = k3 ? predict_thm12_k3((u64)a, (u64)b, (u64)n)
                         : predict_thm12_k7((u64)a, (u64)b, (u64)n);
          inst.counter =
              inst.pred.kind == Prediction::Kind::strictly_greater ? "branch:at"
              : inst.pred.source.ends_with("above")                ? "branch:above"
                                                                   : "branch:below";
          instances.push_back(std::move(inst));
        }
  } else if (claim == "thm1.1") {
    hard_fail = false;
    auto ks = grid.get("k", {4, 5, 6, 9, 10, 12});
    auto ns = grid.get("n", detail::iota_vec(2, 8));
    auto as = grid.get("a", detail::iota_vec(2, 9));
    auto bs = grid.get("b", detail::iota_vec(1, 8));
    for (i64 k : ks)
      for (i64 n : ns) {
        if (k < 3 || is_mersenne((u64)k) || n < 1 || (u64)k > (u64{1} << n)) continue;
        for (i64 a : as)
          for (i64 b : bs) {
            if (b < 1 || b >= a) continue;
            detail::TheoremInstance inst;
            inst.params = {{"k", k}, {"n", n}, {"a", a}, {"b", b}};
            inst.a = (u64)a;
            inst.b = (u64)b;
            inst.n = (u64)n;
            inst.k = (u64)k;
            inst.pred = predict_thm11((u64)a, (u64)b, (u64)n, (u64)k);
            inst.counter = (u64)k == (u64{1} << n) ? "grid:boundary" : "grid:interior";
            instances.push_back(std::move(inst));
          }
      }
  } else {
    throw std::invalid_argument("verify_theorem: unknown claim " + claim);
  }

  struct Row {
    AdaptiveValuation meas;
    int verdict;
  };
  std::vector<Row> rows(instances.size());
  parallel_for_index(instances.size(), workers, [&](std::size_t i) {
    const auto& inst = instances[i];
    AdaptiveSchedule sched;
    sched.cap = cap;
    sched.predicted = inst.pred.value;
    sched.start = inst.start_precision;
    rows[i].meas = nu2_diff_adaptive(inst.a, inst.b, inst.n, inst.k, sched);
    rows[i].verdict = detail::judge(inst.pred, rows[i].meas);
  });

  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    const auto& row = rows[i];
    ++rep.checked;
    rep.bump(inst.counter);
    if (inst.pred.kind == Prediction::Kind::exception)
      rep.flags.push_back({"exception-instance", inst.params,
                           "predicted " + inst.pred.to_string() + ", measured " +
                               row.meas.to_string()});
    if (row.verdict == 2) {
      ++rep.capped;
      rep.flags.push_back({"capped", inst.params,
                           "inconclusive at precision cap " + std::to_string(cap)});
    } else if (row.verdict == 1) {
      if (hard_fail) {
        rep.failures.push_back(
            {inst.params, inst.pred.to_string(), row.meas.to_string()});
      } else {
        // prior-work formula: record a finding, classified
        const u64 t = nu(inst.a - inst.b, 2).value();
        std::string why =
            inst.k == (u64{1} << inst.n) ? "k = 2^n boundary"
            : (inst.b << inst.n) <= inst.n + t + 2 * ceil_log2(inst.k) + 2
                ? "below stabilization threshold"
                : "unexplained";
        rep.flags.push_back({"formula-mismatch", inst.params,
                             why + "; formula " + inst.pred.to_string() +
                                 ", measured " + row.meas.to_string()});
        rep.bump("finding:" + why);
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Conjecture explorer: measures nu2(S(a2^n,k) - S(b2^n,k)) over a grid and
// reports the inferred f = n + 1 + nu2(a-b) - measured, its constancy, and
// the n from which samples stabilize.

struct FitSample {
  u64 a, b, n;
  AdaptiveValuation measured;
  std::optional<i64> f;  // absent when censored at the precision cap
};

struct FitResult {
  u64 k = 0;
  std::vector<FitSample> samples;
  std::optional<i64> constant;
  std::optional<u64> stable_from;
  u64 censored = 0;
};

inline FitResult explore_fk(u64 k, const GridSpec& grid, unsigned workers = 1) {
  if (k < 3) throw std::invalid_argument("explore_fk: requires k >= 3");
  FitResult fit;
  fit.k = k;

  const i64 n_lo = static_cast<i64>(std::max<u64>(2, ceil_log2(k)));
  auto ns = grid.get("n", detail::iota_vec(n_lo, n_lo + 6));
  auto as = grid.get("a", detail::iota_vec(2, 6));
  auto bs = grid.get("b", detail::iota_vec(1, 5));

  std::vector<FitSample> samples;
  for (i64 n : ns) {
    if (n < 0 || k > (u64{1} << n)) continue;  // conjecture range k <= 2^n
    for (i64 a : as)
      for (i64 b : bs) {
        if (b < 1 || b >= a) continue;
        samples.push_back({(u64)a, (u64)b, (u64)n, {}, std::nullopt});
      }
  }

  parallel_for_index(samples.size(), workers, [&](std::size_t i) {
    auto& smp = samples[i];
    AdaptiveSchedule sched;
    sched.cap = grid.precision_cap;
    sched.predicted = smp.n + 1 + nu(smp.a - smp.b, 2).value();
    smp.measured = nu2_diff_adaptive(smp.a, smp.b, smp.n, k, sched);
    if (smp.measured.is_exact())
      smp.f = static_cast<i64>(smp.n) + 1 +
              static_cast<i64>(nu(smp.a - smp.b, 2).value()) -
              static_cast<i64>(smp.measured.value);
  });

  fit.samples = std::move(samples);
  for (const auto& smp : fit.samples)
    if (!smp.f) ++fit.censored;

  // stabilization: the longest suffix of n-levels on which every
  // non-censored sample infers the same f
  std::vector<u64> levels;
  for (const auto& smp : fit.samples)
    if (levels.empty() || levels.back() != smp.n) levels.push_back(smp.n);
  std::optional<i64> candidate;
  std::optional<u64> stable_from;
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    std::optional<i64> level_f;
    bool level_ok = true, any = false;
    for (const auto& smp : fit.samples) {
      if (smp.n != *it || !smp.f) continue;
      any = true;
      if (!level_f)
        level_f = smp.f;
      else if (*level_f != *smp.f)
        level_ok = false;
    }
    if (!any || !level_ok) break;
    if (candidate && *candidate != *level_f) break;
    candidate = level_f;
    stable_from = *it;
  }
  fit.constant = candidate;
  fit.stable_from = stable_from;
  return fit;
}

}  // namespace s2a
