#pragma once
// Grid-based mechanical verification of the congruence and valuation
// lemmas, producing structured reports. Grids are precondition-filtered;
// a reported failure always replays against the exact engine.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "stirling2adic/dyadic.hpp"
#include "stirling2adic/grid.hpp"
#include "stirling2adic/identities.hpp"
#include "stirling2adic/mod2.hpp"
#include "stirling2adic/parallel.hpp"
#include "stirling2adic/series.hpp"
#include "stirling2adic/stirling_exact.hpp"

namespace s2a {

namespace detail {

inline std::vector<i64> iota_vec(i64 lo, i64 hi) {
  std::vector<i64> v;
  for (i64 x = lo; x <= hi; ++x) v.push_back(x);
  return v;
}

struct Outcome {
  u64 checked = 0, filtered = 0, capped = 0;
  std::vector<Failure> failures;
  std::vector<Flag> flags;
  std::vector<std::pair<std::string, u64>> counters;

  void bump(const std::string& name, u64 by = 1) {
    for (auto& [n, v] : counters)
      if (n == name) {
        v += by;
        return;
      }
    counters.emplace_back(name, by);
  }
};

inline void merge(VerificationReport& r, const Outcome& o) {
  r.checked += o.checked;
  r.filtered += o.filtered;
  r.capped += o.capped;
  r.failures.insert(r.failures.end(), o.failures.begin(), o.failures.end());
  r.flags.insert(r.flags.end(), o.flags.begin(), o.flags.end());
  for (const auto& [name, v] : o.counters) r.bump(name, v);
}

template <class GroupFn>
void run_groups(VerificationReport& report, std::size_t groups, unsigned workers,
                GroupFn&& fn) {
  std::vector<Outcome> outs(groups);
  parallel_for_index(groups, workers, [&](std::size_t g) { fn(g, outs[g]); });
  for (const auto& o : outs) merge(report, o);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Lemma 2.2: C(pn, pk) == C(n, k) mod p*n*Z_p, read for integers as
// nu_p(C(pn,pk) - C(n,k)) >= nu_p(p*n).
inline VerificationReport verify_binomial_lift(const GridSpec& grid,
                                               unsigned workers = 1) {
  VerificationReport rep;
  rep.claim = "lemma2.2";
  rep.grid = grid;
  auto ps = grid.get("p", {2, 3, 5, 7});
  auto ns = grid.get("n", detail::iota_vec(1, 40));
  detail::run_groups(rep, ps.size() * ns.size(), workers, [&](std::size_t g,
                                                              detail::Outcome& out) {
    u64 p = static_cast<u64>(ps[g / ns.size()]);
    u64 n = static_cast<u64>(ns[g % ns.size()]);
    u64 bound = nu(BigNat(p * n), p).value();
    for (u64 k = 1; k <= n; ++k) {
      BigInt d = BigInt::diff(binomial_exact(p * n, p * k), binomial_exact(n, k));
      ++out.checked;
      if (d.is_zero()) continue;  // infinite valuation satisfies any bound
      u64 v = nu(d.magnitude(), p).value();
      if (v < bound)
        out.failures.push_back({{{"p", (i64)p}, {"n", (i64)n}, {"k", (i64)k}},
                                ">= " + std::to_string(bound), std::to_string(v)});
    }
  });
  return rep;
}

// ---------------------------------------------------------------------------
// Lemma 2.3 (lifting the exponent): nu2((r*2^N - 1)^(t*2^m) - 1) = m + N.
inline VerificationReport verify_lte(const GridSpec& grid, unsigned workers = 1) {
  VerificationReport rep;
  rep.claim = "lemma2.3";
  rep.grid = grid;
  auto Ns = grid.get("N", {2, 3, 4, 5});
  auto rs = grid.get("r", {1, 3, 5});
  auto ts = grid.get("t", {1, 3, 5});
  auto ms = grid.get("m", detail::iota_vec(1, 5));
  detail::run_groups(rep, Ns.size(), workers, [&](std::size_t g, detail::Outcome& out) {
    u64 N = static_cast<u64>(Ns[g]);
    for (i64 r : rs)
      for (i64 t : ts)
        for (i64 m : ms) {
          if (N < 2 || r % 2 == 0 || t % 2 == 0 || m < 1) {
            ++out.filtered;
            continue;
          }
          BigNat base((static_cast<u64>(r) << N) - 1);
          BigNat value = BigNat::pow(base, static_cast<u64>(t) << m) - BigNat(1);
          u64 v = value.trailing_zero_bits();
          ++out.checked;
          if (v != static_cast<u64>(m) + N)
            out.failures.push_back({{{"r", r}, {"N", (i64)N}, {"t", t}, {"m", m}},
                                    std::to_string(m + (i64)N), std::to_string(v)});
        }
  });
  return rep;
}

// ---------------------------------------------------------------------------
// Lemmas 2.4 / 2.5: S(n, a*2^m) and S(n, a*2^m - 1) mod 2^m in terms of
// small binomial coefficients, split on the parity of n.
namespace detail {

inline u64 chan_manna_predicted(u64 a, u64 m, u64 n, bool odd_k) {
  const u64 q = a << (m - 2);
  const u64 mod_mask = mask_for(static_cast<unsigned>(m));
  auto binom_mod = [&](i64 top, u64 bottom) -> u64 {
    if (top < 0 || static_cast<u64>(top) < bottom) return 0;
    return binomial_exact(static_cast<u64>(top), bottom)
        .low_bits(static_cast<unsigned>(m))
        .to_u64();
  };
  u64 lead = (a << (m - 1)) & mod_mask;
  i64 half;
  bool split_case;  // true: the two-term branch
  if (!odd_k) {
    split_case = (n % 2 == 0);
    half = static_cast<i64>(split_case ? n / 2 : (n - 1) / 2);
  } else {
    split_case = (n % 2 == 1);
    half = static_cast<i64>(split_case ? (n + 1) / 2 : n / 2);
  }
  if (!split_case)
    return (lead * binom_mod(half - (i64)q - 1, q - 1)) & mod_mask;
  return (lead * binom_mod(half - (i64)q - 2, q - 1) +
          binom_mod(half - (i64)q - 1, q - 1)) &
         mod_mask;
}

inline VerificationReport verify_chan_manna(const GridSpec& grid, bool odd_k,
                                            unsigned workers) {
  VerificationReport rep;
  rep.claim = odd_k ? "lemma2.5" : "lemma2.4";
  rep.grid = grid;
  auto as = grid.get("a", {1, 2, 3});
  auto ms = grid.get("m", {3, 4});
  auto spans = grid.get("span", {48});
  const u64 span = static_cast<u64>(spans.at(0));
  detail::run_groups(rep, as.size() * ms.size(), workers, [&](std::size_t g,
                                                              detail::Outcome& out) {
    u64 a = static_cast<u64>(as[g / ms.size()]);
    u64 m = static_cast<u64>(ms[g % ms.size()]);
    if (a < 1 || m < 3) {
      ++out.filtered;
      return;
    }
    const u64 k = odd_k ? (a << m) - 1 : (a << m);
    const u64 n_lo = odd_k ? (a << m) : (a << m) + 1;
    const u64 n_hi = (a << m) + span;
    auto col = stirling_column_mod64(n_hi, k, static_cast<unsigned>(m));
    for (u64 n = n_lo; n <= n_hi; ++n) {
      u64 expected = chan_manna_predicted(a, m, n, odd_k);
      ++out.checked;
      if (odd_k && n == (a << m))
        out.flags.push_back({"boundary",
                             {{"a", (i64)a}, {"m", (i64)m}, {"n", (i64)n}},
                             "boundary instance n = a*2^m included in the grid"});
      if (col[n] != expected)
        out.failures.push_back({{{"a", (i64)a}, {"m", (i64)m}, {"n", (i64)n}},
                                std::to_string(expected), std::to_string(col[n])});
    }
  });
  return rep;
}

}  // namespace detail

inline VerificationReport verify_chan_manna_even_k(const GridSpec& grid,
                                                   unsigned workers = 1) {
  return detail::verify_chan_manna(grid, false, workers);
}

inline VerificationReport verify_chan_manna_odd_k(const GridSpec& grid,
                                                  unsigned workers = 1) {
  return detail::verify_chan_manna(grid, true, workers);
}

// ---------------------------------------------------------------------------
// Lemma 2.6: nu2(S(c*2^n + 2^m, 2^n)) = n - 1 - m for 0 <= m < n.
inline VerificationReport verify_L26(const GridSpec& grid, unsigned workers = 1) {
  VerificationReport rep;
  rep.claim = "lemma2.6";
  rep.grid = grid;
  auto cs = grid.get("c", detail::iota_vec(1, 6));
  auto ns = grid.get("n", detail::iota_vec(1, 8));
  detail::run_groups(rep, cs.size() * ns.size(), workers, [&](std::size_t g,
                                                              detail::Outcome& out) {
    u64 c = static_cast<u64>(cs[g / ns.size()]);
    u64 n = static_cast<u64>(ns[g % ns.size()]);
    if (c < 1 || n < 1) {
      ++out.filtered;
      return;
    }
    const unsigned prec = static_cast<unsigned>(n) + 2;
    Mod2RowStream stream(u64{1} << n, prec);
    for (u64 m = 0; m < n; ++m) {
      stream.step_to((c << n) + (u64{1} << m));
      u64 residue = stream.at64(u64{1} << n);
      u64 expected = n - 1 - m;
      ++out.checked;
      if (residue == 0) {
        out.failures.push_back({{{"c", (i64)c}, {"n", (i64)n}, {"m", (i64)m}},
                                std::to_string(expected),
                                ">= " + std::to_string(prec)});
      } else {
        u64 v = static_cast<u64>(std::countr_zero(residue));
        if (v != expected)
          out.failures.push_back({{{"c", (i64)c}, {"n", (i64)n}, {"m", (i64)m}},
                                  std::to_string(expected), std::to_string(v)});
      }
    }
  });
  return rep;
}

// ---------------------------------------------------------------------------
// Lemma 2.7: S(c*2^n, 2^m) == 1 mod 4 and S(c*2^n, 2^m - 1) == 3*2^(m-1)
// mod 2^(m+1), for 2 <= m <= n.
inline VerificationReport verify_L27(const GridSpec& grid, unsigned workers = 1) {
  VerificationReport rep;
  rep.claim = "lemma2.7";
  rep.grid = grid;
  auto cs = grid.get("c", detail::iota_vec(1, 5));
  auto ns = grid.get("n", detail::iota_vec(2, 8));
  detail::run_groups(rep, cs.size() * ns.size(), workers, [&](std::size_t g,
                                                              detail::Outcome& out) {
    u64 c = static_cast<u64>(cs[g / ns.size()]);
    u64 n = static_cast<u64>(ns[g % ns.size()]);
    if (c < 1 || n < 2) {
      ++out.filtered;
      return;
    }
    const unsigned prec = static_cast<unsigned>(n) + 1;
    Mod2RowStream stream(u64{1} << n, prec);
    stream.step_to(c << n);
    for (u64 m = 2; m <= n; ++m) {
      u64 x = stream.at64(u64{1} << m);
      u64 y = stream.at64((u64{1} << m) - 1);
      ++out.checked;
      if (x % 4 != 1)
        out.failures.push_back({{{"c", (i64)c}, {"n", (i64)n}, {"m", (i64)m}},
                                "== 1 mod 4", std::to_string(x % 4)});
      u64 ymod = y & mask_for(static_cast<unsigned>(m) + 1);
      u64 expect = (u64{3} << (m - 1)) & mask_for(static_cast<unsigned>(m) + 1);
      if (ymod != expect)
        out.failures.push_back({{{"c", (i64)c}, {"n", (i64)n}, {"m", (i64)m}},
                                std::to_string(expect) + " mod 2^" + std::to_string(m + 1),
                                std::to_string(ymod)});
    }
  });
  return rep;
}

// ---------------------------------------------------------------------------
// Lemma 2.8: the two linear-factor product congruences (m = 3 uses the
// separate quadratic form for the even product).
inline VerificationReport verify_L28(const GridSpec& grid, unsigned workers = 1) {
  VerificationReport rep;
  rep.claim = "lemma2.8";
  rep.grid = grid;
  auto ms = grid.get("m", detail::iota_vec(3, 8));
  detail::run_groups(rep, ms.size(), workers, [&](std::size_t g, detail::Outcome& out) {
    unsigned m = static_cast<unsigned>(ms[g]);
    if (m < 3) {
      ++out.filtered;
      return;
    }
    ProductCheck odd = check_product_odd(m);
    ++out.checked;
    out.bump("product:odd");
    if (!odd.pass)
      out.failures.push_back(
          {{{"m", (i64)m}, {"coefficient", (i64)odd.first_diff}},
           std::to_string(odd.rhs), std::to_string(odd.lhs)});
    ProductCheck even = check_product_even(m);
    ++out.checked;
    out.bump("product:even");
    if (!even.pass)
      out.failures.push_back(
          {{{"m", (i64)m}, {"coefficient", (i64)even.first_diff}},
           std::to_string(even.rhs), std::to_string(even.lhs)});
  });
  return rep;
}

// ---------------------------------------------------------------------------
// Lemma 2.9: S(c*2^n + 2^(m-1), 2^m) == 3 mod 4 and
// S(c*2^n + 2^(m-1), 2^m - 1) == 2^(m-1) mod 2^(m+1), for 3 <= m <= n.
inline VerificationReport verify_L29(const GridSpec& grid, unsigned workers = 1) {
  VerificationReport rep;
  rep.claim = "lemma2.9";
  rep.grid = grid;
  auto cs = grid.get("c", detail::iota_vec(1, 5));
  auto ns = grid.get("n", detail::iota_vec(3, 8));
  detail::run_groups(rep, cs.size() * ns.size(), workers, [&](std::size_t g,
                                                              detail::Outcome& out) {
    u64 c = static_cast<u64>(cs[g / ns.size()]);
    u64 n = static_cast<u64>(ns[g % ns.size()]);
    if (c < 1 || n < 3) {
      ++out.filtered;
      return;
    }
    const unsigned prec = static_cast<unsigned>(n) + 1;
    Mod2RowStream stream(u64{1} << n, prec);
    for (u64 m = 3; m <= n; ++m) {
      stream.step_to((c << n) + (u64{1} << (m - 1)));
      u64 x = stream.at64(u64{1} << m);
      u64 y = stream.at64((u64{1} << m) - 1);
      ++out.checked;
      if (x % 4 != 3)
        out.failures.push_back({{{"c", (i64)c}, {"n", (i64)n}, {"m", (i64)m}},
                                "== 3 mod 4", std::to_string(x % 4)});
      u64 mod_mask = mask_for(static_cast<unsigned>(m) + 1);
      if ((y & mod_mask) != (u64{1} << (m - 1)))
        out.failures.push_back({{{"c", (i64)c}, {"n", (i64)n}, {"m", (i64)m}},
                                std::to_string(u64{1} << (m - 1)) + " mod 2^" +
                                    std::to_string(m + 1),
                                std::to_string(y & mod_mask)});
    }
  });
  return rep;
}

// ---------------------------------------------------------------------------
// Lemma 2.11: binomial valuation bounds over C(c*2^s, i).
//   (i)  nu2(i) < s: nu2(C) >= s - nu2(i), equality iff the digit-sum
//        condition on floor(i/2^s) holds (checked in both directions).
//   (ii) 3 <= i < c*2^s, t >= 2: t*i + nu2(C) >= s + 6.
inline VerificationReport verify_L211(const GridSpec& grid, unsigned workers = 1) {
  VerificationReport rep;
  rep.claim = "lemma2.11";
  rep.grid = grid;
  auto cs = grid.get("c", {1, 3, 5, 7});
  auto ss = grid.get("s", detail::iota_vec(1, 8));
  auto ts = grid.get("t", {2, 3});
  detail::run_groups(rep, cs.size() * ss.size(), workers, [&](std::size_t g,
                                                              detail::Outcome& out) {
    u64 c = static_cast<u64>(cs[g / ss.size()]);
    u64 s = static_cast<u64>(ss[g % ss.size()]);
    if (c % 2 == 0 || c < 1 || s < 1) {
      ++out.filtered;
      return;
    }
    const u64 N = c << s;
    BigNat binom{1};
    for (u64 i = 1; i < N; ++i) {
      binom.mul_u64(N - i + 1);
      auto [q, rem] = binom.divrem_u64(i);
      if (rem != 0) throw std::logic_error("verify_L211: binomial walk fault");
      binom = std::move(q);
      const u64 v = binom.trailing_zero_bits();
      const u64 v2i = static_cast<u64>(std::countr_zero(i));
      if (v2i < s) {
        ++out.checked;
        out.bump("part:i");
        if (v < s - v2i) {
          out.failures.push_back({{{"c", (i64)c}, {"s", (i64)s}, {"i", (i64)i}},
                                  ">= " + std::to_string(s - v2i), std::to_string(v)});
        } else {
          bool equality = (v == s - v2i);
          u64 b = i >> s;
          bool digit = s2(c - 1 - b) + s2(b) == s2(c - 1);
          if (equality != digit)
            out.failures.push_back(
                {{{"c", (i64)c}, {"s", (i64)s}, {"i", (i64)i}},
                 std::string("equality iff digit condition (digit=") +
                     (digit ? "true" : "false") + ")",
                 equality ? "equality" : "strict"});
        }
      }
      if (i >= 3) {
        for (i64 t : ts) {
          if (t < 2) {
            ++out.filtered;
            continue;
          }
          ++out.checked;
          out.bump("part:ii");
          u64 total = static_cast<u64>(t) * i + v;
          if (total < s + 6)
            out.failures.push_back(
                {{{"c", (i64)c}, {"s", (i64)s}, {"i", (i64)i}, {"t", t}},
                 ">= " + std::to_string(s + 6), std::to_string(total)});
        }
      }
    }
  });
  return rep;
}

// ---------------------------------------------------------------------------
// Lemma 2.12: the five f_{r,s} claims. Exact backend within the grid's
// exact threshold, word-residue backend beyond it; both decide every
// sub-claim from residues at s+2 bits or better.
namespace detail {

struct FColumns {
  // value(i) of S(i, k) for the column set, exact or mod 2^prec
  bool exact = true;
  unsigned prec = 0;
  std::vector<u64> ks;
  std::vector<std::vector<BigNat>> exact_cols;
  std::vector<std::vector<u64>> mod_cols;
  std::vector<BigNat> exact_binoms;  // C(N, i) for i = 0..N
  u64 N = 0;

  std::size_t col_index(u64 k) const {
    for (std::size_t j = 0; j < ks.size(); ++j)
      if (ks[j] == k) return j;
    throw std::logic_error("FColumns: column not captured");
  }
};

inline FColumns build_f_columns(u64 c, u64 s, u64 r_hi, bool exact, unsigned prec) {
  FColumns fc;
  fc.exact = exact;
  fc.prec = prec;
  fc.N = c << s;
  for (u64 r = 3; r <= r_hi; ++r) {
    fc.ks.push_back((u64{1} << r) - 1);
    fc.ks.push_back(u64{1} << r);
  }
  if (exact) {
    fc.exact_cols = stirling_columns_rec(fc.N, fc.ks);
    fc.exact_binoms.reserve(fc.N + 1);
    BigNat binom{1};
    fc.exact_binoms.push_back(binom);
    for (u64 i = 1; i <= fc.N; ++i) {
      binom.mul_u64(fc.N - i + 1);
      auto [q, rem] = binom.divrem_u64(i);
      if (rem != 0) throw std::logic_error("build_f_columns: binomial walk fault");
      binom = std::move(q);
      fc.exact_binoms.push_back(binom);
    }
  } else {
    u64 kmax = 0;
    for (u64 k : fc.ks) kmax = std::max(kmax, k);
    Mod2RowStream stream(kmax, prec);
    fc.mod_cols.assign(fc.ks.size(), {});
    for (std::size_t j = 0; j < fc.ks.size(); ++j)
      fc.mod_cols[j].push_back(fc.ks[j] == 0 ? 1 : 0);
    for (u64 n = 1; n <= fc.N; ++n) {
      stream.step();
      for (std::size_t j = 0; j < fc.ks.size(); ++j)
        fc.mod_cols[j].push_back(stream.at64(fc.ks[j]));
    }
  }
  return fc;
}

/// f_{r,s}(i) residue mod 2^prec (prec <= 64) from prebuilt columns.
inline u64 f_residue(const FColumns& fc, u64 r, u64 i, unsigned prec) {
  const u64 mask = mask_for(prec);
  const std::size_t a = fc.col_index((u64{1} << r) - 1);
  const std::size_t b = fc.col_index(u64{1} << r);
  if (fc.exact) {
    u64 bb = fc.exact_binoms[i].low_bits(prec).to_u64();
    u64 s1 = fc.exact_cols[a][i].low_bits(prec).to_u64();
    u64 s2v = fc.exact_cols[b][fc.N - i].low_bits(prec).to_u64();
    return (bb * s1 * s2v) & mask;
  }
  u64 bb = binomial_mod2_64(fc.N, i, prec);
  return (bb * fc.mod_cols[a][i] * fc.mod_cols[b][fc.N - i]) & mask;
}

/// Exact f value; only valid on an exact-backed column set.
inline BigNat f_value(const FColumns& fc, u64 r, u64 i) {
  const std::size_t a = fc.col_index((u64{1} << r) - 1);
  const std::size_t b = fc.col_index(u64{1} << r);
  return fc.exact_binoms[i] * fc.exact_cols[a][i] * fc.exact_cols[b][fc.N - i];
}

}  // namespace detail

inline VerificationReport verify_L212(const GridSpec& grid, unsigned workers = 1) {
  VerificationReport rep;
  rep.claim = "lemma2.12";
  rep.grid = grid;
  auto cs = grid.get("c", {1, 3, 5});
  auto rs = grid.get("r", detail::iota_vec(3, 8));
  auto ss = grid.get("s", detail::iota_vec(3, 8));

  detail::run_groups(rep, cs.size() * ss.size(), workers, [&](std::size_t g,
                                                              detail::Outcome& out) {
    const u64 c = static_cast<u64>(cs[g / ss.size()]);
    const u64 s = static_cast<u64>(ss[g % ss.size()]);
    if (c % 2 == 0 || s < 3) {
      ++out.filtered;
      return;
    }
    u64 r_hi = 0;
    for (i64 r : rs)
      if (r >= 3 && static_cast<u64>(r) <= s) r_hi = std::max(r_hi, (u64)r);
    if (r_hi == 0) {
      ++out.filtered;
      return;
    }

    const unsigned prec = static_cast<unsigned>(s) + 3;  // decides every sub-claim
    const bool exact = (c << s) <= rep.grid.exact_threshold;
    detail::FColumns cols = detail::build_f_columns(c, s, r_hi, exact, prec);
    std::optional<detail::FColumns> cols_up;  // for part (v), at s+1

    for (i64 r_signed : rs) {
      const u64 r = static_cast<u64>(r_signed);
      if (r_signed < 3 || r > s) {
        ++out.filtered;
        continue;
      }
      const u64 N = c << s;
      const u64 lo = (u64{1} << r) - 1;
      if (N < lo + (u64{1} << r)) {
        ++out.filtered;  // empty index range
        continue;
      }
      const u64 hi = N - (u64{1} << r);
      Params base{{"c", (i64)c}, {"r", r_signed}, {"s", (i64)s}};

      u64 sum_residue = 0;  // running sum mod 2^prec for part (iii)
      for (u64 i = lo; i <= hi; ++i) {
        const u64 v2i = static_cast<u64>(std::countr_zero(i));
        if (v2i > r - 1) continue;
        const u64 f_mod = detail::f_residue(cols, r, i, prec);
        sum_residue = (sum_residue + f_mod) & mask_for(prec);
        Params p = base;
        p.emplace_back("i", (i64)i);
        if (v2i <= r - 2) {
          ++out.checked;
          out.bump("part:i");
          // claim nu2(f) >= s+2  <=>  f == 0 mod 2^(s+2)
          if ((f_mod & mask_for(static_cast<unsigned>(s) + 2)) != 0)
            out.failures.push_back({p, "nu2 >= " + std::to_string(s + 2),
                                    "residue " + std::to_string(f_mod) + " mod 2^" +
                                        std::to_string(prec)});
        } else {  // v2i == r-1
          ++out.checked;
          out.bump("part:ii");
          const u64 low = f_mod & mask_for(static_cast<unsigned>(s) + 1);
          const bool ge_s = (low == 0) || (low == (u64{1} << s));
          const bool equality = (low == (u64{1} << s));
          const u64 b = i >> s;
          const bool digit = s2(c - 1 - b) + s2(b) == s2(c - 1);
          if (!ge_s)
            out.failures.push_back({p, "nu2 >= " + std::to_string(s),
                                    "residue " + std::to_string(low) + " mod 2^" +
                                        std::to_string(s + 1)});
          else if (equality != digit)
            out.failures.push_back({p,
                                    std::string("equality iff digit condition (digit=") +
                                        (digit ? "true" : "false") + ")",
                                    equality ? "equality" : "strict"});
        }
      }

      // part (iii): nu2 of the restricted sum >= s+1
      ++out.checked;
      out.bump("part:iii");
      if ((sum_residue & mask_for(static_cast<unsigned>(s) + 1)) != 0)
        out.failures.push_back({base, "sum nu2 >= " + std::to_string(s + 1),
                                "sum residue " + std::to_string(sum_residue) +
                                    " mod 2^" + std::to_string(prec)});

      // part (iv): f(2^r) + f(c2^s - 2^r) == 2^s mod 2^(s+1)
      if ((u64{1} << r) >= lo && (u64{1} << r) <= hi) {
        ++out.checked;
        out.bump("part:iv");
        u64 a_res = detail::f_residue(cols, r, u64{1} << r, prec);
        u64 b_res = detail::f_residue(cols, r, N - (u64{1} << r), prec);
        u64 lhs = (a_res + b_res) & mask_for(static_cast<unsigned>(s) + 1);
        if (lhs != (u64{1} << s))
          out.failures.push_back({base, std::to_string(u64{1} << s) + " mod 2^" +
                                            std::to_string(s + 1),
                                  std::to_string(lhs)});
      } else {
        ++out.filtered;
      }

      // part (v): f_{r,s+1}(l*2^(r+1) + 2^r) == f_{r,s}(l*2^r + 2^(r-1))
      // mod 2^(s+2), for 1 <= l <= c*2^(s-r) - 2
      if (c * (u64{1} << (s - r)) >= 3) {
        const u64 l_hi = c * (u64{1} << (s - r)) - 2;
        if (!cols_up) {
          const bool exact_up = (c << (s + 1)) <= rep.grid.exact_threshold;
          cols_up = detail::build_f_columns(c, s + 1, r_hi, exact_up,
                                            static_cast<unsigned>(s) + 3);
        }
        for (u64 l = 1; l <= l_hi; ++l) {
          ++out.checked;
          out.bump("part:v");
          u64 up = detail::f_residue(*cols_up, r, l * (u64{1} << (r + 1)) + (u64{1} << r),
                                     static_cast<unsigned>(s) + 2);
          u64 down = detail::f_residue(cols, r, l * (u64{1} << r) + (u64{1} << (r - 1)),
                                       static_cast<unsigned>(s) + 2);
          if (up != down) {
            Params p = base;
            p.emplace_back("l", (i64)l);
            out.failures.push_back({p, "congruent mod 2^" + std::to_string(s + 2),
                                    std::to_string(up) + " vs " + std::to_string(down)});
          }
        }
      } else {
        ++out.filtered;
      }
    }
  });
  return rep;
}

// ---------------------------------------------------------------------------
// Lemma 2.10 grid form: conv_identity_rhs(n,k1,k2) == S(n, k1+k2) exactly.
inline VerificationReport verify_conv_identity(const GridSpec& grid,
                                               unsigned workers = 1) {
  VerificationReport rep;
  rep.claim = "lemma2.10";
  rep.grid = grid;
  auto ns = grid.get("n", detail::iota_vec(2, 50));
  detail::run_groups(rep, ns.size(), workers, [&](std::size_t g, detail::Outcome& out) {
    const u64 n = static_cast<u64>(ns[g]);
    if (n < 2) {
      ++out.filtered;
      return;
    }
    auto row = stirling_row_rec(n, n);
    for (u64 k1 = 1; k1 < n; ++k1)
      for (u64 k2 = 1; k1 + k2 <= n; ++k2) {
        BigNat rhs = conv_identity_rhs(n, k1, k2);
        ++out.checked;
        if (rhs != row[k1 + k2])
          out.failures.push_back({{{"n", (i64)n}, {"k1", (i64)k1}, {"k2", (i64)k2}},
                                  row[k1 + k2].to_decimal(), rhs.to_decimal()});
      }
  });
  return rep;
}

}  // namespace s2a
