#pragma once
// The convolution identity S(n,k1+k2) = k1!k2!/(k1+k2)! * sum C(n,i)S(i,k1)S(n-i,k2)
// and the three-factor product f_{r,s}(i) = C(c2^s,i) S(i,2^r-1) S(c2^s-i,2^r).

#include <optional>
#include <stdexcept>
#include <utility>

#include "stirling2adic/dyadic.hpp"
#include "stirling2adic/mod2.hpp"
#include "stirling2adic/series.hpp"
#include "stirling2adic/stirling_exact.hpp"

namespace s2a {

/// Right-hand side of the convolution identity, evaluated exactly.
/// The division by (k1+k2)!/(k1!k2!) must be exact; anything else is an
/// arithmetic fault and aborts loudly.
inline BigNat conv_identity_rhs(u64 n, u64 k1, u64 k2, const ExactCaps& caps = {}) {
  if (k1 == 0 || k2 == 0) throw std::invalid_argument("conv_identity_rhs: k1, k2 >= 1");
  if (k1 + k2 > n) throw std::invalid_argument("conv_identity_rhs: requires k1 + k2 <= n");
  check_exact_caps(n, std::max(k1, k2), caps);

  // columns S(., k1) and S(., k2) in one pass
  auto cols = stirling_columns_rec(n, {k1, k2}, caps);
  const auto& c1 = cols[0];
  const auto& c2 = cols[1];

  BigNat sum;
  BigNat binom{1};  // C(n, i) updated incrementally from i = 0
  for (u64 i = 1; i <= n; ++i) {
    binom.mul_u64(n - i + 1);
    auto [q, rem] = binom.divrem_u64(i);
    if (rem != 0) throw std::logic_error("conv_identity_rhs: binomial update fault");
    binom = std::move(q);
    if (i < k1 || n - i < k2) continue;
    sum += binom * c1[i] * c2[n - i];
  }

  BigNat scaled = sum * factorial_exact(k1) * factorial_exact(k2);
  auto [q, rem] = scaled.divrem(factorial_exact(k1 + k2));
  if (!rem.is_zero())
    throw std::logic_error("conv_identity_rhs: multinomial division not exact");
  return q;
}

struct FRange {
  u64 lo, hi;  // admissible i: 2^r - 1 .. c2^s - 2^r
};

inline FRange f_rs_range(u64 c, u64 r, u64 s) {
  if (c == 0 || c % 2 == 0) throw std::invalid_argument("f_rs: c must be odd");
  if (!(s >= r && r >= 3)) throw std::invalid_argument("f_rs: requires s >= r >= 3");
  if (s > 40) throw std::invalid_argument("f_rs: s too large");
  u64 total = c << s;
  u64 lo = (u64{1} << r) - 1;
  if (total < lo + (u64{1} << r))
    throw std::domain_error("f_rs: empty index range (c2^s < 2^(r+1) - 1)");
  return {lo, total - (u64{1} << r)};
}

inline void f_rs_check_index(u64 c, u64 r, u64 s, u64 i) {
  FRange range = f_rs_range(c, r, s);
  if (i < range.lo || i > range.hi)
    throw std::invalid_argument("f_rs: index outside [2^r - 1, c2^s - 2^r]");
}

/// f_{r,s}(i), exact.
inline BigNat f_rs_exact(u64 c, u64 r, u64 s, u64 i, const ExactCaps& caps = {}) {
  f_rs_check_index(c, r, s, i);
  u64 total = c << s;
  check_exact_caps(total, u64{1} << r, caps);
  BigNat s1 = stirling_rec(i, (u64{1} << r) - 1, caps);
  BigNat s2v = stirling_rec(total - i, u64{1} << r, caps);
  return binomial_exact(total, i) * s1 * s2v;
}

/// C(N, i) mod 2^M without large intermediates: the valuation comes from
/// Kummer and the odd part from a multiplicative walk whose odd factors
/// are invertible words.
inline u64 binomial_mod2_64(u64 nn, u64 kk, unsigned precision) {
  if (precision == 0 || precision > 64)
    throw std::invalid_argument("binomial_mod2_64: 1 <= M <= 64");
  if (kk > nn) return 0;
  if (kk > nn - kk) kk = nn - kk;
  u64 vtotal = 0, odd = 1;
  for (u64 j = 1; j <= kk; ++j) {
    u64 num = nn - kk + j;
    u64 vn = static_cast<u64>(std::countr_zero(num));
    u64 vd = static_cast<u64>(std::countr_zero(j));
    vtotal += vn - vd;  // running valuation never dips below zero at step ends
    odd *= (num >> vn) * odd_inverse_u64(j >> vd);
  }
  if (vtotal >= precision) return 0;
  return (odd << vtotal) & mask_for(precision);
}

/// f_{r,s}(i) mod 2^M (word precision). Stirling factors stream at the
/// same modulus; the binomial uses the split representation above.
inline u64 f_rs_mod64(u64 c, u64 r, u64 s, u64 i, unsigned precision) {
  f_rs_check_index(c, r, s, i);
  if (precision == 0 || precision > 64)
    throw std::invalid_argument("f_rs_mod64: 1 <= M <= 64");
  u64 total = c << s;
  u64 b = binomial_mod2_64(total, i, precision);
  u64 s1 = stirling_mod64(i, (u64{1} << r) - 1, precision);
  u64 s2v = stirling_mod64(total - i, u64{1} << r, precision);
  return (b * s1 * s2v) & mask_for(precision);
}

/// One f_{r,s}(i) evaluation, exact or as a residue.
struct FTerm {
  u64 c, r, s, i;
  std::optional<BigNat> exact;  // populated in exact mode
  u64 residue = 0;              // populated in mod mode
  unsigned precision = 0;
};

inline FTerm f_rs(u64 c, u64 r, u64 s, u64 i, std::optional<unsigned> mod_precision,
                  const ExactCaps& caps = {}) {
  FTerm t{c, r, s, i, std::nullopt, 0, 0};
  if (mod_precision) {
    t.precision = *mod_precision;
    t.residue = f_rs_mod64(c, r, s, i, *mod_precision);
  } else {
    t.exact = f_rs_exact(c, r, s, i, caps);
  }
  return t;
}

}  // namespace s2a
