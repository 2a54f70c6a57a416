#pragma once
// Certified 2-adic valuation of Stirling differences at escalating
// modular precision. A nonzero residue mod 2^M pins the valuation
// exactly; an all-zero residue only witnesses "at least M".

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "stirling2adic/dyadic.hpp"
#include "stirling2adic/mod2.hpp"

namespace s2a {

struct AdaptiveValuation {
  enum class Kind { exact, at_least, infinite };

  Kind kind = Kind::infinite;
  u64 value = 0;            // the valuation (exact) or the certified floor (at_least)
  unsigned precision = 0;   // modulus exponent that settled the answer

  static AdaptiveValuation exact(u64 v, unsigned m) { return {Kind::exact, v, m}; }
  static AdaptiveValuation at_least(u64 v, unsigned m) { return {Kind::at_least, v, m}; }
  static AdaptiveValuation infinite() { return {}; }

  bool is_exact() const { return kind == Kind::exact; }

  std::string to_string() const {
    switch (kind) {
      case Kind::exact: return "exact(" + std::to_string(value) + ")";
      case Kind::at_least: return "at-least(" + std::to_string(value) + ")";
      default: return "infinite";
    }
  }

  friend bool operator==(const AdaptiveValuation&, const AdaptiveValuation&) = default;
};

struct AdaptiveSchedule {
  unsigned cap = 4096;                     // precision ceiling
  std::optional<u64> predicted;            // expected valuation, if a theorem offers one
  std::optional<unsigned> start;           // explicit starting precision override
};

/// nu_2(S(a*2^n, k) - S(b*2^n, k)) with certified adaptive precision.
/// Requires a >= b; a == b yields the infinite valuation.
inline AdaptiveValuation nu2_diff_adaptive(u64 a, u64 b, u64 n, u64 k,
                                           const AdaptiveSchedule& sched = {}) {
  if (a == 0 || b == 0) throw std::invalid_argument("nu2_diff_adaptive: a, b >= 1");
  if (a < b) throw std::invalid_argument("nu2_diff_adaptive: requires a >= b");
  if (k == 0) throw std::invalid_argument("nu2_diff_adaptive: k >= 1");
  if (n > 40) throw std::invalid_argument("nu2_diff_adaptive: n too large");
  if (a == b) return AdaptiveValuation::infinite();

  const u64 row_a = a << n, row_b = b << n;
  u64 base = sched.predicted ? *sched.predicted : n + nu(a - b, 2).value() + 2;
  unsigned m = sched.start ? *sched.start
                           : static_cast<unsigned>(std::min<u64>(base + 8, sched.cap));
  m = std::max(m, 2u);
  m = std::min<unsigned>(m, sched.cap);

  for (;;) {
    Mod2RowStream s(k, m);
    s.step_to(row_b);
    std::vector<u64> rb(s.width());
    s.copy_words(k, rb.data());
    s.step_to(row_a);
    std::vector<u64> ra(s.width());
    s.copy_words(k, ra.data());

    const u64 top_mask = mask_for(m % 64 == 0 ? 64 : m % 64);
    mod_sub_words(ra.data(), rb.data(), s.width(), top_mask);
    int tz = words_trailing_zeros(ra.data(), s.width());
    if (tz >= 0) {
      // nonzero residue: the valuation is certified and below m
      return AdaptiveValuation::exact(static_cast<u64>(tz), m);
    }
    if (m >= sched.cap) return AdaptiveValuation::at_least(sched.cap, m);
    m = static_cast<unsigned>(std::min<u64>(u64{m} * 2, sched.cap));
  }
}

}  // namespace s2a
