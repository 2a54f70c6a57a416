#pragma once
// Base-2 digit sums and p-adic valuations of integers, factorials and
// binomial coefficients, computed combinatorially (no large intermediates).

#include <bit>
#include <optional>
#include <stdexcept>
#include <string>

#include "stirling2adic/bignat.hpp"

namespace s2a {

/// Extended p-adic valuation: a nonnegative integer, or infinite for
/// the valuation of zero.
class Val2 {
 public:
  static Val2 infinite() { return Val2{}; }
  static Val2 of(u64 v) {
    Val2 r;
    r.value_ = v;
    return r;
  }

  bool is_finite() const { return value_.has_value(); }
  u64 value() const {
    if (!value_) throw std::domain_error("Val2: infinite valuation has no value");
    return *value_;
  }

  friend bool operator==(const Val2&, const Val2&) = default;

  std::string to_string() const {
    return value_ ? std::to_string(*value_) : std::string("infinite");
  }

 private:
  std::optional<u64> value_;
};

inline bool is_prime_u64(u64 p) {
  if (p < 2) return false;
  for (u64 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline Val2 nu(const BigNat& x, u64 p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("nu: p must be prime");
  if (x.is_zero()) return Val2::infinite();
  if (p == 2) return Val2::of(x.trailing_zero_bits());
  u64 v = 0;
  BigNat cur = x;
  for (;;) {
    auto [q, r] = cur.divrem_u64(p);
    if (r != 0) break;
    ++v;
    cur = std::move(q);
  }
  return Val2::of(v);
}

inline Val2 nu(u64 x, u64 p) { return nu(BigNat(x), p); }
inline Val2 nu(const BigInt& x, u64 p) { return nu(x.magnitude(), p); }

/// Base-2 digit sum.
inline u64 s2(u64 n) { return static_cast<u64>(std::popcount(n)); }
inline u64 s2(const BigNat& n) { return n.popcount(); }

/// nu_2(C(n,k)) by Kummer's identity s2(k) + s2(n-k) - s2(n);
/// never touches the binomial value itself.
inline u64 nu2_binomial(u64 n, u64 k) {
  if (k > n) throw std::invalid_argument("nu2_binomial: k > n");
  return s2(k) + s2(n - k) - s2(n);
}

/// nu_2(n!) = n - s2(n) (Legendre).
inline u64 nu2_factorial(u64 n) { return n - s2(n); }

/// Smallest e with 2^e >= k; pure integer bit arithmetic.
inline u64 ceil_log2(u64 k) {
  if (k == 0) throw std::invalid_argument("ceil_log2: k must be positive");
  return static_cast<u64>(std::bit_width(k - 1));
}

inline bool is_power_of_two(u64 k) { return k != 0 && (k & (k - 1)) == 0; }

/// k of the form 2^m - 1.
inline bool is_mersenne(u64 k) { return k != 0 && is_power_of_two(k + 1); }

/// 2 at k=4, 1 at larger powers of two, 0 otherwise.
inline u64 delta(u64 k) {
  if (k == 0) throw std::invalid_argument("delta: k must be positive");
  if (k == 4) return 2;
  if (k > 4 && is_power_of_two(k)) return 1;
  return 0;
}

}  // namespace s2a
