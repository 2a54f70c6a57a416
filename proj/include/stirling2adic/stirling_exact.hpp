#pragma once
// Exact Stirling numbers of the second kind, binomial coefficients and
// factorials over BigNat. Ground truth for every other engine.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stirling2adic/bignat.hpp"

namespace s2a {

/// Resource limits for exact-mode triangles. S(n,k) costs ~n*log2(k) bits,
/// so the defaults keep single values under ~0.3 MB.
struct ExactCaps {
  u64 max_n = 20000;
  u64 max_k = 4096;
};

class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

inline void check_exact_caps(u64 n, u64 k, const ExactCaps& caps) {
  if (n > caps.max_n)
    throw CapacityError("exact mode: n=" + std::to_string(n) + " exceeds cap " +
                        std::to_string(caps.max_n));
  if (k > caps.max_k)
    throw CapacityError("exact mode: k=" + std::to_string(k) + " exceeds cap " +
                        std::to_string(caps.max_k));
}

/// Streams rows of the triangle S(n, 0..kmax) via
/// S(n,k) = S(n-1,k-1) + k*S(n-1,k), one row in memory.
class StirlingRowStream {
 public:
  explicit StirlingRowStream(u64 kmax) : row_(kmax + 1) { row_[0] = BigNat(1); }

  u64 n() const { return n_; }
  u64 kmax() const { return row_.size() - 1; }
  const std::vector<BigNat>& row() const { return row_; }
  const BigNat& at(u64 k) const { return row_.at(k); }

  void step() {
    ++n_;
    u64 top = std::min(n_, kmax());
    for (u64 k = top; k >= 1; --k) {
      // descending k: row_[k-1] still holds the previous row's value
      row_[k].mul_u64(k);
      row_[k] += row_[k - 1];
    }
    row_[0] = BigNat{};
  }

  void step_to(u64 n) {
    while (n_ < n) step();
  }

 private:
  u64 n_ = 0;
  std::vector<BigNat> row_;
};

/// S(n,k) by the recurrence. k > n yields 0.
inline BigNat stirling_rec(u64 n, u64 k, const ExactCaps& caps = {}) {
  if (k > n) return BigNat{};
  check_exact_caps(n, k, caps);
  StirlingRowStream s(k);
  s.step_to(n);
  return s.at(k);
}

/// Full row S(n, 0..kmax).
inline std::vector<BigNat> stirling_row_rec(u64 n, u64 kmax,
                                            const ExactCaps& caps = {}) {
  check_exact_caps(n, kmax, caps);
  StirlingRowStream s(kmax);
  s.step_to(n);
  return s.row();
}

/// Columns S(0..nmax, k) for each requested k, in one streaming pass.
inline std::vector<std::vector<BigNat>> stirling_columns_rec(
    u64 nmax, const std::vector<u64>& ks, const ExactCaps& caps = {}) {
  u64 kmax = 0;
  for (u64 k : ks) kmax = std::max(kmax, k);
  check_exact_caps(nmax, kmax, caps);
  std::vector<std::vector<BigNat>> out(ks.size());
  StirlingRowStream s(kmax);
  for (std::size_t c = 0; c < ks.size(); ++c)
    out[c].push_back(ks[c] == 0 ? BigNat(1) : BigNat{});
  for (u64 n = 1; n <= nmax; ++n) {
    s.step();
    for (std::size_t c = 0; c < ks.size(); ++c) out[c].push_back(s.at(ks[c]));
  }
  return out;
}

inline BigNat factorial_exact(u64 n) {
  BigNat r{1};
  for (u64 i = 2; i <= n; ++i) r.mul_u64(i);
  return r;
}

/// C(n,k) by the multiplicative formula with exact division at each step.
/// k > n yields 0.
inline BigNat binomial_exact(u64 n, u64 k) {
  if (k > n) return BigNat{};
  if (k > n - k) k = n - k;
  BigNat r{1};
  for (u64 j = 1; j <= k; ++j) {
    r.mul_u64(n - k + j);
    auto [q, rem] = r.divrem_u64(j);
    if (rem != 0) throw std::logic_error("binomial_exact: non-exact division");
    r = std::move(q);
  }
  return r;
}

/// S(n,k) by the alternating-sum formula; the sum must divide by k!
/// exactly, and a failed division aborts loudly as an arithmetic fault.
inline BigNat stirling_explicit(u64 n, u64 k) {
  if (k > n) return BigNat{};
  if (k == 0) return n == 0 ? BigNat(1) : BigNat{};
  BigNat pos, neg;
  BigNat binom{1};  // C(k, i), updated incrementally
  for (u64 i = 0; i <= k; ++i) {
    if (i > 0) {
      binom.mul_u64(k - i + 1);
      auto [q, rem] = binom.divrem_u64(i);
      if (rem != 0) throw std::logic_error("stirling_explicit: binomial update fault");
      binom = std::move(q);
    }
    if (i < k) {
      BigNat term = binom * BigNat::pow(BigNat(k - i), n);
      (i % 2 == 0 ? pos : neg) += term;
    }
    // i == k contributes (k-i)^n = 0^n = 0 for n >= 1 (and k>=1 here)
  }
  BigNat sum = pos - neg;
  auto [q, rem] = sum.divrem(factorial_exact(k));
  if (!rem.is_zero())
    throw std::logic_error("stirling_explicit: alternating sum not divisible by k!");
  return q;
}

/// Whole row S(n, 0..n) by the alternating-sum formula, sharing one table
/// of powers j^n across the row. Same divisibility discipline as
/// stirling_explicit.
inline std::vector<BigNat> stirling_explicit_row(u64 n) {
  std::vector<BigNat> pows(n + 1);
  for (u64 j = 0; j <= n; ++j) pows[j] = BigNat::pow(BigNat(j), n);
  std::vector<BigNat> row(n + 1);
  row[0] = n == 0 ? BigNat(1) : BigNat{};
  BigNat kfact{1};
  for (u64 k = 1; k <= n; ++k) {
    kfact.mul_u64(k);
    BigNat pos, neg, binom{1};
    for (u64 i = 0; i < k; ++i) {
      if (i > 0) {
        binom.mul_u64(k - i + 1);
        auto [q, rem] = binom.divrem_u64(i);
        if (rem != 0) throw std::logic_error("stirling_explicit_row: binomial fault");
        binom = std::move(q);
      }
      (i % 2 == 0 ? pos : neg) += binom * pows[k - i];
    }
    auto [q, rem] = (pos - neg).divrem(kfact);
    if (!rem.is_zero())
      throw std::logic_error("stirling_explicit_row: sum not divisible by k!");
    row[k] = std::move(q);
  }
  return row;
}

/// S(a*2^n, k) - S(b*2^n, k), exact and signed.
inline BigInt stirling_diff_exact(u64 a, u64 b, u64 n, u64 k,
                                  const ExactCaps& caps = {}) {
  if (a == 0 || b == 0) throw std::invalid_argument("stirling_diff_exact: a, b >= 1");
  if (k == 0) throw std::invalid_argument("stirling_diff_exact: k >= 1");
  if (n > 40) throw std::invalid_argument("stirling_diff_exact: n too large");
  u64 ra = a << n, rb = b << n;
  check_exact_caps(std::max(ra, rb), k, caps);
  StirlingRowStream s(k);
  s.step_to(std::min(ra, rb));
  BigNat lo = s.at(k);
  s.step_to(std::max(ra, rb));
  BigNat hi = s.at(k);
  if (ra >= rb) return BigInt::diff(hi, lo);
  return BigInt::diff(lo, hi);
}

}  // namespace s2a
