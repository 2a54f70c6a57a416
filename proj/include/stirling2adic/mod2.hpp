#pragma once
// Row-streaming Stirling residues mod 2^M. Residues are single words up
// to M = 64 and fixed-width little-endian word arrays above that.

#include <cstring>
#include <stdexcept>
#include <vector>

#include "stirling2adic/bignat.hpp"

namespace s2a {

/// Largest M served by the single-word fast path.
inline constexpr unsigned kWordPrecisionLimit = 64;

inline u64 mask_for(unsigned m) {
  return m >= 64 ? ~u64{0} : ((u64{1} << m) - 1);
}

/// Streams rows of S(n, 0..kmax) mod 2^M.
class Mod2RowStream {
 public:
  Mod2RowStream(u64 kmax, unsigned precision)
      : kmax_(kmax),
        precision_(precision),
        width_((precision + kWordPrecisionLimit - 1) / kWordPrecisionLimit),
        top_mask_(mask_for(precision % 64 == 0 ? 64 : precision % 64)) {
    if (precision == 0) throw std::invalid_argument("Mod2RowStream: M >= 1");
    words_.assign((kmax_ + 1) * width_, 0);
    words_[0] = 1;  // S(0,0)
  }

  u64 n() const { return n_; }
  u64 kmax() const { return kmax_; }
  unsigned precision() const { return precision_; }
  unsigned width() const { return width_; }

  void step() {
    ++n_;
    u64 top = std::min(n_, kmax_);
    if (width_ == 1) {
      u64* row = words_.data();
      for (u64 k = top; k >= 1; --k)
        row[k] = (row[k] * k + row[k - 1]) & top_mask_;
      row[0] = 0;
    } else {
      for (u64 k = top; k >= 1; --k) {
        u64* e = entry(k);
        const u64* p = entry(k - 1);
        // e = e*k + p, truncated to the precision mask
        u64 mul_carry = 0, add_carry = 0;
        for (unsigned w = 0; w < width_; ++w) {
          u128 prod = static_cast<u128>(e[w]) * k + mul_carry;
          mul_carry = static_cast<u64>(prod >> 64);
          u64 lo = static_cast<u64>(prod);
          u64 s = lo + p[w];
          u64 c1 = s < lo;
          e[w] = s + add_carry;
          add_carry = c1 | (e[w] < s);
        }
        e[width_ - 1] &= top_mask_;
      }
      std::memset(entry(0), 0, width_ * sizeof(u64));
    }
  }

  void step_to(u64 n) {
    while (n_ < n) step();
  }

  /// Residue of S(n, k); requires M <= 64.
  u64 at64(u64 k) const {
    if (width_ != 1) throw std::logic_error("Mod2RowStream: at64 needs M <= 64");
    return k > kmax_ ? 0 : words_[k];
  }

  BigNat at(u64 k) const {
    if (k > kmax_) return BigNat{};
    BigNat r;
    const u64* e = entry(k);
    for (unsigned w = width_; w-- > 0;) {
      r.shl_bits(64);
      r += BigNat(e[w]);
    }
    return r;
  }

  /// Copies the residue's words (little-endian, `width()` of them).
  void copy_words(u64 k, u64* out) const {
    if (k > kmax_)
      std::memset(out, 0, width_ * sizeof(u64));
    else
      std::memcpy(out, entry(k), width_ * sizeof(u64));
  }

 private:
  const u64* entry(u64 k) const { return words_.data() + k * width_; }
  u64* entry(u64 k) { return words_.data() + k * width_; }

  u64 kmax_;
  unsigned precision_;
  unsigned width_;
  u64 top_mask_;
  u64 n_ = 0;
  std::vector<u64> words_;
};

/// S(n,k) mod 2^M as a word; requires M <= 64.
inline u64 stirling_mod64(u64 n, u64 k, unsigned precision) {
  if (precision == 0 || precision > 64)
    throw std::invalid_argument("stirling_mod64: 1 <= M <= 64");
  if (k > n) return 0;
  Mod2RowStream s(k, precision);
  s.step_to(n);
  return s.at64(k);
}

/// S(n,k) mod 2^M at any precision.
inline BigNat stirling_mod(u64 n, u64 k, unsigned precision) {
  if (k > n) return BigNat{};
  Mod2RowStream s(k, precision);
  s.step_to(n);
  return s.at(k);
}

/// Column k of the triangle mod 2^M for n = 0..nmax; M <= 64.
inline std::vector<u64> stirling_column_mod64(u64 nmax, u64 k, unsigned precision) {
  if (precision == 0 || precision > 64)
    throw std::invalid_argument("stirling_column_mod64: 1 <= M <= 64");
  Mod2RowStream s(k, precision);
  std::vector<u64> out;
  out.reserve(nmax + 1);
  out.push_back(k == 0 ? 1 : 0);
  for (u64 n = 1; n <= nmax; ++n) {
    s.step();
    out.push_back(s.at64(k));
  }
  return out;
}

/// (x - y) mod 2^M over equal-width word arrays, in place into x.
inline void mod_sub_words(u64* x, const u64* y, unsigned width, u64 top_mask) {
  u64 borrow = 0;
  for (unsigned w = 0; w < width; ++w) {
    u64 d = x[w] - y[w];
    u64 b1 = d > x[w];
    x[w] = d - borrow;
    borrow = b1 | (x[w] > d);
  }
  x[width - 1] &= top_mask;
}

/// Lowest set bit across a word array, or -1 when all zero.
inline int words_trailing_zeros(const u64* x, unsigned width) {
  for (unsigned w = 0; w < width; ++w)
    if (x[w] != 0) return static_cast<int>(w * 64 + std::countr_zero(x[w]));
  return -1;
}

}  // namespace s2a
