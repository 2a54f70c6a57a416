#pragma once
// Arbitrary-precision naturals and signed integers on 64-bit limbs.
// Little-endian limb order; the limb vector carries no high zero limbs.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace s2a {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

class BigNat {
 public:
  BigNat() = default;
  BigNat(u64 v) {
    if (v != 0) limbs_.push_back(v);
  }

  static BigNat from_decimal(std::string_view s);

  bool is_zero() const { return limbs_.empty(); }
  bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1); }

  /// Number of bits in the binary representation; 0 for zero.
  std::size_t bit_length() const {
    if (limbs_.empty()) return 0;
    return (limbs_.size() - 1) * 64 + std::bit_width(limbs_.back());
  }

  std::size_t limb_count() const { return limbs_.size(); }
  u64 limb(std::size_t i) const { return i < limbs_.size() ? limbs_[i] : 0; }

  bool fits_u64() const { return limbs_.size() <= 1; }
  u64 to_u64() const {
    if (limbs_.size() > 1) throw std::overflow_error("BigNat: value exceeds 64 bits");
    return limbs_.empty() ? 0 : limbs_[0];
  }

  /// Index of the lowest set bit. Requires a nonzero value.
  std::size_t trailing_zero_bits() const {
    if (limbs_.empty()) throw std::domain_error("BigNat: trailing_zero_bits of zero");
    std::size_t i = 0;
    while (limbs_[i] == 0) ++i;
    return i * 64 + static_cast<std::size_t>(std::countr_zero(limbs_[i]));
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (u64 w : limbs_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool bit(std::size_t i) const {
    std::size_t limb_i = i / 64;
    if (limb_i >= limbs_.size()) return false;
    return (limbs_[limb_i] >> (i % 64)) & 1;
  }

  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
    if (a.limbs_.size() != b.limbs_.size())
      return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    return std::strong_ordering::equal;
  }
  friend bool operator==(const BigNat& a, const BigNat& b) = default;

  BigNat& operator+=(const BigNat& rhs) {
    if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      u64 r = i < rhs.limbs_.size() ? rhs.limbs_[i] : 0;
      if (r == 0 && carry == 0 && i >= rhs.limbs_.size()) break;
      u64 s = limbs_[i] + r;
      u64 c1 = s < limbs_[i];
      limbs_[i] = s + carry;
      carry = c1 | (limbs_[i] < s);
    }
    if (carry) limbs_.push_back(1);
    return *this;
  }
  friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }

  /// Subtraction; requires *this >= rhs.
  BigNat& operator-=(const BigNat& rhs) {
    if (*this < rhs) throw std::invalid_argument("BigNat: subtraction underflow");
    u64 borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      u64 r = i < rhs.limbs_.size() ? rhs.limbs_[i] : 0;
      u64 d = limbs_[i] - r;
      u64 b1 = d > limbs_[i];
      limbs_[i] = d - borrow;
      borrow = b1 | (limbs_[i] > d);
      if (r == 0 && borrow == 0 && i >= rhs.limbs_.size()) break;
    }
    trim();
    return *this;
  }
  friend BigNat operator-(BigNat a, const BigNat& b) { return a -= b; }

  BigNat& mul_u64(u64 m) {
    if (m == 0 || is_zero()) {
      limbs_.clear();
      return *this;
    }
    u64 carry = 0;
    for (auto& w : limbs_) {
      u128 p = static_cast<u128>(w) * m + carry;
      w = static_cast<u64>(p);
      carry = static_cast<u64>(p >> 64);
    }
    if (carry) limbs_.push_back(carry);
    return *this;
  }

  friend BigNat operator*(const BigNat& a, const BigNat& b) {
    if (a.is_zero() || b.is_zero()) return BigNat{};
    std::vector<u64> out(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      u64 carry = 0;
      u64 ai = a.limbs_[i];
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        u128 p = static_cast<u128>(ai) * b.limbs_[j] + out[i + j] + carry;
        out[i + j] = static_cast<u64>(p);
        carry = static_cast<u64>(p >> 64);
      }
      out[i + b.limbs_.size()] = carry;
    }
    BigNat r;
    r.limbs_ = std::move(out);
    r.trim();
    return r;
  }
  BigNat& operator*=(const BigNat& b) { return *this = *this * b; }

  /// Quotient and word remainder; divisor must be nonzero.
  std::pair<BigNat, u64> divrem_u64(u64 d) const {
    if (d == 0) throw std::domain_error("BigNat: division by zero");
    BigNat q;
    q.limbs_.assign(limbs_.size(), 0);
    u64 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      u128 cur = (static_cast<u128>(rem) << 64) | limbs_[i];
      q.limbs_[i] = static_cast<u64>(cur / d);
      rem = static_cast<u64>(cur % d);
    }
    q.trim();
    return {std::move(q), rem};
  }

  /// Knuth algorithm D long division; divisor must be nonzero.
  std::pair<BigNat, BigNat> divrem(const BigNat& divisor) const;

  BigNat& shl_bits(std::size_t k) {
    if (is_zero() || k == 0) return *this;
    const std::size_t limb_shift = k / 64, bit_shift = k % 64;
    std::vector<u64> out(limbs_.size() + limb_shift + 1, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      out[i + limb_shift] |= limbs_[i] << bit_shift;
      if (bit_shift)
        out[i + limb_shift + 1] |= limbs_[i] >> (64 - bit_shift);
    }
    limbs_ = std::move(out);
    trim();
    return *this;
  }

  BigNat& shr_bits(std::size_t k) {
    const std::size_t limb_shift = k / 64, bit_shift = k % 64;
    if (limb_shift >= limbs_.size()) {
      limbs_.clear();
      return *this;
    }
    std::vector<u64> out(limbs_.size() - limb_shift, 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = limbs_[i + limb_shift] >> bit_shift;
      if (bit_shift && i + limb_shift + 1 < limbs_.size())
        out[i] |= limbs_[i + limb_shift + 1] << (64 - bit_shift);
    }
    limbs_ = std::move(out);
    trim();
    return *this;
  }

  /// Value reduced mod 2^m.
  BigNat low_bits(std::size_t m) const {
    BigNat r;
    const std::size_t full = m / 64, rest = m % 64;
    std::size_t n = std::min(limbs_.size(), full + (rest ? 1 : 0));
    r.limbs_.assign(limbs_.begin(), limbs_.begin() + n);
    if (rest && r.limbs_.size() == full + 1)
      r.limbs_[full] &= (~u64{0}) >> (64 - rest);
    r.trim();
    return r;
  }

  static BigNat pow(BigNat base, u64 e) {
    BigNat r{1};
    while (e) {
      if (e & 1) r *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return r;
  }

  static BigNat two_pow(std::size_t e) {
    BigNat r{1};
    r.shl_bits(e);
    return r;
  }

  std::string to_decimal() const {
    if (is_zero()) return "0";
    // peel 19 decimal digits at a time
    std::string out;
    BigNat cur = *this;
    while (!cur.is_zero()) {
      auto [q, r] = cur.divrem_u64(10'000'000'000'000'000'000ULL);
      std::string chunk = std::to_string(r);
      if (!q.is_zero()) chunk.insert(0, 19 - chunk.size(), '0');
      out.insert(0, chunk);
      cur = std::move(q);
    }
    return out;
  }

 private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<u64> limbs_;
};

inline std::pair<BigNat, BigNat> BigNat::divrem(const BigNat& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("BigNat: division by zero");
  if (*this < divisor) return {BigNat{}, *this};
  if (divisor.limbs_.size() == 1) {
    auto [q, r] = divrem_u64(divisor.limbs_[0]);
    return {std::move(q), BigNat(r)};
  }

  const std::size_t n = divisor.limbs_.size();
  const std::size_t m = limbs_.size() - n;
  const unsigned shift = static_cast<unsigned>(std::countl_zero(divisor.limbs_.back()));

  // normalized working copies: u has one extra high limb
  std::vector<u64> u(limbs_.size() + 1, 0);
  std::vector<u64> v(n, 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    u[i] |= limbs_[i] << shift;
    if (shift) u[i + 1] = limbs_[i] >> (64 - shift);
  }
  for (std::size_t i = 0; i < n; ++i) {
    v[i] |= divisor.limbs_[i] << shift;
    if (shift && i + 1 < n) v[i + 1] |= divisor.limbs_[i] >> (64 - shift);
  }

  BigNat q;
  q.limbs_.assign(m + 1, 0);
  const u64 vtop = v[n - 1], vsecond = v[n - 2];

  for (std::size_t j = m + 1; j-- > 0;) {
    u128 num = (static_cast<u128>(u[j + n]) << 64) | u[j + n - 1];
    u64 qhat, rhat;
    if (u[j + n] == vtop) {
      qhat = ~u64{0};
      u128 r = num - static_cast<u128>(qhat) * vtop;
      rhat = static_cast<u64>(r);
      if (r >> 64) goto mulsub;  // rhat overflowed past one limb: qhat is fine
    } else {
      qhat = static_cast<u64>(num / vtop);
      rhat = static_cast<u64>(num % vtop);
    }
    while (static_cast<u128>(qhat) * vsecond >
           ((static_cast<u128>(rhat) << 64) | u[j + n - 2])) {
      --qhat;
      u64 nr = rhat + vtop;
      if (nr < rhat) break;  // rhat >= 2^64: condition can no longer hold
      rhat = nr;
    }
  mulsub: {
      // u[j..j+n] -= qhat * v
      u64 borrow = 0, mul_carry = 0;
      for (std::size_t i = 0; i < n; ++i) {
        u128 p = static_cast<u128>(qhat) * v[i] + mul_carry;
        mul_carry = static_cast<u64>(p >> 64);
        u64 sub = static_cast<u64>(p);
        u64 d = u[j + i] - sub;
        u64 b1 = d > u[j + i];
        u[j + i] = d - borrow;
        borrow = b1 | (u[j + i] > d);
      }
      u64 d = u[j + n] - mul_carry;
      u64 b1 = d > u[j + n];
      u[j + n] = d - borrow;
      borrow = b1 | (u[j + n] > d);
      if (borrow) {
        // qhat was one too large: add v back
        --qhat;
        u64 carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
          u64 s = u[j + i] + v[i];
          u64 c1 = s < u[j + i];
          u[j + i] = s + carry;
          carry = c1 | (u[j + i] < s);
        }
        u[j + n] += carry;
      }
      q.limbs_[j] = qhat;
    }
  }

  q.trim();
  BigNat r;
  r.limbs_.assign(u.begin(), u.begin() + n);
  r.trim();
  r.shr_bits(shift);
  return {std::move(q), std::move(r)};
}

inline BigNat BigNat::from_decimal(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("BigNat: empty decimal string");
  BigNat r;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t take = std::min<std::size_t>(19, s.size() - i);
    u64 chunk = 0, scale = 1;
    for (std::size_t j = 0; j < take; ++j) {
      char c = s[i + j];
      if (c < '0' || c > '9') throw std::invalid_argument("BigNat: bad decimal digit");
      chunk = chunk * 10 + static_cast<u64>(c - '0');
      scale *= 10;
    }
    r.mul_u64(scale);
    r += BigNat(chunk);
    i += take;
  }
  return r;
}

/// Signed integer: sign in {-1, 0, +1} plus magnitude.
class BigInt {
 public:
  BigInt() = default;
  BigInt(i64 v) : sign_(v > 0 ? 1 : v < 0 ? -1 : 0),
                  mag_(v >= 0 ? static_cast<u64>(v)
                              : static_cast<u64>(-(v + 1)) + 1) {}
  explicit BigInt(BigNat m, int sign = 1)
      : sign_(m.is_zero() ? 0 : sign), mag_(std::move(m)) {
    if (sign_ != 0 && sign_ != 1 && sign_ != -1)
      throw std::invalid_argument("BigInt: bad sign");
  }

  /// a - b as a signed value.
  static BigInt diff(const BigNat& a, const BigNat& b) {
    auto c = a <=> b;
    if (c == std::strong_ordering::equal) return BigInt{};
    if (c == std::strong_ordering::greater) return BigInt(a - b, 1);
    return BigInt(b - a, -1);
  }

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  const BigNat& magnitude() const { return mag_; }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }

  BigInt operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    if (a.sign_ == b.sign_) return BigInt(a.mag_ + b.mag_, a.sign_);
    auto c = a.mag_ <=> b.mag_;
    if (c == std::strong_ordering::equal) return BigInt{};
    if (c == std::strong_ordering::greater) return BigInt(a.mag_ - b.mag_, a.sign_);
    return BigInt(b.mag_ - a.mag_, b.sign_);
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }
  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt{};
    return BigInt(a.mag_ * b.mag_, a.sign_ * b.sign_);
  }

  std::string to_decimal() const {
    return sign_ < 0 ? "-" + mag_.to_decimal() : mag_.to_decimal();
  }

 private:
  int sign_ = 0;
  BigNat mag_;
};

}  // namespace s2a
