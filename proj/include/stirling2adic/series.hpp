#pragma once
// Truncated polynomial ring (Z/2^M)[x]/(x^(D+1)) with word coefficients,
// plus the generating-function route to Stirling residues.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "stirling2adic/mod2.hpp"

namespace s2a {

/// Inverse of an odd word mod 2^64 (Newton; five doublings suffice).
inline u64 odd_inverse_u64(u64 a) {
  if ((a & 1) == 0) throw std::domain_error("odd_inverse_u64: even argument");
  u64 x = a;  // correct to 3 bits
  for (int i = 0; i < 5; ++i) x *= 2 - a * x;
  return x;
}

class ModSeries {
 public:
  ModSeries(unsigned precision, u32 degree)
      : precision_(precision), mask_(mask_for(precision)), coeffs_(degree + 1, 0) {
    if (precision == 0 || precision > 64)
      throw std::invalid_argument("ModSeries: 1 <= M <= 64");
  }

  static ModSeries one(unsigned precision, u32 degree) {
    ModSeries s(precision, degree);
    s.coeffs_[0] = 1;
    return s;
  }

  /// 1 - a*x, truncated at `degree`.
  static ModSeries linear(unsigned precision, u32 degree, u64 a) {
    ModSeries s = one(precision, degree);
    if (degree >= 1) s.coeffs_[1] = (0 - a) & s.mask_;
    return s;
  }

  unsigned precision() const { return precision_; }
  u32 degree() const { return static_cast<u32>(coeffs_.size() - 1); }
  u64 operator[](u32 i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  void set(u32 i, u64 v) { coeffs_.at(i) = v & mask_; }
  const std::vector<u64>& coeffs() const { return coeffs_; }

  friend bool operator==(const ModSeries& a, const ModSeries& b) {
    return a.precision_ == b.precision_ && a.coeffs_ == b.coeffs_;
  }

  friend ModSeries operator*(const ModSeries& f, const ModSeries& g) {
    f.require_compatible(g);
    ModSeries out(f.precision_, f.degree());
    const std::size_t d = f.coeffs_.size();
    for (std::size_t i = 0; i < d; ++i) {
      if (f.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j < d; ++j)
        out.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];  // wraps mod 2^64
    }
    for (auto& c : out.coeffs_) c &= out.mask_;
    return out;
  }

  /// Multiplicative inverse up to the truncation degree; the constant
  /// term must be odd.
  ModSeries inverse() const {
    if ((coeffs_[0] & 1) == 0)
      throw std::domain_error("ModSeries: inverse needs an odd constant term");
    const u64 inv0 = odd_inverse_u64(coeffs_[0]);
    ModSeries g(precision_, degree());
    g.coeffs_[0] = inv0 & mask_;
    for (std::size_t j = 1; j < coeffs_.size(); ++j) {
      u64 acc = 0;
      for (std::size_t t = 1; t <= j; ++t) acc += coeffs_[t] * g.coeffs_[j - t];
      g.coeffs_[j] = ((0 - inv0) * acc) & mask_;
    }
    return g;
  }

  ModSeries pow(u64 e) const {
    ModSeries base = *this;
    ModSeries r = one(precision_, degree());
    while (e) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

 private:
  void require_compatible(const ModSeries& o) const {
    if (precision_ != o.precision_ || coeffs_.size() != o.coeffs_.size())
      throw std::invalid_argument("ModSeries: mismatched precision or degree");
  }

  unsigned precision_;
  u64 mask_;
  std::vector<u64> coeffs_;
};

/// Product (1 - a_1 x)(1 - a_2 x)... truncated at `degree`.
inline ModSeries linear_product(unsigned precision, u32 degree,
                                const std::vector<u64>& roots) {
  ModSeries p = ModSeries::one(precision, degree);
  for (u64 a : roots) p = p * ModSeries::linear(precision, degree, a);
  return p;
}

/// S(k+j, k) mod 2^M for j = 0..jmax, via inverting prod_{i<=k}(1-ix).
inline std::vector<u64> stirling_via_gf(u64 k, u32 jmax, unsigned precision) {
  if (k == 0) throw std::invalid_argument("stirling_via_gf: k >= 1");
  std::vector<u64> roots(k);
  for (u64 i = 1; i <= k; ++i) roots[i - 1] = i;
  ModSeries inv = linear_product(precision, jmax, roots).inverse();
  return inv.coeffs();
}

/// Outcome of a polynomial congruence check; failure is data.
struct ProductCheck {
  bool pass = true;
  u32 first_diff = 0;  // coefficient index, valid when !pass
  u64 lhs = 0, rhs = 0;
  unsigned precision = 0;
  u32 degree = 0;
};

inline ProductCheck compare_series(const ModSeries& lhs, const ModSeries& rhs) {
  ProductCheck out;
  out.precision = lhs.precision();
  out.degree = lhs.degree();
  for (u32 i = 0; i <= lhs.degree(); ++i) {
    if (lhs[i] != rhs[i]) {
      out.pass = false;
      out.first_diff = i;
      out.lhs = lhs[i];
      out.rhs = rhs[i];
      return out;
    }
  }
  return out;
}

/// prod_{i=1}^{2^(m-1)} (1-(2i-1)x) vs (1+3x^2)^(2^(m-2)) mod 2^(m+1), m >= 3.
inline ProductCheck check_product_odd(unsigned m) {
  if (m < 3) throw std::invalid_argument("check_product_odd: m >= 3");
  const unsigned precision = m + 1;
  const u32 degree = static_cast<u32>(u64{1} << (m - 1));
  std::vector<u64> roots;
  for (u64 i = 1; i <= (u64{1} << (m - 1)); ++i) roots.push_back(2 * i - 1);
  ModSeries lhs = linear_product(precision, degree, roots);
  ModSeries base = ModSeries::one(precision, degree);
  base.set(2, 3);
  ModSeries rhs = base.pow(u64{1} << (m - 2));
  return compare_series(lhs, rhs);
}

/// prod_{i=1}^{2^(m-1)-1} (1-2ix) vs 1 + 2^(m-1)x + 2^(m-1)x^2 + 2^m x^4
/// mod 2^(m+1) for m >= 4; the m = 3 case checks 1 + 4x + 12x^2 mod 2^4.
inline ProductCheck check_product_even(unsigned m) {
  if (m < 3) throw std::invalid_argument("check_product_even: m >= 3");
  const unsigned precision = m + 1;
  const u32 degree = static_cast<u32>((u64{1} << (m - 1)) - 1);
  std::vector<u64> roots;
  for (u64 i = 1; i <= (u64{1} << (m - 1)) - 1; ++i) roots.push_back(2 * i);
  ModSeries lhs = linear_product(precision, degree, roots);
  ModSeries rhs(precision, degree);
  if (m == 3) {
    rhs.set(0, 1);
    rhs.set(1, 4);
    rhs.set(2, 12);
  } else {
    rhs.set(0, 1);
    rhs.set(1, u64{1} << (m - 1));
    rhs.set(2, u64{1} << (m - 1));
    rhs.set(4, u64{1} << m);
  }
  return compare_series(lhs, rhs);
}

}  // namespace s2a
