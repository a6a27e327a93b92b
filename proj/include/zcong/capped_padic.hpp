#pragma once

#include <optional>
#include <string>

#include "zcong/big_rational.hpp"

namespace zcong {

/// A p-adic number known to finite absolute precision.
///
/// The represented value is p^(-shift) * (num + O(p^digits)), i.e. the value
/// is known modulo p^(digits - shift). `num` is kept in [0, p^digits). The
/// canonical form minimizes `shift`: when shift > 0 and p | num, the pair
/// (num / p, shift - 1) with one digit fewer denotes the same value.
///
/// Arithmetic follows the usual interval contract: sums keep the smaller
/// absolute precision, products lose precision by the other factor's
/// valuation, inverses by twice the valuation.
class CappedPAdic {
 public:
  /// Exact integer/fraction n/d reduced to absolute precision `abs_prec`.
  static CappedPAdic from_fraction(unsigned long p, const BigInt& n, const BigInt& d, int abs_prec);
  static CappedPAdic from_rational(unsigned long p, const BigRational& x, int abs_prec);
  static CappedPAdic from_int(unsigned long p, long n, int abs_prec);
  /// 0 + O(p^abs_prec).
  static CappedPAdic zero(unsigned long p, int abs_prec);

  unsigned long prime() const { return p_; }
  int shift() const { return shift_; }
  /// Number of p-adic digits carried by `num` (the residue is mod p^digits).
  int digits() const { return abs_prec_ + shift_; }
  /// The value is known modulo p^absolute_precision().
  int absolute_precision() const { return abs_prec_; }
  const BigInt& num() const { return num_; }

  /// True when the value is indistinguishable from zero at its precision.
  bool is_zero() const { return num_ == 0; }
  /// Exact valuation, or nullopt when the value is indistinguishable from
  /// zero (then the valuation is only known to be >= absolute_precision()).
  std::optional<int> valuation() const;
  /// Exact valuation if known, else the absolute precision (a lower bound).
  int valuation_lower_bound() const;

  /// Residue mod p^e for a p-integral value; requires e <= absolute_precision()
  /// and shift() == 0 (throws DenominatorDivisibleByP / InsufficientPrecision).
  BigInt residue(unsigned int e) const;

  CappedPAdic operator-() const;
  friend CappedPAdic operator+(const CappedPAdic& x, const CappedPAdic& y);
  friend CappedPAdic operator-(const CappedPAdic& x, const CappedPAdic& y);
  friend CappedPAdic operator*(const CappedPAdic& x, const CappedPAdic& y);
  friend CappedPAdic operator/(const CappedPAdic& x, const CappedPAdic& y);
  CappedPAdic& operator+=(const CappedPAdic& y) { return *this = *this + y; }
  CappedPAdic& operator-=(const CappedPAdic& y) { return *this = *this - y; }
  CappedPAdic& operator*=(const CappedPAdic& y) { return *this = *this * y; }
  CappedPAdic& operator/=(const CappedPAdic& y) { return *this = *this / y; }

  /// 1/x. Throws InsufficientPrecision when x is an apparent zero.
  CappedPAdic inverse() const;

  /// Re-applies the canonical-form reduction. Values produced by the public
  /// API are already canonical, so this is the identity on them.
  CappedPAdic normalized() const;

  /// Structural equality (same prime, digits, shift and residue).
  bool operator==(const CappedPAdic& other) const = default;

  /// "num/p^shift + O(p^prec)" style rendering.
  std::string to_string() const;

 private:
  CappedPAdic(unsigned long p, int shift, int abs_prec, BigInt num);
  void normalize();

  unsigned long p_ = 2;
  int shift_ = 0;
  int abs_prec_ = 0;
  BigInt num_;
};

/// Builds p-adic values for one prime at a fixed digit budget; the numeric
/// backend used for every congruence at precision `digits`.
class PadicBackend {
 public:
  using value_type = CappedPAdic;
  static constexpr const char* name = "padic";

  PadicBackend(unsigned long p, int digits) : p_(p), digits_(digits) {}

  unsigned long prime() const { return p_; }
  int digits() const { return digits_; }

  value_type from_int(long n) const { return CappedPAdic::from_int(p_, n, digits_); }
  value_type from_integer(const BigInt& n) const { return CappedPAdic::from_fraction(p_, n, 1, digits_); }
  value_type from_fraction(const BigInt& n, const BigInt& d) const {
    return CappedPAdic::from_fraction(p_, n, d, digits_);
  }
  value_type from_rational(const BigRational& x) const { return CappedPAdic::from_rational(p_, x, digits_); }
  value_type zero() const { return CappedPAdic::zero(p_, digits_); }
  value_type one() const { return from_int(1); }

 private:
  unsigned long p_;
  int digits_;
};

/// The exact oracle backend.
class RationalBackend {
 public:
  using value_type = BigRational;
  static constexpr const char* name = "rational";

  value_type from_int(long n) const { return BigRational(n); }
  value_type from_integer(const BigInt& n) const { return BigRational(n); }
  value_type from_fraction(const BigInt& n, const BigInt& d) const { return make_rational(n, d); }
  value_type from_rational(const BigRational& x) const { return x; }
  value_type zero() const { return BigRational(0); }
  value_type one() const { return BigRational(1); }
};

}  // namespace zcong
