#include "zcong/capped_padic.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "zcong/errors.hpp"

namespace zcong {
namespace {

// p^e lookups dominate the arithmetic; cache them per thread.
const BigInt& pow_cached(unsigned long p, int e) {
  thread_local unsigned long cached_p = 0;
  thread_local std::deque<BigInt> powers;  // deque: references survive growth
  if (cached_p != p) {
    cached_p = p;
    powers.assign(1, BigInt(1));
  }
  while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * p);
  return powers[static_cast<std::size_t>(e)];
}

void reduce_mod(BigInt& x, unsigned long p, int digits) {
  if (digits <= 0) {
    x = 0;
    return;
  }
  mpz_mod(x.get_mpz_t(), x.get_mpz_t(), pow_cached(p, digits).get_mpz_t());
}

void require_same_prime(const CappedPAdic& x, const CappedPAdic& y) {
  if (x.prime() != y.prime())
    throw PrimeMismatch("p-adic operands over " + std::to_string(x.prime()) + " and " +
                        std::to_string(y.prime()));
}

}  // namespace

CappedPAdic::CappedPAdic(unsigned long p, int shift, int abs_prec, BigInt num)
    : p_(p), shift_(shift), abs_prec_(abs_prec), num_(std::move(num)) {
  normalize();
}

void CappedPAdic::normalize() {
  if (shift_ < -abs_prec_) shift_ = -abs_prec_;
  if (shift_ < 0) shift_ = 0;
  reduce_mod(num_, p_, digits());
  if (num_ == 0) {
    shift_ = std::max(0, -abs_prec_);
    return;
  }
  if (shift_ > 0) {
    BigInt n = num_;
    int v = remove_factor(n, p_);
    int drop = std::min(v, shift_);
    if (drop > 0) {
      mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), pow_cached(p_, drop).get_mpz_t());
      shift_ -= drop;
    }
  }
}

CappedPAdic CappedPAdic::from_fraction(unsigned long p, const BigInt& n, const BigInt& d, int abs_prec) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  if (n == 0) return zero(p, abs_prec);
  BigInt un = n, ud = d;
  int v = remove_factor(un, p) - remove_factor(ud, p);
  int unit_digits = abs_prec - v;  // digits of the unit part needed
  if (unit_digits <= 0) return zero(p, abs_prec);
  const BigInt& mod = pow_cached(p, unit_digits);
  BigInt inv;
  BigInt udr;
  mpz_mod(udr.get_mpz_t(), ud.get_mpz_t(), mod.get_mpz_t());
  mpz_invert(inv.get_mpz_t(), udr.get_mpz_t(), mod.get_mpz_t());
  mpz_mod(un.get_mpz_t(), un.get_mpz_t(), mod.get_mpz_t());
  BigInt u = un * inv;
  if (v >= 0) return CappedPAdic(p, 0, abs_prec, u * pow_cached(p, v));
  return CappedPAdic(p, -v, abs_prec, std::move(u));
}

CappedPAdic CappedPAdic::from_rational(unsigned long p, const BigRational& x, int abs_prec) {
  return from_fraction(p, x.get_num(), x.get_den(), abs_prec);
}

CappedPAdic CappedPAdic::from_int(unsigned long p, long n, int abs_prec) {
  return from_fraction(p, BigInt(n), BigInt(1), abs_prec);
}

CappedPAdic CappedPAdic::zero(unsigned long p, int abs_prec) { return CappedPAdic(p, 0, abs_prec, 0); }

std::optional<int> CappedPAdic::valuation() const {
  if (num_ == 0) return std::nullopt;
  if (shift_ > 0) return -shift_;
  BigInt n = num_;
  return remove_factor(n, p_);
}

int CappedPAdic::valuation_lower_bound() const {
  auto v = valuation();
  return v ? *v : abs_prec_;
}

BigInt CappedPAdic::residue(unsigned int e) const {
  if (shift_ > 0) throw DenominatorDivisibleByP("value has negative valuation");
  if (static_cast<int>(e) > abs_prec_)
    throw InsufficientPrecision("residue mod p^" + std::to_string(e) + " requested, value known mod p^" +
                                std::to_string(abs_prec_));
  BigInt r = num_;
  reduce_mod(r, p_, static_cast<int>(e));
  return r;
}

CappedPAdic CappedPAdic::operator-() const { return CappedPAdic(p_, shift_, abs_prec_, -num_); }

CappedPAdic operator+(const CappedPAdic& x, const CappedPAdic& y) {
  require_same_prime(x, y);
  const unsigned long p = x.p_;
  int shift = std::max(x.shift_, y.shift_);
  int prec = std::min(x.abs_prec_, y.abs_prec_);
  BigInt sum = x.num_ * pow_cached(p, shift - x.shift_) + y.num_ * pow_cached(p, shift - y.shift_);
  return CappedPAdic(p, shift, prec, std::move(sum));
}

CappedPAdic operator-(const CappedPAdic& x, const CappedPAdic& y) { return x + (-y); }

CappedPAdic operator*(const CappedPAdic& x, const CappedPAdic& y) {
  require_same_prime(x, y);
  int prec = std::min(x.abs_prec_ + y.valuation_lower_bound(), y.abs_prec_ + x.valuation_lower_bound());
  return CappedPAdic(x.p_, x.shift_ + y.shift_, prec, x.num_ * y.num_);
}

CappedPAdic CappedPAdic::inverse() const {
  if (num_ == 0)
    throw InsufficientPrecision("inverse of a value indistinguishable from 0 mod p^" + std::to_string(abs_prec_));
  BigInt unit = num_;
  int v = remove_factor(unit, p_) - shift_;
  int rel = abs_prec_ - v;  // relative precision of x
  const BigInt& mod = pow_cached(p_, rel);
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), mod.get_mpz_t());
  int prec = abs_prec_ - 2 * v;
  if (v > 0) return CappedPAdic(p_, v, prec, std::move(inv));
  return CappedPAdic(p_, 0, prec, inv * pow_cached(p_, -v));
}

CappedPAdic operator/(const CappedPAdic& x, const CappedPAdic& y) { return x * y.inverse(); }

CappedPAdic CappedPAdic::normalized() const { return CappedPAdic(p_, shift_, abs_prec_, num_); }

std::string CappedPAdic::to_string() const {
  std::ostringstream out;
  out << num_.get_str();
  if (shift_ > 0) out << "/" << p_ << "^" << shift_;
  out << " + O(" << p_ << "^" << abs_prec_ << ")";
  return out.str();
}

}  // namespace zcong
