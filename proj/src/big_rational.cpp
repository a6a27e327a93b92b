#include "zcong/big_rational.hpp"

#include <stdexcept>

#include "zcong/errors.hpp"

namespace zcong {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigRational make_rational(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

std::string to_string(const BigRational& x) { return x.get_str(10); }

std::string to_string(const BigInt& x) { return x.get_str(10); }

BigRational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return BigRational(BigInt(text));
    return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: " + text);
  }
}

int remove_factor(BigInt& n, unsigned long p) {
  BigInt pz(p);
  return static_cast<int>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

int valuation(const BigInt& x, unsigned long p) {
  if (x == 0) throw ZeroHasNoValuation("v_p(0) is undefined");
  BigInt n = x;
  return remove_factor(n, p);
}

int valuation(const BigRational& x, unsigned long p) {
  if (x == 0) throw ZeroHasNoValuation("v_p(0) is undefined");
  BigInt num = x.get_num();
  BigInt den = x.get_den();
  return remove_factor(num, p) - remove_factor(den, p);
}

BigInt power(unsigned long p, unsigned int e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

BigInt rat_reduce_mod(const BigRational& x, unsigned long p, unsigned int e) {
  BigInt mod = power(p, e);
  if (mpz_divisible_ui_p(x.get_den_mpz_t(), p))
    throw DenominatorDivisibleByP("denominator of " + to_string(x) + " is divisible by " +
                                  std::to_string(p));
  BigInt inv;
  // gcd(den, p^e) == 1 here, so the inverse exists (mod 1 gives 0).
  if (e == 0) return 0;
  mpz_invert(inv.get_mpz_t(), x.get_den_mpz_t(), mod.get_mpz_t());
  BigInt r = x.get_num() * inv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  return r;
}

BigRational pow(const BigRational& x, long e) {
  if (e < 0) {
    if (x == 0) throw std::domain_error("negative power of zero");
    return pow(BigRational(1) / x, -e);
  }
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  return BigRational(n, d);
}

}  // namespace zcong
