#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace zcong {

using BigInt = mpz_class;
/// Exact rational in lowest terms with positive denominator (GMP keeps
/// mpq_class canonical after every arithmetic operation).
using BigRational = mpq_class;

/// Builds num/den in lowest terms. Throws std::invalid_argument on den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);
BigRational make_rational(long num, long den = 1);

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const BigRational& x);
std::string to_string(const BigInt& x);

/// Parses "n", "-n" or "n/d".
BigRational parse_rational(const std::string& text);

/// Exponent of p in n (n != 0); strips that power from n in place.
int remove_factor(BigInt& n, unsigned long p);

/// v_p(x). Throws ZeroHasNoValuation for x == 0.
int valuation(const BigRational& x, unsigned long p);
int valuation(const BigInt& x, unsigned long p);

/// p^e as an integer.
BigInt power(unsigned long p, unsigned int e);

/// The residue r in [0, p^e) with x == r (mod p^e). x must be p-integral;
/// throws DenominatorDivisibleByP otherwise.
BigInt rat_reduce_mod(const BigRational& x, unsigned long p, unsigned int e);

/// x^e for integer e (negative allowed when x != 0).
BigRational pow(const BigRational& x, long e);

}  // namespace zcong
