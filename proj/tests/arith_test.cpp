#include <gtest/gtest.h>

#include <random>

#include "zcong/big_rational.hpp"
#include "zcong/capped_padic.hpp"
#include "zcong/errors.hpp"
#include "zcong/primes.hpp"
#include "zcong/verdict.hpp"

using namespace zcong;

namespace {

CappedPAdic padic(unsigned long p, long n, long d, int prec) {
  return CappedPAdic::from_fraction(p, BigInt(n), BigInt(d), prec);
}

// Random rational with a denominator prime to p.
BigRational random_unit_rational(std::mt19937_64& rng, unsigned long p) {
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 5000);
  long n = num(rng), d = den(rng);
  while (n % static_cast<long>(p) == 0) n = num(rng);
  while (d % static_cast<long>(p) == 0) d = den(rng);
  return make_rational(n, d);
}

}  // namespace

TEST(BigRational, CanonicalForm) {
  BigRational x = make_rational(6, -4);
  EXPECT_EQ(x.get_num(), -3);
  EXPECT_EQ(x.get_den(), 2);
  EXPECT_EQ(to_string(make_rational(0, 7)), "0");
  EXPECT_EQ(to_string(make_rational(10, 5)), "2");
  EXPECT_EQ(to_string(make_rational(-691, 2730)), "-691/2730");
  EXPECT_THROW(make_rational(1, 0), std::invalid_argument);
}

TEST(BigRational, ParseRoundTrip) {
  for (const char* s : {"0", "-7", "13/2", "-691/2730"}) EXPECT_EQ(to_string(parse_rational(s)), s);
  EXPECT_EQ(parse_rational("4/6"), make_rational(2, 3));
}

TEST(RatReduceMod, Examples) {
  EXPECT_EQ(rat_reduce_mod(make_rational(1, 2), 5, 3), 63);
  EXPECT_EQ(rat_reduce_mod(BigRational(0), 7, 4), 0);
  EXPECT_EQ(rat_reduce_mod(make_rational(1, 6), 7, 2), 41);
  EXPECT_EQ(rat_reduce_mod(make_rational(-1, 1), 3, 2), 8);
  EXPECT_THROW(rat_reduce_mod(make_rational(1, 10), 5, 2), DenominatorDivisibleByP);
}

TEST(Valuation, Examples) {
  EXPECT_EQ(valuation(BigRational(50), 5), 2);
  EXPECT_EQ(valuation(make_rational(49, 20), 7), 2);
  EXPECT_EQ(valuation(make_rational(49, 20), 5), -1);
  EXPECT_EQ(valuation(BigRational(3), 5), 0);
  EXPECT_THROW(valuation(BigRational(0), 5), ZeroHasNoValuation);
}

TEST(Valuation, MultiplicativeAndUltrametric) {
  std::mt19937_64 rng(12345);
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 101UL}) {
    for (int i = 0; i < 300; ++i) {
      BigRational x = random_unit_rational(rng, p) * pow(BigRational(p), static_cast<long>(i % 7) - 3);
      BigRational y = random_unit_rational(rng, p) * pow(BigRational(p), static_cast<long>(i % 5) - 2);
      if (x == 0 || y == 0) continue;
      BigRational xy = x * y;
      EXPECT_EQ(valuation(xy, p), valuation(x, p) + valuation(y, p));
      BigRational s = x + y;
      if (s == 0) continue;
      const int vx = valuation(x, p), vy = valuation(y, p);
      EXPECT_GE(valuation(s, p), std::min(vx, vy));
      if (vx != vy) EXPECT_EQ(valuation(s, p), std::min(vx, vy));
    }
  }
}

TEST(CappedPAdic, AddPrecisionRule) {
  CappedPAdic x = padic(5, 3, 1, 3);
  CappedPAdic y = padic(5, 4, 1, 2);
  EXPECT_EQ((x + y).absolute_precision(), 2);
  EXPECT_EQ((x + y).residue(2), 7);
}

TEST(CappedPAdic, Cancellation) {
  CappedPAdic s = padic(5, 1, 1, 3) + padic(5, -1, 1, 3);
  EXPECT_TRUE(s.is_zero());
  EXPECT_FALSE(s.valuation().has_value());
  EXPECT_EQ(s.absolute_precision(), 3);
  ValuationVerdict v = check_valuation_at_least(s, 3);
  EXPECT_EQ(v.kind, VerdictKind::Proven);
  EXPECT_EQ(v.achieved.to_string(), ">=3");
}

TEST(CappedPAdic, ShiftNormalizes) {
  CappedPAdic s = padic(7, 2, 7, 2) + padic(7, 5, 7, 2);
  EXPECT_EQ(s.shift(), 0);
  EXPECT_EQ(s.absolute_precision(), 2);
  EXPECT_EQ(s.residue(2), 1);
  EXPECT_EQ(s, padic(7, 1, 1, 2));
}

TEST(CappedPAdic, MulAndInverse) {
  // x = 5 * u known to absolute precision 6, valuation 1: 1/x known to 4.
  CappedPAdic x = padic(5, 5 * 7, 1, 6);
  ASSERT_EQ(x.valuation(), 1);
  CappedPAdic inv = x.inverse();
  EXPECT_EQ(inv.absolute_precision(), 4);
  EXPECT_EQ(inv.valuation(), -1);
  CappedPAdic z = padic(7, 3, 1, 3) * CappedPAdic::zero(7, 3);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.absolute_precision(), 3);
  EXPECT_EQ(padic(5, 2, 1, 3).inverse().residue(3), 63);
  EXPECT_THROW(CappedPAdic::zero(5, 4).inverse(), InsufficientPrecision);
  EXPECT_THROW(padic(5, 1, 1, 3) + padic(7, 1, 1, 3), PrimeMismatch);
}

TEST(CappedPAdic, MulPrecisionRule) {
  // prec(x*y) = min(prec x + v(y), prec y + v(x))
  CappedPAdic x = padic(3, 9, 1, 5);   // v = 2, prec 5
  CappedPAdic y = padic(3, 1, 3, 6);   // v = -1, prec 6
  CappedPAdic xy = x * y;
  EXPECT_EQ(xy.absolute_precision(), std::min(5 + -1, 6 + 2));
  EXPECT_EQ(xy.valuation(), 1);
}

TEST(CappedPAdic, NormalizationIdempotent) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    BigRational x = random_unit_rational(rng, 5) * pow(BigRational(5), static_cast<long>(i % 9) - 4);
    CappedPAdic a = CappedPAdic::from_rational(5, x, 8);
    EXPECT_EQ(a.normalized(), a);
    EXPECT_EQ(a.normalized().normalized(), a.normalized());
  }
}

// Both backends agree on products and sums to the p-adic guaranteed precision.
TEST(CappedPAdic, AgreesWithRationalArithmetic) {
  std::mt19937_64 rng(2024);
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 97UL}) {
    for (int e = 1; e <= 12; ++e) {
      for (int i = 0; i < 20; ++i) {
        BigRational x = random_unit_rational(rng, p), y = random_unit_rational(rng, p);
        CappedPAdic px = CappedPAdic::from_rational(p, x, e), py = CappedPAdic::from_rational(p, y, e);
        auto ue = static_cast<unsigned>(e);
        EXPECT_EQ((px * py).residue(ue), rat_reduce_mod(x * y, p, ue));
        EXPECT_EQ((px + py).residue(ue), rat_reduce_mod(x + y, p, ue));
        EXPECT_EQ((px - py).residue(ue), rat_reduce_mod(x - y, p, ue));
        EXPECT_EQ((py / px).residue(ue), rat_reduce_mod(y / x, p, ue));
      }
    }
  }
}

TEST(CappedPAdic, RoundTripWithShift) {
  std::mt19937_64 rng(99);
  const unsigned long p = 7;
  for (int i = 0; i < 300; ++i) {
    const long shift = static_cast<long>(i % 4);
    BigRational x = random_unit_rational(rng, p) / pow(BigRational(p), shift);
    CappedPAdic a = CappedPAdic::from_rational(p, x, 6);
    // p^shift * a is p-integral and must reduce like the exact value.
    CappedPAdic scaled = a * CappedPAdic::from_fraction(p, power(p, static_cast<unsigned>(shift)), 1, 6 + 3);
    EXPECT_EQ(scaled.residue(6), rat_reduce_mod(x * pow(BigRational(p), shift), p, 6));
  }
}

TEST(Verdict, RationalAndPadic) {
  ValuationVerdict w = check_valuation_at_least(make_rational(49, 20), 7, 2);
  EXPECT_EQ(w.kind, VerdictKind::Proven);
  EXPECT_EQ(w.achieved, Achieved::exact(2));
  ValuationVerdict z = check_valuation_at_least(BigRational(0), 7, 100);
  EXPECT_EQ(z.kind, VerdictKind::Proven);
  EXPECT_EQ(z.achieved.to_string(), "inf");
  EXPECT_EQ(check_valuation_at_least(BigRational(7), 7, 2).kind, VerdictKind::Refuted);
  // Known only mod p^2, asked for p^3.
  EXPECT_EQ(check_valuation_at_least(CappedPAdic::zero(7, 2), 3).kind, VerdictKind::Insufficient);
  EXPECT_EQ(check_valuation_at_least(padic(7, 49, 1, 2), 3).kind, VerdictKind::Insufficient);
  EXPECT_EQ(check_valuation_at_least(padic(7, 7, 1, 2), 2).kind, VerdictKind::Refuted);
}

TEST(Primes, SieveAndTrialDivision) {
  auto ps = primes_in_range(2, 30);
  EXPECT_EQ(ps, (std::vector<unsigned long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
  EXPECT_TRUE(primes_in_range(24, 28).empty());
  EXPECT_EQ(primes_in_range(1000, 1009).back(), 1009UL);
  for (unsigned long n = 0; n < 2000; ++n) {
    auto r = primes_in_range(n, n);
    EXPECT_EQ(is_prime(n), r.size() == 1) << n;
  }
}
