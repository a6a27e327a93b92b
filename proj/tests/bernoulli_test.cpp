#include <gtest/gtest.h>

#include "zcong/bernoulli.hpp"
#include "zcong/errors.hpp"
#include "zcong/primes.hpp"

using namespace zcong;

TEST(Bernoulli, Examples) {
  EXPECT_EQ(bernoulli(0), 1);
  EXPECT_EQ(bernoulli(1), make_rational(-1, 2));
  EXPECT_EQ(bernoulli(2), make_rational(1, 6));
  EXPECT_EQ(bernoulli(7), 0);
  EXPECT_EQ(bernoulli(12), make_rational(-691, 2730));
  EXPECT_EQ(bernoulli(30), make_rational(BigInt("8615841276005"), BigInt(14322)));
  for (int m = 3; m < 200; m += 2) EXPECT_EQ(bernoulli(m), 0);
}

// sum_{m<=M} B_m t^m/m! times (e^t - 1)/t = 1 + O(t^{M+1}) as formal power series.
TEST(Bernoulli, GeneratingFunction) {
  const int M = 16;
  std::vector<BigRational> fact(M + 2, BigRational(1));
  for (int i = 1; i <= M + 1; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * i;
  for (int n = 0; n <= M; ++n) {
    // coefficient of t^n: sum_{m=0}^{n} B_m/m! * 1/(n-m+1)!
    BigRational c = 0;
    for (int m = 0; m <= n; ++m)
      c += bernoulli(m) / fact[static_cast<std::size_t>(m)] / fact[static_cast<std::size_t>(n - m + 1)];
    EXPECT_EQ(c, n == 0 ? 1 : 0) << n;
  }
}

TEST(Bernoulli, VonStaudtClausen) {
  for (int m = 2; m <= 30; m += 2) {
    BigInt expected = 1;
    for (unsigned long q : primes_in_range(2, static_cast<unsigned long>(m) + 1))
      if (static_cast<unsigned long>(m) % (q - 1) == 0) expected *= q;
    EXPECT_EQ(bernoulli(m).get_den(), expected) << m;
  }
}

TEST(Bernoulli, LargeIndicesKeepVonStaudtDenominators) {
  BernoulliCache::global().ensure(600);
  for (int m : {100, 256, 598}) {
    BigInt expected = 1;
    for (unsigned long q : primes_in_range(2, static_cast<unsigned long>(m) + 1))
      if (static_cast<unsigned long>(m) % (q - 1) == 0) expected *= q;
    EXPECT_EQ(bernoulli(m).get_den(), expected) << m;
  }
}

TEST(Bernoulli, ModularReduction) {
  EXPECT_EQ(bernoulli_mod(2, 7, 2), 41);
  EXPECT_EQ(bernoulli_mod(3, 11, 1), 0);
  // B_6 = 1/42 and 42 = 9 (mod 11); 9 * 5 = 45 = 1 (mod 11).
  EXPECT_EQ(bernoulli_mod(6, 11, 1), 5);
  EXPECT_EQ(bernoulli_mod(12, 691, 1), 0);  // 691 is irregular
  EXPECT_THROW(bernoulli_mod(6, 7, 1), IrregularDenominator);
  EXPECT_THROW(bernoulli_mod(2, 3, 1), IrregularDenominator);
}

TEST(BernoulliCache, IndependentCacheMatchesGlobal) {
  BernoulliCache local;
  local.ensure(10);
  local.ensure(80);  // grows past a new prime scale
  for (int m = 0; m <= 80; ++m) EXPECT_EQ(local.get(m), bernoulli(m)) << m;
  EXPECT_GE(local.size(), 81);
}
