#include <gtest/gtest.h>

#include "zcong/primes.hpp"
#include "zcong/sequences.hpp"

using namespace zcong;

TEST(Lucas, Examples) {
  auto one = lucas_uv(12, 1);
  const long expected[] = {2, 1, -1, -2, -1, 1, 2, 1, -1, -2, -1, 1, 2};
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(one.v[static_cast<std::size_t>(n)], expected[n]);
  EXPECT_EQ(one.v[5], 1);
  auto two = lucas_uv(10, 2);
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(two.u[static_cast<std::size_t>(n)], n);
  auto three = lucas_uv(30, 3);
  auto L = lucas_numbers(60);
  for (int k = 0; k <= 30; ++k) EXPECT_EQ(three.v[static_cast<std::size_t>(k)], L[static_cast<std::size_t>(2 * k)]);
}

TEST(Lucas, Symmetry) {
  EXPECT_TRUE(lucas_symmetry_check(20, make_rational(5, 3)));
  EXPECT_TRUE(lucas_symmetry_check(20, 0));
  EXPECT_TRUE(lucas_symmetry_check(20, 1));
  EXPECT_TRUE(lucas_symmetry_check(40, make_rational(-7, 2)));
}

TEST(Lucas, NumberIdentities) {
  auto L = lucas_numbers(60);
  EXPECT_EQ(L[0], 2);
  EXPECT_EQ(L[1], 1);
  EXPECT_EQ(L[10], 123);
  for (int k = 0; k <= 30; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    EXPECT_EQ(L[2 * uk], L[uk] * L[uk] - 2 * (k % 2 ? -1 : 1));
  }
  for (unsigned long p : primes_in_range(2, 199)) {
    BigInt Lp = lucas_numbers(static_cast<int>(p))[p];
    EXPECT_EQ(BigInt(Lp % p), 1) << p;
  }
}

TEST(Lucas, ValueAtOneForPrimes) {
  for (unsigned long p : primes_in_range(5, 199))
    EXPECT_EQ(lucas_uv(static_cast<int>(p), 1).v[p], 1) << p;
}

TEST(Sequences, GoldenLogSum) {
  EXPECT_EQ(golden_log_sum(3), make_rational(13, 2));
  EXPECT_EQ(golden_log_sum(5), make_rational(97, 4));
  for (unsigned long p : primes_in_range(7, 60)) EXPECT_GE(valuation(golden_log_sum(p), p), 0);
}

TEST(Sequences, FermatQuotient) {
  EXPECT_EQ(fermat_quotient_2(7), 9);
  EXPECT_EQ(fermat_quotient_2(3), 1);
  EXPECT_EQ(fermat_quotient_2(5), 3);
  for (unsigned long p : primes_in_range(3, 199)) EXPECT_EQ(fermat_quotient_2(p).get_den(), 1);
}

TEST(Sequences, Pochhammer) {
  EXPECT_EQ(pochhammer(make_rational(7, 3), 0), 1);
  EXPECT_EQ(pochhammer(1, 5), 120);
  EXPECT_EQ(pochhammer(-2, 4), 0);
  EXPECT_EQ(pochhammer(make_rational(1, 2), 3), make_rational(15, 8));
}

TEST(Sequences, FinitePolylog) {
  // L_1(1) at p is H_{p-1}(1).
  EXPECT_EQ(finite_polylog(1, 1, 7), make_rational(49, 20));
  EXPECT_EQ(finite_polylog(2, 2, 3), 2 + make_rational(4, 4));
}
