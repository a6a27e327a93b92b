#pragma once

#include <mutex>
#include <vector>

#include "zcong/big_rational.hpp"

namespace zcong {

/// Append-only table of exact Bernoulli numbers B_0, B_1 = -1/2, B_2, ...
///
/// Filled by the recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0. The sums are
/// carried over the common denominator L = product of primes <= m+1, which
/// every B_j (j <= m) divides by von Staudt-Clausen, so the recurrence runs
/// on integers and each new term costs one exact division.
class BernoulliCache {
 public:
  /// Makes B_0..B_max available. Thread-safe; cheap when already filled.
  void ensure(int max_index);
  /// B_m, extending the table on demand.
  BigRational get(int m);
  int size() const;

  /// Process-wide cache used by `bernoulli()`.
  static BernoulliCache& global();

 private:
  void extend_locked(int max_index);

  mutable std::mutex mutex_;
  std::vector<BigRational> values_;
  // Even-index numerators over `scale_` (B_{2i} * scale_).
  std::vector<BigInt> scaled_even_;
  BigInt scale_ = 1;
  unsigned long scale_limit_ = 1;  // scale_ = product of primes <= scale_limit_
};

/// Exact B_m; odd m > 1 short-circuits to 0.
BigRational bernoulli(int m);

/// B_m mod p^e. Throws IrregularDenominator when p divides the denominator.
BigInt bernoulli_mod(int m, unsigned long p, unsigned int e);

}  // namespace zcong
