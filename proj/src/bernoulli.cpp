#include "zcong/bernoulli.hpp"

#include <stdexcept>

#include "zcong/errors.hpp"
#include "zcong/primes.hpp"

namespace zcong {

BernoulliCache& BernoulliCache::global() {
  static BernoulliCache cache;
  return cache;
}

int BernoulliCache::size() const {
  std::lock_guard lock(mutex_);
  return static_cast<int>(values_.size());
}

void BernoulliCache::ensure(int max_index) {
  std::lock_guard lock(mutex_);
  extend_locked(max_index);
}

BigRational BernoulliCache::get(int m) {
  if (m < 0) throw std::invalid_argument("Bernoulli index must be >= 0");
  if (m > 1 && m % 2 == 1) return 0;
  std::lock_guard lock(mutex_);
  extend_locked(m);
  return values_[static_cast<std::size_t>(m)];
}

void BernoulliCache::extend_locked(int max_index) {
  if (max_index < static_cast<int>(values_.size())) return;
  if (values_.empty()) {
    values_.push_back(1);
    scaled_even_.push_back(1);
  }
  if (values_.size() == 1 && max_index >= 1) values_.push_back(make_rational(-1, 2));

  // Grow the common denominator to cover every prime <= max_index + 1 and
  // rescale what is stored.
  const auto limit = static_cast<unsigned long>(max_index) + 1;
  if (limit > scale_limit_) {
    BigInt factor = 1;
    for (unsigned long q : primes_in_range(scale_limit_ + 1, limit)) factor *= q;
    for (auto& a : scaled_even_) a *= factor;
    scale_ *= factor;
    scale_limit_ = limit;
  }

  // B_1 * scale as an integer (scale is even once max_index >= 1).
  const BigInt scaled_b1 = -scale_ / 2;
  for (int m = static_cast<int>(values_.size()); m <= max_index; ++m) {
    if (m % 2 == 1) {
      values_.push_back(0);
      continue;
    }
    // sum_{j<m} C(m+1, j) B_j over even j, plus the j = 1 term.
    BigInt sum = (m + 1) * scaled_b1;
    BigInt binom = 1;  // C(m+1, j), stepped two at a time
    for (int j = 0; j < m; j += 2) {
      sum += binom * scaled_even_[static_cast<std::size_t>(j / 2)];
      // C(m+1, j+2) = C(m+1, j) (m+1-j)(m-j) / ((j+1)(j+2))
      binom *= static_cast<unsigned long>((m + 1 - j) * (m - j));
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>((j + 1) * (j + 2)));
    }
    BigInt scaled = -sum;
    mpz_divexact_ui(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<unsigned long>(m + 1));
    scaled_even_.push_back(scaled);
    values_.push_back(make_rational(scaled, scale_));
  }
}

BigRational bernoulli(int m) { return BernoulliCache::global().get(m); }

BigInt bernoulli_mod(int m, unsigned long p, unsigned int e) {
  BigRational b = bernoulli(m);
  if (mpz_divisible_ui_p(b.get_den_mpz_t(), p))
    throw IrregularDenominator("p = " + std::to_string(p) + " divides the denominator of B_" + std::to_string(m));
  return rat_reduce_mod(b, p, e);
}

}  // namespace zcong
