#include "zcong/primes.hpp"

namespace zcong {

std::vector<unsigned long> primes_in_range(unsigned long lo, unsigned long hi) {
  std::vector<unsigned long> out;
  if (hi < 2 || lo > hi) return out;
  std::vector<bool> composite(hi + 1, false);
  for (unsigned long i = 2; i * i <= hi; ++i)
    if (!composite[i])
      for (unsigned long j = i * i; j <= hi; j += i) composite[j] = true;
  for (unsigned long n = lo < 2 ? 2 : lo; n <= hi; ++n)
    if (!composite[n]) out.push_back(n);
  return out;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace zcong
