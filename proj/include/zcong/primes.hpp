#pragma once

#include <vector>

namespace zcong {

/// Primes in [lo, hi] in increasing order (sieve of Eratosthenes).
std::vector<unsigned long> primes_in_range(unsigned long lo, unsigned long hi);

/// Trial division up to sqrt(n); meant for desk-scale user input.
bool is_prime(unsigned long n);

}  // namespace zcong
