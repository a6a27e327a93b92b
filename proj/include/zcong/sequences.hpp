#pragma once

#include <vector>

#include "zcong/big_rational.hpp"
#include "zcong/capped_padic.hpp"

namespace zcong {

/// Lucas sequences of the first and second kind for a rational parameter:
/// u_0 = 0, u_1 = 1, v_0 = 2, v_1 = x, s_n = x s_{n-1} - s_{n-2}.
struct LucasPair {
  BigRational x;
  std::vector<BigRational> u;
  std::vector<BigRational> v;
};

LucasPair lucas_uv(int n_max, const BigRational& x);

/// True iff v_n(x) == (-1)^n v_n(-x) for every n <= n_max.
bool lucas_symmetry_check(int n_max, const BigRational& x);

/// Lucas numbers L_0..L_{n_max}: L_0 = 2, L_1 = 1, L_n = L_{n-1} + L_{n-2}.
std::vector<BigInt> lucas_numbers(int n_max);

/// (2^{p-1} - 1) / p for an odd prime p.
BigRational fermat_quotient_2(unsigned long p);

/// (a)_m = a (a+1) ... (a+m-1), (a)_0 = 1.
BigRational pochhammer(const BigRational& a, int m);

/// Finite polylogarithm sum_{k=1}^{p-1} x^k / k^d for rational x.
BigRational finite_polylog(const BigRational& x, int d, unsigned long p);

/// sum_{k=1}^{p-1} L_{2k} / k: the rational value of the sum of the two
/// finite 1-logarithms at phi^2 and phi^-2, evaluated in the backend.
template <class Backend>
typename Backend::value_type golden_log_sum(unsigned long p, const Backend& backend) {
  using V = typename Backend::value_type;
  const int n = static_cast<int>(p) - 1;
  auto lucas = lucas_numbers(2 * n);
  V sum = backend.zero();
  for (int k = 1; k <= n; ++k) sum += backend.from_fraction(lucas[static_cast<std::size_t>(2 * k)], BigInt(k));
  return sum;
}

BigRational golden_log_sum(unsigned long p);

}  // namespace zcong
