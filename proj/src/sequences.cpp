#include "zcong/sequences.hpp"

#include <stdexcept>

namespace zcong {

LucasPair lucas_uv(int n_max, const BigRational& x) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  LucasPair out{x, {0}, {2}};
  if (n_max >= 1) {
    out.u.push_back(1);
    out.v.push_back(x);
  }
  for (int n = 2; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    out.u.push_back(x * out.u[i - 1] - out.u[i - 2]);
    out.v.push_back(x * out.v[i - 1] - out.v[i - 2]);
  }
  return out;
}

bool lucas_symmetry_check(int n_max, const BigRational& x) {
  auto plus = lucas_uv(n_max, x);
  auto minus = lucas_uv(n_max, -x);
  for (int n = 0; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    BigRational rhs = (n % 2 == 0 ? 1 : -1) * minus.v[i];
    if (plus.v[i] != rhs) return false;
  }
  return true;
}

std::vector<BigInt> lucas_numbers(int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  std::vector<BigInt> out{2};
  if (n_max >= 1) out.push_back(1);
  for (int n = 2; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    out.push_back(out[i - 1] + out[i - 2]);
  }
  return out;
}

BigRational fermat_quotient_2(unsigned long p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("Fermat quotient needs an odd prime");
  return make_rational(power(2, static_cast<unsigned int>(p - 1)) - 1, BigInt(p));
}

BigRational pochhammer(const BigRational& a, int m) {
  if (m < 0) throw std::invalid_argument("Pochhammer length must be >= 0");
  BigRational r = 1;
  for (int i = 0; i < m; ++i) r *= a + i;
  return r;
}

BigRational finite_polylog(const BigRational& x, int d, unsigned long p) {
  BigRational sum = 0;
  BigRational xk = 1;
  for (unsigned long k = 1; k < p; ++k) {
    xk *= x;
    BigInt kd;
    mpz_ui_pow_ui(kd.get_mpz_t(), k, static_cast<unsigned long>(d));
    sum += xk / BigRational(kd);
  }
  return sum;
}

BigRational golden_log_sum(unsigned long p) { return golden_log_sum(p, RationalBackend{}); }

}  // namespace zcong
