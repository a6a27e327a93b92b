#include "zcong/binomial_sums.hpp"

#include <stdexcept>

namespace zcong {

BigInt central_binomial(int k) {
  if (k < 0) throw std::invalid_argument("central_binomial needs k >= 0");
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), 2UL * static_cast<unsigned long>(k), static_cast<unsigned long>(k));
  return r;
}

BigRational weighted_sum(const SumSpec& spec, int N) { return weighted_sum(spec, N, RationalBackend{}); }

BTable<BigRational> b_tables(int M, int K) { return b_tables(M, K, RationalBackend{}); }

bool b_convolution_check(const BTable<BigRational>& table) {
  for (int m = 0; m <= table.max_m; ++m)
    for (int k = 0; k <= table.max_k; ++k) {
      BigRational conv = 0;
      for (int j = 0; j <= m; ++j)
        conv += table.c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] *
                table.c[static_cast<std::size_t>(m - j)][static_cast<std::size_t>(k)];
      if (conv != table.b[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)]) return false;
    }
  return true;
}

bool b_closed_form_check(int K) {
  if (K < 0) throw std::invalid_argument("K must be >= 0");
  auto table = b_tables(4, K);
  auto ones = mhs_prefix_family(K, MhsIndex::repeated(1, 4), RationalBackend{});
  for (int k = 0; k <= K; ++k) {
    const auto i = static_cast<std::size_t>(k);
    const BigRational& h1 = ones[1][i];
    const BigRational& h11 = ones[2][i];
    const BigRational& h111 = ones[3][i];
    const BigRational& h1111 = ones[4][i];
    BigRational b1 = -2 * h1;
    BigRational b2 = 3 * h1 * h1 - 2 * h11;
    BigRational b3 = 6 * h1 * h11 - 2 * h111 - 4 * h1 * h1 * h1;
    BigRational b4 = 5 * h1 * h1 * h1 * h1 + 6 * h1 * h111 + 3 * h11 * h11 - 12 * h1 * h1 * h11 - 2 * h1111;
    if (table.b[1][i] != b1 || table.b[2][i] != b2 || table.b[3][i] != b3 || table.b[4][i] != b4) return false;
  }
  return true;
}

}  // namespace zcong
