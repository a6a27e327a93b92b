#pragma once

#include <optional>
#include <vector>

#include "zcong/big_rational.hpp"
#include "zcong/capped_padic.hpp"
#include "zcong/harmonic.hpp"

namespace zcong {

/// C(2k, k).
BigInt central_binomial(int k);

/// One family of weighted central binomial sums
///   sum_{k=1}^{N} t^k (slope k + offset) W_k C(2k,k)^{-+power} / k^d,
/// where W_k = H_{k-1}(weight) when a weight index is given, else 1.
struct SumSpec {
  enum class Direction { InverseCentral, Central };

  int d = 0;
  BigRational t = 1;
  std::optional<MhsIndex> weight;
  Direction direction = Direction::InverseCentral;
  long slope = 0;
  long offset = 1;
  int power = 1;
};

namespace detail {

inline BigInt pow_int(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace detail

/// Exact partial sum to N under the given backend. Terms whose C(2k,k) is
/// divisible by p enter the p-adic backend with negative valuation.
template <class Backend>
typename Backend::value_type weighted_sum(const SumSpec& spec, int N, const Backend& backend) {
  using V = typename Backend::value_type;
  if (spec.d < 0) throw std::invalid_argument("SumSpec.d must be >= 0");
  V sum = backend.zero();
  if (N < 1) return sum;
  std::vector<V> weights;
  if (spec.weight) weights = mhs_prefix_table(N - 1, *spec.weight, backend);
  const BigInt& tn = spec.t.get_num();
  const BigInt& td = spec.t.get_den();
  for (int k = 1; k <= N; ++k) {
    const auto uk = static_cast<unsigned long>(k);
    BigInt central = detail::pow_int(central_binomial(k), static_cast<unsigned long>(spec.power));
    BigInt num = detail::pow_int(tn, uk) * (spec.slope * k + spec.offset);
    BigInt den = detail::pow_int(td, uk) * detail::pow_int(BigInt(k), static_cast<unsigned long>(spec.d));
    if (spec.direction == SumSpec::Direction::InverseCentral)
      den *= central;
    else
      num *= central;
    if (num == 0) continue;
    V term = backend.from_fraction(num, den);
    if (spec.weight) term *= weights[uk - 1];
    sum += term;
  }
  return sum;
}

BigRational weighted_sum(const SumSpec& spec, int N);

/// Coefficient tables of prod_{j<=k} (1 + a/j)^{-2} = sum_m b[m][k] a^m and
/// prod_{j<=k} (1 + a/j)^{-1} = sum_m c[m][k] a^m, for 0 <= m <= M, 0 <= k <= K.
template <class V>
struct BTable {
  int max_m = 0;
  int max_k = 0;
  std::vector<std::vector<V>> b;  // b[m][k]
  std::vector<std::vector<V>> c;  // c[m][k]

  /// b_{m,k} with the guard b_{-1,k} = b_{-2,k} = ... = 0.
  V b_at(int m, int k, const V& zero) const {
    if (m < 0) return zero;
    return b[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
  }
};

/// Fills b by b_{m,k} = sum_{j=0}^{m} (-1)^j (j+1) k^{-j} b_{m-j,k-1}, column
/// by column in k, and c by c_{m,k} = -sum_{j=1}^{m} H_k({1}^j) c_{m-j,k}.
template <class Backend>
BTable<typename Backend::value_type> b_tables(int M, int K, const Backend& backend) {
  using V = typename Backend::value_type;
  if (M < 0 || K < 0) throw std::invalid_argument("b_tables needs M, K >= 0");
  const auto rows = static_cast<std::size_t>(M) + 1;
  const auto cols = static_cast<std::size_t>(K) + 1;
  BTable<V> t;
  t.max_m = M;
  t.max_k = K;
  t.b.assign(rows, std::vector<V>(cols, backend.zero()));
  t.c.assign(rows, std::vector<V>(cols, backend.zero()));
  t.b[0][0] = backend.one();
  for (int k = 1; k <= K; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    // (-1)^j (j+1) / k^j
    std::vector<V> coeff;
    for (int j = 0; j <= M; ++j) {
      BigInt den = detail::pow_int(BigInt(k), static_cast<unsigned long>(j));
      coeff.push_back(backend.from_fraction(BigInt((j % 2 ? -1 : 1) * (j + 1)), den));
    }
    for (int m = 0; m <= M; ++m) {
      V acc = backend.zero();
      for (int j = 0; j <= m; ++j)
        acc += coeff[static_cast<std::size_t>(j)] * t.b[static_cast<std::size_t>(m - j)][uk - 1];
      t.b[static_cast<std::size_t>(m)][uk] = acc;
    }
  }

  for (std::size_t k = 0; k < cols; ++k) t.c[0][k] = backend.one();
  if (M >= 1) {
    auto ones = mhs_prefix_family(K, MhsIndex::repeated(1, M), backend);  // ones[j][k] = H_k({1}^j)
    for (int m = 1; m <= M; ++m)
      for (std::size_t k = 0; k < cols; ++k) {
        V acc = backend.zero();
        for (int j = 1; j <= m; ++j)
          acc += ones[static_cast<std::size_t>(j)][k] * t.c[static_cast<std::size_t>(m - j)][k];
        t.c[static_cast<std::size_t>(m)][k] = -acc;
      }
  }
  return t;
}

BTable<BigRational> b_tables(int M, int K);

/// b[m][k] == sum_{j=0}^{m} c[j][k] c[m-j][k] for every entry (exact).
bool b_convolution_check(const BTable<BigRational>& table);

/// The table's b_{1..4,k} match the closed forms in H_k(1), H_k(1,1), ...
/// for every k <= K (exact).
bool b_closed_form_check(int K);

}  // namespace zcong
