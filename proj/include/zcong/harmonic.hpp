#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "zcong/capped_padic.hpp"
#include "zcong/errors.hpp"

namespace zcong {

/// A signed-exponent composition (a_1, ..., a_r), r >= 1, no zero entries.
/// H_n(a_1..a_r) sums over 1 <= k_1 < ... < k_r <= n the product of
/// sgn(a_i)^{k_i} / k_i^{|a_i|}: the last entry carries the largest k.
class MhsIndex {
 public:
  MhsIndex(std::initializer_list<int> entries);
  explicit MhsIndex(std::vector<int> entries);

  /// {a}^r.
  static MhsIndex repeated(int a, int r);
  /// Parses "1,-2,3".
  static MhsIndex parse(const std::string& text);

  const std::vector<int>& entries() const { return entries_; }
  std::size_t depth() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  /// Sum of |a_i|.
  int weight() const;
  /// The index without its last entry; requires depth() >= 2.
  MhsIndex prefix() const;

  std::string to_string() const;
  auto operator<=>(const MhsIndex&) const = default;

 private:
  std::vector<int> entries_;
};

namespace detail {

template <class Backend>
void require_unit_denominators(const Backend&, int) {}

inline void require_unit_denominators(const PadicBackend& backend, int n_max) {
  if (n_max >= static_cast<long>(backend.prime()))
    throw DomainViolation("p-adic harmonic table needs n < p (n = " + std::to_string(n_max) +
                          ", p = " + std::to_string(backend.prime()) + ")");
}

/// sgn(a)^n / n^|a|.
template <class Backend>
typename Backend::value_type signed_power_reciprocal(const Backend& backend, int n, int a) {
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(a < 0 ? -a : a));
  long sign = (a < 0 && n % 2 == 1) ? -1 : 1;
  return backend.from_fraction(BigInt(sign), den);
}

}  // namespace detail

/// Prefix tables for every leading sub-index of `index`: result[d][n] is
/// H_n(a_1..a_d) for 1 <= d <= r, and result[0][n] = 1 (the empty product).
/// Uses H_n(a_1..a_d) = H_{n-1}(a_1..a_d) + sgn(a_d)^n n^{-|a_d|} H_{n-1}(a_1..a_{d-1}),
/// so the whole family costs O(n_max * r) backend operations.
template <class Backend>
std::vector<std::vector<typename Backend::value_type>> mhs_prefix_family(int n_max, const MhsIndex& index,
                                                                         const Backend& backend) {
  using V = typename Backend::value_type;
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  detail::require_unit_denominators(backend, n_max);
  const std::size_t r = index.depth();
  std::vector<std::vector<V>> tables(r + 1);
  tables[0].assign(static_cast<std::size_t>(n_max) + 1, backend.one());
  for (std::size_t d = 1; d <= r; ++d) {
    auto& cur = tables[d];
    const auto& prev = tables[d - 1];
    cur.reserve(static_cast<std::size_t>(n_max) + 1);
    cur.push_back(backend.zero());
    for (int n = 1; n <= n_max; ++n) {
      const auto un = static_cast<std::size_t>(n);
      V term = detail::signed_power_reciprocal(backend, n, index[d - 1]) * prev[un - 1];
      cur.push_back(cur[un - 1] + term);
    }
  }
  return tables;
}

/// Entry n of the result is H_n(index), 0 <= n <= n_max.
template <class Backend>
std::vector<typename Backend::value_type> mhs_prefix_table(int n_max, const MhsIndex& index, const Backend& backend) {
  auto family = mhs_prefix_family(n_max, index, backend);
  return std::move(family.back());
}

template <class Backend>
typename Backend::value_type mhs(int n, const MhsIndex& index, const Backend& backend) {
  return mhs_prefix_table(n, index, backend).back();
}

/// H_n(index) as an exact rational.
BigRational mhs(int n, const MhsIndex& index);

/// Quasi-shuffle (stuffle) product of two indices as a formal sum of
/// indices with integer multiplicities. Entries combine by
/// a (+) b = sgn(a) sgn(b) (|a| + |b|).
std::map<MhsIndex, long> stuffle_product(const MhsIndex& u, const MhsIndex& v);

/// H_n(a) H_n(b) == H_n(a,b) + H_n(b,a) + H_n(a+b), exactly.
bool stuffle_check(int n, int a, int b);
/// H_n(a,b) H_n(c) == H_n(a,b,c) + H_n(a,c,b) + H_n(c,a,b) + H_n(a+c,b) + H_n(a,b+c), exactly.
bool stuffle_check(int n, int a, int b, int c);
/// H_n(u) H_n(v) equals the stuffle expansion, exactly.
bool stuffle_check(int n, const MhsIndex& u, const MhsIndex& v);
/// H_n(1,1) == H_{n-1}(1,1) + H_{n-1}(1)/n for n >= 1.
bool splitting_rule_check(int n);

}  // namespace zcong
