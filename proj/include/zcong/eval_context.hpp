#pragma once

#include <deque>
#include <map>
#include <memory>
#include <vector>

#include "zcong/bernoulli.hpp"
#include "zcong/binomial_sums.hpp"
#include "zcong/capped_padic.hpp"
#include "zcong/harmonic.hpp"
#include "zcong/sequences.hpp"

namespace zcong {

/// Everything a claim expression needs for one prime under one backend.
/// Tables are built on first use and reused by every claim evaluated in the
/// same context. Not thread-safe: one context per task.
template <class Backend>
class EvalContext {
 public:
  using value_type = typename Backend::value_type;
  using V = value_type;

  EvalContext(unsigned long p, Backend backend) : p_(p), backend_(std::move(backend)) {}

  unsigned long p() const { return p_; }
  long pl() const { return static_cast<long>(p_); }
  const Backend& backend() const { return backend_; }

  V i(long n) const { return backend_.from_int(n); }
  V q(long n, long d) const { return backend_.from_fraction(BigInt(n), BigInt(d)); }
  V q(const BigRational& x) const { return backend_.from_rational(x); }
  V frac(const BigInt& n, const BigInt& d) const { return backend_.from_fraction(n, d); }
  V zero() const { return backend_.zero(); }

  /// p^e for any integer e.
  V pw(int e) const {
    BigInt pe = power(p_, static_cast<unsigned int>(e < 0 ? -e : e));
    return e >= 0 ? backend_.from_integer(pe) : backend_.from_fraction(BigInt(1), pe);
  }

  /// H_n(index) for 0 <= n <= p-1.
  const std::vector<V>& H(const MhsIndex& index) {
    auto it = mhs_.find(index);
    if (it == mhs_.end()) it = mhs_.emplace(index, mhs_prefix_table(static_cast<int>(p_) - 1, index, backend_)).first;
    return it->second;
  }
  V Hk(const MhsIndex& index, int k) { return H(index)[static_cast<std::size_t>(k)]; }
  /// H_{p-1}(index).
  V Hp(const MhsIndex& index) { return H(index).back(); }

  V bern(int m) const { return backend_.from_rational(bernoulli(m)); }

  /// Weighted sum up to p-1.
  V sum(const SumSpec& spec) const { return weighted_sum(spec, static_cast<int>(p_) - 1, backend_); }

  /// b_{m,k}, c_{m,k} for 0 <= m <= 6, 0 <= k <= p-1.
  const BTable<V>& b() {
    if (!b_) b_ = std::make_unique<BTable<V>>(b_tables(6, static_cast<int>(p_) - 1, backend_));
    return *b_;
  }
  V bmk(int m, int k) { return b().b_at(m, k, backend_.zero()); }

  /// 1 / C(2k,k).
  V inv_central(int k) const { return backend_.from_fraction(BigInt(1), central_binomial(k)); }

  /// n! (exact), cached incrementally; references stay valid.
  const BigInt& factorial(int n) {
    if (factorials_.empty()) factorials_.push_back(1);
    while (static_cast<int>(factorials_.size()) <= n)
      factorials_.push_back(factorials_.back() * static_cast<unsigned long>(factorials_.size()));
    return factorials_[static_cast<std::size_t>(n)];
  }

  /// Lucas number L_n (exact).
  const BigInt& lucas(int n) {
    if (static_cast<int>(lucas_.size()) <= n) lucas_ = lucas_numbers(std::max(n, 2 * static_cast<int>(p_)));
    return lucas_[static_cast<std::size_t>(n)];
  }
  /// sum_{k=1}^{p-1} L_{2k}/k.
  V golden_log() {
    if (!golden_) golden_ = std::make_unique<V>(golden_log_sum(p_, backend_));
    return *golden_;
  }

 private:
  unsigned long p_;
  Backend backend_;
  std::map<MhsIndex, std::vector<V>> mhs_;
  std::unique_ptr<BTable<V>> b_;
  std::unique_ptr<V> golden_;
  std::vector<BigInt> lucas_;
  std::deque<BigInt> factorials_;  // stable references across growth
};

template <class Ctx>
using ctx_value_t = typename std::decay_t<Ctx>::value_type;

}  // namespace zcong
