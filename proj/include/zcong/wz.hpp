#pragma once

#include <string>
#include <vector>

#include "zcong/big_rational.hpp"

namespace zcong {

/// Factorials, H_k(2) and Pochhammer values (1+a)_m reused across many
/// evaluations of one pair.
class WzTables {
 public:
  WzTables(int max_n, const BigRational& a);

  const BigInt& factorial(int n) const;
  const BigRational& h2(int k) const;  // H_k(2)
  /// (1 + a)_m.
  const BigRational& rising(int m) const;
  const BigRational& a() const { return a_; }
  int max_n() const { return max_n_; }

 private:
  int max_n_;
  BigRational a_;
  std::vector<BigInt> factorials_;
  std::vector<BigRational> h2_;
  std::vector<BigRational> rising_;
};

/// A closed-form WZ pair: F(n+1,k) - F(n,k) = G(n,k+1) - G(n,k).
/// F is defined for n >= k+1, G for n >= k (k >= 0).
struct WzPair {
  using Eval = BigRational (*)(const WzTables&, int n, int k);

  std::string id;
  std::string description;
  bool parametrized = false;
  Eval F = nullptr;
  Eval G = nullptr;

  /// Checked evaluation; throws DomainViolation outside the domain.
  BigRational eval_F(const WzTables& t, int n, int k) const;
  BigRational eval_G(const WzTables& t, int n, int k) const;
};

/// PAIR-T1, PAIR-T3, PAIR-T5, PAIR-P2 (the last one takes the parameter a).
const std::vector<WzPair>& wz_pairs();
const WzPair& wz_pair(const std::string& id);

/// True iff the telescoping relation holds exactly for all 0 <= k < n <= n_max.
/// A parametrized pair requires (1+a)_m != 0 over the range (DomainViolation).
bool telescoping_check(const WzPair& pair, int n_max, const BigRational& a = 0);

/// sum_{n=0}^N G(n,0) == sum_{n=0}^N (G(n,n) + F(n+1,n)) - sum_{k=0}^N F(N+1,k), exactly.
bool summation_formula_check(const WzPair& pair, int N, const BigRational& a = 0);

}  // namespace zcong
