#include "zcong/wz.hpp"

#include "zcong/errors.hpp"

namespace zcong {

WzTables::WzTables(int max_n, const BigRational& a) : max_n_(max_n), a_(a) {
  if (max_n < 0) throw std::invalid_argument("WzTables needs max_n >= 0");
  const int fact_max = 2 * max_n + 4;
  factorials_.reserve(static_cast<std::size_t>(fact_max) + 1);
  factorials_.push_back(1);
  for (int i = 1; i <= fact_max; ++i) factorials_.push_back(factorials_.back() * i);
  h2_.push_back(0);
  for (int k = 1; k <= max_n + 2; ++k) h2_.push_back(h2_.back() + make_rational(1, static_cast<long>(k) * k));
  rising_.push_back(1);
  for (int m = 1; m <= max_n + 2; ++m) rising_.push_back(rising_.back() * (1 + a + (m - 1)));
}

const BigInt& WzTables::factorial(int n) const { return factorials_.at(static_cast<std::size_t>(n)); }
const BigRational& WzTables::h2(int k) const { return h2_.at(static_cast<std::size_t>(k)); }
const BigRational& WzTables::rising(int m) const { return rising_.at(static_cast<std::size_t>(m)); }

namespace {

int sign(int e) { return e % 2 == 0 ? 1 : -1; }

BigRational frac(const BigInt& n, const BigInt& d) { return make_rational(n, d); }

// (-1)^{n+k} (n-k-1)! k!^2 / (n+k+1)! * H_k(2)
BigRational t1_F(const WzTables& t, int n, int k) {
  BigInt num = sign(n + k) * t.factorial(n - k - 1) * t.factorial(k) * t.factorial(k);
  return frac(num, t.factorial(n + k + 1)) * t.h2(k);
}

// 2 (-1)^{n+k} (n-k)! k!^2 / ((n+k+1)! (n+1)) * (H_k(2) - 1/(n+1)^2)
BigRational t1_G(const WzTables& t, int n, int k) {
  BigInt num = 2 * sign(n + k) * t.factorial(n - k) * t.factorial(k) * t.factorial(k);
  BigInt den = t.factorial(n + k + 1) * (n + 1);
  BigRational tail = t.h2(k) - make_rational(1, static_cast<long>(n + 1) * (n + 1));
  return frac(num, den) * tail;
}

// (-1)^k (n-k-1)! k!^2 / (2 (k+1) (n+k+1)!) * H_k(2)
BigRational t3_F(const WzTables& t, int n, int k) {
  BigInt num = sign(k) * t.factorial(n - k - 1) * t.factorial(k) * t.factorial(k);
  BigInt den = 2 * (k + 1) * t.factorial(n + k + 1);
  return frac(num, den) * t.h2(k);
}

// (-1)^k (n-k)! k!^2 / ((n+k+1)! (n+1)^2) * (H_k(2) - 1/(n+1)^2)
BigRational t3_G(const WzTables& t, int n, int k) {
  BigInt num = sign(k) * t.factorial(n - k) * t.factorial(k) * t.factorial(k);
  BigInt den = t.factorial(n + k + 1) * (n + 1) * (n + 1);
  BigRational tail = t.h2(k) - make_rational(1, static_cast<long>(n + 1) * (n + 1));
  return frac(num, den) * tail;
}

// k!^4 n!^2 (2n+3k+3) / (2 (2k+1)! (k+n+1)!^2)
BigRational t5_F(const WzTables& t, int n, int k) {
  const BigInt& fk = t.factorial(k);
  const BigInt& fn = t.factorial(n);
  BigInt num = fk * fk * fk * fk * fn * fn * (2 * n + 3 * k + 3);
  BigInt den = 2 * t.factorial(2 * k + 1) * t.factorial(k + n + 1) * t.factorial(k + n + 1);
  return frac(num, den);
}

// k!^4 n!^2 / ((2k)! (k+n+1)!^2)
BigRational t5_G(const WzTables& t, int n, int k) {
  const BigInt& fk = t.factorial(k);
  const BigInt& fn = t.factorial(n);
  BigInt num = fk * fk * fk * fk * fn * fn;
  BigInt den = t.factorial(2 * k) * t.factorial(k + n + 1) * t.factorial(k + n + 1);
  return frac(num, den);
}

// (-1)^{n+k} k!^2 n!^2 (1+a)_{n-k-1} / ((n+k+1)! (1+a)_n^2)
BigRational p2_F(const WzTables& t, int n, int k) {
  BigInt num = sign(n + k) * t.factorial(k) * t.factorial(k) * t.factorial(n) * t.factorial(n);
  BigRational r = frac(num, t.factorial(n + k + 1)) * t.rising(n - k - 1);
  return r / (t.rising(n) * t.rising(n));
}

// (-1)^{n+k} k!^2 n!^2 (1+a)_{n-k} (2+2n+a) / ((n+k+1)! (1+a)_{n+1}^2)
BigRational p2_G(const WzTables& t, int n, int k) {
  BigInt num = sign(n + k) * t.factorial(k) * t.factorial(k) * t.factorial(n) * t.factorial(n);
  BigRational r = frac(num, t.factorial(n + k + 1)) * t.rising(n - k) * (2 + 2 * n + t.a());
  return r / (t.rising(n + 1) * t.rising(n + 1));
}

void require_nonvanishing(const WzTables& t, int upto) {
  for (int m = 0; m <= upto; ++m)
    if (t.rising(m) == 0)
      throw DomainViolation("(1+a)_" + std::to_string(m) + " vanishes for a = " + to_string(t.a()));
}

}  // namespace

BigRational WzPair::eval_F(const WzTables& t, int n, int k) const {
  if (k < 0 || n < k + 1)
    throw DomainViolation(id + ": F(" + std::to_string(n) + "," + std::to_string(k) + ") needs n >= k+1 >= 1");
  return F(t, n, k);
}

BigRational WzPair::eval_G(const WzTables& t, int n, int k) const {
  if (k < 0 || n < k)
    throw DomainViolation(id + ": G(" + std::to_string(n) + "," + std::to_string(k) + ") needs n >= k >= 0");
  return G(t, n, k);
}

const std::vector<WzPair>& wz_pairs() {
  static const std::vector<WzPair> pairs = {
      {"PAIR-T1", "H_k(2)-weighted pair behind the zeta(4) central binomial congruences", false, t1_F, t1_G},
      {"PAIR-T3", "alternating H_k(2)-weighted pair behind the zeta(5) congruence", false, t3_F, t3_G},
      {"PAIR-T5", "pair behind the cubed central binomial sum (21k-8)/(k^3 C(2k,k)^3)", false, t5_F, t5_G},
      {"PAIR-P2", "Pochhammer pair in the parameter a generating the b_{m,k} identities", true, p2_F, p2_G},
  };
  return pairs;
}

const WzPair& wz_pair(const std::string& id) {
  for (const auto& pair : wz_pairs())
    if (pair.id == id) return pair;
  throw UnknownIdentity("unknown WZ pair: " + id);
}

bool telescoping_check(const WzPair& pair, int n_max, const BigRational& a) {
  WzTables t(n_max + 1, a);
  if (pair.parametrized) require_nonvanishing(t, n_max + 2);
  for (int n = 1; n <= n_max; ++n)
    for (int k = 0; k < n; ++k) {
      BigRational lhs = pair.eval_F(t, n + 1, k) - pair.eval_F(t, n, k);
      BigRational rhs = pair.eval_G(t, n, k + 1) - pair.eval_G(t, n, k);
      if (lhs != rhs) return false;
    }
  return true;
}

bool summation_formula_check(const WzPair& pair, int N, const BigRational& a) {
  if (N < 0) throw std::invalid_argument("N must be >= 0");
  WzTables t(N + 1, a);
  if (pair.parametrized) require_nonvanishing(t, N + 2);
  BigRational lhs = 0, rhs = 0;
  for (int n = 0; n <= N; ++n) {
    lhs += pair.eval_G(t, n, 0);
    rhs += pair.eval_G(t, n, n) + pair.eval_F(t, n + 1, n);
  }
  for (int k = 0; k <= N; ++k) rhs -= pair.eval_F(t, N + 1, k);
  return lhs == rhs;
}

}  // namespace zcong
