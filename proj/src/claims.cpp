#include "zcong/claims.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <set>
#include <sstream>

#include "zcong/errors.hpp"

namespace zcong {

std::string to_string(ClaimStatus s) { return s == ClaimStatus::Proven ? "proven" : "conjectural"; }
std::string to_string(BackendKind b) { return b == BackendKind::Rational ? "rational" : "padic"; }

std::string to_string(ClaimVerdict v) {
  switch (v) {
    case ClaimVerdict::Proven: return "Proven";
    case ClaimVerdict::Refuted: return "Refuted";
    case ClaimVerdict::Insufficient: return "Insufficient";
    case ClaimVerdict::NotApplicable: return "NotApplicable";
  }
  return "?";
}

namespace {

using Dir = SumSpec::Direction;

// sum_{k<p} t^k / (k^d C(2k,k)^power)
SumSpec inv_sum(int d, long t = 1, int power = 1) {
  SumSpec s;
  s.d = d;
  s.t = t;
  s.power = power;
  return s;
}

// sum_{k<p} t^k H_{k-1}(w) / (k^d C(2k,k))
SumSpec weighted(int d, long t, MhsIndex w) {
  SumSpec s = inv_sum(d, t);
  s.weight = std::move(w);
  return s;
}

// sum_{k<p} t^k C(2k,k) / k^d
SumSpec central_sum(int d, long t) {
  SumSpec s = inv_sum(d, t);
  s.direction = Dir::Central;
  return s;
}

// sum_{k<p} (slope k + offset) / (k^3 C(2k,k)^3)
SumSpec cubed_sum(long slope, long offset) {
  SumSpec s = inv_sum(3, 1, 3);
  s.slope = slope;
  s.offset = offset;
  return s;
}

template <class Ctx>
ctx_value_t<Ctx> H1(Ctx& ctx) {
  return ctx.Hp({1});
}

// B_{p-j}
template <class Ctx>
ctx_value_t<Ctx> Bp(Ctx& ctx, int j) {
  return ctx.bern(static_cast<int>(ctx.p()) - j);
}

// B_n / n
template <class Ctx>
ctx_value_t<Ctx> Bn_over_n(Ctx& ctx, int n) {
  return ctx.bern(n) * ctx.q(1, n);
}

// p sum_{k<p} (3k b_{m,k} + 2 b_{m-1,k}) / (k^3 C(2k,k))
template <class Ctx>
ctx_value_t<Ctx> p2_sum(Ctx& ctx, int m) {
  using V = ctx_value_t<Ctx>;
  V acc = ctx.zero();
  for (int k = 1; k < static_cast<int>(ctx.p()); ++k) {
    V inner = ctx.i(3L * k) * ctx.bmk(m, k) + ctx.i(2) * ctx.bmk(m - 1, k);
    acc += inner * ctx.frac(BigInt(1), central_binomial(k) * k * k * k);
  }
  V r = ctx.pw(1) * acc;
  return r;
}

// (1 - L_p^2) as a value
template <class Ctx>
ctx_value_t<Ctx> one_minus_lp2(Ctx& ctx) {
  const BigInt& L = ctx.lucas(static_cast<int>(ctx.p()));
  return ctx.frac(1 - L * L, BigInt(1));
}

std::pair<int, int> k_range(unsigned long p) { return {1, static_cast<int>(p) - 1}; }

Claim meta(std::string id, std::string description, unsigned long min_prime, int required, int max_shift,
           ClaimStatus status = ClaimStatus::Proven) {
  Claim c;
  c.id = std::move(id);
  c.description = std::move(description);
  c.min_prime = min_prime;
  c.required = required;
  c.max_shift = max_shift;
  c.status = status;
  return c;
}

Claim per_item(Claim c, std::function<std::pair<int, int>(unsigned long)> items, std::string name) {
  c.items = std::move(items);
  c.item_name = std::move(name);
  return c;
}

std::string join_index(const std::vector<int>& e) {
  std::string s;
  for (int a : e) s += std::to_string(a);
  return s;
}

long binom_small(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int neg1(int e) { return e % 2 == 0 ? 1 : -1; }

void add_series_claims(std::vector<Claim>& out, const BigRational& t1_constant, long t5_offset) {
  out.push_back(make_claim(
      meta("C-TAU-Z3", "5/2 sum (-1)^(k-1)/(k^3 C(2k,k)) == H_{p-1}(1)/p^2 (mod p^3)", 7, 3, 3),
      [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
        return ctx.q(-5, 2) * ctx.sum(inv_sum(3, -1)) - H1(ctx) * ctx.pw(-2);
      }));
  out.push_back(make_claim(meta("C-TAU-Z2", "3 sum 1/(k^2 C(2k,k)) == H_{p-1}(1)/p (mod p^3)", 7, 3, 2),
                           [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
                             return ctx.i(3) * ctx.sum(inv_sum(2)) - H1(ctx) * ctx.pw(-1);
                           }));
  out.push_back(make_claim(
      meta("C-T1", "4 sum 1/(k^4 C(2k,k)) - 3 sum H_{k-1}(2)/(k^2 C(2k,k)) == 3/p^3 H_{p-1}(1) - 6/5 p B_{p-5} (mod p^2)",
           5, 2, 4),
      [t1_constant](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
        return ctx.i(4) * ctx.sum(inv_sum(4)) - ctx.i(3) * ctx.sum(weighted(2, 1, {2})) -
               ctx.i(3) * H1(ctx) * ctx.pw(-3) + ctx.q(t1_constant) * ctx.pw(1) * Bp(ctx, 5);
      }));
  out.push_back(make_claim(meta("C-T2A", "sum 1/(k^4 C(2k,k)) == H_{p-1}(1)/p^3 (mod p)", 7, 1, 4),
                           [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
                             return ctx.sum(inv_sum(4)) - H1(ctx) * ctx.pw(-3);
                           }));
  out.push_back(make_claim(meta("C-T2B", "sum C(2k,k)/k^3 == -2 H_{p-1}(1)/p^2 (mod p)", 5, 1, 3),
                           [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
                             return ctx.sum(central_sum(3, 1)) + ctx.i(2) * H1(ctx) * ctx.pw(-2);
                           }));
  out.push_back(make_claim(meta("C-COR2", "sum 1/(k^4 C(2k,k)) - 3 sum H_{k-1}(2)/(k^2 C(2k,k)) == 0 (mod p)", 7, 1, 2),
                           [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
                             return ctx.sum(inv_sum(4)) - ctx.i(3) * ctx.sum(weighted(2, 1, {2}));
                           }));
  out.push_back(make_claim(
      meta("C-T3", "2 sum (-1)^(k-1)/(k^5 C(2k,k)) - 5/2 sum (-1)^(k-1) H_{k-1}(2)/(k^3 C(2k,k)) == -6/5 B_{p-5} (mod p)",
           5, 1, 2),
      [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
        return ctx.i(-2) * ctx.sum(inv_sum(5, -1)) + ctx.q(5, 2) * ctx.sum(weighted(3, -1, {2})) +
               ctx.q(6, 5) * Bp(ctx, 5);
      }));
  out.push_back(make_claim(
      meta("C-T4A",
           "p sum (-1)^(k-1)/(k^5 C(2k,k)) == 5(1-L_p^2)/(8p^4) - 5/(4p^3) sum L_{2k}/k + 3 H_{p-1}(1)/p^3 - 3/5 p B_{p-5} "
           "(mod p^2)",
           7, 2, 5),
      [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
        using V = ctx_value_t<decltype(ctx)>;
        V rhs = ctx.q(5, 8) * one_minus_lp2(ctx) * ctx.pw(-4) - ctx.q(5, 4) * ctx.golden_log() * ctx.pw(-3) +
                ctx.i(3) * H1(ctx) * ctx.pw(-3) - ctx.q(3, 5) * ctx.pw(1) * Bp(ctx, 5);
        return ctx.i(-1) * ctx.pw(1) * ctx.sum(inv_sum(5, -1)) - rhs;
      }));
  out.push_back(make_claim(
      meta("C-T4B", "sum (-1)^k C(2k,k)/k^4 == 5(1-L_p^2)/(4p^4) - 5/(2p^3) sum L_{2k}/k + 6 H_{p-1}(1)/p^3 (mod p)", 7,
           1, 5),
      [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
        using V = ctx_value_t<decltype(ctx)>;
        V rhs = ctx.q(5, 4) * one_minus_lp2(ctx) * ctx.pw(-4) - ctx.q(5, 2) * ctx.golden_log() * ctx.pw(-3) +
                ctx.i(6) * H1(ctx) * ctx.pw(-3);
        return ctx.sum(central_sum(4, -1)) - rhs;
      }));
  out.push_back(make_claim(meta("C-COR-L", "sum L_{2k}/k == (1-L_p^2)/(2p) + 12/5 H_{p-1}(1) (mod p^3)", 7, 3, 2),
                           [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
                             return ctx.golden_log() - ctx.q(1, 2) * one_minus_lp2(ctx) * ctx.pw(-1) -
                                    ctx.q(12, 5) * H1(ctx);
                           }));
  out.push_back(make_claim(
      meta("C-T5", "sum (21k-8)/(k^3 C(2k,k)^3) + (p-1)/p^3 == (15p-6) H_{p-1}(1)/p^2 + 12/5 p^2 B_{p-5} (mod p^3)", 7,
           3, 4),
      [t5_offset](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
        return ctx.sum(cubed_sum(21, t5_offset)) + ctx.i(ctx.pl() - 1) * ctx.pw(-3) -
               ctx.i(15 * ctx.pl() - 6) * H1(ctx) * ctx.pw(-2) - ctx.q(12, 5) * ctx.pw(2) * Bp(ctx, 5);
      }));
  out.push_back(make_claim(meta("C-L1", "p sum H_{k-1}(2)/(k^2 C(2k,k)) == H_{p-1}(1)/(3p^2) (mod p^2)", 7, 2, 3),
                           [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
                             return ctx.pw(1) * ctx.sum(weighted(2, 1, {2})) - ctx.q(1, 3) * H1(ctx) * ctx.pw(-2);
                           }));
  out.push_back(make_claim(
      meta("C-L2",
           "p sum (-1)^k H_{k-1}(2)/(k^3 C(2k,k)) == (L_p^2-1)/(2p^4) + 1/p^3 sum L_{2k}/k - 12/5 H_{p-1}(1)/p^3 "
           "(mod p^2)",
           7, 2, 5),
      [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
        using V = ctx_value_t<decltype(ctx)>;
        V rhs = ctx.q(-1, 2) * one_minus_lp2(ctx) * ctx.pw(-4) + ctx.golden_log() * ctx.pw(-3) -
                ctx.q(12, 5) * H1(ctx) * ctx.pw(-3);
        return ctx.pw(1) * ctx.sum(weighted(3, -1, {2})) - rhs;
      }));
  out.push_back(make_claim(meta("C-L3A", "H_{p-1}(1,2) == 6/5 p^2 B_{p-5} - H_{p-1}(2,1) (mod p^3)", 5, 3, 0),
                           [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
                             return ctx.Hp({1, 2}) + ctx.Hp({2, 1}) - ctx.q(6, 5) * ctx.pw(2) * Bp(ctx, 5);
                           }));
  out.push_back(make_claim(meta("C-L3B", "H_{p-1}(1,2) == -3 H_{p-1}(1)/p^2 + 1/2 p^2 B_{p-5} (mod p^3)", 5, 3, 2),
                           [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
                             return ctx.Hp({1, 2}) + ctx.i(3) * H1(ctx) * ctx.pw(-2) -
                                    ctx.q(1, 2) * ctx.pw(2) * Bp(ctx, 5);
                           }));
  out.push_back(make_claim(
      meta("C-P2-1", "p sum (3k b_{1,k} + 2 b_{0,k})/(k^3 C(2k,k)) == 4 H_{p-1}(1)/p (mod p^3)", 7, 3, 2),
      [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> { return p2_sum(ctx, 1) - ctx.i(4) * H1(ctx) * ctx.pw(-1); }));
  out.push_back(make_claim(meta("C-P2-2", "p sum (3k b_{2,k} + 2 b_{1,k})/(k^3 C(2k,k)) == 0 (mod p^2)", 7, 2, 1),
                           [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> { return p2_sum(ctx, 2); }));
  out.push_back(make_claim(meta("C-P2-3", "p sum (3k b_{3,k} + 2 b_{2,k})/(k^3 C(2k,k)) == 0 (mod p)", 7, 1, 1),
                           [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> { return p2_sum(ctx, 3); }));
  // Even m is stated mod p; scaling by p gives every item the same modulus.
  out.push_back(make_claim(
      per_item(meta("C-L4", "b_{m,p-1} == 0 (mod p^2) for odd m, (mod p) for even m; 1 <= m <= min(6, p-3)", 5, 2, 0),
               [](unsigned long p) { return std::pair<int, int>{1, std::min(6, static_cast<int>(p) - 3)}; }, "m"),
      [](auto& ctx, int m) -> ctx_value_t<decltype(ctx)> {
        const int k = static_cast<int>(ctx.p()) - 1;
        if (m % 2 == 1) return ctx.bmk(m, k);
        return ctx.pw(1) * ctx.bmk(m, k);
      }));
  out.push_back(make_claim(
      meta("C-Q4", "p sum 4^k/(k^4 C(2k,k)) == -4/3 (2 q_p(2)^3 + B_{p-3}) (mod p)", 7, 1, 1),
      [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
        using V = ctx_value_t<decltype(ctx)>;
        V q = ctx.q(fermat_quotient_2(ctx.p()));
        return ctx.pw(1) * ctx.sum(inv_sum(4, 4)) + ctx.q(4, 3) * (ctx.i(2) * q * q * q + Bp(ctx, 3));
      }));
  out.push_back(make_claim(
      per_item(meta("C-EQ23",
                    "(-1)^k (p-1-k)! (k-1)!^2/(p-1+k)! == 1/(pk) + 1/k^2 + p H_k(2)/k (mod p^2), 1 <= k <= p-1", 5, 2, 1),
               k_range, "k"),
      [](auto& ctx, int k) -> ctx_value_t<decltype(ctx)> {
        using V = ctx_value_t<decltype(ctx)>;
        const int p = static_cast<int>(ctx.p());
        const BigInt& fk = ctx.factorial(k - 1);
        V lhs = ctx.frac(neg1(k) * ctx.factorial(p - 1 - k) * fk * fk, ctx.factorial(p - 1 + k));
        V rhs = ctx.q(1, k) * ctx.pw(-1) + ctx.q(1, static_cast<long>(k) * k) + ctx.pw(1) * ctx.Hk({2}, k) * ctx.q(1, k);
        return lhs - rhs;
      }));
  out.push_back(make_claim(
      per_item(meta("C-DUAL", "p/(k C(2k,k)) == C(2(p-k),p-k)/2 (mod p), 1 <= k <= p-1", 5, 1, 1), k_range, "k"),
      [](auto& ctx, int k) -> ctx_value_t<decltype(ctx)> {
        const long p = ctx.pl();
        return ctx.frac(BigInt(p), central_binomial(k) * k) -
               ctx.frac(central_binomial(static_cast<int>(p - k)), BigInt(2));
      }));
  out.push_back(make_claim(
      meta("C-EQ35",
           "p^3 sum (21k-8)/(k^3 C(2k,k)^3) == p + 3p^2 H_{p-1}(1) - p/C(2p-2,p-1) - sum_{m=1}^{4} b_{m,p-1} "
           "p^(m+1)/C(2p-2,p-1) (mod p^6)",
           7, 6, 1),
      [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
        using V = ctx_value_t<decltype(ctx)>;
        const int k = static_cast<int>(ctx.p()) - 1;
        V inv_c = ctx.inv_central(k);
        V rhs = ctx.pw(1) + ctx.i(3) * ctx.pw(2) * H1(ctx) - ctx.pw(1) * inv_c;
        for (int m = 1; m <= 4; ++m) rhs -= ctx.bmk(m, k) * ctx.pw(m + 1) * inv_c;
        return ctx.pw(3) * ctx.sum(cubed_sum(21, -8)) - rhs;
      }));
  out.push_back(make_claim(
      per_item(meta("C-5", "H_{p-1}(2,2) == -2/5 p B_{p-5} and H_{p-1}(1,3) == -9/10 p B_{p-5} (mod p^2)", 7, 2, 0),
               [](unsigned long) { return std::pair<int, int>{0, 1}; }, "item"),
      [](auto& ctx, int item) -> ctx_value_t<decltype(ctx)> {
        if (item == 0) return ctx.Hp({2, 2}) + ctx.q(2, 5) * ctx.pw(1) * Bp(ctx, 5);
        return ctx.Hp({1, 3}) + ctx.q(9, 10) * ctx.pw(1) * Bp(ctx, 5);
      }));
  out.push_back(make_claim(
      per_item(meta("C-EQ20", "H_{p-1}(2,3) == -2 B_{p-5} and H_{p-1}(4,1) == -B_{p-5} (mod p)", 5, 1, 0),
               [](unsigned long) { return std::pair<int, int>{0, 1}; }, "item"),
      [](auto& ctx, int item) -> ctx_value_t<decltype(ctx)> {
        if (item == 0) return ctx.Hp({2, 3}) + ctx.i(2) * Bp(ctx, 5);
        return ctx.Hp({4, 1}) + Bp(ctx, 5);
      }));
  out.push_back(make_claim(
      per_item(meta("C-HPK", "H_{p-1-k}(1) - H_{p-1}(1) == H_k(1) + p H_k(2) + p^2 H_k(3) (mod p^3), 1 <= k <= p-1", 7,
                    3, 0),
               k_range, "k"),
      [](auto& ctx, int k) -> ctx_value_t<decltype(ctx)> {
        const int p = static_cast<int>(ctx.p());
        return ctx.Hk({1}, p - 1 - k) - H1(ctx) - ctx.Hk({1}, k) - ctx.pw(1) * ctx.Hk({2}, k) -
               ctx.pw(2) * ctx.Hk({3}, k);
      }));

  const auto conj = ClaimStatus::Conjectural;
  out.push_back(make_claim(
      meta("C-SUN-Z4", "sum 1/(k^4 C(2k,k)) == H_{p-1}(1)/p^3 - 7/45 p B_{p-5} (mod p^2)", 7, 2, 4, conj),
      [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
        return ctx.sum(inv_sum(4)) - H1(ctx) * ctx.pw(-3) + ctx.q(7, 45) * ctx.pw(1) * Bp(ctx, 5);
      }));
  out.push_back(make_claim(
      meta("C-SUN-B3", "sum C(2k,k)/k^3 == -2 H_{p-1}(1)/p^2 - 13/27 H_{p-1}(3) (mod p^4)", 11, 4, 3, conj),
      [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
        return ctx.sum(central_sum(3, 1)) + ctx.i(2) * H1(ctx) * ctx.pw(-2) + ctx.q(13, 27) * ctx.Hp({3});
      }));
  out.push_back(make_claim(
      meta("C-CONJ1", "sum H_{k-1}(2)/(k^2 C(2k,k)) == H_{p-1}(1)/(3p^3) + 26/135 p B_{p-5} (mod p^2)", 5, 2, 4, conj),
      [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
        return ctx.sum(weighted(2, 1, {2})) - ctx.q(1, 3) * H1(ctx) * ctx.pw(-3) -
               ctx.q(26, 135) * ctx.pw(1) * Bp(ctx, 5);
      }));
}

void add_mhs_claims(std::vector<Claim>& out) {
  // (a): H_{p-1}(a)
  for (int a = 1; a <= 4; ++a) {
    const std::string id = "C-MHS-A" + std::to_string(a);
    if (a % 2 == 1) {
      BigRational c = make_rational(a * (a + 1), 2 * (a + 2));
      out.push_back(make_claim(
          meta(id, "H_{p-1}(" + std::to_string(a) + ") == -" + to_string(c) + " p^2 B_{p-" + std::to_string(a + 2) +
                       "} (mod p^3)",
               static_cast<unsigned long>(a + 3), 3, 0),
          [a, c](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
            return ctx.Hp({a}) + ctx.q(c) * ctx.pw(2) * Bp(ctx, a + 2);
          }));
    } else {
      BigRational c = make_rational(a, a + 1);
      out.push_back(make_claim(
          meta(id, "H_{p-1}(" + std::to_string(a) + ") == " + to_string(c) + " p B_{p-" + std::to_string(a + 1) +
                       "} (mod p^2)",
               static_cast<unsigned long>(a + 3), 2, 0),
          [a, c](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
            return ctx.Hp({a}) - ctx.q(c) * ctx.pw(1) * Bp(ctx, a + 1);
          }));
    }
  }

  // (b)
  out.push_back(make_claim(
      meta("C-MHS-B1", "H_{p-1}(1) == p^2 (2 B_{p-3}/(p-3) - B_{2p-4}/(2p-4)) (mod p^4)", 7, 4, 0),
      [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
        const int p = static_cast<int>(ctx.p());
        return H1(ctx) - ctx.pw(2) * (ctx.i(2) * Bn_over_n(ctx, p - 3) - Bn_over_n(ctx, 2 * p - 4));
      }));
  out.push_back(make_claim(meta("C-MHS-B2", "H_{p-1}(2) == -2 H_{p-1}(1)/p + 2/5 p^3 B_{p-5} (mod p^4)", 7, 4, 1),
                           [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
                             return ctx.Hp({2}) + ctx.i(2) * H1(ctx) * ctx.pw(-1) -
                                    ctx.q(2, 5) * ctx.pw(3) * Bp(ctx, 5);
                           }));
  out.push_back(make_claim(
      meta("C-MHS-B3",
           "H_{p-1}(1) == p^2 (B_{3p-5}/(3p-5) - 3 B_{2p-4}/(2p-4) + 3 B_{p-3}/(p-3)) + p^4 B_{p-5}/(p-5) (mod p^5)", 7,
           5, 0),
      [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
        const int p = static_cast<int>(ctx.p());
        return H1(ctx) -
               ctx.pw(2) * (Bn_over_n(ctx, 3 * p - 5) - ctx.i(3) * Bn_over_n(ctx, 2 * p - 4) +
                            ctx.i(3) * Bn_over_n(ctx, p - 3)) -
               ctx.pw(4) * Bn_over_n(ctx, p - 5);
      }));

  // (c): H_{p-1}({a}^r)
  const std::pair<int, int> c_cases[] = {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 2}};
  for (auto [a, r] : c_cases) {
    const int w = a * r;
    MhsIndex idx = MhsIndex::repeated(a, r);
    const std::string id = "C-MHS-C-" + join_index(idx.entries());
    const auto min_p = static_cast<unsigned long>(w + 3);
    if (w % 2 == 1) {
      BigRational c = make_rational(neg1(r) * a * (w + 1), 2 * (w + 2));
      out.push_back(make_claim(
          meta(id, "H_{p-1}" + idx.to_string() + " == " + to_string(c) + " p^2 B_{p-" + std::to_string(w + 2) +
                       "} (mod p^3)",
               min_p, 3, 0),
          [idx, c, w](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
            return ctx.Hp(idx) - ctx.q(c) * ctx.pw(2) * Bp(ctx, w + 2);
          }));
    } else {
      BigRational c = make_rational(neg1(r - 1) * a, w + 1);
      out.push_back(make_claim(
          meta(id, "H_{p-1}" + idx.to_string() + " == " + to_string(c) + " p B_{p-" + std::to_string(w + 1) +
                       "} (mod p^2)",
               min_p, 2, 0),
          [idx, c, w](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
            return ctx.Hp(idx) - ctx.q(c) * ctx.pw(1) * Bp(ctx, w + 1);
          }));
    }
  }

  // (d): depth two, weight <= 5
  for (int w = 2; w <= 5; ++w)
    for (int a1 = 1; a1 < w; ++a1) {
      const int a2 = w - a1;
      MhsIndex idx{a1, a2};
      BigRational c = make_rational(neg1(a2) * binom_small(w, a1), w);
      out.push_back(make_claim(
          meta("C-MHS-D-" + join_index(idx.entries()),
               "H_{p-1}" + idx.to_string() + " == " + to_string(c) + " B_{p-" + std::to_string(w) + "} (mod p)",
               static_cast<unsigned long>(std::max(w, 3)), 1, 0),
          [idx, c, w](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
            return ctx.Hp(idx) - ctx.q(c) * Bp(ctx, w);
          }));
    }
  for (int w = 2; w <= 4; w += 2)
    for (int a1 = 1; a1 < w; ++a1) {
      const int a2 = w - a1;
      MhsIndex idx{a1, a2};
      BigRational c = make_rational(neg1(a1) * (a2 * binom_small(w + 1, a1) - a1 * binom_small(w + 1, a2)) - w,
                                    2 * (w + 1));
      out.push_back(make_claim(
          meta("C-MHS-D2-" + join_index(idx.entries()),
               "H_{p-1}" + idx.to_string() + " == " + to_string(c) + " p B_{p-" + std::to_string(w + 1) +
                   "} (mod p^2)",
               static_cast<unsigned long>(w + 2), 2, 0),
          [idx, c, w](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
            return ctx.Hp(idx) - ctx.q(c) * ctx.pw(1) * Bp(ctx, w + 1);
          }));
    }

  // (e): depth three, odd weight <= 5
  const std::vector<std::vector<int>> e_cases = {{1, 1, 1}, {1, 1, 3}, {1, 3, 1}, {3, 1, 1},
                                                 {1, 2, 2}, {2, 1, 2}, {2, 2, 1}};
  for (const auto& e : e_cases) {
    MhsIndex idx(e);
    const int w = idx.weight();
    BigRational c = make_rational(neg1(e[0]) * binom_small(w, e[0]) - neg1(e[2]) * binom_small(w, e[2]), 2 * w);
    out.push_back(make_claim(
        meta("C-MHS-E-" + join_index(e),
             "H_{p-1}" + idx.to_string() + " == " + to_string(c) + " B_{p-" + std::to_string(w) + "} (mod p)",
             static_cast<unsigned long>(w + 1), 1, 0),
        [idx, c, w](auto& ctx, int) -> ctx_value_t<decltype(ctx)> { return ctx.Hp(idx) - ctx.q(c) * Bp(ctx, w); }));
  }

  // (f)
  struct FCase {
    const char* id;
    std::vector<int> idx;
    long num, den;
    int required;
  };
  const FCase f_cases[] = {{"C-MHS-F1", {1, 1, 2}, 11, 10, 2},
                           {"C-MHS-F2", {1, 2, 1}, -9, 10, 2},
                           {"C-MHS-F3", {2, 1, 1}, 3, 5, 2},
                           {"C-MHS-F4", {1, 1, 1, 2}, 1, 1, 1},
                           {"C-MHS-F5", {1, 4}, 1, 1, 1}};
  for (const auto& f : f_cases) {
    MhsIndex idx(f.idx);
    BigRational c = make_rational(f.num, f.den);
    const int pexp = f.required - 1;  // mod p^2 statements carry a factor p
    out.push_back(make_claim(
        meta(f.id,
             "H_{p-1}" + idx.to_string() + " == " + to_string(c) + (pexp ? " p" : "") + " B_{p-5} (mod p" +
                 (f.required == 2 ? "^2" : "") + ")",
             7, f.required, 0),
        [idx, c, pexp](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
          return ctx.Hp(idx) - ctx.q(c) * ctx.pw(pexp) * Bp(ctx, 5);
        }));
  }

  // (g): alternating sums
  out.push_back(make_claim(meta("C-MHS-G1", "H_{p-1}(-4) == 3/4 p B_{p-5} (mod p^2)", 7, 2, 0),
                           [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
                             return ctx.Hp({-4}) - ctx.q(3, 4) * ctx.pw(1) * Bp(ctx, 5);
                           }));
  out.push_back(make_claim(meta("C-MHS-G2", "H_{p-1}(-3) == 3/2 H_{p-1}(1)/p^2 (mod p^2)", 7, 2, 2),
                           [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
                             return ctx.Hp({-3}) - ctx.q(3, 2) * H1(ctx) * ctx.pw(-2);
                           }));
  out.push_back(make_claim(meta("C-MHS-G3", "-2 H_{p-1}(1,-2) == 3/2 H_{p-1}(1)/p^2 (mod p^2)", 7, 2, 2),
                           [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
                             return ctx.i(-2) * ctx.Hp({1, -2}) - ctx.q(3, 2) * H1(ctx) * ctx.pw(-2);
                           }));
  out.push_back(make_claim(meta("C-MHS-G4", "H_{p-1}(2,-2) + 2 H_{p-1}(1,-3) == 0 (mod p)", 7, 1, 0),
                           [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
                             return ctx.Hp({2, -2}) + ctx.i(2) * ctx.Hp({1, -3});
                           }));
  out.push_back(make_claim(meta("C-MHS-G5", "2 H_{p-1}(1,1,-2) == H_{p-1}(1,-3) (mod p)", 7, 1, 0),
                           [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
                             return ctx.i(2) * ctx.Hp({1, 1, -2}) - ctx.Hp({1, -3});
                           }));
  out.push_back(make_claim(meta("C-MHS-G6", "H_{p-1}(-3) + 2 H_{p-1}(1,-2) == 0 (mod p^2)", 7, 2, 0),
                           [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
                             return ctx.Hp({-3}) + ctx.i(2) * ctx.Hp({1, -2});
                           }));
}

std::vector<Claim> build_registry() {
  std::vector<Claim> out;
  add_series_claims(out, make_rational(6, 5), -8);
  add_mhs_claims(out);
  return out;
}

// Family aliases: a prefix that names several registry entries.
const std::vector<std::string>& family_prefixes() {
  static const std::vector<std::string> f = {"C-MHS-A", "C-MHS-B", "C-MHS-C", "C-MHS-D", "C-MHS-E",
                                             "C-MHS-F", "C-MHS-G", "C-TAU",   "C-T2",    "C-T4",
                                             "C-L3",    "C-P2",    "C-SUN"};
  return f;
}

bool starts_with_family(const std::string& id, const std::string& family) {
  if (id.rfind(family, 0) != 0 || id.size() == family.size()) return false;
  // "C-T2" must match C-T2A but not a hypothetical C-T20; "C-MHS-D" matches D- and D2-.
  const char next = id[family.size()];
  return next == '-' || std::isupper(static_cast<unsigned char>(next)) || std::isdigit(static_cast<unsigned char>(next));
}

}  // namespace

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = build_registry();
  return registry;
}

const Claim& claim(const std::string& id) {
  for (const auto& c : claim_registry())
    if (c.id == id) return c;
  throw UnknownClaim("unknown claim: " + id);
}

std::vector<std::string> resolve_claim_ids(const std::string& spec, bool exclude_conjectural) {
  std::set<std::string> ids;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    if (token == "all") {
      for (const auto& c : claim_registry()) ids.insert(c.id);
      continue;
    }
    bool exact = false;
    for (const auto& c : claim_registry())
      if (c.id == token) exact = true;
    if (exact) {
      ids.insert(token);
      continue;
    }
    bool is_family =
        std::find(family_prefixes().begin(), family_prefixes().end(), token) != family_prefixes().end();
    if (!is_family) throw UnknownClaim("unknown claim: " + token);
    for (const auto& c : claim_registry())
      if (starts_with_family(c.id, token)) ids.insert(c.id);
  }
  std::vector<std::string> out;
  for (const auto& id : ids)
    if (!exclude_conjectural || claim(id).status == ClaimStatus::Proven) out.push_back(id);
  return out;
}

Claim mutant_t1(const BigRational& constant) {
  std::vector<Claim> tmp;
  add_series_claims(tmp, constant, -8);
  for (auto& c : tmp)
    if (c.id == "C-T1") {
      c.id = "C-T1[6/5->" + to_string(constant) + "]";
      return c;
    }
  throw UnknownClaim("C-T1");
}

Claim mutant_t5(long offset) {
  std::vector<Claim> tmp;
  add_series_claims(tmp, make_rational(6, 5), offset);
  for (auto& c : tmp)
    if (c.id == "C-T5") {
      c.id = "C-T5[21k-8->21k" + std::string(offset < 0 ? "" : "+") + std::to_string(offset) + "]";
      return c;
    }
  throw UnknownClaim("C-T5");
}

EvalContext<PadicBackend>& PrimeContexts::padic(int digits) {
  auto it = padic_.find(digits);
  if (it == padic_.end())
    it = padic_.emplace(digits, std::make_unique<EvalContext<PadicBackend>>(p_, PadicBackend(p_, digits))).first;
  return *it->second;
}

namespace {

struct Attempt {
  ClaimVerdict verdict = ClaimVerdict::Proven;
  Achieved achieved = Achieved::infinite();
  std::optional<int> witness;
};

bool lower(const Achieved& a, const Achieved& b) {
  if (b.kind == Achieved::Kind::Infinite) return a.kind != Achieved::Kind::Infinite;
  if (a.kind == Achieved::Kind::Infinite) return false;
  return a.value < b.value;
}

ClaimVerdict to_claim_verdict(VerdictKind k) {
  switch (k) {
    case VerdictKind::Proven: return ClaimVerdict::Proven;
    case VerdictKind::Refuted: return ClaimVerdict::Refuted;
    case VerdictKind::Insufficient: return ClaimVerdict::Insufficient;
  }
  return ClaimVerdict::Insufficient;
}

// Folds the per-item verdicts: Refuted short-circuits, Insufficient sticks.
template <class Eval>
Attempt run_items(const Claim& c, unsigned long p, Eval eval) {
  Attempt out;
  auto [lo, hi] = c.items ? c.items(p) : std::pair<int, int>{0, 0};
  for (int item = lo; item <= hi; ++item) {
    ValuationVerdict v = eval(item);
    if (lower(v.achieved, out.achieved)) out.achieved = v.achieved;
    ClaimVerdict cv = to_claim_verdict(v.kind);
    if (cv == ClaimVerdict::Refuted) {
      out.verdict = cv;
      out.achieved = v.achieved;
      if (c.items) out.witness = item;
      return out;
    }
    if (cv == ClaimVerdict::Insufficient) {
      out.verdict = cv;
      if (c.items && !out.witness) out.witness = item;
    }
  }
  return out;
}

}  // namespace

ClaimResult evaluate_claim(const Claim& c, PrimeContexts& ctx, BackendKind backend, const EvalOptions& opt) {
  const unsigned long p = ctx.p();
  ClaimResult r;
  r.claim = c.id;
  r.p = p;
  r.backend = backend;
  r.required = c.required;
  r.status = c.status;
  if (!c.applies(p) && !opt.ignore_applicability) return r;

  const auto start = std::chrono::steady_clock::now();
  try {
    if (backend == BackendKind::Rational) {
      Attempt a = run_items(c, p, [&](int item) {
        return check_valuation_at_least(c.rational(ctx.rational(), item), p, c.required);
      });
      r.verdict = a.verdict;
      r.achieved = a.achieved;
      r.witness = a.witness;
    } else {
      int digits = c.required + c.max_shift + opt.guard;
      for (int attempt = 0;; ++attempt) {
        r.digits = digits;
        Attempt a;
        try {
          a = run_items(c, p, [&](int item) {
            return check_valuation_at_least(c.padic(ctx.padic(digits), item), c.required);
          });
        } catch (const InsufficientPrecision& e) {
          a.verdict = ClaimVerdict::Insufficient;
          a.achieved = Achieved::at_least(0);
          r.error = e.what();
        }
        r.verdict = a.verdict;
        r.achieved = a.achieved;
        r.witness = a.witness;
        if (a.verdict != ClaimVerdict::Insufficient || attempt >= opt.max_retries) break;
        digits *= 2;
        r.error.clear();
      }
    }
  } catch (const std::exception& e) {
    r.verdict = ClaimVerdict::Refuted;
    r.achieved = Achieved::at_least(0);
    r.error = e.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

ClaimResult evaluate_claim(const Claim& c, unsigned long p, BackendKind backend, const EvalOptions& opt) {
  PrimeContexts ctx(p);
  return evaluate_claim(c, ctx, backend, opt);
}

BigRational claim_value(const Claim& c, unsigned long p, int item) {
  EvalContext<RationalBackend> ctx(p, RationalBackend{});
  return c.rational(ctx, item);
}

}  // namespace zcong
