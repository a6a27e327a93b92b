#include "zcong/identities.hpp"

#include <omp.h>

#include <algorithm>

#include "zcong/binomial_sums.hpp"
#include "zcong/errors.hpp"
#include "zcong/harmonic.hpp"
#include "zcong/sequences.hpp"
#include "zcong/wz.hpp"

namespace zcong {

std::string IdentityPoint::to_string() const {
  std::string s = "n=" + std::to_string(n) + " m=" + std::to_string(m);
  s += t ? " t=" + zcong::to_string(*t) : " t=symbolic";
  return s;
}

const std::vector<BigRational>& lucas_t_grid() {
  static const std::vector<BigRational> grid = {1, -1, 2, 4, make_rational(1, 2), make_rational(-3, 7)};
  return grid;
}

const std::vector<BigRational>& pochhammer_a_grid() {
  static const std::vector<BigRational> grid = {0, make_rational(1, 2), make_rational(-1, 3), 5, make_rational(7, 2)};
  return grid;
}

namespace {

// ---- small helpers -------------------------------------------------------

int sign(int e) { return e % 2 == 0 ? 1 : -1; }

BigInt binom(long n, unsigned long k) {
  BigInt r;
  BigInt nz(n);
  mpz_bin_ui(r.get_mpz_t(), nz.get_mpz_t(), k);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigRational inv_central(int k) { return make_rational(BigInt(1), central_binomial(k)); }

/// Dense polynomial in t over Q.
struct Poly {
  std::vector<BigRational> c;

  static Poly constant(const BigRational& x) { return Poly{{x}}; }
  // a0 + a1 t
  static Poly linear(const BigRational& a0, const BigRational& a1) { return Poly{{a0, a1}}; }

  BigRational coeff(std::size_t i) const { return i < c.size() ? c[i] : BigRational(0); }

  friend Poly operator+(const Poly& x, const Poly& y) {
    Poly r;
    r.c.resize(std::max(x.c.size(), y.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = x.coeff(i) + y.coeff(i);
    return r;
  }
  friend Poly operator-(const Poly& x, const Poly& y) { return x + y * BigRational(-1); }
  friend Poly operator*(const Poly& x, const BigRational& s) {
    Poly r = x;
    for (auto& v : r.c) v *= s;
    return r;
  }
  friend Poly operator*(const Poly& x, const Poly& y) {
    Poly r;
    if (x.c.empty() || y.c.empty()) return r;
    r.c.assign(x.c.size() + y.c.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < x.c.size(); ++i)
      for (std::size_t j = 0; j < y.c.size(); ++j) r.c[i + j] += x.c[i] * y.c[j];
    return r;
  }
  BigRational eval(const BigRational& t) const {
    BigRational acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
  }
  bool same_as(const Poly& other) const {
    for (std::size_t i = 0; i < std::max(c.size(), other.c.size()); ++i)
      if (coeff(i) != other.coeff(i)) return false;
    return true;
  }
};

// v_0..v_n of the Lucas sequence with parameter x(t) = x0 + x1 t, as polynomials.
std::vector<Poly> lucas_v_poly(int n, const BigRational& x0, const BigRational& x1) {
  Poly x = Poly::linear(x0, x1);
  std::vector<Poly> v{Poly::constant(2), x};
  for (int i = 2; i <= n; ++i) v.push_back(x * v[static_cast<std::size_t>(i - 1)] - v[static_cast<std::size_t>(i - 2)]);
  v.resize(static_cast<std::size_t>(n) + 1);
  return v;
}

bool compare(const Poly& lhs, const Poly& rhs, const std::optional<BigRational>& t) {
  if (t) return lhs.eval(*t) == rhs.eval(*t);
  return lhs.same_as(rhs);
}

// sum_{k=k0}^{n} C(n,k) C(n+k-1,k) / C(2k,k) (-t)^k / k^d as a polynomial in t.
Poly lucas_binomial_poly(int n, int k0, int d) {
  Poly p;
  p.c.assign(static_cast<std::size_t>(n) + 1, BigRational(0));
  for (int k = k0; k <= n; ++k) {
    BigInt num = binom(n, static_cast<unsigned long>(k)) * binom(n + k - 1, static_cast<unsigned long>(k)) * sign(k);
    BigInt den = central_binomial(k);
    for (int i = 0; i < d; ++i) den *= k;
    p.c[static_cast<std::size_t>(k)] = make_rational(num, den);
  }
  return p;
}

std::vector<IdentityPoint> lucas_points(int n_lo, int n_hi, bool odd_only) {
  std::vector<IdentityPoint> pts;
  for (int n = n_lo; n <= n_hi; ++n) {
    if (odd_only && n % 2 == 0) continue;
    pts.push_back({n, 0, std::nullopt});
    for (const auto& t : lucas_t_grid()) pts.push_back({n, 0, t});
  }
  return pts;
}

std::vector<IdentityPoint> n_points(int lo, int hi) {
  std::vector<IdentityPoint> pts;
  for (int n = lo; n <= hi; ++n) pts.push_back({n, 0, std::nullopt});
  return pts;
}

std::vector<IdentityPoint> mn_points(int m_lo, int m_hi, int n_lo, int n_hi) {
  std::vector<IdentityPoint> pts;
  for (int m = m_lo; m <= m_hi; ++m)
    for (int n = n_lo; n <= n_hi; ++n) pts.push_back({n, m, std::nullopt});
  return pts;
}

// ---- (11), (12), (13), (14) ----------------------------------------------

bool eq11(const IdentityPoint& pt) {
  if (pt.n < 0) throw DomainViolation("I-EQ11 needs n >= 0");
  Poly lhs = lucas_binomial_poly(pt.n, 0, 0);
  Poly rhs = lucas_v_poly(pt.n, -2, 1)[static_cast<std::size_t>(pt.n)] * make_rational(sign(pt.n), 2);
  return compare(lhs, rhs, pt.t);
}

bool eq12(const IdentityPoint& pt) {
  if (pt.n < 1 || pt.n % 2 == 0) throw DomainViolation("I-EQ12 needs odd n");
  Poly lhs = lucas_binomial_poly(pt.n, 0, 0);
  Poly rhs = lucas_v_poly(pt.n, 2, -1)[static_cast<std::size_t>(pt.n)] * make_rational(1, 2);
  return compare(lhs, rhs, pt.t);
}

bool eq13(const IdentityPoint& pt) {
  const int n = pt.n, k = pt.m;
  if (k < 1 || k >= n) throw DomainViolation("I-EQ13 needs 1 <= k < n");
  BigRational lhs(binom(n, static_cast<unsigned long>(k)) * binom(n + k - 1, static_cast<unsigned long>(k)) * sign(k - 1));
  const long n2 = static_cast<long>(n) * n;
  BigRational rhs = make_rational(n2, static_cast<long>(k) * k);
  for (long j = 1; j < k; ++j) rhs *= 1 - make_rational(n2, j * j);
  return lhs == rhs;
}

bool eq14(const IdentityPoint& pt) {
  const int n = pt.n;
  if (n < 1) throw DomainViolation("I-EQ14 needs n >= 1");
  Poly lhs = lucas_binomial_poly(n, 1, 1);
  auto v = lucas_v_poly(n, 2, -1);
  Poly two = Poly::constant(2);
  Poly rhs = (v[static_cast<std::size_t>(n)] - two) * make_rational(1, 2L * n);
  for (int k = 1; k < n; ++k) rhs = rhs + (v[static_cast<std::size_t>(k)] - two) * make_rational(1, k);
  return compare(lhs, rhs, pt.t);
}

// ---- (26), Proposition-1 identity ------------------------------------------

bool eq26(const IdentityPoint& pt) {
  if (pt.n < 1) throw DomainViolation("I-EQ26 needs n >= 1");
  SumSpec spec;
  spec.d = 1;
  spec.slope = 3;
  spec.offset = -2;
  return weighted_sum(spec, pt.n) == 1 - inv_central(pt.n);
}

bool prop1(const IdentityPoint& pt) {
  const int m = pt.m, n = pt.n;
  if (m < 1 || n < 1) throw DomainViolation("I-P1 needs m, n >= 1");
  auto table = b_tables(m, n);
  const BigRational zero = 0;
  auto b = [&](int mm, int k) { return table.b_at(mm, k, zero); };
  BigRational lhs = 0, rhs = -b(m, n) * inv_central(n);
  for (int k = 1; k <= n; ++k) {
    BigRational ck = inv_central(k);
    lhs += ((3 * k - 2) * b(m, k - 1) + 2 * b(m - 1, k - 1)) * ck / k;
    rhs += (3 * k * b(m - 2, k) + 2 * b(m - 3, k)) * ck / (static_cast<long>(k) * k * k);
  }
  return lhs == rhs;
}

// ---- (31) -------------------------------------------------------------------

bool eq31(const IdentityPoint& pt) {
  const int N = pt.n;
  const BigRational a = pt.t.value_or(BigRational(0));
  if (N < 1) throw DomainViolation("I-EQ31 needs N >= 1");
  if (a.get_den() == 1 && a < 0) throw DomainViolation("I-EQ31 needs a not a negative integer");
  // prod_{j<=k} (1 + a/j)
  std::vector<BigRational> prod{1};
  for (int j = 1; j <= N; ++j) prod.push_back(prod.back() * (1 + a / j));
  BigRational lhs = 0, rhs = 0, tail = 0;
  for (int k = 1; k <= N; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    BigRational k2 = static_cast<long>(k) * k;
    lhs += sign(k - 1) * (1 + k / (k + a)) / (k2 * prod[uk]);
    rhs += (3 * k + 2 * a) * inv_central(k) / (k2 * k * prod[uk] * prod[uk]);
    BigRational fk1(factorial(static_cast<unsigned long>(k - 1)));
    tail += sign(N + k) * pochhammer(1 + a, N - k) * fk1 * fk1 / BigRational(factorial(static_cast<unsigned long>(N + k)));
  }
  rhs += tail / (prod[static_cast<std::size_t>(N)] * prod[static_cast<std::size_t>(N)]);
  return lhs == rhs;
}

// ---- (32), (33), (34) -----------------------------------------------------------

// (-1)^{N+k} (N-k)! (k-1)!^2 / (N+k)!
BigRational boundary_weight(int N, int k) {
  BigInt fk1 = factorial(static_cast<unsigned long>(k - 1));
  return make_rational(sign(N + k) * factorial(static_cast<unsigned long>(N - k)) * fk1 * fk1,
                       factorial(static_cast<unsigned long>(N + k)));
}

bool eq32(const IdentityPoint& pt) {
  const int m = pt.m, N = pt.n;
  if (m < 1 || N < 1) throw DomainViolation("I-EQ32 needs m, N >= 1");
  auto table = b_tables(m, N);
  auto ones = mhs_prefix_family(N, MhsIndex::repeated(1, m), RationalBackend{});  // ones[j][k] = H_k({1}^j)
  const BigRational zero = 0;
  auto b = [&](int mm, int k) { return table.b_at(mm, k, zero); };
  auto h = [&](int j, int k) -> const BigRational& { return ones[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]; };
  BigRational lhs = 0, rhs = 0;
  for (int k = 1; k <= N; ++k) {
    const long k3 = static_cast<long>(k) * k * k;
    lhs += (3 * k * b(m, k) + 2 * b(m - 1, k)) * inv_central(k) / k3;
    BigRational inner_a = 0, inner_b = 0;
    for (int j = 0; j <= m; ++j) inner_a += b(m - j, k) * h(j, k - 1);
    for (int j = 0; j <= m - 1; ++j) inner_b += b(m - 1 - j, k) * h(j, k - 1);
    rhs += make_rational(sign(k - 1), k3) * (2 * k * inner_a + inner_b);
    BigRational inner_c = 0;
    for (int j = 0; j <= m; ++j) inner_c += h(j, N - k) * b(m - j, N);
    rhs -= boundary_weight(N, k) * inner_c;
  }
  return lhs == rhs;
}

bool eq33(const IdentityPoint& pt) {
  const int N = pt.n;
  if (N < 1) throw DomainViolation("I-EQ33 needs N >= 1");
  auto table = b_tables(1, N);
  auto h1 = mhs_prefix_table(N, {1}, RationalBackend{});
  BigRational lhs = 0, rhs = 0;
  for (int k = 1; k <= N; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const long k2 = static_cast<long>(k) * k;
    lhs += (3 * k * table.b[1][uk] + 2) * inv_central(k) / (k2 * k);
    rhs += sign(k) * (2 * h1[uk - 1] / k2 + make_rational(3, k2 * k));
    rhs -= boundary_weight(N, k) * (table.b[1][static_cast<std::size_t>(N)] + h1[static_cast<std::size_t>(N - k)]);
  }
  return lhs == rhs;
}

bool eq34(const IdentityPoint& pt) {
  const int N = pt.n;
  if (N < 1) throw DomainViolation("I-EQ34 needs N >= 1");
  auto table = b_tables(2, N);
  auto ones = mhs_prefix_family(N, MhsIndex::repeated(1, 2), RationalBackend{});
  const auto& h1 = ones[1];
  const auto& h11 = ones[2];
  const auto uN = static_cast<std::size_t>(N);
  BigRational lhs = 0, rhs = 0;
  for (int k = 1; k <= N; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const long k2 = static_cast<long>(k) * k;
    lhs += (3 * k * table.b[2][uk] + 2 * table.b[1][uk]) * inv_central(k) / (k2 * k);
    BigRational inner = 2 * h1[uk] * h1[uk] - 2 * h11[uk] + h1[uk] / k + make_rational(1, k2);
    rhs += make_rational(sign(k - 1), k2) * inner;
    const auto j = static_cast<std::size_t>(N - k);
    rhs -= boundary_weight(N, k) * (h11[j] + table.b[1][uN] * h1[j] + table.b[2][uN]);
  }
  return lhs == rhs;
}

// ---- summation-formula specializations of the pairs ---------------------------

bool t1_identity(const IdentityPoint& pt) {
  const int N = pt.n;
  if (N < 1) throw DomainViolation("I-T1 needs N >= 1");
  auto h2 = mhs_prefix_table(N, {2}, RationalBackend{});
  BigRational lhs = 0, rhs = 0;
  for (int k = 1; k <= N; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const long k2 = static_cast<long>(k) * k;
    lhs += 4 * inv_central(k) / (k2 * k2);
    rhs += 3 * h2[uk - 1] * inv_central(k) / k2 - make_rational(2 * sign(k), k2 * k2) +
           boundary_weight(N, k) * h2[uk - 1];
  }
  return lhs == rhs;
}

bool t3_identity(const IdentityPoint& pt) {
  const int N = pt.n;
  if (N < 1) throw DomainViolation("I-T3 needs N >= 1");
  auto h2 = mhs_prefix_table(N, {2}, RationalBackend{});
  BigRational lhs = 0, rhs = 0;
  for (int k = 1; k <= N; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const long k3 = static_cast<long>(k) * k * k;
    lhs += 2 * sign(k - 1) * inv_central(k) / (k3 * k * k) -
           make_rational(5, 2) * sign(k - 1) * h2[uk - 1] * inv_central(k) / k3;
    // (-1)^k (N-k)! (k-1)!^2 / (k (N+k)!) = (-1)^N boundary_weight / k
    rhs += make_rational(1, k3 * k * k) + make_rational(sign(N), 2 * k) * boundary_weight(N, k) * h2[uk - 1];
  }
  return lhs == rhs;
}

bool t5_identity(const IdentityPoint& pt) {
  const int N = pt.n;
  if (N < 1) throw DomainViolation("I-T5 needs N >= 1");
  BigRational lhs = 0, rhs = 0;
  const BigInt fN = factorial(static_cast<unsigned long>(N));
  for (int k = 1; k <= N; ++k) {
    const auto uk = static_cast<unsigned long>(k);
    const long k3 = static_cast<long>(k) * k * k;
    lhs += make_rational(1, static_cast<long>(k) * k);
    BigInt c = central_binomial(k);
    rhs += make_rational(BigInt(21 * k - 8), c * c * c * k3);
    BigInt fk1 = factorial(uk - 1);
    BigInt fkN = factorial(uk + static_cast<unsigned long>(N));
    rhs -= make_rational(factorial(uk) * fk1 * fk1 * fk1 * fN * fN * (2 * N + 3 * k),
                         factorial(2 * uk) * fkN * fkN);
  }
  return lhs == rhs;
}

// ---- stuffle set ----------------------------------------------------------------

struct StuffleCase {
  MhsIndex u;
  MhsIndex v;
};

const std::vector<StuffleCase>& stuffle_cases() {
  static const std::vector<StuffleCase> cases = {
      {{1}, {1}},     {{1}, {2}},       {{2}, {2}},  {{1}, {3}},     {{1, 1}, {1}}, {{1, 2}, {3}},
      {{2, 1}, {1}},  {{1}, {-2}},      {{-1}, {-1}}, {{2, -1}, {3}}, {{1, 1}, {1, 1}},
  };
  return cases;
}

bool stuffle_identity(const IdentityPoint& pt) {
  const auto& cases = stuffle_cases();
  if (pt.n < 0) throw DomainViolation("I-STUFFLE needs n >= 0");
  if (pt.m == static_cast<int>(cases.size())) return splitting_rule_check(pt.n);
  if (pt.m < 0 || pt.m > static_cast<int>(cases.size())) throw DomainViolation("I-STUFFLE case out of range");
  const auto& c = cases[static_cast<std::size_t>(pt.m)];
  return stuffle_check(pt.n, c.u, c.v);
}

// ---- WZ relations as grid identities ----------------------------------------------

// m enumerates (pair, a): 0..2 the plain pairs, 3.. PAIR-P2 at each grid a.
std::pair<const WzPair*, BigRational> wz_selection(int m) {
  const auto& pairs = wz_pairs();
  if (m < 0 || m >= 3 + static_cast<int>(pochhammer_a_grid().size()))
    throw DomainViolation("WZ selection out of range");
  if (m < 3) return {&pairs[static_cast<std::size_t>(m)], BigRational(0)};
  return {&pairs[3], pochhammer_a_grid()[static_cast<std::size_t>(m - 3)]};
}

int wz_selection_count() { return 3 + static_cast<int>(pochhammer_a_grid().size()); }

bool wz_telescoping_row(const IdentityPoint& pt) {
  auto [pair, a] = wz_selection(pt.m);
  const int n = pt.n;
  if (n < 1) throw DomainViolation("I-WZ16 needs n >= 1");
  WzTables t(n + 1, a);
  for (int k = 0; k < n; ++k) {
    BigRational lhs = pair->eval_F(t, n + 1, k) - pair->eval_F(t, n, k);
    BigRational rhs = pair->eval_G(t, n, k + 1) - pair->eval_G(t, n, k);
    if (lhs != rhs) return false;
  }
  return true;
}

bool wz_summation(const IdentityPoint& pt) {
  auto [pair, a] = wz_selection(pt.m);
  return summation_formula_check(*pair, pt.n, a);
}

std::vector<IdentityPoint> wz_points(int lo, int hi) { return mn_points(0, wz_selection_count() - 1, lo, hi); }

// ---- registry ---------------------------------------------------------------------

std::vector<IdentityCase> build_registry() {
  return {
      {"I-EQ11", "sum_k C(n,k)C(n+k-1,k)/C(2k,k) (-t)^k = (-1)^n v_n(t-2)/2",
       "0 <= n <= 50; coefficient-wise in t and at t in {1,-1,2,4,1/2,-3/7}", 50,
       [](int max_n) { return lucas_points(0, std::min(50, max_n), false); }, eq11},
      {"I-EQ12", "odd n: sum_k C(n,k)C(n+k-1,k)/C(2k,k) (-t)^k = v_n(2-t)/2",
       "odd n <= 49; coefficient-wise in t and at the t grid", 49,
       [](int max_n) { return lucas_points(1, std::min(49, max_n), true); }, eq12},
      {"I-EQ13", "(-1)^{k-1} C(n,k) C(n+k-1,k) = n^2/k^2 prod_{m<k} (1 - n^2/m^2)", "1 <= k < n <= 60", 60,
       [](int max_n) {
         std::vector<IdentityPoint> pts;
         for (int n = 2; n <= std::min(60, max_n); ++n)
           for (int k = 1; k < n; ++k) pts.push_back({n, k, std::nullopt});
         return pts;
       },
       eq13},
      {"I-EQ14", "sum_k C(n,k)C(n+k-1,k)/C(2k,k) (-t)^k/k = (v_n(2-t)-2)/(2n) + sum_{k<n} (v_k(2-t)-2)/k",
       "1 <= n <= 40; coefficient-wise in t and at the t grid", 40,
       [](int max_n) { return lucas_points(1, std::min(40, max_n), false); }, eq14},
      {"I-EQ26", "sum_{k<=n} (3k-2)/(k C(2k,k)) = 1 - 1/C(2n,n)", "1 <= n <= 200", 200,
       [](int max_n) { return n_points(1, std::min(200, max_n)); }, eq26},
      {"I-P1", "b-table identity: sum ((3k-2) b_{m,k-1} + 2 b_{m-1,k-1})/(k C(2k,k)) = -b_{m,n}/C(2n,n) + ...",
       "1 <= m <= 6, 1 <= n <= 60", 60, [](int max_n) { return mn_points(1, 6, 1, std::min(60, max_n)); }, prop1},
      {"I-EQ31", "Pochhammer-pair summation identity in the parameter a",
       "1 <= N <= 40, a in {0,1/2,-1/3,5,7/2}", 40,
       [](int max_n) {
         std::vector<IdentityPoint> pts;
         for (int N = 1; N <= std::min(40, max_n); ++N)
           for (const auto& a : pochhammer_a_grid()) pts.push_back({N, 0, a});
         return pts;
       },
       eq31},
      {"I-EQ32", "coefficient of a^m in the Pochhammer identity (b-table form)", "1 <= m <= 4, 1 <= N <= 40", 40,
       [](int max_n) { return mn_points(1, 4, 1, std::min(40, max_n)); }, eq32},
      {"I-EQ33", "m = 1 case of I-EQ32 in harmonic-number form", "1 <= N <= 40", 40,
       [](int max_n) { return n_points(1, std::min(40, max_n)); }, eq33},
      {"I-EQ34", "m = 2 case of I-EQ32 in harmonic-number form", "1 <= N <= 40", 40,
       [](int max_n) { return n_points(1, std::min(40, max_n)); }, eq34},
      {"I-T1", "PAIR-T1 summation identity: 4 sum 1/(k^4 C(2k,k)) = 3 sum H_{k-1}(2)/(k^2 C(2k,k)) - ...",
       "1 <= N <= 40", 40, [](int max_n) { return n_points(1, std::min(40, max_n)); }, t1_identity},
      {"I-T3", "PAIR-T3 summation identity for the alternating zeta(5) sums", "1 <= N <= 40", 40,
       [](int max_n) { return n_points(1, std::min(40, max_n)); }, t3_identity},
      {"I-T5", "PAIR-T5 summation identity: H_N(2) = sum (21k-8)/(k^3 C(2k,k)^3) - ...", "1 <= N <= 40", 40,
       [](int max_n) { return n_points(1, std::min(40, max_n)); }, t5_identity},
      {"I-STUFFLE", "stuffle products of MHS and the H_k(1,1) splitting rule",
       "0 <= n <= 25 for 11 index pairs plus the splitting rule", 25,
       [](int max_n) { return mn_points(0, static_cast<int>(stuffle_cases().size()), 0, std::min(25, max_n)); },
       stuffle_identity},
      {"I-WZ16", "telescoping F(n+1,k)-F(n,k) = G(n,k+1)-G(n,k) for every pair, all k < n",
       "1 <= n <= 60; PAIR-P2 at a in {0,1/2,-1/3,5,7/2}", 60,
       [](int max_n) { return wz_points(1, std::min(60, max_n)); }, wz_telescoping_row},
      {"I-WZ18", "summation formula for every pair", "0 <= N <= 60; PAIR-P2 at the a grid", 60,
       [](int max_n) { return wz_points(0, std::min(60, max_n)); }, wz_summation},
  };
}

}  // namespace

const std::vector<IdentityCase>& identity_registry() {
  static const std::vector<IdentityCase> registry = build_registry();
  return registry;
}

const IdentityCase& identity_case(const std::string& id) {
  for (const auto& c : identity_registry())
    if (c.id == id) return c;
  throw UnknownIdentity("unknown identity: " + id);
}

bool identity_check(const std::string& id, const IdentityPoint& point) { return identity_case(id).check(point); }

IdentityOutcome run_identity_serial(const IdentityCase& c, int max_n) {
  auto pts = c.points(max_n > 0 ? max_n : c.default_max_n);
  IdentityOutcome out{c.id, pts.size(), {}};
  for (const auto& pt : pts)
    if (!c.check(pt)) out.failures.push_back(pt);
  return out;
}

IdentityOutcome run_identity(const IdentityCase& c, int max_n, int jobs) {
  if (jobs <= 1) return run_identity_serial(c, max_n);
  auto pts = c.points(max_n > 0 ? max_n : c.default_max_n);
  std::vector<char> ok(pts.size(), 1);
  const auto count = static_cast<long>(pts.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (long i = 0; i < count; ++i) ok[static_cast<std::size_t>(i)] = c.check(pts[static_cast<std::size_t>(i)]) ? 1 : 0;
  IdentityOutcome out{c.id, pts.size(), {}};
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (!ok[i]) out.failures.push_back(pts[i]);
  return out;
}

}  // namespace zcong
