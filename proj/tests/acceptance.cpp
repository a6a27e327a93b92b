// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "zcong/binomial_sums.hpp"
#include "zcong/claims.hpp"
#include "zcong/harmonic.hpp"
#include "zcong/identities.hpp"
#include "zcong/primes.hpp"
#include "zcong/sequences.hpp"
#include "zcong/sweep.hpp"
#include "zcong/wz.hpp"

using namespace zcong;

namespace {

int failures = 0;

void report(int n, const char* what, bool ok, const std::string& detail, double secs) {
  std::printf("%s criterion %d: %s (%s) [%.1fs]\n", ok ? "PASS" : "FAIL", n, what, detail.c_str(), secs);
  std::fflush(stdout);
  if (!ok) ++failures;
}

template <class F>
void criterion(int n, const char* what, F body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(n, what, ok, detail, secs);
}

// Counts non-Proven verdicts and names the first one.
bool all_proven(const std::vector<ClaimResult>& results, std::string& detail) {
  std::size_t bad = 0;
  std::string first;
  for (const auto& r : results) {
    if (r.verdict == ClaimVerdict::Proven) continue;
    if (bad++ == 0) first = r.claim + " at p=" + std::to_string(r.p) + " " + to_string(r.verdict);
  }
  std::ostringstream os;
  os << results.size() << " records";
  if (bad) os << ", " << bad << " not proven, first " << first;
  detail = os.str();
  return bad == 0 && !results.empty();
}

BigRational brute_force_mhs(int n, const std::vector<int>& a) {
  BigRational total = 0;
  std::function<void(std::size_t, int, BigRational)> rec = [&](std::size_t depth, int lo, BigRational acc) {
    if (depth == a.size()) {
      total += acc;
      return;
    }
    for (int k = lo; k <= n; ++k) {
      BigInt den = 1;
      for (int j = 0; j < std::abs(a[depth]); ++j) den *= k;
      const long sign = (a[depth] < 0 && k % 2 == 1) ? -1 : 1;
      rec(depth + 1, k + 1, acc * make_rational(BigInt(sign), den));
    }
  };
  rec(0, 1, BigRational(1));
  return total;
}

using Series = std::vector<BigRational>;

Series mul(const Series& x, const Series& y, int deg) {
  Series r(static_cast<std::size_t>(deg) + 1, BigRational(0));
  for (int i = 0; i <= deg; ++i)
    for (int j = 0; i + j <= deg; ++j)
      r[static_cast<std::size_t>(i + j)] += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
  return r;
}

int refuted_on_first_ten(const Claim& c, int& seen) {
  int refuted = 0;
  seen = 0;
  for (unsigned long p : primes_in_range(2, 200)) {
    if (!c.applies(p)) continue;
    if (seen++ == 10) break;
    refuted += evaluate_claim(c, p, BackendKind::Rational).verdict == ClaimVerdict::Refuted;
  }
  seen = std::min(seen, 10);
  return refuted;
}

}  // namespace

int main() {
  const int jobs = omp_get_max_threads();

  criterion(1, "rational backend, proven claims, p <= 199", [](std::string& d) {
    SweepConfig cfg;
    cfg.ids = resolve_claim_ids("all", true);
    cfg.lo = 2;
    cfg.hi = 199;
    cfg.backend = BackendSelection::Rational;
    return all_proven(sweep_serial(cfg), d);
  });

  criterion(2, "p-adic backend, all claims incl. conjectural, p <= 1009", [jobs](std::string& d) {
    SweepConfig cfg;
    cfg.ids = resolve_claim_ids("all");
    cfg.lo = 2;
    cfg.hi = 1009;
    cfg.backend = BackendSelection::Padic;
    cfg.jobs = jobs;
    return all_proven(sweep_parallel(cfg), d);
  });

  criterion(3, "backend agreement, p <= 101", [jobs](std::string& d) {
    SweepConfig cfg;
    cfg.ids = resolve_claim_ids("all");
    cfg.lo = 2;
    cfg.hi = 101;
    cfg.backend = BackendSelection::Both;
    cfg.jobs = jobs;
    auto results = sweep(cfg);
    auto dis = backend_disagreements(results);
    d = std::to_string(results.size() / 2) + " (claim, p) pairs";
    if (!dis.empty()) d += ", first disagreement " + dis[0].claim + " p=" + std::to_string(dis[0].p) + ": " + dis[0].detail;
    return dis.empty() && !results.empty();
  });

  criterion(4, "WZ telescoping n <= 60 and summation N <= 60", [](std::string& d) {
    int checks = 0;
    bool ok = true;
    for (const auto& pair : wz_pairs()) {
      std::vector<BigRational> as = {BigRational(0)};
      if (pair.parametrized) as = pochhammer_a_grid();
      for (const auto& a : as) {
        bool tel = telescoping_check(pair, 60, a);
        bool sum = true;
        for (int N = 0; N <= 60 && sum; ++N) sum = summation_formula_check(pair, N, a);
        checks += 2;
        if (!tel || !sum) {
          ok = false;
          d += pair.id + " a=" + a.get_str() + (tel ? " summation" : " telescoping") + " failed; ";
        }
      }
    }
    if (ok) d = std::to_string(checks) + " (pair, a) checks";
    return ok;
  });

  criterion(5, "identity suite on documented grids", [jobs](std::string& d) {
    std::size_t points = 0;
    std::string bad;
    for (const auto& c : identity_registry()) {
      auto out = run_identity(c, 0, jobs);
      points += out.checked;
      if (!out.passed()) bad += c.id + " ";
    }
    d = std::to_string(identity_registry().size()) + " identities, " + std::to_string(points) + " points";
    if (!bad.empty()) d += ", failing: " + bad;
    return bad.empty();
  });

  criterion(6, "C-T1 and C-T3 at p=5, Lucas v_p(1) = 1 for 5 <= p <= 199", [](std::string& d) {
    bool t1 = evaluate_claim(claim("C-T1"), 5, BackendKind::Rational).verdict == ClaimVerdict::Proven;
    bool t3 = evaluate_claim(claim("C-T3"), 5, BackendKind::Rational).verdict == ClaimVerdict::Proven;
    auto uv = lucas_uv(199, BigRational(1));
    int primes = 0;
    bool lucas_ok = true;
    for (unsigned long p : primes_in_range(5, 199)) {
      ++primes;
      lucas_ok = lucas_ok && uv.v[p] == 1;
    }
    d = std::string("C-T1 ") + (t1 ? "proven" : "not proven") + ", C-T3 " + (t3 ? "proven" : "not proven") + ", " +
        std::to_string(primes) + " primes " + (lucas_ok ? "ok" : "mismatch");
    return t1 && t3 && lucas_ok;
  });

  criterion(7, "MHS and b-table oracles", [](std::string& d) {
    std::size_t compared = 0;
    bool ok = true;
    std::function<void(std::vector<int>&, int)> each = [&](std::vector<int>& a, int depth) {
      if (static_cast<int>(a.size()) == depth) {
        auto table = mhs_prefix_table(12, MhsIndex(a), RationalBackend{});
        for (int n = 0; n <= 12; ++n, ++compared)
          if (table[static_cast<std::size_t>(n)] != brute_force_mhs(n, a)) ok = false;
        return;
      }
      for (int x = -3; x <= 3; ++x) {
        if (x == 0) continue;
        a.push_back(x);
        each(a, depth);
        a.pop_back();
      }
    };
    for (int depth = 1; depth <= 3; ++depth) {
      std::vector<int> a;
      each(a, depth);
    }
    const int M = 6, K = 30;
    auto t = b_tables(M, K);
    for (int k = 0; k <= K; ++k) {
      Series prod(M + 1, BigRational(0));
      prod[0] = 1;
      for (int j = 1; j <= k; ++j) {
        Series factor(M + 1, BigRational(0));
        factor[0] = 1;
        factor[1] = make_rational(1, j);
        prod = mul(prod, mul(factor, factor, M), M);
      }
      Series b(M + 1);
      for (int m = 0; m <= M; ++m) b[static_cast<std::size_t>(m)] = t.b[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
      Series one = mul(b, prod, M);
      for (int m = 0; m <= M; ++m, ++compared)
        if (one[static_cast<std::size_t>(m)] != (m == 0 ? 1 : 0)) ok = false;
    }
    d = std::to_string(compared) + " values compared";
    return ok;
  });

  criterion(8, "mutated constants refuted on >= 9 of first 10 primes", [](std::string& d) {
    bool ok = true;
    std::ostringstream os;
    auto check = [&](const Claim& c, const std::string& name) {
      int seen = 0;
      int refuted = refuted_on_first_ten(c, seen);
      os << name << " " << refuted << "/" << seen << "; ";
      ok = ok && seen == 10 && refuted >= 9;
    };
    check(mutant_t1(make_rational(7, 5)), "6/5->7/5");
    check(mutant_t1(BigRational(1)), "6/5->5/5");
    check(mutant_t5(-7), "21k-8->21k-7");
    check(mutant_t5(-9), "21k-8->21k-9");
    d = os.str();
    return ok;
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
