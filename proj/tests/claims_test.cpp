#include <gtest/gtest.h>

#include <set>

#include "zcong/claims.hpp"
#include "zcong/errors.hpp"
#include "zcong/primes.hpp"
#include "zcong/sweep.hpp"

using namespace zcong;

TEST(Registry, IdsUniqueAndWellFormed) {
  std::set<std::string> seen;
  for (const auto& c : claim_registry()) {
    EXPECT_TRUE(seen.insert(c.id).second) << c.id;
    EXPECT_GE(c.required, 1) << c.id;
    EXPECT_GE(c.min_prime, 3u) << c.id;
    EXPECT_TRUE(c.rational && c.padic) << c.id;
  }
  for (const char* id : {"C-TAU-Z3", "C-TAU-Z2", "C-T1", "C-T2A", "C-T2B", "C-COR2", "C-T3", "C-T4A", "C-T4B",
                         "C-COR-L", "C-T5", "C-L1", "C-L2", "C-L3A", "C-L3B", "C-P2-1", "C-P2-2", "C-P2-3", "C-L4",
                         "C-Q4", "C-EQ23", "C-DUAL", "C-EQ35", "C-5", "C-EQ20", "C-HPK", "C-SUN-Z4", "C-SUN-B3",
                         "C-CONJ1"})
    EXPECT_NO_THROW(claim(id)) << id;
  EXPECT_THROW(claim("C-NOPE"), UnknownClaim);
}

TEST(Registry, FamilyAliases) {
  auto a = resolve_claim_ids("C-MHS-A");
  EXPECT_EQ(a, (std::vector<std::string>{"C-MHS-A1", "C-MHS-A2", "C-MHS-A3", "C-MHS-A4"}));
  EXPECT_EQ(resolve_claim_ids("C-MHS-D").size(), 14u);  // 10 mod p pairs + 4 mod p^2 pairs
  EXPECT_EQ(resolve_claim_ids("C-MHS-E").size(), 7u);
  EXPECT_EQ(resolve_claim_ids("C-MHS-G").size(), 6u);
  EXPECT_EQ(resolve_claim_ids("C-P2,C-T1"), (std::vector<std::string>{"C-P2-1", "C-P2-2", "C-P2-3", "C-T1"}));
  auto all = resolve_claim_ids("all");
  auto proven = resolve_claim_ids("all", true);
  EXPECT_EQ(all.size(), claim_registry().size());
  EXPECT_EQ(all.size() - proven.size(), 3u);
  EXPECT_THROW(resolve_claim_ids("C-T1,C-BOGUS"), UnknownClaim);
  EXPECT_THROW(resolve_claim_ids("C-MHS"), UnknownClaim);
}

TEST(EvaluateClaim, Examples) {
  auto t1 = evaluate_claim(claim("C-T1"), 5, BackendKind::Rational);
  EXPECT_EQ(t1.verdict, ClaimVerdict::Proven);
  auto t5 = evaluate_claim(claim("C-T5"), 5, BackendKind::Rational);
  EXPECT_EQ(t5.verdict, ClaimVerdict::NotApplicable);
  auto z2 = evaluate_claim(claim("C-TAU-Z2"), 7, BackendKind::Rational);
  EXPECT_EQ(z2.verdict, ClaimVerdict::Proven);
  ASSERT_EQ(z2.achieved.kind, Achieved::Kind::Exact);
  EXPECT_GE(z2.achieved.value, 3);
  EXPECT_EQ(evaluate_claim(claim("C-T5"), 7, BackendKind::Padic).verdict, ClaimVerdict::Proven);
  EXPECT_EQ(evaluate_claim(claim("C-T3"), 5, BackendKind::Padic).verdict, ClaimVerdict::Proven);
}

// The printed "p > 3" for the first congruence of the pair fails at p = 5.
TEST(EvaluateClaim, T2AFailsAtFive) {
  const auto& c = claim("C-T2A");
  EXPECT_FALSE(c.applies(5));
  EXPECT_EQ(claim_value(c, 5), make_rational(143533, 290304));
  EvalOptions forced;
  forced.ignore_applicability = true;
  auto r = evaluate_claim(c, 5, BackendKind::Rational, forced);
  EXPECT_EQ(r.verdict, ClaimVerdict::Refuted);
  EXPECT_EQ(r.achieved, Achieved::exact(0));
}

// Exploratory: the Lucas corollary also holds at p = 3 and 5.
TEST(EvaluateClaim, LucasCorollaryAtSmallPrimes) {
  EvalOptions forced;
  forced.ignore_applicability = true;
  for (unsigned long p : {3UL, 5UL})
    EXPECT_EQ(evaluate_claim(claim("C-COR-L"), p, BackendKind::Rational, forced).verdict, ClaimVerdict::Proven) << p;
}

// The parity congruence for b_{m,p-1} breaks once m >= p-2.
TEST(EvaluateClaim, L4ItemRangeRestriction) {
  const auto& c = claim("C-L4");
  EXPECT_EQ(c.items(5), (std::pair<int, int>{1, 2}));
  EXPECT_EQ(c.items(7), (std::pair<int, int>{1, 4}));
  EXPECT_EQ(c.items(11), (std::pair<int, int>{1, 6}));
  auto b = b_tables(3, 4);
  EXPECT_EQ(valuation(b.b[3][4], 5), 1);  // odd m = 3 at p = 5 is only mod p
}

TEST(EvaluateClaim, PerItemWitness) {
  // A claim that fails only for k >= 3 must report witness 3.
  Claim c;
  c.id = "C-TEST";
  c.min_prime = 5;
  c.required = 1;
  c.items = [](unsigned long p) { return std::pair<int, int>{1, static_cast<int>(p) - 1}; };
  c = make_claim(c, [](auto& ctx, int k) -> ctx_value_t<decltype(ctx)> { return k < 3 ? ctx.pw(1) : ctx.i(1); });
  for (auto b : {BackendKind::Rational, BackendKind::Padic}) {
    auto r = evaluate_claim(c, 11, b);
    EXPECT_EQ(r.verdict, ClaimVerdict::Refuted);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(*r.witness, 3);
    EXPECT_EQ(r.achieved, Achieved::exact(0));
  }
}

TEST(EvaluateClaim, PrecisionRetryAndInsufficient) {
  // An exact zero divided by p^5 with max_shift left at 0: the first budget
  // of 40 digits ends at O(p^35), the doubled one settles it.
  Claim c;
  c.id = "C-ZERO";
  c.min_prime = 3;
  c.required = 40;
  c = make_claim(c, [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> { return (ctx.i(1) - ctx.i(1)) * ctx.pw(-5); });
  EvalOptions opt;
  opt.guard = 0;
  opt.max_retries = 0;
  auto r = evaluate_claim(c, 7, BackendKind::Padic, opt);
  EXPECT_EQ(r.verdict, ClaimVerdict::Insufficient);
  opt.max_retries = 4;
  r = evaluate_claim(c, 7, BackendKind::Padic, opt);
  EXPECT_EQ(r.verdict, ClaimVerdict::Proven);
  EXPECT_EQ(r.digits, 80);
  EXPECT_EQ(r.achieved.kind, Achieved::Kind::AtLeast);
  EXPECT_EQ(evaluate_claim(c, 7, BackendKind::Rational).achieved, Achieved::infinite());
}

TEST(EvaluateClaim, ErrorsBecomeVerdicts) {
  Claim c;
  c.id = "C-THROWS";
  c.min_prime = 3;
  c = make_claim(c, [](auto& ctx, int) -> ctx_value_t<decltype(ctx)> {
    return ctx.q(BigRational(bernoulli_mod(6, 7, 1)));  // 7 divides the denominator of B_6
  });
  auto r = evaluate_claim(c, 7, BackendKind::Rational);
  EXPECT_EQ(r.verdict, ClaimVerdict::Refuted);
  EXPECT_FALSE(r.error.empty());
}

TEST(Sensitivity, MutatedConstantsAreRefuted) {
  Claim t1 = mutant_t1(make_rational(7, 5));
  Claim t5 = mutant_t5(-7);
  int refuted_t1 = 0, refuted_t5 = 0, n1 = 0, n5 = 0;
  for (unsigned long p : primes_in_range(5, 60)) {
    if (t1.applies(p) && n1 < 10) {
      ++n1;
      refuted_t1 += evaluate_claim(t1, p, BackendKind::Rational).verdict == ClaimVerdict::Refuted;
    }
    if (t5.applies(p) && n5 < 10) {
      ++n5;
      refuted_t5 += evaluate_claim(t5, p, BackendKind::Rational).verdict == ClaimVerdict::Refuted;
    }
  }
  EXPECT_EQ(n1, 10);
  EXPECT_EQ(n5, 10);
  EXPECT_GE(refuted_t1, 9);
  EXPECT_GE(refuted_t5, 9);
}

TEST(Sweep, OrderingAndEmptyRange) {
  SweepConfig cfg;
  cfg.ids = {"C-T5", "C-T1", "C-L4"};
  cfg.lo = 5;
  cfg.hi = 31;
  cfg.backend = BackendSelection::Both;
  auto serial = sweep_serial(cfg);
  cfg.jobs = 4;
  auto parallel = sweep_parallel(cfg);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].claim, parallel[i].claim);
    EXPECT_EQ(serial[i].p, parallel[i].p);
    EXPECT_EQ(serial[i].backend, parallel[i].backend);
    EXPECT_EQ(serial[i].verdict, parallel[i].verdict);
    EXPECT_EQ(serial[i].achieved, parallel[i].achieved);
    if (i > 0) {
      const auto& a = serial[i - 1];
      const auto& b = serial[i];
      EXPECT_TRUE(a.claim < b.claim || (a.claim == b.claim && (a.p < b.p || (a.p == b.p && a.backend < b.backend))));
    }
  }
  // C-T5 is not applicable at 5: no record for it.
  for (const auto& r : serial) EXPECT_FALSE(r.claim == "C-T5" && r.p == 5);
  EXPECT_TRUE(backend_disagreements(serial).empty());
  cfg.lo = 24;
  cfg.hi = 28;
  EXPECT_TRUE(sweep(cfg).empty());
}

TEST(Sweep, L4PadicTo311) {
  SweepConfig cfg;
  cfg.ids = {"C-L4"};
  cfg.lo = 5;
  cfg.hi = 311;
  cfg.backend = BackendSelection::Padic;
  cfg.jobs = 2;
  auto results = sweep(cfg);
  EXPECT_EQ(results.size(), primes_in_range(5, 311).size());
  for (const auto& r : results) EXPECT_EQ(r.verdict, ClaimVerdict::Proven) << r.p;
}

TEST(Sweep, FailFastStopsEarly) {
  SweepConfig cfg;
  cfg.ids = {"C-T2A"};
  cfg.lo = 5;
  cfg.hi = 97;
  cfg.backend = BackendSelection::Rational;
  cfg.options.ignore_applicability = true;
  cfg.fail_fast = true;
  auto results = sweep_serial(cfg);
  ASSERT_FALSE(results.empty());
  EXPECT_EQ(results.back().verdict, ClaimVerdict::Refuted);
  EXPECT_EQ(results.size(), 1u);  // p = 5 already refutes it
}
