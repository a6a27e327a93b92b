#include "zcong/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <map>

#include "zcong/bernoulli.hpp"
#include "zcong/primes.hpp"

namespace zcong {

namespace {

std::vector<BackendKind> backends(BackendSelection s) {
  switch (s) {
    case BackendSelection::Rational: return {BackendKind::Rational};
    case BackendSelection::Padic: return {BackendKind::Padic};
    case BackendSelection::Both: return {BackendKind::Rational, BackendKind::Padic};
  }
  return {};
}

std::vector<const Claim*> selected(const SweepConfig& cfg) {
  std::vector<const Claim*> out;
  for (const auto& id : cfg.ids) out.push_back(&claim(id));
  return out;
}

// All claims at one prime, sharing the per-prime tables.
std::vector<ClaimResult> run_prime(const std::vector<const Claim*>& claims, unsigned long p, const SweepConfig& cfg,
                                   std::atomic<bool>& stop) {
  std::vector<ClaimResult> out;
  PrimeContexts ctx(p);
  for (const Claim* c : claims) {
    if (!c->applies(p) && !cfg.options.ignore_applicability) continue;
    for (BackendKind b : backends(cfg.backend)) {
      if (stop.load(std::memory_order_relaxed)) return out;
      out.push_back(evaluate_claim(*c, ctx, b, cfg.options));
      if (cfg.fail_fast && out.back().verdict == ClaimVerdict::Refuted) stop = true;
    }
  }
  return out;
}

void canonical_order(std::vector<ClaimResult>& results) {
  std::stable_sort(results.begin(), results.end(), [](const ClaimResult& a, const ClaimResult& b) {
    if (a.claim != b.claim) return a.claim < b.claim;
    if (a.p != b.p) return a.p < b.p;
    return a.backend < b.backend;
  });
}

}  // namespace

int bernoulli_demand(unsigned long hi) { return hi < 5 ? 2 : 3 * static_cast<int>(hi) - 5; }

std::vector<ClaimResult> sweep_serial(const SweepConfig& cfg) {
  auto claims = selected(cfg);
  std::atomic<bool> stop{false};
  std::vector<ClaimResult> out;
  for (unsigned long p : primes_in_range(cfg.lo, cfg.hi)) {
    auto part = run_prime(claims, p, cfg, stop);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    if (stop) break;
  }
  canonical_order(out);
  return out;
}

std::vector<ClaimResult> sweep_parallel(const SweepConfig& cfg) {
  auto claims = selected(cfg);
  auto primes = primes_in_range(cfg.lo, cfg.hi);
  if (primes.empty() || claims.empty()) return {};
  BernoulliCache::global().ensure(bernoulli_demand(primes.back()));
  std::atomic<bool> stop{false};
  std::vector<std::vector<ClaimResult>> parts(primes.size());
  // Largest primes first: they dominate the runtime.
  const long n = static_cast<long>(primes.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(cfg.jobs, 1))
  for (long i = n - 1; i >= 0; --i) {
    if (stop.load(std::memory_order_relaxed)) continue;
    parts[static_cast<std::size_t>(i)] = run_prime(claims, primes[static_cast<std::size_t>(i)], cfg, stop);
  }
  std::vector<ClaimResult> out;
  for (auto& part : parts) out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  canonical_order(out);
  return out;
}

std::vector<ClaimResult> sweep(const SweepConfig& cfg) {
  return cfg.jobs > 1 ? sweep_parallel(cfg) : sweep_serial(cfg);
}

std::vector<Disagreement> backend_disagreements(const std::vector<ClaimResult>& results) {
  std::map<std::pair<std::string, unsigned long>, std::pair<const ClaimResult*, const ClaimResult*>> pairs;
  for (const auto& r : results) {
    auto& slot = pairs[{r.claim, r.p}];
    (r.backend == BackendKind::Rational ? slot.first : slot.second) = &r;
  }
  std::vector<Disagreement> out;
  for (const auto& [key, slot] : pairs) {
    const auto* rat = slot.first;
    const auto* pad = slot.second;
    if (!rat || !pad) continue;
    const bool rat_ok = rat->verdict == ClaimVerdict::Proven;
    const bool pad_ok = pad->verdict == ClaimVerdict::Proven;
    std::string detail;
    if (rat_ok != pad_ok) {
      detail = "rational " + to_string(rat->verdict) + " vs padic " + to_string(pad->verdict);
    } else if (!rat->witness && !pad->witness) {
      // Single-item claims: the p-adic valuation must be the exact one, capped by precision.
      const Achieved& e = rat->achieved;
      const Achieved& a = pad->achieved;
      bool ok = true;
      if (a.kind == Achieved::Kind::Exact)
        ok = e.kind == Achieved::Kind::Exact && e.value == a.value;
      else if (a.kind == Achieved::Kind::AtLeast)
        ok = e.kind == Achieved::Kind::Infinite || e.value >= a.value;
      else
        ok = false;
      if (!ok) detail = "valuation rational " + e.to_string() + " vs padic " + a.to_string();
    }
    if (!detail.empty()) out.push_back({key.first, key.second, detail});
  }
  return out;
}

}  // namespace zcong
