#pragma once

#include <string>
#include <vector>

#include "zcong/claims.hpp"

namespace zcong {

enum class BackendSelection { Rational, Padic, Both };

struct SweepConfig {
  std::vector<std::string> ids;
  unsigned long lo = 7;
  unsigned long hi = 199;
  BackendSelection backend = BackendSelection::Both;
  EvalOptions options;
  int jobs = 1;
  /// Stop scheduling work after the first Refuted verdict.
  bool fail_fast = false;
};

/// Results for every (claim, applicable prime, backend), ordered by
/// (claim id, p, backend) whatever the degree of parallelism.
std::vector<ClaimResult> sweep_serial(const SweepConfig& cfg);
/// OpenMP kernel: one task per prime with its own tables. Same output as
/// sweep_serial (modulo timing fields).
std::vector<ClaimResult> sweep_parallel(const SweepConfig& cfg);
/// Dispatches on cfg.jobs.
std::vector<ClaimResult> sweep(const SweepConfig& cfg);

/// Largest Bernoulli index the claims need at primes <= hi; filling the
/// cache up front keeps the parallel sweep from serializing on it.
int bernoulli_demand(unsigned long hi);

/// (claim, p) pairs where the rational and p-adic records disagree: the
/// exact valuation v and the p-adic verdict must satisfy v >= m iff Proven,
/// and the p-adic achieved valuation must be min(v, precision).
struct Disagreement {
  std::string claim;
  unsigned long p = 0;
  std::string detail;
};
std::vector<Disagreement> backend_disagreements(const std::vector<ClaimResult>& results);

}  // namespace zcong
