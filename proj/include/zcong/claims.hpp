#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zcong/eval_context.hpp"
#include "zcong/verdict.hpp"

namespace zcong {

enum class ClaimStatus { Proven, Conjectural };
enum class BackendKind { Rational, Padic };

std::string to_string(ClaimStatus s);
std::string to_string(BackendKind b);

/// A congruence "expr(p) == 0 (mod p^required)" checked prime by prime.
///
/// Per-item claims (quantified over k, or a list of statements sharing one
/// modulus) evaluate expr(p, item) for every item in items(p).
struct Claim {
  using RationalExpr = std::function<BigRational(EvalContext<RationalBackend>&, int item)>;
  using PadicExpr = std::function<CappedPAdic(EvalContext<PadicBackend>&, int item)>;

  std::string id;
  std::string description;
  ClaimStatus status = ClaimStatus::Proven;
  unsigned long min_prime = 5;  // applicable iff p >= min_prime
  int required = 1;
  /// Largest negative p-power any intermediate quantity carries; sizes the
  /// p-adic working precision.
  int max_shift = 0;
  /// Inclusive item range for per-item claims; nullopt means a single item 0.
  std::function<std::pair<int, int>(unsigned long p)> items;
  std::string item_name = "k";
  RationalExpr rational;
  PadicExpr padic;

  bool applies(unsigned long p) const { return p >= min_prime; }
};

/// Builds both backend instantiations from one generic expression
/// `[](auto& ctx, int item) -> ctx_value_t<decltype(ctx)>`.
template <class Expr>
Claim make_claim(Claim meta, Expr expr) {
  meta.rational = [expr](EvalContext<RationalBackend>& ctx, int item) { return BigRational(expr(ctx, item)); };
  meta.padic = [expr](EvalContext<PadicBackend>& ctx, int item) { return CappedPAdic(expr(ctx, item)); };
  return meta;
}

/// Every registered claim, in a stable order.
const std::vector<Claim>& claim_registry();
/// Throws UnknownClaim.
const Claim& claim(const std::string& id);

/// Expands a comma-separated list of ids and family aliases ("all",
/// "C-MHS-A", "C-P2", ...) into registry ids, sorted. Throws UnknownClaim.
std::vector<std::string> resolve_claim_ids(const std::string& spec, bool exclude_conjectural = false);

/// C-T1 with its B_{p-5} constant 6/5 replaced, and C-T5 with the summand
/// numerator 21k-8 replaced by 21k+offset. Used by the sensitivity checks.
Claim mutant_t1(const BigRational& constant);
Claim mutant_t5(long offset);

struct EvalOptions {
  int guard = 10;
  int max_retries = 4;
  /// Evaluate even where the applicability predicate fails (exploratory).
  bool ignore_applicability = false;
};

enum class ClaimVerdict { Proven, Refuted, Insufficient, NotApplicable };
std::string to_string(ClaimVerdict v);

struct ClaimResult {
  std::string claim;
  unsigned long p = 0;
  BackendKind backend = BackendKind::Rational;
  ClaimVerdict verdict = ClaimVerdict::NotApplicable;
  /// Minimum achieved valuation over the items.
  Achieved achieved;
  int required = 0;
  ClaimStatus status = ClaimStatus::Proven;
  /// First failing item of a per-item claim.
  std::optional<int> witness;
  /// p-adic working precision of the final attempt (0 for rational).
  int digits = 0;
  double millis = 0;
  std::string error;  // message when an evaluation error became a verdict
};

/// Per-prime tables shared by all claims evaluated at that prime.
class PrimeContexts {
 public:
  explicit PrimeContexts(unsigned long p) : p_(p), rational_(p, RationalBackend{}) {}
  unsigned long p() const { return p_; }
  EvalContext<RationalBackend>& rational() { return rational_; }
  EvalContext<PadicBackend>& padic(int digits);

 private:
  unsigned long p_;
  EvalContext<RationalBackend> rational_;
  std::map<int, std::unique_ptr<EvalContext<PadicBackend>>> padic_;
};

/// Verdict for one claim at one prime. Evaluation errors become verdicts
/// (Insufficient for precision loss, Refuted otherwise). The p-adic backend
/// starts at m + max_shift + guard digits and doubles on Insufficient.
ClaimResult evaluate_claim(const Claim& c, unsigned long p, BackendKind backend, const EvalOptions& opt = {});
ClaimResult evaluate_claim(const Claim& c, PrimeContexts& ctx, BackendKind backend, const EvalOptions& opt = {});

/// Exact value of expr(p, item) with the rational backend.
BigRational claim_value(const Claim& c, unsigned long p, int item = 0);

}  // namespace zcong
