#pragma once

#include <string>

#include "zcong/big_rational.hpp"
#include "zcong/capped_padic.hpp"

namespace zcong {

enum class VerdictKind { Proven, Refuted, Insufficient };

/// What is known about v_p(x): an exact value, a lower bound (the value is
/// indistinguishable from zero at its precision) or +infinity (exact zero).
struct Achieved {
  enum class Kind { Exact, AtLeast, Infinite };
  Kind kind = Kind::Exact;
  int value = 0;

  static Achieved exact(int v) { return {Kind::Exact, v}; }
  static Achieved at_least(int v) { return {Kind::AtLeast, v}; }
  static Achieved infinite() { return {Kind::Infinite, 0}; }

  /// "3", ">=12" or "inf".
  std::string to_string() const;
  bool operator==(const Achieved&) const = default;
};

struct ValuationVerdict {
  VerdictKind kind = VerdictKind::Insufficient;
  Achieved achieved;
  bool operator==(const ValuationVerdict&) const = default;
};

std::string to_string(VerdictKind kind);

/// Decides v_p(x) >= m. Exact rationals are always decidable.
ValuationVerdict check_valuation_at_least(const BigRational& x, unsigned long p, int m);
/// Proven / Refuted only when the precision of x settles the question.
ValuationVerdict check_valuation_at_least(const CappedPAdic& x, int m);

}  // namespace zcong
