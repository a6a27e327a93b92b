#include "zcong/verdict.hpp"

namespace zcong {

std::string Achieved::to_string() const {
  switch (kind) {
    case Kind::Exact:
      return std::to_string(value);
    case Kind::AtLeast:
      return ">=" + std::to_string(value);
    case Kind::Infinite:
      return "inf";
  }
  return {};
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Proven:
      return "Proven";
    case VerdictKind::Refuted:
      return "Refuted";
    case VerdictKind::Insufficient:
      return "Insufficient";
  }
  return {};
}

ValuationVerdict check_valuation_at_least(const BigRational& x, unsigned long p, int m) {
  if (x == 0) return {VerdictKind::Proven, Achieved::infinite()};
  int v = valuation(x, p);
  return {v >= m ? VerdictKind::Proven : VerdictKind::Refuted, Achieved::exact(v)};
}

ValuationVerdict check_valuation_at_least(const CappedPAdic& x, int m) {
  if (auto v = x.valuation()) return {*v >= m ? VerdictKind::Proven : VerdictKind::Refuted, Achieved::exact(*v)};
  int bound = x.absolute_precision();
  return {bound >= m ? VerdictKind::Proven : VerdictKind::Insufficient, Achieved::at_least(bound)};
}

}  // namespace zcong
