#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "zcong/claims.hpp"
#include "zcong/sweep.hpp"

namespace zcong {

enum class ReportFormat { Json, Csv };

struct SweepSummary {
  std::size_t records = 0;
  std::size_t proven = 0;
  std::size_t refuted = 0;
  std::size_t insufficient = 0;
  std::size_t disagreements = 0;
};

SweepSummary summarize(const std::vector<ClaimResult>& results, std::size_t disagreements);

/// JSON Lines: one record per result, then one summary record.
/// CSV: a header, one row per result, then a "#summary" row.
/// Every record carries claim, prime, status, achieved_valuation,
/// required_valuation, backend, status_tag, millis (plus witness).
void write_report(std::ostream& out, const std::vector<ClaimResult>& results, const SweepSummary& summary,
                  ReportFormat format);

}  // namespace zcong
