#include "zcong/report.hpp"

#include <iomanip>
#include <json.hpp>
#include <sstream>

namespace zcong {

SweepSummary summarize(const std::vector<ClaimResult>& results, std::size_t disagreements) {
  SweepSummary s;
  s.records = results.size();
  s.disagreements = disagreements;
  for (const auto& r : results) {
    if (r.verdict == ClaimVerdict::Proven) ++s.proven;
    if (r.verdict == ClaimVerdict::Refuted) ++s.refuted;
    if (r.verdict == ClaimVerdict::Insufficient) ++s.insufficient;
  }
  return s;
}

namespace {

std::string millis_text(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << ms;
  return os.str();
}

std::string witness_text(const ClaimResult& r) { return r.witness ? std::to_string(*r.witness) : ""; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

void write_report(std::ostream& out, const std::vector<ClaimResult>& results, const SweepSummary& summary,
                  ReportFormat format) {
  if (format == ReportFormat::Json) {
    for (const auto& r : results) {
      nlohmann::ordered_json j;
      j["claim"] = r.claim;
      j["prime"] = r.p;
      j["status"] = to_string(r.verdict);
      j["achieved_valuation"] = r.achieved.to_string();
      j["required_valuation"] = r.required;
      j["backend"] = to_string(r.backend);
      j["status_tag"] = to_string(r.status);
      j["millis"] = millis_text(r.millis);
      j["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr);
      out << j.dump() << '\n';
    }
    nlohmann::ordered_json s;
    s["summary"] = true;
    s["records"] = summary.records;
    s["proven"] = summary.proven;
    s["refuted"] = summary.refuted;
    s["insufficient"] = summary.insufficient;
    s["backend_disagreements"] = summary.disagreements;
    out << s.dump() << '\n';
    return;
  }
  out << "claim,prime,status,achieved_valuation,required_valuation,backend,status_tag,millis,witness\n";
  for (const auto& r : results)
    out << csv_field(r.claim) << ',' << r.p << ',' << to_string(r.verdict) << ',' << r.achieved.to_string() << ','
        << r.required << ',' << to_string(r.backend) << ',' << to_string(r.status) << ',' << millis_text(r.millis)
        << ',' << witness_text(r) << '\n';
  out << "#summary,records=" << summary.records << ",proven=" << summary.proven << ",refuted=" << summary.refuted
      << ",insufficient=" << summary.insufficient << ",backend_disagreements=" << summary.disagreements << '\n';
}

}  // namespace zcong
