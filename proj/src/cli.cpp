#include "zcong/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>

#include "zcong/bernoulli.hpp"
#include "zcong/binomial_sums.hpp"
#include "zcong/errors.hpp"
#include "zcong/harmonic.hpp"
#include "zcong/identities.hpp"
#include "zcong/primes.hpp"
#include "zcong/report.hpp"
#include "zcong/sequences.hpp"
#include "zcong/sweep.hpp"

namespace zcong {

bool parse_prime_range(const std::string& text, unsigned long& lo, unsigned long& hi) {
  auto parse_ul = [](const std::string& s, unsigned long& v) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) return false;
    try {
      v = std::stoul(s);
    } catch (const std::exception&) {
      return false;
    }
    return true;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    if (!parse_ul(text, lo)) return false;
    hi = lo;
  } else if (!parse_ul(text.substr(0, dots), lo) || !parse_ul(text.substr(dots + 2), hi)) {
    return false;
  }
  if (lo < 2 || lo > hi) return false;
  if (lo == hi && !is_prime(lo)) return false;
  return true;
}

namespace {

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stoi(v);
  } catch (const std::exception&) {
    return fallback;
  }
}

struct VerifyArgs {
  std::string primes = "7..199";
  std::string claims = "all";
  std::string backend = "both";
  int guard = 10;
  int jobs = 0;
  std::string output;
  std::string format = "json";
  bool exclude_conjectural = false;
  bool fail_fast = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  SweepConfig cfg;
  if (!parse_prime_range(a.primes, cfg.lo, cfg.hi)) {
    err << "error: bad prime range '" << a.primes << "' (expected a..b with 2 <= a <= b, or a single prime)\n";
    return kExitUsage;
  }
  try {
    cfg.ids = resolve_claim_ids(a.claims, a.exclude_conjectural);
  } catch (const UnknownClaim& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (a.backend == "rational")
    cfg.backend = BackendSelection::Rational;
  else if (a.backend == "padic")
    cfg.backend = BackendSelection::Padic;
  else
    cfg.backend = BackendSelection::Both;
  cfg.options.guard = a.guard;
  cfg.jobs = a.jobs > 0 ? a.jobs : env_int("ZCONG_JOBS", omp_get_max_threads());
  cfg.fail_fast = a.fail_fast;

  auto results = sweep(cfg);
  auto disagreements = backend_disagreements(results);
  auto summary = summarize(results, disagreements.size());
  for (const auto& r : results)
    if (r.verdict == ClaimVerdict::Refuted || r.verdict == ClaimVerdict::Insufficient)
      err << to_string(r.verdict) << ": " << r.claim << " p=" << r.p << " backend=" << to_string(r.backend)
          << " achieved=" << r.achieved.to_string() << " required=" << r.required
          << (r.witness ? " witness=" + std::to_string(*r.witness) : "") << (r.error.empty() ? "" : " (" + r.error + ")")
          << '\n';
  for (const auto& d : disagreements) err << "backend disagreement: " << d.claim << " p=" << d.p << ": " << d.detail << '\n';

  const ReportFormat format = a.format == "csv" ? ReportFormat::Csv : ReportFormat::Json;
  std::string path = a.output;
  if (path.empty())
    if (const char* env = std::getenv("ZCONG_OUTPUT")) path = env;
  if (path.empty() || path == "-") {
    write_report(out, results, summary, format);
  } else {
    std::ofstream file(path);
    if (!file) {
      err << "error: cannot write " << path << '\n';
      return kExitUsage;
    }
    write_report(file, results, summary, format);
  }
  err << "records=" << summary.records << " proven=" << summary.proven << " refuted=" << summary.refuted
      << " insufficient=" << summary.insufficient << " disagreements=" << summary.disagreements << '\n';

  if (summary.refuted > 0 || summary.disagreements > 0) return kExitRefuted;
  if (summary.insufficient > 0) return kExitInsufficient;
  return kExitOk;
}

int cmd_identities(const std::string& set, int max_n, int jobs, std::ostream& out, std::ostream& err) {
  std::vector<const IdentityCase*> cases;
  std::stringstream ss(set);
  std::string token;
  try {
    while (std::getline(ss, token, ',')) {
      if (token == "all") {
        for (const auto& c : identity_registry()) cases.push_back(&c);
      } else if (!token.empty()) {
        cases.push_back(&identity_case(token));
      }
    }
  } catch (const UnknownIdentity& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (cases.empty()) {
    err << "error: no identities selected\n";
    return kExitUsage;
  }
  const int threads = jobs > 0 ? jobs : env_int("ZCONG_JOBS", omp_get_max_threads());
  bool all_ok = true;
  for (const auto* c : cases) {
    IdentityOutcome o;
    try {
      o = run_identity(*c, max_n, threads);
    } catch (const Error& e) {
      err << c->id << ": " << e.what() << '\n';
      all_ok = false;
      continue;
    }
    out << c->id << ' ' << (o.passed() ? "PASS" : "FAIL") << " points=" << o.checked << '\n';
    for (const auto& pt : o.failures) out << "  fails at " << pt.to_string() << '\n';
    all_ok = all_ok && o.passed();
  }
  return all_ok ? kExitOk : kExitRefuted;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of central binomial and harmonic-sum congruences"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check registered congruences over a prime range");
  verify->add_option("--primes", va.primes, "Inclusive prime range a..b")->capture_default_str();
  verify->add_option("--claims", va.claims, "Comma-separated claim ids, family aliases, or 'all'")
      ->capture_default_str();
  verify->add_option("--backend", va.backend, "rational | padic | both")
      ->check(CLI::IsMember({"rational", "padic", "both"}))
      ->capture_default_str();
  verify->add_option("--guard", va.guard, "Extra p-adic guard digits")->check(CLI::NonNegativeNumber);
  verify->add_option("--jobs", va.jobs, "Worker threads (default: ZCONG_JOBS or all cores)");
  verify->add_option("--output", va.output, "Report path (default: ZCONG_OUTPUT or stdout)");
  verify->add_option("--format", va.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  verify->add_flag("--exclude-conjectural", va.exclude_conjectural, "Skip conjectural claims");
  verify->add_flag("--fail-fast", va.fail_fast, "Stop at the first Refuted verdict");

  std::string id_set = "all";
  int id_max_n = 0;
  int id_jobs = 0;
  auto* ids = app.add_subcommand("identities", "Check the exact finite identities on their grids");
  ids->add_option("--set", id_set, "Comma-separated identity ids or 'all'")->capture_default_str();
  ids->add_option("--max-n", id_max_n, "Cap on the size parameter (default: documented grid)")
      ->check(CLI::NonNegativeNumber);
  ids->add_option("--jobs", id_jobs, "Worker threads");

  auto* table = app.add_subcommand("table", "Dump exact tables");
  table->require_subcommand(1);
  int bern_max = 0;
  auto* t_bern = table->add_subcommand("bernoulli", "m, B_m for 0 <= m <= max");
  t_bern->add_option("--max", bern_max)->required()->check(CLI::NonNegativeNumber);
  int mhs_n = 0;
  std::string mhs_index;
  auto* t_mhs = table->add_subcommand("mhs", "n, H_n(index) for 0 <= n <= N");
  t_mhs->add_option("--n", mhs_n)->required()->check(CLI::NonNegativeNumber);
  t_mhs->add_option("--index", mhs_index, "Comma-separated nonzero exponents")->required();
  int b_m = 0, b_k = 0;
  auto* t_b = table->add_subcommand("b", "b_{m,k}");
  t_b->add_option("--m", b_m)->required()->check(CLI::NonNegativeNumber);
  t_b->add_option("--k", b_k)->required()->check(CLI::NonNegativeNumber);
  int lucas_n = 0;
  std::string lucas_x = "3";
  auto* t_lucas = table->add_subcommand("lucas", "n, u_n(x), v_n(x) for 0 <= n <= N");
  t_lucas->add_option("--n", lucas_n)->required()->check(CLI::NonNegativeNumber);
  t_lucas->add_option("--x", lucas_x, "Rational parameter")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(va, out, err);
    if (*ids) return cmd_identities(id_set, id_max_n, id_jobs, out, err);
    if (*t_bern) {
      BernoulliCache::global().ensure(bern_max);
      for (int m = 0; m <= bern_max; ++m) out << m << ", " << to_string(bernoulli(m)) << '\n';
    } else if (*t_mhs) {
      auto table_values = mhs_prefix_table(mhs_n, MhsIndex::parse(mhs_index), RationalBackend{});
      for (int n = 0; n <= mhs_n; ++n) out << n << ", " << to_string(table_values[static_cast<std::size_t>(n)]) << '\n';
    } else if (*t_b) {
      out << to_string(b_tables(b_m, b_k).b[static_cast<std::size_t>(b_m)][static_cast<std::size_t>(b_k)]) << '\n';
    } else if (*t_lucas) {
      auto uv = lucas_uv(lucas_n, parse_rational(lucas_x));
      for (int n = 0; n <= lucas_n; ++n)
        out << n << ", " << to_string(uv.u[static_cast<std::size_t>(n)]) << ", "
            << to_string(uv.v[static_cast<std::size_t>(n)]) << '\n';
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace zcong
