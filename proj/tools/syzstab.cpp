// syzstab: generate and certify monomial families with stable syzygy bundles.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "syz/constructions.hpp"
#include "syz/criterion.hpp"
#include "syz/errors.hpp"
#include "syz/family_io.hpp"
#include "syz/inequalities.hpp"
#include "syz/report.hpp"
#include "syz/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitNoFamily = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

struct GenerateArgs {
  int N = 0;
  int d = 0;
  long long n = 0;
  std::string output;
  bool json = false;
};

struct CheckArgs {
  std::string input;
  bool strict = false;
  bool semi = false;
  bool oracle = false;
  bool json = false;
  bool witnesses = false;
};

struct SweepArgs {
  syz::SweepOptions options;
  std::string report;
  bool json = false;
};

struct AuditArgs {
  std::string function;
  std::string N_range = "3..5";
  std::string d_range = "2..10";
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  bool json = false;
  bool traces = false;
};

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected 'a..b', got '" + text + "'");
  }
}

bool meets_level(syz::Verdict v, bool strict) {
  if (v == syz::Verdict::StableCertified) return true;
  return !strict && v == syz::Verdict::SemistableCertified;
}

int cmd_generate(const GenerateArgs& a) {
  auto built = syz::dispatch(a.N, a.d, a.n);
  const auto cert = syz::check_family(built.family);
  const auto route = built.route.describe();
  const auto cert_json = syz::certificate_json(cert, route);

  if (!a.output.empty()) {
    syz::save_family(a.output, built.family);
    std::ofstream(a.output + ".cert.json") << cert_json.dump(2) << '\n';
  }
  if (a.json) {
    auto out = cert_json;
    if (a.output.empty()) {
      syz::Json members = syz::Json::array();
      for (const auto& m : built.family) members.push_back(syz::to_json(m));
      out["family"] = std::move(members);
    }
    std::cout << out.dump(2) << '\n';
  } else {
    if (a.output.empty()) syz::write_family(std::cout, built.family);
    std::cout << syz::certificate_text(cert, route);
  }
  return cert.verdict == syz::expected_verdict(a.N, a.d, a.n) ? kExitOk : kExitFail;
}

int cmd_check(const CheckArgs& a) {
  const auto family = syz::load_family(a.input);
  const auto cert = syz::check_family(family);
  auto out = syz::certificate_json(cert, std::nullopt, a.witnesses);

  std::optional<syz::Verdict> exact;
  if (family.N() == 1) {
    const auto st = syz::splitting_type_p1(family);
    out["splitting_type"] = st.twists;
    exact = syz::is_semistable_p1(family);
    out["p1_verdict"] = std::string(syz::to_string(*exact));
  }

  bool oracle_ok = true;
  if (a.oracle) {
    const auto brute = syz::brute_force_check(family);
    oracle_ok = brute.verdict == cert.verdict && brute.min_margin() == cert.min_margin();
    out["oracle"] = oracle_ok ? "agrees" : "disagrees";
  }

  if (a.json) {
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << syz::certificate_text(cert, std::nullopt);
    if (exact) {
      std::cout << "p1:        " << syz::to_string(*exact) << " splitting " << out["splitting_type"].dump()
                << '\n';
    }
    if (a.oracle) std::cout << "oracle " << (oracle_ok ? "agrees" : "DISAGREES") << '\n';
  }
  if (!oracle_ok) return kExitFail;
  const auto verdict = exact && *exact == syz::Verdict::NotSemistable ? *exact : cert.verdict;
  return meets_level(verdict, a.strict) ? kExitOk : kExitFail;
}

int cmd_sweep(const SweepArgs& a) {
  const auto report = syz::run_sweep(a.options);
  const auto json = syz::sweep_report_json(report);
  if (!a.report.empty()) {
    std::ofstream out(a.report);
    if (!out) throw syz::Error("cannot write " + a.report);
    out << json.dump(2) << '\n';
  }
  if (a.json) {
    std::cout << json.dump(2) << '\n';
  } else {
    std::cout << syz::sweep_report_text(report);
  }
  return report.failures().empty() ? kExitOk : kExitFail;
}

int cmd_audit(const AuditArgs& a) {
  const auto function = syz::inequality_from_string(a.function);
  syz::SweepRanges ranges;
  std::tie(ranges.N_min, ranges.N_max) = parse_range(a.N_range);
  std::tie(ranges.d_min, ranges.d_max) = parse_range(a.d_range);
  ranges.samples = a.samples;
  ranges.seed = a.seed;
  const auto summary = syz::sweep(function, ranges, a.traces);
  if (a.json) {
    auto out = syz::sweep_summary_json(summary);
    if (a.traces) {
      syz::Json traces = syz::Json::array();
      for (const auto& t : summary.traces) {
        traces.push_back({{"arguments", t.arguments},
                          {"value", syz::to_decimal(t.value)},
                          {"sign", std::string(syz::to_string(t.sign))},
                          {"in_proof_range", t.in_proof_range}});
      }
      out["traces"] = std::move(traces);
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << syz::sweep_summary_text(summary);
  }
  return summary.violations == 0 ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable syzygy bundles of monomial families: generate, certify, sweep, audit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Construct and certify a family of n degree-d monomials");
  generate->add_option("-N", gen.N, "Projective dimension (N+1 variables)")->required();
  generate->add_option("-d", gen.d, "Degree")->required();
  generate->add_option("-n", gen.n, "Number of monomials")->required();
  generate->add_option("-o,--output", gen.output, "Family file; the certificate goes to <file>.cert.json");
  generate->add_flag("--json", gen.json, "Print the certificate as JSON");

  CheckArgs chk;
  auto* check = app.add_subcommand("check", "Certify a family file");
  check->add_option("input", chk.input, "Family file")->required();
  auto* strict = check->add_flag("--strict", chk.strict, "Require StableCertified");
  check->add_flag("--semi", chk.semi, "Accept SemistableCertified (default)")->excludes(strict);
  check->add_flag("--oracle", chk.oracle, "Cross-check with the brute-force subset oracle");
  check->add_flag("--json", chk.json, "Print the certificate as JSON");
  check->add_flag("--witnesses", chk.witnesses, "Include every witness in JSON output");

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "Generate and certify every admissible (N, d, n) in a grid");
  sweep->add_option("--Nmin", sw.options.N_min, "Smallest N")->capture_default_str();
  sweep->add_option("--Nmax", sw.options.N_max, "Largest N")->capture_default_str();
  sweep->add_option("--dmin", sw.options.d_min, "Smallest d")->capture_default_str();
  sweep->add_option("--dmax", sw.options.d_max, "Largest d")->capture_default_str();
  sweep->add_option("-j,--jobs", sw.options.jobs, "Worker threads")->capture_default_str();
  sweep->add_option("--report", sw.report, "Write the JSON report here");
  sweep->add_flag("--json", sw.json, "Print the report as JSON");

  AuditArgs au;
  auto* audit = app.add_subcommand("audit", "Sweep an auxiliary inequality (T, U, V, Q, P, brenner2)");
  audit->add_option("function", au.function, "Function name")->required();
  audit->add_option("--N", au.N_range, "N range a..b")->capture_default_str();
  audit->add_option("--d", au.d_range, "d range a..b")->capture_default_str();
  audit->add_option("--samples", au.samples, "Random samples (P)")->capture_default_str();
  audit->add_option("--seed", au.seed, "Random seed (P)")->capture_default_str();
  audit->add_flag("--json", au.json, "Print the summary as JSON");
  audit->add_flag("--traces", au.traces, "Include every evaluated point (JSON)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(gen);
    if (*check) return cmd_check(chk);
    if (*sweep) {
      if (sw.options.N_min < 1 || sw.options.N_max < sw.options.N_min || sw.options.d_min < 1 ||
          sw.options.d_max < sw.options.d_min) {
        std::cerr << "error: invalid sweep grid\n";
        return kExitUsage;
      }
      return cmd_sweep(sw);
    }
    if (*audit) return cmd_audit(au);
  } catch (const syz::NoFamilyExists& e) {
    std::cerr << "no family: " << e.what() << '\n';
    return kExitNoFamily;
  } catch (const syz::RoutingError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const syz::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const syz::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return *audit ? kExitUsage : kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitFail;
}
