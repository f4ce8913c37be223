#include "cevian/cli.hpp"

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cevian/error.hpp"
#include "cevian/report.hpp"
#include "cevian/svg.hpp"

namespace cevian {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

bool write_text(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (path.empty() || path == "-") {
    out << text;
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) {
    err << "error: cannot write " << path << '\n';
    return false;
  }
  return true;
}

void print_result(const CheckResult& r, std::ostream& out) {
  switch (r.status) {
    case CheckStatus::Pass:
      out << "pass  " << r.id << '\n';
      break;
    case CheckStatus::Skipped:
      out << "skip  " << r.id << " (" << r.reason << ")\n";
      break;
    case CheckStatus::Fail:
      out << "FAIL  " << r.id << ": " << r.reason << '\n' << "      violated: " << r.witness.equality << '\n';
      for (const auto& [name, value] : r.witness.objects) out << "      " << name << " = " << value << '\n';
      break;
  }
}

std::optional<std::string> base_guard_violation(const CevianConfig& cfg) {
  for (const Guard g : {Guard::OnSide, Guard::OnAnticomplementarySide})
    if (cfg.flag(g)) return std::string(guard_name(g));
  return std::nullopt;
}

}  // namespace

int construct_command(const std::string& input, const std::string& output, const std::string& svg, std::ostream& out,
                      std::ostream& err) {
  try {
    const ConfigInput in = load_config(input);
    const CevianConfig cfg = build_config(in);
    if (const auto g = base_guard_violation(cfg)) {
      err << "error: P violates guard " << *g << '\n';
      return kBadInput;
    }
    if (!write_text(output, dump(config_report(in, cfg, {})), out, err)) return kBadInput;
    if (!svg.empty() && !write_text(svg, render_svg(cfg), out, err)) return kBadInput;
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
}

int check_command(const std::string& input, const std::string& theorems, std::uint64_t seed, const std::string& output,
                  std::ostream& out, std::ostream& err) {
  std::vector<CheckResult> results;
  try {
    const ConfigInput in = load_config(input);
    const CevianConfig cfg = build_config(in);
    const auto checks = select_checks(theorems);
    if (checks.empty()) {
      err << "error: no theorem matches \"" << theorems << "\"\n";
      return kBadInput;
    }
    for (const TheoremCheck* c : checks) results.push_back(run_check(*c, cfg, derive_seed(seed, 0, c->id), 20));
    if (!output.empty() && !write_text(output, dump(config_report(in, cfg, results)), out, err)) return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  int failed = 0;
  for (const CheckResult& r : results) {
    print_result(r, out);
    failed += r.status == CheckStatus::Fail;
  }
  out << results.size() << " checks, " << failed << " failed\n";
  return failed ? kCheckFailed : kOk;
}

int fuzz_command(std::uint64_t seed, std::uint64_t count, const std::string& theorems, std::int64_t bound,
                 const std::string& output, std::ostream& out, std::ostream& err) {
  if (count == 0 || count > kMaxFuzzCount) {
    err << "error: --count must be between 1 and " << kMaxFuzzCount << '\n';
    return kBadInput;
  }
  if (bound < 1) {
    err << "error: --bound must be positive\n";
    return kBadInput;
  }
  SuiteReport report;
  try {
    report = run_suite(seed, count, theorems, bound);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  if (!output.empty() && !write_text(output, dump(suite_json(report)), out, err)) return kBadInput;
  for (const ConfigRun& run : report.configs)
    for (const CheckResult& r : run.results)
      if (r.status == CheckStatus::Fail) {
        out << "config " << run.index << " P = " << run.p << '\n';
        print_result(r, out);
      }
  for (const auto& [id, t] : report.summary)
    out << id << ": " << t.pass << " pass, " << t.fail << " fail, " << t.skipped << " skipped\n";
  out << report.failures() << " failures over " << count << " configurations\n";
  return report.failures() ? kCheckFailed : kOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact rational cevian geometry: constructions, theorem checks, figures."};
  app.require_subcommand(1);

  std::string input, output, svg, theorems;
  std::uint64_t seed = 1, count = 100;
  std::int64_t bound = 20;

  auto* construct = app.add_subcommand("construct", "Derive every object of a configuration and write a report");
  construct->add_option("--input", input, "Configuration file")->required();
  construct->add_option("--output", output, "Report file (stdout when omitted)");
  construct->add_option("--svg", svg, "Also draw the configuration to this SVG file");

  auto* check = app.add_subcommand("check", "Run theorem checks on one configuration");
  check->add_option("--input", input, "Configuration file")->required();
  check->add_option("--theorems", theorems, "Comma-separated glob patterns of check ids");
  check->add_option("--seed", seed, "Seed for points sampled inside checks");
  check->add_option("--output", output, "Report file");

  auto* fuzz = app.add_subcommand("fuzz", "Run the checks on seeded random configurations");
  fuzz->add_option("--seed", seed, "Sampler seed");
  fuzz->add_option("--count", count, "Number of configurations");
  fuzz->add_option("--theorems", theorems, "Comma-separated glob patterns of check ids");
  fuzz->add_option("--bound", bound, "Coordinate bound N for sampled rationals");
  fuzz->add_option("--output", output, "Aggregate report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  if (*construct) return construct_command(input, output, svg, out, err);
  if (*check) return check_command(input, theorems, seed, output, out, err);
  return fuzz_command(seed, count, theorems, bound, output, out, err);
}

}  // namespace cevian
