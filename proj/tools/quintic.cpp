// quintic: command-line front end.
//
//   quintic classify <n>
//   quintic report <n> [--format text|json] [--explain]
//   quintic scan <lo> <hi> [--jobs N]
//   quintic verify --fixtures <path> [--anomalies <path>] [--cas-cmd <cmd>] [--cas-timeout <s>]
//
// Exit status: 0 on success (including NoMatch), 1 on failed verification or internal error,
// 2 on bad input.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "quintic/report.hpp"
#include "quintic/scan.hpp"
#include "quintic/verify.hpp"

namespace {

using namespace quintic;

int cmd_classify(std::uint64_t n) {
  const auto c = classify_radicand(n);
  std::cout << n << ' ' << to_string(c.variant);
  if (c.p) std::cout << " p=" << *c.p;
  if (c.q) std::cout << " q=" << *c.q;
  if (c.e) std::cout << " e=" << *c.e;
  std::cout << '\n';
  return 0;
}

int cmd_report(std::uint64_t n, const std::string& format, bool explain) {
  const auto rep = run_report(n);
  if (format == "json") {
    std::cout << to_json(rep).dump(2) << '\n';
  } else {
    std::cout << render_text(rep, explain);
  }
  return 0;
}

int cmd_verify(const std::string& fixtures, std::string anomalies, const std::string& cas, double timeout_s) {
  if (anomalies.empty()) anomalies = (std::filesystem::path(fixtures).parent_path() / "anomalies.json").string();
  VerifyOptions opt;
  if (!cas.empty()) opt.cas_command = cas;
  opt.cas_timeout = std::chrono::milliseconds(static_cast<long long>(timeout_s * 1000));
  const auto sum = verify_fixtures(fixtures, anomalies, opt);
  for (const auto& o : sum.outcomes) {
    std::cout << o.entry.n << ' ' << to_string(o.status) << ' ' << to_string(o.variant);
    if (!o.detail.empty()) std::cout << "  " << o.detail;
    std::cout << '\n';
  }
  std::cout << "pass " << sum.pass << "  anomaly " << sum.anomaly << "  fail " << sum.fail << '\n';
  return sum.fail == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Capitulation data for Q(5th root of n, zeta_5) with a (5,5) class group"};
  app.require_subcommand(1);

  std::uint64_t n = 0, lo = 0, hi = 0;
  std::string format = "text", fixtures, anomalies, cas;
  bool explain = false;
  unsigned jobs = 1;
  double cas_timeout = 600;

  auto* classify = app.add_subcommand("classify", "Sort n into one of the radicand forms");
  classify->add_option("n", n)->required();

  auto* report = app.add_subcommand("report", "Full report for one radicand");
  report->add_option("n", n)->required();
  report->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  report->add_flag("--explain", explain, "Annotate each section (text format)");

  auto* scan = app.add_subcommand("scan", "Classify every 5th-power-free n in [lo, hi]");
  scan->add_option("lo", lo)->required();
  scan->add_option("hi", hi)->required();
  scan->add_option("--jobs", jobs)->check(CLI::Range(1u, 1024u));

  auto* verify = app.add_subcommand("verify", "Check a fixtures file");
  verify->add_option("--fixtures", fixtures)->required();
  verify->add_option("--anomalies", anomalies, "Defaults to anomalies.json next to the fixtures");
  verify->add_option("--cas-cmd", cas, "Adapter command, run via /bin/sh -c");
  verify->add_option("--cas-timeout", cas_timeout, "Seconds per adapter call")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; every usage error maps to the input-error code
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*classify) return cmd_classify(n);
    if (*report) return cmd_report(n, format, explain);
    if (*scan) {
      std::cout << format_scan(scan_range(lo, hi, jobs));
      return 0;
    }
    if (*verify) return cmd_verify(fixtures, anomalies, cas, cas_timeout);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const FixtureError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
