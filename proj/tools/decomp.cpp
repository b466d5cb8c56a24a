#include "sopq/appendix.hpp"
#include "sopq/report.hpp"
#include "sopq/version.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kLargeDimensionLimit = 40;

struct Options {
  std::string check = "all";
  std::string emit = "markdown";
  std::string out_path;
  std::string golden_path;
  bool allow_large = false;
};

sopq::ReportOptions report_options(const std::string& check)
{
  sopq::ReportOptions options;
  if (check == "irreducible" || check == "all") options.certificates = true;
  if (check == "all") options.generation = true;
  return options;
}

std::string render(const sopq::DecompositionReport& report, const std::string& emit)
{
  if (emit == "json") return sopq::emit_json(report);
  if (emit == "latex") return sopq::emit_latex(report);
  return sopq::emit_markdown(report);
}

std::string extension(const std::string& emit)
{
  if (emit == "json") return ".json";
  if (emit == "latex") return ".tex";
  return ".md";
}

int usage_error(const std::string& message)
{
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

int run_single(int p, int q, const Options& opt)
{
  if (p < 0 || q < 0) return usage_error("signature entries must be non-negative");
  if (p + q < 2) return usage_error("d = p + q >= 2 is required");
  if (p + q > kLargeDimensionLimit && !opt.allow_large)
    return usage_error("d = p + q exceeds " + std::to_string(kLargeDimensionLimit) +
                       "; exact elimination beyond this size is expensive, pass "
                       "--allow-large to proceed");

  const sopq::Signature sig = sopq::make_signature(p, q);
  const sopq::DecompositionReport report = sopq::build_report(sig, report_options(opt.check));
  const std::string body = render(report, opt.emit);

  if (opt.out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) return usage_error("cannot open output path: " + opt.out_path);
    out << body;
  }

  int status = report.passed() ? 0 : kExitVerificationFailure;
  if (!report.passed()) {
    std::cerr << "verification failed (" << report.failures.size() << " failure(s)):\n";
    for (const std::string& f : report.failures) std::cerr << "  - " << f << "\n";
  }

  if (!opt.golden_path.empty()) {
    std::ifstream golden(opt.golden_path, std::ios::binary);
    if (!golden) return usage_error("cannot read reference tables: " + opt.golden_path);
    std::ostringstream text;
    text << golden.rdbuf();
    sopq::GoldenDiff diff;
    try {
      diff = sopq::diff_golden(report, text.str());
    } catch (const std::runtime_error& e) {
      return usage_error(e.what());
    }
    if (diff.passed) {
      std::cerr << "reference tables: match\n";
    } else {
      std::cerr << "reference tables: " << diff.mismatches.size() << " mismatch(es):\n";
      for (const std::string& m : diff.mismatches) std::cerr << "  - " << m << "\n";
      status = kExitVerificationFailure;
    }
  }
  return status;
}

int run_range(int pmax, int qmax, const Options& opt)
{
  if (pmax < 0 || qmax < 0) return usage_error("range bounds must be non-negative");
  if (!opt.golden_path.empty())
    return usage_error("--golden requires single-signature mode");
  if (opt.out_path.empty())
    return usage_error("--range requires --out <directory>");
  std::error_code ec;
  std::filesystem::create_directories(opt.out_path, ec);
  if (ec) return usage_error("cannot create output directory: " + opt.out_path);

  std::vector<std::pair<int, int>> jobs;
  for (int q = 0; q <= qmax; ++q)
    for (int p = q; p <= pmax; ++p) {
      if (p + q < 2) continue;
      if (p + q > kLargeDimensionLimit && !opt.allow_large) continue;
      jobs.emplace_back(p, q);
    }
  if (jobs.empty()) return usage_error("range contains no signature with 2 <= p + q");

  const sopq::ReportOptions options = report_options(opt.check);
  const std::size_t workers =
      std::max<std::size_t>(1, std::thread::hardware_concurrency());
  int status = 0;

  // Compute in parallel, chunk by chunk; write strictly in job order.
  for (std::size_t begin = 0; begin < jobs.size(); begin += workers) {
    const std::size_t end = std::min(jobs.size(), begin + workers);
    std::vector<std::future<sopq::DecompositionReport>> futures;
    for (std::size_t t = begin; t < end; ++t)
      futures.push_back(std::async(std::launch::async, [&, t] {
        return sopq::build_report(sopq::make_signature(jobs[t].first, jobs[t].second),
                                  options);
      }));
    for (std::size_t t = begin; t < end; ++t) {
      const sopq::DecompositionReport report = futures[t - begin].get();
      const std::string name = "report_" + std::to_string(jobs[t].first) + "_" +
                               std::to_string(jobs[t].second) + extension(opt.emit);
      const std::filesystem::path path = std::filesystem::path(opt.out_path) / name;
      std::ofstream out(path, std::ios::binary);
      if (!out) return usage_error("cannot open output path: " + path.string());
      out << render(report, opt.emit);
      std::cout << "so(" << jobs[t].first << "," << jobs[t].second << "): "
                << (report.passed() ? "pass" : "FAIL") << " -> " << path.string() << "\n";
      if (!report.passed()) {
        status = kExitVerificationFailure;
        for (const std::string& f : report.failures) std::cerr << "  - " << f << "\n";
      }
    }
  }
  return status;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Exact restricted-root and weight decomposition of sl_d under so(p,q), "
               "with machine-checkable irreducibility certificates"};
  app.set_version_flag("--version", sopq::kToolVersion);

  int p = -1, q = -1;
  std::vector<int> range;
  Options opt;
  app.add_option("--p", p, "number of +1 entries of the defining form");
  app.add_option("--q", q, "number of -1 entries of the defining form");
  app.add_option("--check", opt.check, "which verifications to run")
      ->check(CLI::IsMember({"roots", "weights", "irreducible", "all"}))
      ->capture_default_str();
  app.add_option("--emit", opt.emit, "output format")
      ->check(CLI::IsMember({"json", "markdown", "latex"}))
      ->capture_default_str();
  app.add_option("--out", opt.out_path,
                 "output file (single mode) or directory (range mode); stdout by default");
  app.add_option("--golden", opt.golden_path,
                 "reference-table JSON to compare against, entry by entry");
  app.add_option("--range", range, "verify all signatures with q <= qmax, q <= p <= pmax")
      ->expected(2);
  app.add_flag("--allow-large", opt.allow_large,
               "permit d = p + q > " + std::to_string(kLargeDimensionLimit));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!range.empty()) {
      if (p >= 0 || q >= 0)
        return usage_error("--range replaces --p/--q; give one or the other");
      return run_range(range[0], range[1], opt);
    }
    if (p < 0 && q < 0) return usage_error("either --p/--q or --range is required");
    return run_single(p, q, opt);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
}
