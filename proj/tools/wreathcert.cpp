#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "wreathcert/errors.hpp"
#include "wreathcert/harness.hpp"
#include "wreathcert/jordan_table.hpp"
#include "wreathcert/selftest.hpp"

using namespace wreathcert;

namespace {

constexpr int kUsage = 2;

void write_out(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

int certify(const std::string& config_path, std::optional<std::uint64_t> seed, std::optional<std::uint64_t> cap,
            const std::string& out_path) {
  auto config = load_config(config_path);
  if (seed) config.seeds = {*seed};
  if (cap) config.cap = *cap;
  const auto result = run_experiment(config, std::filesystem::path(config_path).parent_path());
  std::cout << pretty_report(result.report);
  if (!out_path.empty()) write_out(out_path, result.report.dump(2) + "\n");
  return exit_code(result.verdict);
}

int report(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what(), e.byte);
  }
  std::cout << pretty_report(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certifies approximation properties of permutational wreath products."};
  app.require_subcommand(1);

  std::string config_path, out_path, report_path, table_path;
  std::optional<std::uint64_t> seed, cap;
  std::uint64_t selftest_seed = 0, jordan_seed = 0;
  std::uint32_t pmax = 5;
  std::size_t nmax = 3, pairs = 25;

  auto* cert = app.add_subcommand("certify", "Run the pipeline selected by a config");
  cert->add_option("--config", config_path, "Config file")->required()->check(CLI::ExistingFile);
  cert->add_option("--seed", seed, "Run only this seed");
  cert->add_option("--cap", cap, "Largest carrier or dimension materialized for cross-checks");
  cert->add_option("--out", out_path, "Write the JSON report here");

  auto* self = app.add_subcommand("selftest", "Run the invariant suites of every module");
  self->add_option("--seed", selftest_seed, "Seed for sampled checks");
  self->add_option("--table", table_path, "Also audit the length table in this file")->check(CLI::ExistingFile);
  self->add_option("--out", out_path, "Write the summary here");

  auto* jordan = app.add_subcommand("jordan-table", "Jordan block counts of tensor products of Jordan blocks");
  jordan->add_option("--pmax", pmax, "Largest prime (at most 7)");
  jordan->add_option("--nmax", nmax, "Largest block size (at most 4)");
  jordan->add_option("--pairs", pairs, "Sampled (alpha, beta) pairs per prime");
  jordan->add_option("--seed", jordan_seed, "Seed for the sampled pairs");
  jordan->add_option("--out", out_path, "Write the table here");

  auto* rep = app.add_subcommand("report", "Pretty-print a stored report");
  rep->add_option("path", report_path, "Report file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*cert) return certify(config_path, seed, cap, out_path);
    if (*self) {
      SelftestOptions opts;
      opts.seed = selftest_seed;
      if (!table_path.empty()) opts.table_fixture = table_path;
      const auto suites = selftest(opts);
      const auto text = format_selftest(suites);
      std::cout << text;
      if (!out_path.empty()) write_out(out_path, text);
      for (const auto& s : suites)
        if (!s.ok()) return 1;
      return 0;
    }
    if (*jordan) {
      const auto t = jordan_table(pmax, nmax, pairs, jordan_seed);
      const auto text = format_jordan_table(t);
      std::cout << text;
      if (!out_path.empty()) write_out(out_path, text);
      return t.all_min ? 0 : 1;
    }
    if (*rep) return report(report_path);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
