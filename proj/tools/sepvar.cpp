// sepvar: run the verification suites and write text or JSON reports.
//
//   sepvar verify --suite all --seed 42 --format json --out report.json
//   sepvar cohomology --max-degree 16
//   sepvar report-diff a.json b.json

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sepvar/report.hpp"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

void add_run_flags(CLI::App* cmd, sepvar::SuiteConfig& cfg, bool with_suite) {
  if (with_suite) {
    cmd->add_option("--suite", cfg.suite, "brackets | spectral | quotient | sepvars | curve | characters | cohomology | all")
        ->check(CLI::IsMember(sepvar::suite_names()));
  }
  cmd->add_option("--seed", cfg.seed, "seed for random specializations and curves");
  cmd->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", cfg.out, "write the report here instead of stdout");
  cmd->add_option("--max-degree", cfg.max_degree, "highest degree for the top cohomology")->check(CLI::Range(0, 40));
  cmd->add_option("--puiseux-order", cfg.puiseux_order, "truncation order of the branch expansion")->check(CLI::Range(12, 400));
  cmd->add_option("--qseries-order", cfg.qseries_order, "truncation order of character series")->check(CLI::Range(9, 200));
  cmd->add_flag("--no-timestamp{false}", cfg.timestamp, "omit generated_at and timings");
}

int run(sepvar::SuiteConfig cfg) {
  cfg.threads = sepvar::threads_from_environment();
  const sepvar::Report rep = sepvar::run_suites(cfg);
  const std::string body = cfg.format == "json" ? sepvar::render_json(rep) : sepvar::render_text(rep);
  if (cfg.out.empty()) {
    std::cout << body << std::flush;
  } else {
    try {
      sepvar::write_atomically(cfg.out, body);
    } catch (const std::exception& e) {
      std::cerr << "sepvar: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  return rep.ok() ? 0 : kExitFailed;
}

nlohmann::json load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  return nlohmann::json::parse(f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks for the sl(3) trigonal model"};
  app.require_subcommand(1);

  sepvar::SuiteConfig verify_cfg, char_cfg, coh_cfg;
  char_cfg.suite = "characters";
  coh_cfg.suite = "cohomology";

  auto* verify = app.add_subcommand("verify", "run the selected suite");
  add_run_flags(verify, verify_cfg, true);
  auto* characters = app.add_subcommand("characters", "q-Euler characteristic and exterior power characters");
  add_run_flags(characters, char_cfg, false);
  auto* cohomology = app.add_subcommand("cohomology", "top cohomology, representative table, degree 8");
  add_run_flags(cohomology, coh_cfg, false);

  std::string left, right;
  auto* diff = app.add_subcommand("report-diff", "compare two JSON reports, ignoring timing fields");
  diff->add_option("a", left)->required();
  diff->add_option("b", right)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) return run(verify_cfg);
    if (*characters) return run(char_cfg);
    if (*cohomology) return run(coh_cfg);
    if (*diff) {
      const auto d = sepvar::diff_reports(load(left), load(right));
      for (const auto& line : d) std::cout << line << "\n";
      if (d.empty()) std::cout << "reports agree\n";
      return d.empty() ? 0 : kExitFailed;
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "sepvar: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "sepvar: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
