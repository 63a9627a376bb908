#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "sepvar/report.hpp"

using namespace sepvar;

TEST_CASE("check ids are unique and sorted") {
  const auto ids = check_ids("all");
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  // cohomology also pulls in the character checks
  const auto coh = check_ids("cohomology");
  CHECK(std::find(coh.begin(), coh.end(), "characters.chi") != coh.end());
  CHECK(check_ids("brackets").size() < ids.size());
  CHECK(is_known_suite("curve"));
  CHECK_FALSE(is_known_suite("everything"));
}

TEST_CASE("partial runs are deterministic and thread independent") {
  SuiteConfig cfg;
  cfg.suite = "spectral";
  cfg.timestamp = false;
  const std::string a = render_json(run_suites(cfg));
  cfg.threads = 3;
  const std::string b = render_json(run_suites(cfg));
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  CHECK(j["schema"] == 1);
  CHECK_FALSE(j.contains("generated_at"));
  CHECK(j["ok"] == true);
}

TEST_CASE("timestamps only appear when asked for") {
  SuiteConfig cfg;
  cfg.suite = "brackets";
  const auto j = nlohmann::json::parse(render_json(run_suites(cfg)));
  CHECK(j.contains("generated_at"));
  CHECK(j["records"][0].contains("elapsed"));
  cfg.timestamp = false;
  const auto k = nlohmann::json::parse(render_json(run_suites(cfg)));
  CHECK(diff_reports(j, k).empty());
}

TEST_CASE("diff notices changed verdicts") {
  SuiteConfig cfg;
  cfg.suite = "brackets";
  cfg.timestamp = false;
  auto a = nlohmann::json::parse(render_json(run_suites(cfg)));
  auto b = a;
  b["records"][0]["status"] = "fail";
  CHECK(diff_reports(a, b).size() == 1);
}

TEST_CASE("unknown suite is rejected") {
  SuiteConfig cfg;
  cfg.suite = "nope";
  CHECK_THROWS_AS(run_suites(cfg), std::invalid_argument);
}

TEST_CASE("atomic write") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "sepvar_unit";
  fs::create_directories(dir);
  const fs::path p = dir / "r.json";
  write_atomically(p.string(), "{}\n");
  std::ifstream f(p);
  std::string s((std::istreambuf_iterator<char>(f)), {});
  CHECK(s == "{}\n");
  std::size_t leftovers = 0;
  for (const auto& e : fs::directory_iterator(dir)) leftovers += e.path() != p;
  CHECK(leftovers == 0);
  CHECK_THROWS_AS(write_atomically((dir / "missing" / "r.json").string(), "x"), std::runtime_error);
  fs::remove_all(dir);
}

TEST_CASE("worker cap from the environment") {
  ::setenv("SEPVAR_THREADS", "4", 1);
  CHECK(threads_from_environment() == 4);
  ::setenv("SEPVAR_THREADS", "zero", 1);
  CHECK(threads_from_environment() == 1);
  ::setenv("SEPVAR_THREADS", "-3", 1);
  CHECK(threads_from_environment() == 1);
  ::unsetenv("SEPVAR_THREADS");
  CHECK(threads_from_environment() == 1);
}
