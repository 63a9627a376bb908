#ifndef SEPVAR_REPORT_HPP
#define SEPVAR_REPORT_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sepvar/curve.hpp"
#include "sepvar/qseries.hpp"

namespace sepvar {

inline constexpr int kReportSchema = 1;

enum class Status { pass, fail, skip };
std::string status_name(Status s);

struct CheckRecord {
  std::string id;
  std::string anchor;  // the statement being checked, in words
  Status status = Status::skip;
  nlohmann::json payload = nlohmann::json::object();
  double elapsed_seconds = 0;
};

struct SuiteConfig {
  std::string suite = "all";
  std::uint64_t seed = 42;
  int qseries_order = kDefaultQSeriesOrder;
  int puiseux_order = kDefaultPuiseuxOrder;
  int max_degree = 16;
  std::string format = "text";
  std::string out;
  bool timestamp = true;
  unsigned threads = 1;
};

/// brackets, spectral, quotient, sepvars, curve, characters, cohomology.
/// "cohomology" includes the character checks; "all" selects everything.
const std::vector<std::string>& suite_names();
bool is_known_suite(const std::string& name);

struct Report {
  SuiteConfig config;
  std::vector<CheckRecord> records;  // sorted by id
  std::string generated_at;          // empty when timestamps are off

  bool ok() const;
  const CheckRecord* find(const std::string& id) const;
};

/// Ids of the checks a suite selects, sorted.
std::vector<std::string> check_ids(const std::string& suite);

/// Runs the selected checks on up to config.threads workers. Exceptions
/// inside a check turn into a failing record.
Report run_suites(const SuiteConfig& config);

/// Schema-1 JSON. Timing fields (generated_at, per-record elapsed) are
/// omitted when config.timestamp is false, so equal configs give equal bytes.
std::string render_json(const Report& report);
std::string render_text(const Report& report);

/// Writes through a temporary file in the same directory and renames it.
/// Throws std::runtime_error when the path is not writable.
void write_atomically(const std::string& path, const std::string& content);

/// Differences between two JSON reports, ignoring timing fields.
std::vector<std::string> diff_reports(const nlohmann::json& a, const nlohmann::json& b);

/// Worker cap from SEPVAR_THREADS (at least 1; defaults to 1 when unset or invalid).
unsigned threads_from_environment();

}  // namespace sepvar

#endif  // SEPVAR_REPORT_HPP
