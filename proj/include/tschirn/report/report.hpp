#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "tschirn/numerology/numerology.hpp"
#include "tschirn/qpoly/rational.hpp"

namespace tschirn::report {

using qpoly::Rat;
using Json = nlohmann::json;

struct Scenario {
  std::string name;
  numerology::Polarization polarization = numerology::Polarization::General;
  Rat s, t;
  std::optional<std::int64_t> nu;  // reducible pencil members; special only
  std::vector<std::string> tasks;
  std::filesystem::path base_dir;  // for relative ledger paths
};

// Known task names; "ledger:<file>" is also accepted.
const std::vector<std::string>& known_tasks();

// TOML with exactly the keys name, polarization, s, t, nu, tasks. s and t are
// rationals written as strings ("p/q") or integers. Throws ParseError for
// malformed or invalid input.
Scenario parse_scenario(std::string_view text, std::string_view source = "<scenario>");
Scenario load_scenario(const std::filesystem::path& path);

// nu as used for counting: the stated value for special polarizations
// (default 2), 0 otherwise.
std::int64_t effective_nu(const Scenario& s);

enum class Status { Pass, Fail, Uncertified, Skipped };
std::string_view to_string(Status s);
Status parse_status(std::string_view text);  // throws ParseError

enum class Provenance { Paper, Trivial, Derived };
std::string_view to_string(Provenance p);

struct RunOptions {
  std::filesystem::path ledger_dir;  // fallback for ledger files and the moduli chase
  bool include_timing = true;
  bool parallel = true;
};

// Default ledger directory: TSCHIRN_LEDGER_DIR if set, else the bundled data.
std::filesystem::path default_ledger_dir();

// One task's outcome. `values` maps names to {"value", "provenance"} and, for
// checked values, "expected".
struct TaskResult {
  std::string task;
  Status status = Status::Fail;
  std::string reason;
  Json values = Json::object();
  Json certificates = Json::object();
  double wall_ms = 0;
};

TaskResult run_task(const Scenario& scenario, const std::string& task, const RunOptions& options = {});

struct Report {
  Json scenario;
  std::vector<TaskResult> tasks;

  int exit_code() const;  // 0 all pass or skipped, 1 otherwise
  Json to_json(bool include_timing = true) const;
};

// Runs the tasks, concurrently when allowed; results keep the scenario order.
Report run_scenario(const Scenario& scenario, const RunOptions& options = {});

// Report for a single ledger script, as the "ledger:<file>" task would give.
Report run_ledger(const std::filesystem::path& path, const RunOptions& options = {});

// Canonical serialization: sorted keys, two-space indent, LF, trailing newline.
std::string render_json(const Json& report);
std::string render_markdown(const Json& report);

// Re-validates every verdict in a serialized report from its certificates
// alone, without rerunning the computations.
struct RecheckEntry {
  std::string task;
  Status reported = Status::Fail;
  bool consistent = false;
  std::string detail;
};

struct RecheckResult {
  std::vector<RecheckEntry> entries;
  bool ok() const;
};

RecheckResult recheck(const Json& report);

}  // namespace tschirn::report
