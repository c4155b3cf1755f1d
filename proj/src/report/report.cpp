#include <future>
#include <sstream>

#include "tschirn/report/report.hpp"

namespace tschirn::report {

namespace {

Json scenario_echo(const Scenario& s) {
  Json tasks = Json::array();
  for (const auto& t : s.tasks) tasks.push_back(t);
  return {{"name", s.name},
          {"polarization", numerology::to_string(s.polarization)},
          {"s", s.s.get_str()},
          {"t", s.t.get_str()},
          {"nu", s.nu ? Json(*s.nu) : Json(nullptr)},
          {"tasks", tasks}};
}

std::string cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

int Report::exit_code() const {
  for (const auto& t : tasks)
    if (t.status == Status::Fail || t.status == Status::Uncertified) return 1;
  return 0;
}

Json Report::to_json(bool include_timing) const {
  Json out;
  out["format"] = "tschirn-report/1";
  out["scenario"] = scenario;
  Json list = Json::array();
  Json summary = {{"pass", 0}, {"fail", 0}, {"uncertified", 0}, {"skipped", 0}};
  for (const auto& t : tasks) {
    Json entry = {{"task", t.task},
                  {"status", to_string(t.status)},
                  {"values", t.values},
                  {"certificates", t.certificates}};
    if (!t.reason.empty()) entry["reason"] = t.reason;
    if (include_timing) entry["wall_ms"] = t.wall_ms;
    list.push_back(std::move(entry));
    summary[std::string(to_string(t.status))] = summary[std::string(to_string(t.status))].get<int>() + 1;
  }
  summary["total"] = tasks.size();
  summary["exit_code"] = exit_code();
  out["tasks"] = std::move(list);
  out["summary"] = std::move(summary);
  return out;
}

Report run_scenario(const Scenario& scenario, const RunOptions& options) {
  Report out;
  out.scenario = scenario_echo(scenario);
  if (!options.parallel) {
    for (const auto& t : scenario.tasks) out.tasks.push_back(run_task(scenario, t, options));
    return out;
  }
  // Tasks share no mutable state, so each runs on its own thread; get()
  // rethrows input errors in scenario order.
  std::vector<std::future<TaskResult>> pending;
  for (const auto& t : scenario.tasks)
    pending.push_back(std::async(std::launch::async, [&scenario, t, &options] { return run_task(scenario, t, options); }));
  for (auto& f : pending) out.tasks.push_back(f.get());
  return out;
}

Report run_ledger(const std::filesystem::path& path, const RunOptions& options) {
  Scenario s;
  s.name = path.filename().string();
  s.s = 1;
  s.t = 2;
  s.base_dir = path.parent_path();
  s.tasks = {"ledger:" + path.filename().string()};
  Report out;
  out.scenario = {{"ledger", path.filename().string()}};
  out.tasks.push_back(run_task(s, s.tasks.front(), options));
  return out;
}

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

std::string render_markdown(const Json& report) {
  std::ostringstream md;
  const Json& sc = report.at("scenario");
  md << "# " << (sc.contains("name") ? cell(sc["name"]) : cell(sc.value("ledger", Json("report")))) << "\n\n";
  if (sc.contains("polarization"))
    md << "- polarization: " << cell(sc["polarization"]) << "\n- (s, t) = (" << cell(sc["s"]) << ", " << cell(sc["t"])
       << ")\n" << (sc["nu"].is_null() ? "" : "- nu: " + cell(sc["nu"]) + "\n") << "\n";
  md << "| task | status | note |\n|---|---|---|\n";
  for (const auto& t : report.at("tasks"))
    md << "| " << cell(t["task"]) << " | " << cell(t["status"]) << " | " << t.value("reason", std::string()) << " |\n";
  for (const auto& t : report.at("tasks")) {
    md << "\n## " << cell(t["task"]) << "\n\n";
    if (t["values"].empty()) {
      md << "No values.\n";
      continue;
    }
    md << "| value | result | expected | provenance |\n|---|---|---|---|\n";
    for (const auto& [name, v] : t["values"].items())
      md << "| " << name << " | " << cell(v["value"]) << " | " << (v.contains("expected") ? cell(v["expected"]) : "")
         << " | " << cell(v["provenance"]) << " |\n";
    // Traces behind claims that did not hold.
    const Json& certs = t["certificates"];
    for (const auto& c : certs.value("claims", Json::array())) {
      if (c["status"] == "forced") continue;
      md << "\nTrace for " << cell(c["group"]) << " (" << cell(c["status"]) << "):\n\n";
      for (const auto& line : c["trace"]) md << "- " << cell(line) << "\n";
    }
    if (certs.contains("conflict")) {
      md << "\nConflict at " << cell(certs["conflict"]["where"]) << ":\n\n";
      for (const auto& line : certs["conflict"]["rules"]) md << "- " << cell(line) << "\n";
    }
  }
  const Json& s = report.at("summary");
  md << "\n**Summary:** " << s["pass"] << " pass, " << s["fail"] << " fail, " << s["uncertified"] << " uncertified, "
     << s["skipped"] << " skipped.\n";
  return md.str();
}

}  // namespace tschirn::report
