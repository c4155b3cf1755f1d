#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <tomlplusplus/toml.hpp>

#include "tschirn/error.hpp"
#include "tschirn/report/report.hpp"

namespace tschirn::report {

namespace {

Rat read_rational(toml::node_view<const toml::node> node, const std::string& key, const std::string& where) {
  if (!node) throw ParseError(where + ": missing key '" + key + "'");
  if (auto i = node.value<std::int64_t>(); i && node.is_integer()) return Rat(static_cast<long>(*i));
  if (auto s = node.value<std::string>()) {
    try {
      return qpoly::parse_rat(*s);
    } catch (const ParseError& e) {
      throw ParseError(where + ": key '" + key + "': " + e.what());
    }
  }
  throw ParseError(where + ": key '" + key + "' must be a rational string \"p/q\" or an integer");
}

bool is_known_task(const std::string& task) {
  if (task.rfind("ledger:", 0) == 0) return task.size() > 7;
  const auto& known = known_tasks();
  return std::find(known.begin(), known.end(), task) != known.end();
}

}  // namespace

const std::vector<std::string>& known_tasks() {
  static const std::vector<std::string> names{"classify",   "local-singularity", "branch", "invariants",
                                              "numerology", "canonical-check",   "moduli"};
  return names;
}

Scenario parse_scenario(std::string_view text, std::string_view source) {
  const std::string where(source);
  toml::table parsed;
  try {
    parsed = toml::parse(text, source);
  } catch (const toml::parse_error& e) {
    std::ostringstream msg;
    msg << where << ":" << e.source().begin.line << ": " << e.description();
    throw ParseError(msg.str());
  }
  const toml::table& table = parsed;
  static const std::set<std::string> allowed{"name", "polarization", "s", "t", "nu", "tasks"};
  for (const auto& [key, value] : table)
    if (!allowed.count(std::string(key.str()))) throw ParseError(where + ": unknown key '" + std::string(key.str()) + "'");

  Scenario out;
  auto name = table["name"].value<std::string>();
  if (!name || name->empty()) throw ParseError(where + ": 'name' must be a non-empty string");
  out.name = *name;

  auto pol = table["polarization"].value<std::string>();
  if (!pol) throw ParseError(where + ": 'polarization' must be a string");
  try {
    out.polarization = numerology::parse_polarization(*pol);
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }

  out.s = read_rational(table["s"], "s", where);
  out.t = read_rational(table["t"], "t", where);
  if (out.s == 0 && out.t == 0) throw ParseError(where + ": (s, t) = (0, 0) is excluded");

  if (auto nu = table["nu"]) {
    auto v = nu.value<std::int64_t>();
    if (!v || !nu.is_integer()) throw ParseError(where + ": 'nu' must be an integer");
    if (out.polarization != numerology::Polarization::Special)
      throw ParseError(where + ": 'nu' is only meaningful for special polarizations");
    if (*v < 1) throw ParseError(where + ": 'nu' must be at least 1");
    out.nu = *v;
  }

  const toml::array* tasks = table["tasks"].as_array();
  if (!tasks || tasks->empty()) throw ParseError(where + ": 'tasks' must be a non-empty array of strings");
  std::set<std::string> seen;
  for (const auto& node : *tasks) {
    auto task = node.value<std::string>();
    if (!task) throw ParseError(where + ": every task must be a string");
    if (!is_known_task(*task)) throw ParseError(where + ": unknown task '" + *task + "'");
    if (!seen.insert(*task).second) throw ParseError(where + ": duplicate task '" + *task + "'");
    out.tasks.push_back(*task);
  }
  return out;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read scenario " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  Scenario s = parse_scenario(buf.str(), path.filename().string());
  s.base_dir = path.parent_path();
  return s;
}

std::int64_t effective_nu(const Scenario& s) {
  if (s.polarization != numerology::Polarization::Special) return 0;
  return s.nu.value_or(2);
}

std::filesystem::path default_ledger_dir() {
  if (const char* env = std::getenv("TSCHIRN_LEDGER_DIR"); env && *env) return env;
  return std::filesystem::path(TSCHIRN_DATA_DIR) / "ledgers";
}

}  // namespace tschirn::report
