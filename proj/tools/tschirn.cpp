#include <fstream>
#include <iostream>

#include <CLI11/CLI11.hpp>

#include "tschirn/cover/cover.hpp"
#include "tschirn/error.hpp"
#include "tschirn/report/report.hpp"

namespace {

using namespace tschirn;

constexpr int kPass = 0, kCheckFailure = 1, kInputError = 2;

struct OutputOptions {
  std::string format = "json";
  std::string out;
  bool timing = true;
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw ParseError("cannot write " + out);
  file << text;
}

std::string render(const report::Json& j, const std::string& format) {
  return format == "md" ? report::render_markdown(j) : report::render_json(j);
}

report::Json read_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  try {
    return report::Json::parse(in);
  } catch (const report::Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// Prints one line per task and returns the exit code.
int print_recheck(const report::RecheckResult& r) {
  for (const auto& e : r.entries)
    std::cerr << "recheck " << e.task << ": " << (e.consistent ? "ok" : "MISMATCH") << " (" << e.detail << ")\n";
  return r.ok() ? kPass : kCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for triple covers of abelian surfaces"};
  app.require_subcommand(1);

  OutputOptions output;
  std::string ledger_dir;
  bool recheck = false, sequential = false;
  std::string scenario_path;
  auto* run = app.add_subcommand("run", "Run a scenario, or recheck a saved JSON report with --recheck");
  run->add_option("scenario", scenario_path, "Scenario TOML (or report JSON with --recheck)")->required();
  run->add_option("--format", output.format, "Report format")->check(CLI::IsMember({"json", "md"}));
  run->add_flag("--recheck", recheck, "Re-validate verdicts from the report's certificates");
  run->add_option("--out", output.out, "Write the report here instead of stdout");
  run->add_flag("!--no-timing", output.timing, "Omit wall-clock timings (byte-stable output)");
  run->add_option("--ledger-dir", ledger_dir, "Directory of ledger scripts");
  run->add_flag("--sequential", sequential, "Run tasks one after another");

  std::string ledger_path;
  auto* ledger = app.add_subcommand("ledger", "Run a cohomology ledger script");
  ledger->add_option("file", ledger_path, "Ledger script")->required();
  ledger->add_option("--format", output.format, "Report format")->check(CLI::IsMember({"json", "md"}));
  ledger->add_option("--out", output.out, "Write the report here instead of stdout");
  ledger->add_flag("!--no-timing", output.timing, "Omit wall-clock timings");

  std::string s_text, t_text;
  auto* classify = app.add_subcommand("classify", "Classify a point of the (s, t) parameter plane");
  classify->add_option("--s", s_text, "s as p/q")->required();
  classify->add_option("--t", t_text, "t as p/q")->required();

  auto* version = app.add_subcommand("version", "Print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    report::RunOptions options;
    options.ledger_dir = ledger_dir.empty() ? report::default_ledger_dir() : std::filesystem::path(ledger_dir);
    options.include_timing = output.timing;
    options.parallel = !sequential;

    if (*run) {
      if (recheck && std::filesystem::path(scenario_path).extension() == ".json")
        return print_recheck(report::recheck(read_json(scenario_path)));
      auto rep = report::run_scenario(report::load_scenario(scenario_path), options);
      report::Json j = rep.to_json(output.timing);
      emit(render(j, output.format), output.out);
      int code = rep.exit_code();
      if (recheck) {
        // Round-trip through the serialized form so only its bytes are used.
        int rc = print_recheck(report::recheck(report::Json::parse(report::render_json(j))));
        code = std::max(code, rc);
      }
      return code;
    }
    if (*ledger) {
      auto rep = report::run_ledger(ledger_path, options);
      report::Json j = rep.to_json(output.timing);
      emit(render(j, output.format), output.out);
      for (const auto& t : rep.tasks) {
        if (t.status == report::Status::Pass) continue;
        std::cerr << t.task << ": " << t.reason << "\n";
        for (const auto& c : t.certificates.value("claims", report::Json::array()))
          if (c["status"] != "forced")
            for (const auto& line : c["trace"]) std::cerr << "  " << line.get<std::string>() << "\n";
        if (t.certificates.contains("conflict"))
          for (const auto& line : t.certificates["conflict"]["rules"]) std::cerr << "  " << line.get<std::string>() << "\n";
      }
      return rep.exit_code();
    }
    if (*classify) {
      auto cls = cover::classify_parameters(qpoly::parse_rat(s_text), qpoly::parse_rat(t_text));
      std::cout << cls.to_string() << "\n";
      return kPass;
    }
    if (*version) {
      std::cout << "tschirn " << TSCHIRN_VERSION << "\n";
      return kPass;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const UndeclaredSymbol& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DegenerateInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailure;
  }
  return kPass;
}
