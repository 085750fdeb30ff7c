// totp: evaluate machine expressions, count problem instances, and run the
// verification suites.

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "totp/checks.hpp"
#include "totp/config.hpp"
#include "totp/counting.hpp"
#include "totp/errors.hpp"
#include "totp/expression.hpp"
#include "totp/problem_io.hpp"

namespace {

enum Exit { kPass = 0, kPropertyFailure = 1, kFormat = 2, kEvaluation = 3, kCapacity = 4 };

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

void append_report(const std::filesystem::path& dir, const std::string& id, const std::string& body) {
  std::filesystem::create_directories(dir);
  const auto path = dir / (id + ".report");
  std::ofstream out(path, std::ios::app);
  if (!out) throw totp::FormatError("cannot write report file '" + path.string() + "'");
  out << "=== totp report " << timestamp() << '\n' << body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation-tree simulator and counting-construction checker"};
  app.require_subcommand(1);

  std::string caps_text;
  std::string config_path;

  auto* eval = app.add_subcommand("eval", "Print path counts of a machine expression file");
  std::string machine_file;
  std::string input;
  eval->add_option("machine-file", machine_file)->required();
  eval->add_option("input", input, "Input string passed to the machine");
  eval->add_option("--caps", caps_text, "Enumeration caps for PROB(...) leaves, e.g. vars=20,vertices=16,T=64");

  auto* count = app.add_subcommand("count", "Print the exact count of a problem file");
  std::string problem_file;
  std::string problem_kind;
  count->add_option("problem-file", problem_file)->required();
  count->add_option("--problem", problem_kind, "Counting problem to pose, e.g. independent-sets");
  count->add_option("--caps", caps_text, "Enumeration caps, e.g. vars=20,vertices=16,T=64");

  auto* check = app.add_subcommand("check", "Run a proposition's invariant suite");
  std::string proposition;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> corpus_count;
  std::optional<std::size_t> max_depth;
  std::string k_text;
  std::string report_dir;
  check->add_option("--proposition", proposition, "Proposition id, or 'all'")->required();
  check->add_option("--seed", seed, "Corpus seed");
  check->add_option("--count", corpus_count, "Number of corpus machines");
  check->add_option("--max-depth", max_depth, "Maximum corpus tree depth");
  check->add_option("--k", k_text, "Moduli for the mod-k suite: 2..7, or 2,3,5");
  check->add_option("--caps", caps_text, "Enumeration caps, e.g. vars=20,vertices=16,T=64");
  check->add_option("--report-dir", report_dir, "Directory receiving appended reports");
  check->add_option("--config", config_path, "Flat key = value configuration file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kFormat;
  }

  try {
    totp::RunConfig cfg;
    if (!config_path.empty()) cfg = totp::load_config(config_path);
    if (!caps_text.empty()) cfg.caps = totp::parse_caps(caps_text, cfg.caps);

    if (*eval) {
      const totp::Machine m = totp::load_machine(machine_file, cfg.caps);
      std::cout << totp::format_counts(totp::path_counts(m, input)) << '\n';
      return kPass;
    }

    if (*count) {
      std::optional<totp::ProblemKind> kind;
      if (!problem_kind.empty()) {
        kind = totp::parse_problem_kind(problem_kind);
        if (!kind) throw totp::FormatError("unknown problem kind '" + problem_kind + "'");
      }
      std::cout << totp::count(totp::load_problem(problem_file, kind), cfg.caps).str() << '\n';
      return kPass;
    }

    if (seed) cfg.corpus.seed = *seed;
    if (corpus_count) cfg.corpus.count = *corpus_count;
    if (max_depth) cfg.corpus.max_depth = *max_depth;
    if (!k_text.empty()) cfg.ks = totp::parse_k_list(k_text);
    if (!report_dir.empty()) cfg.report_dir = report_dir;

    std::vector<std::string> ids;
    if (proposition == "all") {
      for (const auto& id : totp::proposition_ids())
        if (id != "negative-control") ids.push_back(id);
    } else if (totp::known_proposition(proposition)) {
      ids.push_back(proposition);
    } else {
      std::cerr << "unknown proposition '" << proposition << "'; known:";
      for (const auto& id : totp::proposition_ids()) std::cerr << ' ' << id;
      std::cerr << " all\n";
      return kFormat;
    }

    bool all_passed = true;
    for (const auto& id : ids) {
      const totp::CheckReport report = totp::run_check(id, cfg);
      const std::string body = "proposition: " + id + "\nconfig: " + totp::describe(cfg) + "\n" + report.body();
      if (!cfg.report_dir.empty()) append_report(cfg.report_dir, id, body);
      if (!report.passed()) {
        all_passed = false;
        for (const auto& s : report.suites) {
          if (s.passed()) continue;
          std::cout << "FAIL " << s.name << " cases=" << s.cases << " failures=" << s.failures << '\n';
          for (const auto& c : s.counterexamples) std::cout << "  counterexample: " << c << '\n';
          if (s.cases == 0) std::cout << "  no cases ran\n";
        }
      }
      std::cout << report.summary() << '\n';
    }
    return all_passed ? kPass : kPropertyFailure;
  } catch (const totp::FormatError& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return kFormat;
  } catch (const totp::ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return kFormat;
  } catch (const totp::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kCapacity;
  } catch (const totp::Error& e) {
    std::cerr << "evaluation error: " << e.what() << '\n';
    return kEvaluation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kEvaluation;
  }
}
