// Acceptance run: drives the totp binary end to end with the default
// configuration and prints one PASS/FAIL line per criterion.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct Suite {
  bool passed = false;
  std::size_t cases = 0;
};

struct Run {
  int exit_code = -1;
  double seconds = 0;
  std::string stdout_text;
  std::string report;  // last record of the report file
  std::map<std::string, Suite> suites;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> records(const std::string& text) {
  const std::string header = "=== totp report";
  std::vector<std::string> out;
  std::size_t at = text.find(header);
  while (at != std::string::npos) {
    const std::size_t body = text.find('\n', at) + 1;
    const std::size_t next = text.find(header, body);
    out.push_back(text.substr(body, next == std::string::npos ? std::string::npos : next - body));
    at = next;
  }
  return out;
}

Run run_cli(const std::string& args, const fs::path& report_dir, const std::string& id) {
  const fs::path out_file = report_dir / (id + ".stdout");
  const std::string cmd = std::string("\"") + TOTP_CLI_PATH + "\" " + args + " --report-dir \"" +
                          report_dir.string() + "\" >\"" + out_file.string() + "\" 2>&1";
  Run r;
  const auto t0 = std::chrono::steady_clock::now();
  const int status = std::system(cmd.c_str());
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.stdout_text = slurp(out_file);
  const auto recs = records(slurp(report_dir / (id + ".report")));
  if (!recs.empty()) r.report = recs.back();

  std::istringstream lines(r.report);
  for (std::string line; std::getline(lines, line);) {
    const bool pass = line.rfind("PASS ", 0) == 0;
    if (!pass && line.rfind("FAIL ", 0) != 0) continue;
    const std::size_t c = line.find(" cases=");
    if (c == std::string::npos) continue;
    Suite s{pass, std::stoul(line.substr(c + 7))};
    r.suites[line.substr(5, c - 5)] = s;
  }
  return r;
}

Run check(const std::string& id, const fs::path& dir) { return run_cli("check --proposition " + id, dir, id); }

struct Criterion {
  int number;
  std::string text;
  bool ok = true;
  std::string why;

  // Records the first failing condition.
  void need(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
  void suite(const Run& r, const std::string& name, std::size_t min_cases) {
    const auto it = r.suites.find(name);
    if (it == r.suites.end()) return need(false, "suite '" + name + "' missing");
    need(it->second.passed, "suite '" + name + "' failed");
    need(it->second.cases >= min_cases, "suite '" + name + "' ran " + std::to_string(it->second.cases) +
                                            " cases, need " + std::to_string(min_cases));
  }
  void exact(const Run& r, const std::string& name, std::size_t cases) {
    suite(r, name, cases);
    const auto it = r.suites.find(name);
    if (it != r.suites.end())
      need(it->second.cases == cases, "suite '" + name + "' ran " + std::to_string(it->second.cases) +
                                          " cases, expected " + std::to_string(cases));
  }
  void exit_ok(const Run& r) { need(r.exit_code == 0, "exit code " + std::to_string(r.exit_code)); }
};

}  // namespace

int main() {
  const fs::path root = fs::temp_directory_path() / ("totp-acceptance-" + std::to_string(::getpid()));
  fs::remove_all(root);
  const fs::path main_dir = root / "main";
  fs::create_directories(main_dir);
  const std::size_t corpus = 1000;
  std::vector<Criterion> results;
  auto report = [&](Criterion c) {
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.text;
    if (!c.ok) std::cout << " (" << c.why << ")";
    std::cout << std::endl;
    results.push_back(std::move(c));
  };

  {
    Criterion c{1, "closure under subtract-one, addition and multiplication"};
    const Run r = check("closure", main_dir);
    c.exit_ok(r);
    c.suite(r, "closure-sub1", corpus);
    c.exact(r, "closure-add", corpus * corpus);
    c.exact(r, "closure-mul", corpus * corpus);
    c.need(r.seconds < 120, "took " + std::to_string(r.seconds) + " s");
    report(c);
  }
  {
    Criterion c{2, "gap decomposition"};
    const Run r = check("gap", main_dir);
    c.exit_ok(r);
    c.suite(r, "gap-decompose", 500);
    report(c);
  }
  {
    Criterion c{3, "binarization and perfect-tree normalization"};
    const Run r = check("normalize", main_dir);
    c.exit_ok(r);
    c.suite(r, "binarize", corpus);
    c.suite(r, "normalize-precondition", 1);
    for (int p = 4; p <= 8; ++p) c.suite(r, "normalize p=" + std::to_string(p), 200);
    report(c);
  }
  {
    Criterion c{4, "acc to tot conversion modulo k for k = 2..7"};
    const Run r = check("modk", main_dir);
    c.exit_ok(r);
    for (int k = 2; k <= 7; ++k) c.suite(r, "modk k=" + std::to_string(k), 500);
    report(c);
  }
  {
    Criterion c{5, "leftmost-reject marking and parity conversion"};
    const Run r = check("parity", main_dir);
    c.exit_ok(r);
    c.exact(r, "mark-leftmost", corpus);
    c.exact(r, "parity-conversion", corpus);
    report(c);
  }
  {
    Criterion c{6, "self-reducible machines for the base problems"};
    const Run r = check("self-reduction", main_dir);
    c.exit_ok(r);
    c.suite(r, "self-reduction perfect-matchings exhaustive", 1);
    c.suite(r, "self-reduction perfect-matchings random", 100);
    c.suite(r, "self-reduction dnf-sat", 100);
    c.suite(r, "self-reduction independent-sets", 100);
    c.suite(r, "self-reduction subtree", 100);
    c.suite(r, "self-reduction sat", 1);
    c.need(r.seconds < 300, "took " + std::to_string(r.seconds) + " s");
    report(c);
  }
  {
    Criterion c{7, "polynomially bounded evaluation"};
    const Run r = check("poly-bounded", main_dir);
    c.exit_ok(r);
    c.exact(r, "poly-bounded", corpus);
    c.exact(r, "core-invariants", corpus);
    report(c);
  }
  {
    Criterion c{8, "difference problems over every counting function"};
    const Run r = check("diff-family", main_dir);
    c.exit_ok(r);
    for (const char* kind :
         {"sat", "dnf-sat", "perfect-matchings", "independent-sets", "subtree-size", "subtree-leaves"})
      c.suite(r, std::string("diff-family ") + kind, 200);
    c.suite(r, "diff-family machine-acc", 200);
    c.suite(r, "diff-family off-promise", 1);
    c.suite(r, "class-conditions", 1);
    report(c);
  }
  {
    Criterion c{9, "difference scaling between satisfying assignments and perfect matchings"};
    const Run r = check("scaling", main_dir);
    c.exit_ok(r);
    c.suite(r, "scaling reflexive", 1);
    c.suite(r, "scaling counts", 1);
    c.suite(r, "scaling hand-built", 20);
    c.suite(r, "scaling perturbed-T", 1);
    report(c);
  }
  {
    Criterion c{10, "parsimony of the shipped reductions, broken control caught"};
    const Run r = check("parsimony", main_dir);
    c.exit_ok(r);
    std::size_t parsimony_suites = 0;
    for (const auto& [name, s] : r.suites) {
      if (name.rfind("parsimony ", 0) != 0) continue;
      ++parsimony_suites;
      c.suite(r, name, 100);
    }
    c.need(parsimony_suites >= 1, "no parsimony suites");
    c.suite(r, "negative-control broken-drop-last-clause", 1);
    c.need(r.report.find("\ncounterexample: ") != std::string::npos ||
               r.report.rfind("counterexample: ", 0) == 0,
           "no counterexample witness for the broken reduction");
    // The mutated addition must be reported as a failure.
    const Run neg = check("negative-control", main_dir);
    c.need(neg.exit_code == 1, "negative-control exit code " + std::to_string(neg.exit_code));
    c.need(neg.stdout_text.find("counterexample:") != std::string::npos, "negative-control printed no counterexample");
    report(c);
  }
  {
    Criterion c{11, "reports are reproducible across runs"};
    const std::vector<std::string> ids{"gap", "parity", "diff-family", "scaling", "parsimony", "negative-control"};
    const fs::path dir = root / "repeat";
    fs::create_directories(dir);
    for (int round = 0; round < 2; ++round)
      for (const auto& id : ids) run_cli("check --proposition " + id + " --count 300", dir, id);
    for (const auto& id : ids) {
      const auto recs = records(slurp(dir / (id + ".report")));
      c.need(recs.size() == 2, id + ": expected 2 report records, found " + std::to_string(recs.size()));
      if (recs.size() == 2) c.need(recs[0] == recs[1] && !recs[0].empty(), id + ": report bodies differ");
    }
    report(c);
  }

  std::size_t failed = 0;
  for (const auto& c : results) failed += !c.ok;
  std::cout << (failed ? "FAIL" : "PASS") << " acceptance: " << results.size() - failed << "/" << results.size()
            << " criteria" << std::endl;
  fs::remove_all(root);
  return failed ? 1 : 0;
}
