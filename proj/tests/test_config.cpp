#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "totp/config.hpp"
#include "totp/corpus.hpp"
#include "totp/errors.hpp"

using namespace totp;

namespace {

const std::filesystem::path kData = TOTP_DATA_DIR;

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "totp-unit";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::filesystem::path write(const std::string& name, const std::string& text) {
  const auto p = scratch(name);
  std::ofstream(p) << text;
  return p;
}

// Exit status of the CLI with the given arguments; output discarded.
int cli(const std::string& args) {
  const std::string cmd = std::string("\"") + TOTP_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("caps text") {
  const Caps c = parse_caps("vars=12, vertices=10,T=32");
  CHECK(c.max_variables == 12);
  CHECK(c.max_vertices == 10);
  CHECK(c.max_scaling_exponent == 32);
  CHECK(parse_caps("T=5").max_variables == 20);
  CHECK(format_caps(Caps{}) == "vars=20,vertices=16,T=64");
  CHECK(format_caps(parse_caps(format_caps(c))) == format_caps(c));
  CHECK_THROWS_AS(parse_caps("edges=3"), FormatError);
  CHECK_THROWS_AS(parse_caps("vars"), FormatError);
  CHECK_THROWS_AS(parse_caps("vars=-1"), FormatError);
}

TEST_CASE("k lists") {
  CHECK(parse_k_list("2..7") == std::vector<std::size_t>{2, 3, 4, 5, 6, 7});
  CHECK(parse_k_list("2,3,5") == std::vector<std::size_t>{2, 3, 5});
  CHECK(parse_k_list("9") == std::vector<std::size_t>{9});
  CHECK_THROWS_AS(parse_k_list("1..3"), FormatError);
  CHECK_THROWS_AS(parse_k_list("5..3"), FormatError);
  CHECK_THROWS_AS(parse_k_list("0"), FormatError);
  CHECK_THROWS_AS(parse_k_list(""), FormatError);
}

TEST_CASE("config files") {
  const RunConfig shipped = load_config(kData / "check.conf");
  CHECK(describe(shipped) == describe(RunConfig{}));

  const RunConfig c = load_config(write("ok.conf", "# tiny\nseed = 9\ncount=12  # trailing\n\nk = 3,4\n"));
  CHECK(c.corpus.seed == 9);
  CHECK(c.corpus.count == 12);
  CHECK(c.ks == std::vector<std::size_t>{3, 4});

  try {
    load_config(write("bad.conf", "seed = 1\ncolour = blue\n"));
    FAIL("expected a format error");
  } catch (const FormatError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(load_config(write("noeq.conf", "seed 1\n")), FormatError);
  CHECK_THROWS_AS(load_config(write("pct.conf", "leaf-percent = 140\n")), FormatError);
  CHECK_THROWS_AS(load_config(scratch("absent.conf")), FormatError);

  RunConfig r;
  apply_setting(r, "max-depth", "4");
  apply_setting(r, "report-dir", "/tmp/x");
  CHECK(r.corpus.max_depth == 4);
  CHECK(r.report_dir == "/tmp/x");
  CHECK(describe(r) != describe(RunConfig{}));
}

TEST_CASE("corpus determinism") {
  CorpusConfig cfg;
  cfg.count = 300;
  const auto a = corpus_expressions(cfg);
  CHECK(a == corpus_expressions(cfg));
  CHECK(a.size() == 300);
  // Entry i does not depend on how many entries are drawn.
  cfg.count = 50;
  const auto prefix = corpus_expressions(cfg);
  CHECK(std::equal(prefix.begin(), prefix.end(), a.begin()));
  cfg.seed = 2;
  CHECK(corpus_expressions(cfg) != prefix);
  for (const auto& e : generate_corpus(cfg)) CHECK(e.expression.rfind("LEAF", 0) != 0);
}

TEST_CASE("command line exit codes") {
  const std::string d = kData.string() + "/";
  CHECK(cli("eval " + d + "leaf.expr") == 0);
  CHECK(cli("eval " + d + "prob_sum.expr") == 0);
  CHECK(cli("eval " + d + "bad_head.expr") == 2);
  CHECK(cli("eval " + d + "nothing-here.expr") == 2);
  CHECK(cli("count " + d + "k4.edges") == 0);
  CHECK(cli("count " + d + "k4.edges --problem independent-sets") == 0);
  CHECK(cli("count " + d + "k4.edges --problem bogus") == 2);
  CHECK(cli("count " + d + "k33.edges --caps vertices=4") == 4);
  CHECK(cli("eval " + write("norm.expr", "NORM(BR(LEAF(A),LEAF(A),LEAF(A)),1)\n").string()) == 3);
  CHECK(cli("check --proposition negative-control --count 40") == 1);
  CHECK(cli("check --proposition parity --count 40") == 0);
  CHECK(cli("check --proposition no-such-thing") == 2);
  CHECK(cli("check") == 2);
  CHECK(cli("frobnicate") == 2);
  CHECK(cli("check --proposition parity --config " + write("broken.conf", "seed = x\n").string()) == 2);
}
