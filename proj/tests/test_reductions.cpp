#include "doctest.h"
#include "oracles.hpp"
#include "totp/corpus.hpp"
#include "totp/counting.hpp"
#include "totp/errors.hpp"
#include "totp/reductions.hpp"

using namespace totp;

namespace {

std::vector<ProblemInstance> cnf_corpus(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<ProblemInstance> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace_back(ProblemKind::sat, random_cnf(rng, 1 + rng.below(8), 1 + rng.below(6), 1 + rng.below(3)),
                     "cnf" + std::to_string(i));
  }
  return out;
}

std::vector<ProblemInstance> dnf_corpus(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<ProblemInstance> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace_back(ProblemKind::dnf_sat, random_dnf(rng, 1 + rng.below(8), rng.below(5), 1 + rng.below(3)),
                     "dnf" + std::to_string(i));
  }
  return out;
}

}  // namespace

TEST_CASE("report format") {
  const std::vector<ProblemInstance> xs{{ProblemKind::sat, CnfFormula{2, {{1, 2}}}, "or2"},
                                        {ProblemKind::sat, CnfFormula{1, {{1}}}, "x1"}};
  const auto f = problem_oracle();
  const ParsimonyReport ok = check_parsimonious(identity_reduction(ProblemKind::sat), f, f, xs, "two");
  CHECK(ok.passed());
  CHECK(ok.str() == "OK 3 3 or2\nOK 1 1 x1\nPASS identity[sat]: 2/2 parsimonious on two\n");

  const ParsimonyReport bad = check_parsimonious(broken_drop_last_clause(), f, f, xs);
  CHECK_FALSE(bad.passed());
  CHECK(bad.failures() == 2);
  CHECK(bad.str().find("FAIL 3 4 or2") != std::string::npos);
  CHECK(bad.str().find("FAIL 1 2 x1") != std::string::npos);
  CHECK(bad.str().find("FAIL broken-drop-last-clause: 0/2 parsimonious\n") != std::string::npos);
}

TEST_CASE("capacity failures are recorded, not thrown") {
  Caps caps;
  caps.max_variables = 3;
  const std::vector<ProblemInstance> xs{{ProblemKind::sat, CnfFormula{5, {{1}}}, "wide"},
                                        {ProblemKind::sat, CnfFormula{2, {{1}}}, "narrow"}};
  const auto f = problem_oracle(caps);
  const ParsimonyReport r = check_parsimonious(identity_reduction(ProblemKind::sat), f, f, xs);
  REQUIRE(r.entries.size() == 2);
  CHECK_FALSE(r.entries[0].ok);
  CHECK_FALSE(r.entries[0].source_count.has_value());
  CHECK(r.entries[1].ok);
  CHECK(r.str().rfind("FAIL ? ? wide (", 0) == 0);
}

TEST_CASE("kind checks and composition") {
  const ProblemInstance dnf{ProblemKind::dnf_sat, DnfFormula{2, {{1}}}};
  CHECK_THROWS_AS(apply_reduction(cnf_renaming(1), dnf), KindMismatchError);
  CHECK_THROWS_AS(compose(dnf_to_subtree_leaves(), cnf_renaming(1)), KindMismatchError);

  const Reduction both = compose(dnf_renaming(2), dnf_to_subtree_leaves());
  CHECK(both.name == "dnf-to-subtree-leaves . dnf-renaming[2]");
  CHECK(both.source == ProblemKind::dnf_sat);
  CHECK(both.target == ProblemKind::subtree_leaves);
  CHECK(count(apply_reduction(both, dnf)) == 2);

  const Reduction same = compose(identity_reduction(ProblemKind::sat), cnf_renaming(4));
  for (const auto& x : cnf_corpus(20, 3)) {
    CHECK(apply_reduction(same, x).as<CnfFormula>() == apply_reduction(cnf_renaming(4), x).as<CnfFormula>());
  }

  // A transform that lies about its output kind.
  Reduction liar{"liar", ProblemKind::sat, ProblemKind::sat,
                 [](const ProblemInstance&) { return ProblemInstance(ProblemKind::dnf_sat, DnfFormula{1, {}}); }};
  CHECK_THROWS_AS(apply_reduction(liar, ProblemInstance(ProblemKind::sat, CnfFormula{1, {}})), KindMismatchError);
}

TEST_CASE("shipped reductions are parsimonious against brute force") {
  for (const auto& x : cnf_corpus(50, 8)) {
    const auto y = apply_reduction(cnf_renaming(9), x);
    CHECK(oracle::cnf_models(y.as<CnfFormula>()) == oracle::cnf_models(x.as<CnfFormula>()));
    CHECK(y.as<CnfFormula>().variables == x.as<CnfFormula>().variables);
  }
  for (const auto& x : dnf_corpus(50, 8)) {
    CHECK(oracle::dnf_models(apply_reduction(dnf_renaming(9), x).as<DnfFormula>()) ==
          oracle::dnf_models(x.as<DnfFormula>()));
    const auto tree = apply_reduction(dnf_to_subtree_leaves(), x);
    CHECK(oracle::alive_nodes(tree.as<SubtreeInstance>(), true) == oracle::dnf_models(x.as<DnfFormula>()));
  }
  const auto f = problem_oracle();
  for (const auto& r : shipped_reductions()) {
    const auto xs = r.source == ProblemKind::sat ? cnf_corpus(40, 2) : dnf_corpus(40, 2);
    if (r.source != ProblemKind::sat && r.source != ProblemKind::dnf_sat) continue;
    INFO(r.name);
    CHECK(check_parsimonious(r, f, f, xs).passed());
  }
}

TEST_CASE("the broken control is caught") {
  const auto f = problem_oracle();
  const ParsimonyReport r = check_parsimonious(broken_drop_last_clause(), f, f, cnf_corpus(60, 4));
  CHECK_FALSE(r.passed());
  CHECK(r.failures() > 0);
}
