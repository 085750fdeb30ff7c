#include "doctest.h"
#include "oracles.hpp"
#include "totp/class_problems.hpp"
#include "totp/counting.hpp"
#include "totp/expression.hpp"

using namespace totp;

namespace {

ProblemInstance cnf(std::size_t n, std::vector<std::vector<Literal>> clauses) {
  return {ProblemKind::sat, CnfFormula{n, std::move(clauses)}};
}

}  // namespace

TEST_CASE("parity and residues") {
  const auto f = problem_oracle();
  CHECK(parity_of(f, cnf(2, {{1, 2}})));        // 3 models
  CHECK_FALSE(parity_of(f, cnf(2, {})));        // 4 models
  CHECK_FALSE(parity_of(f, cnf(1, {{1}, {-1}})));
  const ModResult r = modk_of(f, cnf(3, {{1, 2, 3}}), 3);  // 7 models
  CHECK(r.residue == 1);
  CHECK(r.accept);
  CHECK_FALSE(modk_of(f, cnf(3, {}), 4).accept);
  CHECK_THROWS_AS(modk_of(f, cnf(1, {}), 1), ParameterError);
  CHECK_THROWS_AS(modk_of(f, cnf(1, {}), 0), ParameterError);
  CHECK(residue_verdict(-7, 3).residue == 2);
}

TEST_CASE("difference problems") {
  const auto f = problem_oracle();
  const auto three = cnf(2, {{1, 2}});
  const auto two = cnf(2, {{1}});
  const auto one = cnf(2, {{1}, {2}});
  CHECK(diff_eq0(f, two, cnf(2, {{-2}})));
  CHECK_FALSE(diff_eq0(f, three, two));
  CHECK(diff_gt0(f, three, two));
  CHECK_FALSE(diff_gt0(f, one, two));
  CHECK(diff_eq1(f, three, two).is_yes());
  CHECK(diff_eq1(f, two, two).is_no());
  CHECK(diff_eq1(f, three, one) == PromiseVerdict::violated(2));
  CHECK(diff_eq1(f, one, three) == PromiseVerdict::violated(-2));
  CHECK(diff_eqg(f, three, one, 2).is_yes());
  CHECK_THROWS_AS(diff_eqg(f, three, one, 0), ParameterError);
  CHECK_THROWS_AS(diff_eqg(f, three, one, -1), ParameterError);
}

TEST_CASE("verdict trichotomy") {
  for (int d = -5; d <= 5; ++d) {
    for (int k = 1; k <= 4; ++k) {
      const PromiseVerdict v = difference_verdict(d, k);
      CHECK(int(v.is_yes()) + int(v.is_no()) + int(v.is_violated()) == 1);
      CHECK(v.is_yes() == (d == k));
      CHECK(v.is_no() == (d == 0));
      if (v.is_violated()) CHECK(v.difference() == d);
      CHECK(parse_verdict(v.str()) == v);
    }
  }
  CHECK(PromiseVerdict::violated(-3).str() == "VIOLATED -3");
  CHECK(PromiseVerdict::yes().str() == "YES");
  CHECK_THROWS_AS(parse_verdict("MAYBE"), FormatError);
  CHECK_THROWS_AS(parse_verdict("VIOLATED"), FormatError);
  CHECK_THROWS_AS(parse_verdict("VIOLATED x"), FormatError);
}

TEST_CASE("machine oracles") {
  const Machine m = parse_machine("BR(LEAF(A),LEAF(A),LEAF(R))");
  CHECK(acc_oracle(m).count({}) == 2);
  CHECK(tot_oracle(m).count({}) == 2);
  CHECK(parity_of(tot_oracle(parse_machine("BR(LEAF(A),LEAF(R))")), Input{}));
  const Machine n = parse_machine("BR(LEAF(R),LEAF(A),LEAF(A),LEAF(A))");
  // Same input to two machines: compare through one oracle per machine.
  CHECK(acc_oracle(n).count({}) - acc_oracle(m).count({}) == 1);
}

TEST_CASE("difference scaling") {
  // Two extra models on one side, times 2^2, against K33 (6) and C6 (2).
  CHECK(verify_diff_scaling(CnfFormula{2, {}}, CnfFormula{2, {{1, 2}}}, complete_bipartite(3, 3),
                            cycle_graph(6), 2));
  CHECK(verify_diff_scaling(CnfFormula{2, {{1}}}, CnfFormula{2, {{-1}}}, cycle_graph(4), cycle_graph(4), 30));
  CHECK_FALSE(verify_diff_scaling(CnfFormula{2, {}}, CnfFormula{2, {{1, 2}}}, complete_bipartite(3, 3),
                                  cycle_graph(6), 1));
  CHECK_FALSE(verify_diff_scaling(CnfFormula{2, {}}, CnfFormula{2, {{1, 2}}}, cycle_graph(6),
                                  complete_bipartite(3, 3), 2));
  CHECK_THROWS_AS(verify_diff_scaling(CnfFormula{1, {}}, CnfFormula{1, {}}, cycle_graph(4), cycle_graph(4), 65),
                  ParameterError);
  Caps caps;
  caps.max_scaling_exponent = 8;
  CHECK_THROWS_AS(verify_diff_scaling(CnfFormula{1, {}}, CnfFormula{1, {}}, cycle_graph(4), cycle_graph(4), 9, caps),
                  ParameterError);
}

TEST_CASE("class acceptance conditions") {
  using C = ClassCondition;
  CHECK(evaluate_condition(C::up, 1).is_yes());
  CHECK(evaluate_condition(C::up, 0).is_no());
  CHECK(evaluate_condition(C::up, 2) == PromiseVerdict::violated(2));
  CHECK(evaluate_condition(C::spp, -1) == PromiseVerdict::violated(-1));
  CHECK(evaluate_condition(C::fewp, 3, 5).is_yes());
  CHECK(evaluate_condition(C::fewp, 0, 5).is_no());
  CHECK(evaluate_condition(C::fewp, 6, 5).is_violated());
  CHECK(evaluate_condition(C::parity, 7).is_yes());
  CHECK(evaluate_condition(C::parity, -4).is_no());
  CHECK(evaluate_condition(C::modk, 9, 3).is_no());
  CHECK(evaluate_condition(C::modk, -1, 3).is_yes());
  CHECK_THROWS_AS(evaluate_condition(C::modk, 4, 1), ParameterError);
  CHECK(evaluate_condition(C::wpp, 8, 8).is_yes());
  CHECK(evaluate_condition(C::wpp, 0, 8).is_no());
  CHECK(evaluate_condition(C::wpp, 4, 8).is_violated());
  CHECK_THROWS_AS(evaluate_condition(C::wpp, 0, 0), ParameterError);
  CHECK(evaluate_condition(C::ceq, 0).is_yes());
  CHECK(evaluate_condition(C::ceq, -2).is_no());
  CHECK(evaluate_condition(C::pp, 1).is_yes());
  CHECK(evaluate_condition(C::pp, 0).is_no());
  CHECK(std::string(to_string(C::ceq)) == "C=P");
}
