#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "totp/combinators.hpp"
#include "totp/corpus.hpp"
#include "totp/errors.hpp"
#include "totp/expression.hpp"

using namespace totp;

namespace {

Machine m(const std::string& text) { return parse_machine(text); }

// Flat branch with a accepting and r rejecting leaves (a + r >= 1).
Machine flat(std::size_t a, std::size_t r) {
  std::string s = "BR(";
  for (std::size_t i = 0; i < a + r; ++i) s += std::string(i ? "," : "") + (i < a ? "LEAF(A)" : "LEAF(R)");
  return m(s + ")");
}

// Same counts, but nested so that the leftmost path is long.
Machine nested(std::size_t a, std::size_t r) {
  std::string s = "LEAF(A)";
  for (std::size_t i = 1; i < a + r; ++i) s = "BR(" + s + "," + (i < a ? "LEAF(A)" : "LEAF(R)") + ")";
  return m(s);
}

std::vector<CorpusEntry> corpus(std::size_t count, std::uint64_t seed = 11) {
  CorpusConfig cfg;
  cfg.seed = seed;
  cfg.count = count;
  return generate_corpus(cfg);
}

BigInt tot(const Machine& x) { return oracle::tot(x); }
BigInt acc(const Machine& x) { return oracle::census(x).acc; }

}  // namespace

TEST_CASE("subtract one") {
  CHECK(tot(subtract_one(m("LEAF(A)"))) == 0);
  CHECK(tot(subtract_one(m("BR(BR(LEAF(R)))"))) == 0);
  CHECK(tot(subtract_one(m("BR(LEAF(A),LEAF(R))"))) == 0);
  CHECK(tot(subtract_one(flat(7, 7))) == 12);
  CHECK(tot(subtract_one(nested(7, 7))) == 12);

  // The dropped child is the first single-path one; the node stays unary.
  const Node root = subtract_one(m("BR(LEAF(A),LEAF(R))")).root({});
  const auto kids = root.successors();
  REQUIRE(kids.size() == 1);
  CHECK(kids[0].verdict() == Verdict::reject);

  // The first branching node on the leftmost path has no single-path child,
  // so the removal happens one level down.
  const Machine deeper = m("BR(BR(LEAF(A),LEAF(R)),BR(LEAF(A),LEAF(A)))");
  std::vector<Verdict> order;
  oracle::leaves(subtract_one(deeper).root({}), order);
  CHECK(order == std::vector<Verdict>{Verdict::reject, Verdict::accept, Verdict::accept});
  CHECK(subtract_one(deeper).depth_bound() == deeper.depth_bound());
}

TEST_CASE("add") {
  CHECK(tot(add(m("LEAF(A)"), m("LEAF(R)"))) == 0);
  CHECK(tot(add(flat(1, 1), m("LEAF(R)"))) == 1);
  CHECK(tot(add(m("BR(LEAF(R))"), flat(2, 0))) == 1);
  CHECK(tot(add(flat(3, 3), nested(4, 4))) == 12);
  const Machine a = flat(2, 1);
  const Machine b = nested(1, 1);
  CHECK(add(a, b).depth_bound() == 1 + std::max(a.depth_bound(), b.depth_bound()));
}

TEST_CASE("sequential composition") {
  const Machine b = flat(1, 2);
  CHECK(path_counts(seq(m("LEAF(A)"), b)) == path_counts(b));
  CHECK(path_counts(seq(flat(1, 1), b)).total == 6);
  // Conjunction of verdicts: only A-leaf then A-leaf accepts.
  CHECK(path_counts(seq(flat(1, 1), b)).accepting == 1);
  const Machine a = nested(2, 1);
  CHECK(seq(a, b).depth_bound() == a.depth_bound() + b.depth_bound() + 1);
}

TEST_CASE("multiply") {
  CHECK(tot(multiply(m("LEAF(A)"), flat(4, 4))) == 0);
  CHECK(tot(multiply(flat(1, 1), flat(0, 2))) == 1);
  CHECK(tot(multiply(flat(2, 2), nested(3, 2))) == 12);
  // Dummy rejecting leaf at child 0.
  const auto kids = multiply(flat(1, 1), flat(1, 1)).root({}).successors();
  REQUIRE(kids.size() == 2);
  CHECK(kids[0].successors().empty());
  CHECK(kids[0].verdict() == Verdict::reject);
}

TEST_CASE("double accepting") {
  CHECK(path_counts(double_accepting(flat(0, 3))) == path_counts(flat(0, 3)));
  const PathCounts one = path_counts(double_accepting(m("LEAF(A)")));
  CHECK(one.total == 2);
  CHECK(one.tot() == 1);
  const Machine x = nested(4, 3);
  CHECK(tot(double_accepting(x)) - tot(x) == 4);
  CHECK(acc(double_accepting(x)) == 8);
}

TEST_CASE("mark leftmost reject") {
  CHECK(acc(mark_leftmost_reject(m("BR(BR(LEAF(A)))"))) == 0);
  CHECK(acc(mark_leftmost_reject(flat(0, 2))) == 1);
  CHECK(acc(mark_leftmost_reject(nested(3, 7))) == 9);
  std::vector<Verdict> order;
  oracle::leaves(mark_leftmost_reject(flat(0, 3)).root({}), order);
  CHECK(order == std::vector<Verdict>{Verdict::reject, Verdict::accept, Verdict::accept});
}

TEST_CASE("acc to tot modulo k") {
  CHECK(tot(acc_to_tot_modk(flat(4, 0), 3)) == 4);
  const Machine x = flat(5, 3);
  CHECK(tot(acc_to_tot_modk(x, 3)) == 14);
  CHECK(tot(acc_to_tot_modk(x, 3)) % 3 == 5 % 3);
  CHECK_THROWS_AS(acc_to_tot_modk(x, 1), ParameterError);
  CHECK_THROWS_AS(acc_to_tot_modk(x, 0), ParameterError);
  const auto kids = acc_to_tot_modk(x, 2).root({}).successors();
  CHECK(kids[0].successors().empty());
  CHECK(kids[0].verdict() == Verdict::reject);
}

TEST_CASE("gap decomposition") {
  const Machine n = flat(3, 2);
  CHECK(gap_decompose(n, n).value() == 0);
  CHECK(gap_decompose(n, flat(0, 4)).value() == 3);
  CHECK(gap_decompose(nested(1, 1), flat(4, 1)).value() == -3);
}

TEST_CASE("polynomial-time part of the gap normal form") {
  const NormalizedGap z = fp_gap_normalize(0, flat(0, 1), 2);
  CHECK(z.shifted == 3);
  CHECK(tot(z.machine) == 3);

  const NormalizedGap g = fp_gap_normalize(5, flat(2, 1), 3);
  CHECK(g.shifted == 12);
  CHECK(g.shifted - tot(g.machine) == 3);

  CHECK_THROWS_AS(path_counts(fp_gap_normalize(0, flat(3, 3), 2).machine), NormalizationError);
}

TEST_CASE("combinator contracts over a corpus") {
  const auto c = corpus(150);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Machine& a = c[i].machine;
    const Machine& b = c[(i * 13 + 5) % c.size()].machine;
    const auto ca = oracle::census(a);
    const auto cb = oracle::census(b);
    const BigInt ta = ca.total - 1;
    const BigInt tb = cb.total - 1;
    INFO(c[i].expression);
    CHECK(tot(subtract_one(a)) == (ta > 0 ? ta - 1 : BigInt(0)));
    CHECK(tot(add(a, b)) == ta + tb);
    CHECK(tot(multiply(a, b)) == ta * tb);
    CHECK(oracle::census(seq(a, b)).total == ca.total * cb.total);
    CHECK(tot(double_accepting(a)) - ta == ca.acc);
    CHECK(acc(mark_leftmost_reject(a)) == ta);
    for (std::size_t k = 2; k <= 7; ++k) {
      const BigInt t = tot(acc_to_tot_modk(a, k));
      CHECK(t == ca.acc + k * ca.rej);
      CHECK(t % k == ca.acc % k);
    }
    CHECK(gap_decompose(a, b).value() == ca.acc - cb.acc);
    // Every output still has at least one path and verdicts only at leaves.
    CHECK(oracle::census(multiply(a, b)).total >= 1);
    CHECK(path_counts(add(a, b)) == PathCounts{oracle::census(add(a, b)).total,
                                               oracle::census(add(a, b)).acc,
                                               oracle::census(add(a, b)).rej});
  }
}

TEST_CASE("combinator outputs respect their declared depth bounds") {
  const auto c = corpus(80, 3);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    const Machine& a = c[i].machine;
    const Machine& b = c[i + 1].machine;
    for (const Machine& out : {subtract_one(a), add(a, b), multiply(a, b), seq(a, b), double_accepting(a),
                               mark_leftmost_reject(a), acc_to_tot_modk(a, 5)}) {
      CHECK(oracle::census(out).depth <= out.depth_bound());
    }
  }
}
