#include "totp/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "totp/class_problems.hpp"
#include "totp/combinators.hpp"
#include "totp/counting.hpp"
#include "totp/errors.hpp"
#include "totp/expression.hpp"
#include "totp/reductions.hpp"
#include "totp/self_reduction.hpp"

namespace totp {

namespace {

constexpr std::size_t kShownCounterexamples = 5;

class Suite {
 public:
  explicit Suite(std::string name) { r_.name = std::move(name); }

  // `body` returns nullopt on success or a description of what went wrong;
  // `context` is only rendered for failures.
  template <typename Body, typename Context>
  void check(Body&& body, Context&& context) {
    ++r_.cases;
    std::optional<std::string> bad;
    try {
      bad = body();
    } catch (const CapacityError&) {
      throw;
    } catch (const Error& e) {
      bad = std::string("raised: ") + e.what();
    }
    if (!bad) return;
    ++r_.failures;
    if (r_.counterexamples.size() < kShownCounterexamples) {
      r_.counterexamples.push_back(context() + " " + *bad);
    }
  }

  void detail(std::string line) { r_.details.push_back(std::move(line)); }

  SuiteResult done() { return std::move(r_); }

 private:
  SuiteResult r_;
};

std::optional<std::string> expect_eq(const BigInt& expected, const BigInt& got, const char* what) {
  if (expected == got) return std::nullopt;
  return std::string(what) + " expected " + expected.str() + " got " + got.str();
}

using Corpus = std::vector<CorpusEntry>;

std::vector<PathCounts> measure(const Corpus& c) {
  std::vector<PathCounts> out;
  out.reserve(c.size());
  for (const auto& e : c) out.push_back(path_counts(e.machine));
  return out;
}

std::string one(const CorpusEntry& e) { return "M#" + std::to_string(e.index) + "=" + e.expression; }

std::string two(const CorpusEntry& a, const CorpusEntry& b) { return one(a) + " " + one(b); }

// ---------------------------------------------------------------- machines

SuiteResult sub1_suite(const Corpus& c, const std::vector<PathCounts>& pc) {
  Suite s("closure-sub1");
  for (std::size_t i = 0; i < c.size(); ++i) {
    s.check(
        [&]() {
          const BigInt want = pc[i].tot() > 0 ? pc[i].tot() - 1 : BigInt(0);
          return expect_eq(want, path_counts(subtract_one(c[i].machine)).tot(), "tot");
        },
        [&] { return one(c[i]); });
  }
  return s.done();
}

// Every ordered pair of corpus machines.
template <typename Combine, typename Expected>
SuiteResult pair_suite(const char* name, const Corpus& c, const std::vector<PathCounts>& pc,
                       Combine combine, Expected expected) {
  Suite s(name);
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      s.check([&]() { return expect_eq(expected(pc[i], pc[j]), path_counts(combine(c[i].machine, c[j].machine)).tot(), "tot"); },
              [&] { return two(c[i], c[j]); });
    }
  }
  return s.done();
}

SuiteResult add_suite(const Corpus& c, const std::vector<PathCounts>& pc) {
  return pair_suite("closure-add", c, pc, add,
                    [](const PathCounts& a, const PathCounts& b) { return a.tot() + b.tot(); });
}

SuiteResult mul_suite(const Corpus& c, const std::vector<PathCounts>& pc) {
  return pair_suite("closure-mul", c, pc, multiply,
                    [](const PathCounts& a, const PathCounts& b) { return a.tot() * b.tot(); });
}

// Pairs (i, i+1) and (i, 37i+11), indices mod the corpus size.
std::vector<std::pair<std::size_t, std::size_t>> sampled_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace_back(i, (i + 1) % n);
    out.emplace_back(i, (37 * i + 11) % n);
  }
  return out;
}

SuiteResult gap_suite(const Corpus& c, const std::vector<PathCounts>& pc) {
  Suite s("gap-decompose");
  for (const auto& [i, j] : sampled_pairs(c.size())) {
    s.check(
        [&]() {
          return expect_eq(pc[i].accepting - pc[j].accepting,
                           gap_decompose(c[i].machine, c[j].machine).value(), "tot(plus)-tot(minus)");
        },
        [&] { return "N=" + one(c[i]) + " M=" + one(c[j]); });
  }
  return s.done();
}

// Depth of the binarized tree, recomputed from the original: a node of
// fan-out b puts child i at depth min(i+1, b-1) of its cascade; unary nodes
// vanish.
std::size_t binarized_depth(const Node& n) {
  const auto kids = n.successors();
  if (kids.empty()) return 0;
  if (kids.size() == 1) return binarized_depth(kids[0]);
  std::size_t d = 0;
  for (std::size_t i = 0; i < kids.size(); ++i) {
    d = std::max(d, std::min(i + 1, kids.size() - 1) + binarized_depth(kids[i]));
  }
  return d;
}

std::vector<SuiteResult> normalize_suites(const Corpus& c, const std::vector<PathCounts>& pc) {
  std::vector<SuiteResult> out;
  Suite bin("binarize");
  for (std::size_t i = 0; i < c.size(); ++i) {
    bin.check(
        [&]() -> std::optional<std::string> {
          const PathCounts got = path_counts(binarize(c[i].machine));
          if (got == pc[i]) return std::nullopt;
          return "counts " + format_counts(got) + " instead of " + format_counts(pc[i]);
        },
        [&] { return one(c[i]); });
  }
  out.push_back(bin.done());
  Suite pre("normalize-precondition");
  for (std::size_t p = 4; p <= 8; ++p) {
    Suite s("normalize p=" + std::to_string(p));
    for (std::size_t i = 0; i < c.size(); ++i) {
      const bool fits = binarized_depth(c[i].machine.root({})) <= p;
      const Machine norm = normalize_perfect(c[i].machine, p);
      if (!fits) {
        pre.check(
            [&]() -> std::optional<std::string> {
              try {
                path_counts(norm);
              } catch (const NormalizationError&) {
                return std::nullopt;
              }
              return "normalized although the binarized tree is deeper than p=" + std::to_string(p);
            },
            [&] { return one(c[i]); });
        continue;
      }
      // A fixed, index-dependent value for the FP side of the identity.
      const BigInt gval = BigInt(static_cast<long>(i % 17)) - 8;
      s.check(
          [&]() -> std::optional<std::string> {
            const PathCounts n = path_counts(norm);
            if (n.accepting != pc[i].accepting) return expect_eq(pc[i].accepting, n.accepting, "acc");
            if (n.total != pow2(p)) return expect_eq(pow2(p), n.total, "total");
            const NormalizedGap g = fp_gap_normalize(gval, c[i].machine, p);
            return expect_eq(gval - pc[i].accepting, g.shifted - path_counts(g.machine).tot(),
                             "g'-tot(M'')");
          },
          [&] { return one(c[i]) + " p=" + std::to_string(p); });
    }
    out.push_back(s.done());
  }
  out.push_back(pre.done());
  return out;
}

std::vector<SuiteResult> modk_suites(const Corpus& c, const std::vector<PathCounts>& pc,
                                     const std::vector<std::size_t>& ks) {
  std::vector<SuiteResult> out;
  for (std::size_t k : ks) {
    Suite s("modk k=" + std::to_string(k));
    for (std::size_t i = 0; i < c.size(); ++i) {
      s.check(
          [&]() -> std::optional<std::string> {
            const BigInt tot = path_counts(acc_to_tot_modk(c[i].machine, k)).tot();
            if (auto bad = expect_eq(pc[i].accepting + k * pc[i].rejecting, tot, "tot")) return bad;
            return expect_eq(residue_verdict(pc[i].accepting, k).residue, residue_verdict(tot, k).residue,
                             "residue");
          },
          [&] { return one(c[i]) + " k=" + std::to_string(k); });
    }
    out.push_back(s.done());
  }
  return out;
}

std::vector<SuiteResult> parity_suites(const Corpus& c, const std::vector<PathCounts>& pc) {
  Suite mark("mark-leftmost");
  Suite conv("parity-conversion");
  for (std::size_t i = 0; i < c.size(); ++i) {
    mark.check(
        [&]() { return expect_eq(pc[i].tot(), path_counts(mark_leftmost_reject(c[i].machine)).accepting, "acc"); },
        [&] { return one(c[i]); });
    conv.check(
        [&]() -> std::optional<std::string> {
          const auto acc = acc_oracle(c[i].machine);
          const auto tot = tot_oracle(acc_to_tot_modk(c[i].machine, 2));
          if (parity_of(acc, Input{}) == parity_of(tot, Input{})) return std::nullopt;
          return std::string("parity of acc and of tot(MODK(M,2)) differ");
        },
        [&] { return one(c[i]); });
  }
  return {mark.done(), conv.done()};
}

std::vector<SuiteResult> poly_bounded_suites(const Corpus& c, const std::vector<PathCounts>& pc) {
  Suite poly("poly-bounded");
  Suite core("core-invariants");
  for (std::size_t i = 0; i < c.size(); ++i) {
    poly.check([&]() { return expect_eq(pc[i].tot(), evaluate_poly_bounded(c[i].machine), "tot"); },
               [&] { return one(c[i]); });
    core.check(
        [&]() -> std::optional<std::string> {
          if (pc[i].total < 1) return std::string("empty tree");
          if (pc[i].accepting + pc[i].rejecting != pc[i].total) return std::string("acc+rej != total");
          const auto path = leftmost_path(c[i].machine);
          if (path.size() > c[i].machine.depth_bound() + 1) return std::string("leftmost path too long");
          return std::nullopt;
        },
        [&] { return one(c[i]); });
  }
  return {poly.done(), core.done()};
}

// Deliberately wrong addition: branching without the subtract-one step
// overcounts by one whenever both operands branch.
Machine mutated_add(const Machine& a, const Machine& b) { return branch_machine({a, b}); }

SuiteResult negative_control_suite(const Corpus& c, const std::vector<PathCounts>& pc) {
  Suite s("mutated-add");
  for (const auto& [i, j] : sampled_pairs(c.size())) {
    s.check(
        [&]() {
          return expect_eq(pc[i].tot() + pc[j].tot(), path_counts(mutated_add(c[i].machine, c[j].machine)).tot(),
                           "tot");
        },
        [&] { return two(c[i], c[j]); });
  }
  return s.done();
}

// ---------------------------------------------------------------- problems

std::string instance_text(const ProblemInstance& p) {
  std::string s = serialize(p);
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

void self_reduction_case(Suite& s, const ProblemInstance& p, const Caps& caps) {
  s.check(
      [&]() {
        return expect_eq(count(p, caps), path_counts(self_reducible_machine(p, caps)).tot(), "tot");
      },
      [&] { return std::string(to_string(p.kind())) + " " + instance_text(p); });
}

std::vector<SuiteResult> self_reduction_suites(const RunConfig& cfg) {
  const Caps& caps = cfg.caps;
  std::vector<SuiteResult> out;
  {
    // Every labelled bipartite graph with sides {0..a-1} and {a..a+b-1}, a <= b, a+b <= 8.
    Suite s("self-reduction perfect-matchings exhaustive");
    for (std::size_t a = 1; a <= 4; ++a) {
      for (std::size_t b = a; a + b <= 8; ++b) {
        std::vector<bool> side(a + b, false);
        for (std::size_t u = 0; u < a; ++u) side[u] = true;
        const std::size_t slots = a * b;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
          std::vector<Edge> edges;
          for (std::size_t e = 0; e < slots; ++e)
            if (mask >> e & 1) edges.emplace_back(e / b, a + e % b);
          self_reduction_case(s, ProblemInstance(ProblemKind::perfect_matchings, Graph(a + b, std::move(edges), side)),
                    caps);
        }
      }
    }
    out.push_back(s.done());
  }
  Rng rng(cfg.corpus.seed ^ 0xf1f1f1f1ULL);
  {
    Suite s("self-reduction perfect-matchings random");
    for (std::size_t i = 0; i < 120; ++i) {
      const std::size_t left = rng.between(1, 6);
      const std::size_t right = rng.percent(70) ? left : rng.between(1, 12 - left);
      self_reduction_case(s, ProblemInstance(ProblemKind::perfect_matchings,
                                   random_bipartite(rng, left, right, static_cast<unsigned>(rng.between(30, 90)))),
                caps);
    }
    out.push_back(s.done());
  }
  {
    Suite s("self-reduction dnf-sat");
    for (std::size_t i = 0; i < 200; ++i) {
      const std::size_t n = rng.between(1, 10);
      self_reduction_case(s, ProblemInstance(ProblemKind::dnf_sat, random_dnf(rng, n, rng.between(0, 6), 4)), caps);
    }
    out.push_back(s.done());
  }
  {
    Suite s("self-reduction independent-sets");
    for (std::size_t i = 0; i < 200; ++i) {
      const std::size_t n = rng.between(0, 10);
      self_reduction_case(s, ProblemInstance(ProblemKind::independent_sets,
                                   random_graph(rng, n, static_cast<unsigned>(rng.between(10, 70)))),
                caps);
    }
    out.push_back(s.done());
  }
  {
    Suite s("self-reduction subtree");
    for (std::size_t i = 0; i < 100; ++i) {
      const auto t = random_subtree(rng, rng.between(0, 8), rng.between(1, 8));
      self_reduction_case(s, ProblemInstance(ProblemKind::subtree_size, t), caps);
      self_reduction_case(s, ProblemInstance(ProblemKind::subtree_leaves, t), caps);
    }
    out.push_back(s.done());
  }
  {
    Suite s("self-reduction sat");
    for (std::size_t i = 0; i < 50; ++i) {
      const std::size_t n = rng.between(1, 8);
      self_reduction_case(s, ProblemInstance(ProblemKind::sat, random_cnf(rng, n, rng.between(0, 8), 3)), caps);
    }
    out.push_back(s.done());
  }
  return out;
}

ProblemInstance random_instance(Rng& rng, ProblemKind kind, std::size_t i) {
  const std::string id = std::string(to_string(kind)) + "#" + std::to_string(i);
  switch (kind) {
    case ProblemKind::sat:
      return {kind, random_cnf(rng, rng.between(1, 4), rng.between(0, 5), 3), id};
    case ProblemKind::dnf_sat:
      return {kind, random_dnf(rng, rng.between(1, 4), rng.between(0, 4), 3), id};
    case ProblemKind::perfect_matchings:
      return {kind, random_graph(rng, 2 * rng.between(1, 3), static_cast<unsigned>(rng.between(30, 90))), id};
    case ProblemKind::independent_sets:
      return {kind, random_graph(rng, rng.between(0, 4), static_cast<unsigned>(rng.between(20, 80))), id};
    case ProblemKind::subtree_size:
    case ProblemKind::subtree_leaves:
      return {kind, random_subtree(rng, rng.between(0, 3), rng.between(1, 5)), id};
  }
  throw std::logic_error("unknown problem kind");
}

template <typename X>
void diff_case(Suite& s, Suite& off, const CountingOracle<X>& a, const X& x, const X& y,
               const std::vector<std::size_t>& ks, const std::function<std::string()>& context) {
  s.check(
      [&]() -> std::optional<std::string> {
        const BigInt cx = a.count(x);
        const BigInt cy = a.count(y);
        const BigInt d = cx - cy;
        const bool eq = diff_eq0(a, x, y);
        const bool gt = diff_gt0(a, x, y);
        const bool lt = diff_gt0(a, y, x);
        if (eq != (cx == cy)) return std::string("diff_eq0 disagrees");
        if (gt != (cx > cy)) return std::string("diff_gt0 disagrees");
        if (int(eq) + int(gt) + int(lt) != 1) return std::string("trichotomy violated");
        if (parity_of(a, x) != (cx % 2 == 1)) return std::string("parity_of disagrees");
        if (parity_of(a, x) != modk_of(a, x, 2).accept) return std::string("parity_of != modk_of(2)");
        for (std::size_t k : ks) {
          const auto r = modk_of(a, x, k);
          if (r.residue != cx % k || r.accept != (cx % k != 0)) return "modk_of disagrees at k=" + std::to_string(k);
        }
        for (long k = 1; k <= 4; ++k) {
          const PromiseVerdict v = k == 1 ? diff_eq1(a, x, y) : diff_eqg(a, x, y, BigInt(k));
          const PromiseVerdict want = d == k   ? PromiseVerdict::yes()
                                      : d == 0 ? PromiseVerdict::no()
                                               : PromiseVerdict::violated(d);
          if (v != want) return "k=" + std::to_string(k) + " gave " + v.str() + " instead of " + want.str();
          if (v.is_yes() && (eq || !gt)) return std::string("YES without a positive difference");
        }
        return std::nullopt;
      },
      context);
  // Off-promise pairs for diff_eq1, tallied separately.
  const BigInt d = a.count(x) - a.count(y);
  if (d != 0 && d != 1) {
    off.check(
        [&]() -> std::optional<std::string> {
          const PromiseVerdict v = diff_eq1(a, x, y);
          if (v.is_violated() && v.difference() == d) return std::nullopt;
          return "gave " + v.str() + " for difference " + d.str();
        },
        context);
  }
}

std::vector<SuiteResult> diff_family_suites(const RunConfig& cfg, const Corpus& c) {
  std::vector<SuiteResult> out;
  Rng rng(cfg.corpus.seed ^ 0xd1ffULL);
  const auto oracle = problem_oracle(cfg.caps);
  Suite off("diff-family off-promise");
  for (ProblemKind kind : {ProblemKind::sat, ProblemKind::dnf_sat, ProblemKind::perfect_matchings,
                           ProblemKind::independent_sets, ProblemKind::subtree_size,
                           ProblemKind::subtree_leaves}) {
    Suite s(std::string("diff-family ") + to_string(kind));
    for (std::size_t i = 0; i < 200; ++i) {
      const ProblemInstance x = random_instance(rng, kind, 2 * i);
      const ProblemInstance y = i % 10 == 0 ? x : random_instance(rng, kind, 2 * i + 1);
      diff_case<ProblemInstance>(s, off, oracle, x, y, cfg.ks,
                                 [&] { return instance_text(x) + " vs " + instance_text(y); });
    }
    out.push_back(s.done());
  }
  {
    // Machine-backed oracle: acc over corpus machines.
    Suite s("diff-family machine-acc");
    const CountingOracle<Machine> acc{"acc", [](const Machine& m) { return path_counts(m).accepting; }};
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < std::min<std::size_t>(n, 200); ++i) {
      const std::size_t j = (7 * i + 3) % n;
      diff_case<Machine>(s, off, acc, c[i].machine, c[j].machine, cfg.ks, [&] { return two(c[i], c[j]); });
    }
    out.push_back(s.done());
  }
  out.push_back(off.done());
  {
    // Table conditions evaluated on acc(M) and gap(M) of corpus machines.
    Suite s("class-conditions");
    for (const auto& e : c) {
      s.check(
          [&]() -> std::optional<std::string> {
            const PathCounts pc = path_counts(e.machine);
            const BigInt& a = pc.accepting;
            const BigInt g = pc.gap();
            auto expect = [](bool inside, bool accept, const BigInt& v) {
              if (!inside) return PromiseVerdict::violated(v);
              return accept ? PromiseVerdict::yes() : PromiseVerdict::no();
            };
            const BigInt bound = pc.total;
            const std::vector<std::pair<PromiseVerdict, PromiseVerdict>> rows = {
                {evaluate_condition(ClassCondition::up, a), expect(a <= 1, a == 1, a)},
                {evaluate_condition(ClassCondition::fewp, a, bound), expect(true, a > 0, a)},
                {evaluate_condition(ClassCondition::parity, a), expect(true, a % 2 == 1, a)},
                {evaluate_condition(ClassCondition::modk, a, 3), expect(true, a % 3 != 0, a)},
                {evaluate_condition(ClassCondition::spp, g), expect(g == 0 || g == 1, g == 1, g)},
                {evaluate_condition(ClassCondition::wpp, g, bound), expect(g == 0 || g == bound, g == bound, g)},
                {evaluate_condition(ClassCondition::ceq, g), expect(true, g == 0, g)},
                {evaluate_condition(ClassCondition::pp, g), expect(true, g > 0, g)},
            };
            for (std::size_t r = 0; r < rows.size(); ++r) {
              if (rows[r].first != rows[r].second) {
                return "condition row " + std::to_string(r) + " gave " + rows[r].first.str() +
                       " instead of " + rows[r].second.str();
              }
            }
            return std::nullopt;
          },
          [&] { return one(e); });
    }
    out.push_back(s.done());
  }
  return out;
}

std::vector<SuiteResult> scaling_suites(const RunConfig& cfg) {
  std::vector<SuiteResult> out;
  const Caps& caps = cfg.caps;
  {
    Suite s("scaling reflexive");
    Rng rng(cfg.corpus.seed ^ 0x5ca1eULL);
    for (std::size_t i = 0; i < 100; ++i) {
      const CnfFormula phi = random_cnf(rng, rng.between(1, 8), rng.between(0, 6), 3);
      const Graph g = random_graph(rng, rng.between(0, 10), 50);
      const std::size_t t = rng.between(0, std::min<std::size_t>(caps.max_scaling_exponent, 64));
      s.check([&]() -> std::optional<std::string> {
                if (verify_diff_scaling(phi, phi, g, g, t, caps)) return std::nullopt;
                return std::string("reflexive quadruple rejected");
              },
              [&] { return "phi=" + to_dimacs(phi) + " T=" + std::to_string(t); });
    }
    out.push_back(s.done());
  }
  Suite counts("scaling counts");
  Suite hand("scaling hand-built");
  Suite perturbed("scaling perturbed-T");
  for (const auto& q : scaling_quadruples()) {
    const CnfFormula phi = cnf_with_count(q.variables, q.sat_plus);
    const CnfFormula phi_prime = cnf_with_count(q.variables, q.sat_minus);
    const Graph g = graph_from_spec(q.graph_plus);
    const Graph g_prime = graph_from_spec(q.graph_minus);
    auto context = [&] {
      return "(" + std::to_string(q.sat_plus) + "," + std::to_string(q.sat_minus) + "," + q.graph_plus +
             "," + q.graph_minus + ",T=" + std::to_string(q.t) + ")";
    };
    counts.check(
        [&]() -> std::optional<std::string> {
          if (auto bad = expect_eq(q.sat_plus, count_sat(phi, caps), "#Sat(phi)")) return bad;
          if (auto bad = expect_eq(q.sat_minus, count_sat(phi_prime, caps), "#Sat(phi')")) return bad;
          if (auto bad = expect_eq(q.pm_plus, count_perfect_matchings(g, caps), "#PerfMatch(G)")) return bad;
          return expect_eq(q.pm_minus, count_perfect_matchings(g_prime, caps), "#PerfMatch(G')");
        },
        context);
    hand.check(
        [&]() -> std::optional<std::string> {
          if (verify_diff_scaling(phi, phi_prime, g, g_prime, q.t, caps)) return std::nullopt;
          return std::string("identity rejected");
        },
        context);
    if (q.sat_plus == q.sat_minus) continue;  // 0 = 0 holds for every T
    for (std::size_t t : {q.t + 1, q.t - 1}) {
      if (t > q.t + 1) continue;  // q.t == 0
      perturbed.check(
          [&]() -> std::optional<std::string> {
            if (!verify_diff_scaling(phi, phi_prime, g, g_prime, t, caps)) return std::nullopt;
            return "identity accepted at T=" + std::to_string(t);
          },
          context);
    }
  }
  out.push_back(counts.done());
  out.push_back(hand.done());
  out.push_back(perturbed.done());
  return out;
}

std::vector<ProblemInstance> parsimony_instances(ProblemKind kind, std::uint64_t seed, std::size_t n) {
  Rng rng(seed ^ (0x9a75ULL + static_cast<std::uint64_t>(kind)));
  std::vector<ProblemInstance> out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string id = std::string(to_string(kind)) + "#" + std::to_string(i);
    switch (kind) {
      case ProblemKind::sat:
        out.emplace_back(kind, random_cnf(rng, rng.between(1, 10), rng.between(1, 12), 3), id);
        break;
      case ProblemKind::dnf_sat:
        out.emplace_back(kind, random_dnf(rng, rng.between(1, 10), rng.between(0, 8), 4), id);
        break;
      case ProblemKind::perfect_matchings:
        out.emplace_back(kind, random_graph(rng, rng.between(0, 10), 50), id);
        break;
      default:
        throw std::logic_error("no parsimony corpus for this kind");
    }
  }
  return out;
}

std::vector<SuiteResult> parsimony_suites(const RunConfig& cfg) {
  std::vector<SuiteResult> out;
  const auto oracle = problem_oracle(cfg.caps);
  constexpr std::size_t kInstances = 120;
  auto run = [&](const Reduction& r, bool expect_parsimonious) {
    const auto corpus = parsimony_instances(r.source, cfg.corpus.seed, kInstances);
    const ParsimonyReport rep = check_parsimonious(
        r, oracle, oracle, corpus,
        std::to_string(kInstances) + " random " + to_string(r.source) + " instances, seed " +
            std::to_string(cfg.corpus.seed));
    Suite s((expect_parsimonious ? "parsimony " : "negative-control ") + r.name);
    std::istringstream lines(rep.str());
    for (std::string line; std::getline(lines, line);) s.detail(line);
    if (expect_parsimonious) {
      for (const auto& e : rep.entries) {
        s.check([&]() -> std::optional<std::string> {
                  if (e.ok) return std::nullopt;
                  return "f=" + (e.source_count ? e.source_count->str() : "?") +
                         " g=" + (e.target_count ? e.target_count->str() : "?") + " " + e.note;
                },
                [&] { return e.id; });
      }
    } else {
      // The control passes when the checker catches it with a witness.
      s.check(
          [&]() -> std::optional<std::string> {
            if (!rep.passed()) return std::nullopt;
            return std::string("broken reduction was not caught");
          },
          [&] { return r.name; });
      for (const auto& e : rep.entries) {
        if (!e.ok) {
          std::string witness = "counterexample: " + e.id +
                                " f=" + (e.source_count ? e.source_count->str() : "?") +
                                " g=" + (e.target_count ? e.target_count->str() : "?");
          for (const auto& x : corpus)
            if (x.id() == e.id) witness += " instance=" + instance_text(x);
          s.detail(witness);
          break;
        }
      }
    }
    out.push_back(s.done());
  };
  for (const auto& r : shipped_reductions()) run(r, true);
  run(broken_drop_last_clause(), false);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- reports

bool CheckReport::passed() const {
  if (suites.empty()) return false;
  for (const auto& s : suites)
    if (!s.passed()) return false;
  return true;
}

const SuiteResult* CheckReport::find(std::string_view suite) const {
  for (const auto& s : suites)
    if (s.name == suite) return &s;
  return nullptr;
}

std::string CheckReport::summary() const {
  std::size_t failed = 0;
  for (const auto& s : suites) failed += !s.passed();
  return std::string(passed() ? "PASS " : "FAIL ") + proposition + ": " +
         std::to_string(suites.size() - failed) + "/" + std::to_string(suites.size()) + " suites passed";
}

std::string CheckReport::body() const {
  std::ostringstream out;
  for (const auto& s : suites) {
    for (const auto& d : s.details) out << d << '\n';
    out << (s.passed() ? "PASS " : "FAIL ") << s.name << " cases=" << s.cases
        << " failures=" << s.failures << '\n';
    for (const auto& c : s.counterexamples) out << "  counterexample: " << c << '\n';
  }
  out << summary() << '\n';
  return out.str();
}

const std::vector<std::string>& proposition_ids() {
  static const std::vector<std::string> ids = {
      "closure-sub1", "closure-add", "closure-mul", "closure",     "gap",
      "normalize",    "modk",        "parity",      "poly-bounded", "self-reduction",
      "diff-family",  "scaling",     "parsimony",   "negative-control"};
  return ids;
}

bool known_proposition(std::string_view id) {
  const auto& ids = proposition_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

CheckReport run_check(std::string_view id, const RunConfig& cfg) {
  if (!known_proposition(id)) throw ParameterError("unknown proposition '" + std::string(id) + "'");
  CheckReport report{std::string(id), {}};
  auto& out = report.suites;
  auto append = [&out](std::vector<SuiteResult> more) {
    for (auto& s : more) out.push_back(std::move(s));
  };

  const bool needs_corpus = id != "self-reduction" && id != "scaling" && id != "parsimony";
  Corpus corpus;
  std::vector<PathCounts> pc;
  if (needs_corpus) {
    corpus = generate_corpus(cfg.corpus);
    pc = measure(corpus);
  }

  if (id == "closure-sub1" || id == "closure") out.push_back(sub1_suite(corpus, pc));
  if (id == "closure-add" || id == "closure") out.push_back(add_suite(corpus, pc));
  if (id == "closure-mul" || id == "closure") out.push_back(mul_suite(corpus, pc));
  if (id == "gap") out.push_back(gap_suite(corpus, pc));
  if (id == "normalize") append(normalize_suites(corpus, pc));
  if (id == "modk") append(modk_suites(corpus, pc, cfg.ks));
  if (id == "parity") append(parity_suites(corpus, pc));
  if (id == "poly-bounded") append(poly_bounded_suites(corpus, pc));
  if (id == "self-reduction") append(self_reduction_suites(cfg));
  if (id == "diff-family") append(diff_family_suites(cfg, corpus));
  if (id == "scaling") append(scaling_suites(cfg));
  if (id == "parsimony") append(parsimony_suites(cfg));
  if (id == "negative-control") out.push_back(negative_control_suite(corpus, pc));
  return report;
}

// ---------------------------------------------------------------- fixtures

Graph graph_from_spec(std::string_view spec) {
  Graph g;
  while (!spec.empty()) {
    const auto plus = spec.find('+');
    const std::string_view part = spec.substr(0, plus);
    spec = plus == std::string_view::npos ? std::string_view{} : spec.substr(plus + 1);
    Graph c;
    if (part == "K2") {
      c = complete_graph(2);
    } else if (part == "C4") {
      c = cycle_graph(4);
    } else if (part == "K4") {
      c = complete_graph(4);
    } else if (part == "K6") {
      c = complete_graph(6);
    } else if (part == "K33") {
      c = complete_bipartite(3, 3);
    } else if (part == "K44") {
      c = complete_bipartite(4, 4);
    } else if (part == "P3") {
      c = path_graph(3);
    } else if (part == "E0") {
      c = Graph();
    } else if (part.size() == 2 && part[0] == 'L' && part[1] >= '1' && part[1] <= '8') {
      c = ladder_graph(static_cast<std::size_t>(part[1] - '0'));
    } else {
      throw FormatError("unknown graph component '" + std::string(part) + "'");
    }
    g = disjoint_union(g, c);
  }
  return g;
}

CnfFormula cnf_with_count(std::size_t variables, std::size_t models) {
  if (variables > 20) throw CapacityError("cnf_with_count supports at most 20 variables");
  const std::size_t all = std::size_t{1} << variables;
  if (models > all) throw ParameterError("more models requested than assignments");
  CnfFormula f{variables, {}};
  for (std::size_t a = 0; a < all - models; ++a) {
    std::vector<Literal> clause;
    for (std::size_t v = 0; v < variables; ++v) {
      const Literal l = static_cast<Literal>(v + 1);
      // The clause is false exactly on assignment a.
      clause.push_back((a >> v & 1) ? -l : l);
    }
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

const std::vector<ScalingQuadruple>& scaling_quadruples() {
  // Component counts: K2 1, C4 2, K4 3, K33 6, K6 15, K44 24, L4 5, L5 8,
  // L6 13, L7 21, L8 34, P3 0, E0 1; unions multiply.
  static const std::vector<ScalingQuadruple> q = {
      {2, 1, 0, "C4+C4", "P3", 4, 0, 2},
      {2, 1, 0, "K4", "K2", 3, 1, 1},
      {2, 1, 0, "K33", "C4", 6, 2, 2},
      {2, 2, 1, "K44", "C4+C4+C4+C4", 24, 16, 3},
      {2, 3, 1, "K6", "L6", 15, 13, 0},
      {2, 2, 0, "L4", "K2", 5, 1, 1},
      {2, 1, 0, "L5", "P3", 8, 0, 3},
      {3, 1, 0, "L6", "L4", 13, 5, 3},
      {2, 0, 1, "K2", "K4", 1, 3, 1},
      {3, 0, 2, "P3", "L5", 0, 8, 2},
      {3, 4, 4, "K4", "K4", 3, 3, 5},
      {3, 5, 2, "K33", "K4", 6, 3, 0},
      {2, 3, 0, "K44", "P3", 24, 0, 3},
      {2, 1, 0, "K4+K4", "L5", 9, 8, 0},
      {2, 2, 1, "K33+C4", "C4+C4", 12, 4, 3},
      {3, 6, 4, "L6", "L4", 13, 5, 2},
      {2, 1, 0, "K44", "L5", 24, 8, 4},
      {3, 8, 6, "K44", "C4+C4+C4+C4", 24, 16, 2},
      {2, 1, 1, "C4+K2", "C4", 2, 2, 4},
      {3, 3, 2, "K4+K4+C4", "C4+C4+C4+C4", 18, 16, 1},
      {2, 2, 0, "K33+K33", "C4+C4", 36, 4, 4},
      {1, 1, 0, "K2", "P3", 1, 0, 0},
      {2, 0, 1, "P3", "C4+C4+C4", 0, 8, 3},
      {4, 10, 3, "L8", "K33", 34, 6, 2},
      {3, 2, 1, "L7", "L6", 21, 13, 3},
  };
  return q;
}

}  // namespace totp
