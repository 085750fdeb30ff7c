#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "totp/bigint.hpp"
#include "totp/errors.hpp"
#include "totp/machine.hpp"
#include "totp/problem.hpp"

namespace totp {

/// Recursive decomposition of a counting function f over instances I:
///
///   f(x) = t(x) + sum_{i < branches(x)} multiplicity(x, i) * f(child(x, i))
///
/// with base instances counted directly. `decides(x)` must equal f(x) > 0.
template <typename I>
struct SelfReduction {
  std::string name;
  std::function<BigInt(const I&)> direct;                       // t(x)
  std::function<std::size_t(const I&)> branches;               // r(x) + 1
  std::function<BigInt(const I&, std::size_t)> multiplicity;    // g(x, i)
  std::function<I(const I&, std::size_t)> child;                // h(x, i)
  std::function<bool(const I&)> decides;                        // x in L_f
  std::function<bool(const I&)> is_base;
  std::function<BigInt(const I&)> base_count;
  std::function<std::size_t(const I&)> recursion_depth;        // q for the root instance
  std::function<std::size_t(const I&)> max_fanout;             // widest search-tree node
};

template <typename I>
struct SelfReductionBuild {
  /// When set, the finished machine is re-counted and compared with it.
  std::function<BigInt(const I&)> audit_oracle;
};

namespace detail {

template <typename I>
class SearchNode final : public NodeImpl {
 public:
  SearchNode(std::shared_ptr<const SelfReduction<I>> sr, I instance)
      : sr_(std::move(sr)), instance_(std::move(instance)) {}

  std::vector<Node> successors() const override {
    const SelfReduction<I>& sr = *sr_;
    std::vector<Node> kids;
    const Node leaf = make_leaf(Verdict::accept);
    auto push_leaves = [&](const BigInt& n) {
      if (n < 0) throw AuditError(sr.name + ": negative leaf count");
      for (BigInt c = 0; c < n; ++c) kids.push_back(leaf);
    };
    if (sr.is_base(instance_)) {
      push_leaves(sr.base_count(instance_));
    } else {
      push_leaves(sr.direct(instance_));
      const std::size_t r = sr.branches(instance_);
      for (std::size_t i = 0; i < r; ++i) {
        const BigInt g = sr.multiplicity(instance_, i);
        if (g <= 0) continue;
        I sub = sr.child(instance_, i);
        if (!sr.decides(sub)) continue;
        Node n(std::make_shared<SearchNode<I>>(sr_, std::move(sub)));
        for (BigInt c = 0; c < g; ++c) kids.push_back(n);
      }
    }
    if (kids.empty()) {
      throw AuditError(sr.name + ": an instance decided positive generated no paths");
    }
    return kids;
  }

  Verdict verdict() const override { return Verdict::accept; }

 private:
  std::shared_ptr<const SelfReduction<I>> sr_;
  I instance_;
};

}  // namespace detail

/// Machine with tot = f(x). A negative decision gives a single rejecting
/// leaf; otherwise the root branches into an accepting dummy leaf and the
/// search tree, whose leaves number f(x).
template <typename I>
Machine build_self_reducible_machine(SelfReduction<I> sr, const I& x,
                                     const SelfReductionBuild<I>& build = {}) {
  auto shared = std::make_shared<const SelfReduction<I>>(std::move(sr));
  const bool positive = shared->decides(x);
  const std::size_t depth = shared->recursion_depth(x) + 2;
  const std::size_t fanout = std::max<std::size_t>(2, shared->max_fanout(x));
  Node root = positive
                  ? make_branch({make_leaf(Verdict::accept),
                                 Node(std::make_shared<detail::SearchNode<I>>(shared, x))})
                  : make_leaf(Verdict::reject);
  Machine m(MachineKind::base_problem, depth, fanout, "PROB(" + shared->name + ")",
            [root](const Input&) { return root; });
  if (build.audit_oracle) {
    const BigInt expected = build.audit_oracle(x);
    const BigInt got = path_counts(m).tot();
    if (got != expected || positive != (expected > 0)) {
      throw AuditError(shared->name + ": machine gives tot " + got.str() + ", oracle gives " +
                       expected.str());
    }
  }
  return m;
}

// Shipped self-reductions. Each branches left on "include" and right on
// "exclude", matching the left/right convention of the matching search.

/// Perfect matchings of a bipartite graph: branch on the smallest edge at
/// the smallest uncovered vertex.
struct MatchingState {
  std::shared_ptr<const Graph> graph;
  std::uint64_t uncovered = 0;
  std::vector<bool> edge_alive;
};
SelfReduction<MatchingState> perfect_matching_reduction();
MatchingState initial_matching_state(const Graph& g);

/// Satisfying assignments of a DNF formula, fixing variables in order
/// (true first).
struct AssignmentState {
  std::size_t fixed = 0;      // variables 1..fixed are assigned
  std::uint64_t values = 0;   // bit v-1 set iff variable v is true
};
SelfReduction<AssignmentState> dnf_reduction(const DnfFormula& f);

/// Satisfying assignments of a CNF formula; the decision enumerates, so
/// this one is for small formulas only.
SelfReduction<AssignmentState> cnf_reduction(const CnfFormula& f, const Caps& caps);

/// Independent sets: include or exclude the lowest available vertex.
struct VertexSetState {
  std::uint64_t available = 0;
};
SelfReduction<VertexSetState> independent_set_reduction(const Graph& g);

/// Alive nodes of a pruned tree: each alive node counts itself and recurses
/// into its children.
SelfReduction<Prefix> subtree_size_reduction(const SubtreeInstance& s);

/// Alive full-depth leaves of a pruned tree (enumerating decision).
SelfReduction<Prefix> subtree_leaves_reduction(const SubtreeInstance& s, const Caps& caps);

/// Dispatches on the problem kind. Perfect matchings require a bipartite
/// graph (ParameterError otherwise). With `audit`, the result is checked
/// against the brute-force count.
Machine self_reducible_machine(const ProblemInstance& p, const Caps& caps = {}, bool audit = false);

}  // namespace totp
