#include "totp/self_reduction.hpp"

#include <bit>
#include <cstdlib>

#include "totp/counting.hpp"

namespace totp {

namespace {

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

std::uint64_t low_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : bit(n) - 1; }

Graph residual_graph(const MatchingState& s) {
  const Graph& g = *s.graph;
  std::vector<std::size_t> relabel(g.vertex_count(), 0);
  std::size_t n = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (s.uncovered & bit(v)) relabel[v] = n++;
  }
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto [u, v] = g.edges()[e];
    if (s.edge_alive[e] && (s.uncovered & bit(u)) && (s.uncovered & bit(v))) {
      edges.emplace_back(relabel[u], relabel[v]);
    }
  }
  return Graph(n, std::move(edges));
}

// Index of the branching edge, or npos when the lowest uncovered vertex has
// no usable edge.
std::size_t branching_edge(const MatchingState& s) {
  const Graph& g = *s.graph;
  if (s.uncovered == 0) return static_cast<std::size_t>(-1);
  const std::size_t v = static_cast<std::size_t>(std::countr_zero(s.uncovered));
  // Edges are sorted, so the first hit is the lexicographically smallest.
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto [a, b] = g.edges()[e];
    if (!s.edge_alive[e] || (a != v && b != v)) continue;
    const std::size_t other = a == v ? b : a;
    if (s.uncovered & bit(other)) return e;
  }
  return static_cast<std::size_t>(-1);
}

bool term_consistent_with(const std::vector<Literal>& term, const AssignmentState& s) {
  for (Literal l : term) {
    for (Literal m : term)
      if (l == -m) return false;
    const std::size_t v = static_cast<std::size_t>(std::abs(l));
    if (v <= s.fixed && ((s.values & bit(v - 1)) != 0) != (l > 0)) return false;
  }
  return true;
}

// Fills in the shared pieces of the variable-fixing reductions.
SelfReduction<AssignmentState> assignment_reduction(std::string name, std::size_t variables) {
  SelfReduction<AssignmentState> sr;
  sr.name = std::move(name);
  sr.direct = [](const AssignmentState&) { return BigInt(0); };
  sr.branches = [variables](const AssignmentState& s) -> std::size_t {
    return s.fixed < variables ? 2 : 0;
  };
  sr.multiplicity = [](const AssignmentState&, std::size_t) { return BigInt(1); };
  sr.child = [](const AssignmentState& s, std::size_t i) {
    AssignmentState next{s.fixed + 1, s.values};
    if (i == 0) next.values |= bit(s.fixed);
    return next;
  };
  sr.is_base = [variables](const AssignmentState& s) { return s.fixed == variables; };
  sr.base_count = [](const AssignmentState&) { return BigInt(1); };
  sr.recursion_depth = [variables](const AssignmentState& s) { return variables - s.fixed; };
  sr.max_fanout = [](const AssignmentState&) -> std::size_t { return 2; };
  return sr;
}

}  // namespace

MatchingState initial_matching_state(const Graph& g) {
  if (g.vertex_count() > 64) throw CapacityError("matching search supports at most 64 vertices");
  return MatchingState{std::make_shared<const Graph>(g), low_mask(g.vertex_count()),
                       std::vector<bool>(g.edges().size(), true)};
}

SelfReduction<MatchingState> perfect_matching_reduction() {
  SelfReduction<MatchingState> sr;
  sr.name = "perfect-matchings";
  sr.direct = [](const MatchingState&) { return BigInt(0); };
  sr.branches = [](const MatchingState& s) -> std::size_t {
    return branching_edge(s) == static_cast<std::size_t>(-1) ? 0 : 2;
  };
  sr.multiplicity = [](const MatchingState&, std::size_t) { return BigInt(1); };
  sr.child = [](const MatchingState& s, std::size_t i) {
    const std::size_t e = branching_edge(s);
    MatchingState next = s;
    if (i == 0) {
      const auto [u, v] = s.graph->edges()[e];
      next.uncovered &= ~(bit(u) | bit(v));
    } else {
      next.edge_alive[e] = false;
    }
    return next;
  };
  sr.decides = [](const MatchingState& s) { return has_perfect_matching(residual_graph(s)); };
  sr.is_base = [](const MatchingState& s) { return s.uncovered == 0; };
  sr.base_count = [](const MatchingState&) { return BigInt(1); };
  // Every step covers two vertices or drops an edge.
  sr.recursion_depth = [](const MatchingState& s) { return s.graph->edges().size(); };
  sr.max_fanout = [](const MatchingState&) -> std::size_t { return 2; };
  return sr;
}

SelfReduction<AssignmentState> dnf_reduction(const DnfFormula& f) {
  validate(f);
  if (f.variables > 64) throw CapacityError("DNF self-reduction supports at most 64 variables");
  auto formula = std::make_shared<const DnfFormula>(f);
  auto sr = assignment_reduction("dnf-sat", f.variables);
  sr.decides = [formula](const AssignmentState& s) {
    for (const auto& t : formula->terms)
      if (term_consistent_with(t, s)) return true;
    return false;
  };
  return sr;
}

SelfReduction<AssignmentState> cnf_reduction(const CnfFormula& f, const Caps& caps) {
  validate(f);
  auto formula = std::make_shared<const CnfFormula>(f);
  auto sr = assignment_reduction("sat", f.variables);
  sr.decides = [formula, caps](const AssignmentState& s) {
    CnfFormula restricted = *formula;
    for (std::size_t v = 1; v <= s.fixed; ++v) {
      const Literal l = static_cast<Literal>(v);
      restricted.clauses.push_back({(s.values & bit(v - 1)) ? l : -l});
    }
    return count_sat(restricted, caps) > 0;
  };
  return sr;
}

SelfReduction<VertexSetState> independent_set_reduction(const Graph& g) {
  if (g.vertex_count() > 64) throw CapacityError("independent-set search supports at most 64 vertices");
  const auto adjacency = std::make_shared<const std::vector<std::uint64_t>>(g.adjacency_masks());
  const std::size_t n = g.vertex_count();
  SelfReduction<VertexSetState> sr;
  sr.name = "independent-sets";
  sr.direct = [](const VertexSetState&) { return BigInt(0); };
  sr.branches = [](const VertexSetState& s) -> std::size_t { return s.available ? 2 : 0; };
  sr.multiplicity = [](const VertexSetState&, std::size_t) { return BigInt(1); };
  sr.child = [adjacency](const VertexSetState& s, std::size_t i) {
    const std::size_t v = static_cast<std::size_t>(std::countr_zero(s.available));
    std::uint64_t rest = s.available & ~bit(v);
    if (i == 0) rest &= ~(*adjacency)[v];
    return VertexSetState{rest};
  };
  sr.decides = [](const VertexSetState&) { return true; };
  sr.is_base = [](const VertexSetState& s) { return s.available == 0; };
  sr.base_count = [](const VertexSetState&) { return BigInt(1); };
  sr.recursion_depth = [n](const VertexSetState&) { return n; };
  sr.max_fanout = [](const VertexSetState&) -> std::size_t { return 2; };
  return sr;
}

SelfReduction<Prefix> subtree_size_reduction(const SubtreeInstance& s) {
  auto inst = std::make_shared<const SubtreeInstance>(s);
  SelfReduction<Prefix> sr;
  sr.name = "subtree-size";
  sr.direct = [](const Prefix&) { return BigInt(1); };
  sr.branches = [inst](const Prefix& p) -> std::size_t { return p.length < inst->depth ? 2 : 0; };
  sr.multiplicity = [](const Prefix&, std::size_t) { return BigInt(1); };
  sr.child = [](const Prefix& p, std::size_t i) { return p.child(i == 1); };
  // Ancestors were checked on the way down; only the root is reached directly.
  sr.decides = [inst](const Prefix& p) { return inst->alive.evaluate(p); };
  sr.is_base = [inst](const Prefix& p) { return p.length == inst->depth; };
  sr.base_count = [](const Prefix&) { return BigInt(1); };
  sr.recursion_depth = [inst](const Prefix& p) { return inst->depth - p.length; };
  sr.max_fanout = [](const Prefix&) -> std::size_t { return 3; };
  return sr;
}

SelfReduction<Prefix> subtree_leaves_reduction(const SubtreeInstance& s, const Caps& caps) {
  auto inst = std::make_shared<const SubtreeInstance>(s);
  auto sr = subtree_size_reduction(s);
  sr.name = "subtree-leaves";
  sr.direct = [](const Prefix&) { return BigInt(0); };
  sr.max_fanout = [](const Prefix&) -> std::size_t { return 2; };
  sr.decides = [inst, caps](const Prefix& p) {
    // Alive leaf below p, given p's ancestors are alive.
    std::function<bool(const Prefix&)> any = [&](const Prefix& q) {
      if (!inst->alive.evaluate(q)) return false;
      if (q.length == inst->depth) return true;
      return any(q.child(false)) || any(q.child(true));
    };
    if (inst->depth - p.length > caps.max_variables) {
      throw CapacityError("subtree leaf decision beyond enumeration cap");
    }
    return any(p);
  };
  return sr;
}

Machine self_reducible_machine(const ProblemInstance& p, const Caps& caps, bool audit) {
  switch (p.kind()) {
    case ProblemKind::perfect_matchings: {
      const Graph& g = p.as<Graph>();
      if (!bipartition(g)) {
        throw ParameterError("perfect-matching self-reduction needs a bipartite graph");
      }
      SelfReductionBuild<MatchingState> build;
      if (audit) {
        build.audit_oracle = [caps](const MatchingState& s) {
          return count_perfect_matchings(*s.graph, caps);
        };
      }
      return build_self_reducible_machine(perfect_matching_reduction(), initial_matching_state(g),
                                          build);
    }
    case ProblemKind::dnf_sat: {
      const DnfFormula& f = p.as<DnfFormula>();
      SelfReductionBuild<AssignmentState> build;
      if (audit) build.audit_oracle = [f, caps](const AssignmentState&) { return count_dnf_sat(f, caps); };
      return build_self_reducible_machine(dnf_reduction(f), AssignmentState{}, build);
    }
    case ProblemKind::sat: {
      const CnfFormula& f = p.as<CnfFormula>();
      SelfReductionBuild<AssignmentState> build;
      if (audit) build.audit_oracle = [f, caps](const AssignmentState&) { return count_sat(f, caps); };
      return build_self_reducible_machine(cnf_reduction(f, caps), AssignmentState{}, build);
    }
    case ProblemKind::independent_sets: {
      const Graph& g = p.as<Graph>();
      SelfReductionBuild<VertexSetState> build;
      if (audit) {
        build.audit_oracle = [g, caps](const VertexSetState&) { return count_independent_sets(g, caps); };
      }
      return build_self_reducible_machine(independent_set_reduction(g),
                                          VertexSetState{low_mask(g.vertex_count())}, build);
    }
    case ProblemKind::subtree_size: {
      const auto& s = p.as<SubtreeInstance>();
      SelfReductionBuild<Prefix> build;
      if (audit) build.audit_oracle = [s, caps](const Prefix&) { return size_of_subtree(s, caps); };
      return build_self_reducible_machine(subtree_size_reduction(s), Prefix{}, build);
    }
    case ProblemKind::subtree_leaves: {
      const auto& s = p.as<SubtreeInstance>();
      SelfReductionBuild<Prefix> build;
      if (audit) build.audit_oracle = [s, caps](const Prefix&) { return count_full_depth_leaves(s, caps); };
      return build_self_reducible_machine(subtree_leaves_reduction(s, caps), Prefix{}, build);
    }
  }
  throw std::logic_error("unknown problem kind");
}

}  // namespace totp
