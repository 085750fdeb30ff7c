#include "totp/counting.hpp"

#include <bit>
#include <cstdlib>
#include <deque>
#include <functional>
#include <unordered_map>

#include "totp/errors.hpp"
#include "totp/kernels/model_count.hpp"

namespace totp {

namespace {

void require_variables(std::size_t n, const Caps& caps, const char* what) {
  if (n > caps.max_variables || n > kernels::kMaxVariables) {
    throw CapacityError(std::string(what) + " has " + std::to_string(n) +
                        " variables; enumeration cap is " + std::to_string(caps.max_variables));
  }
}

void require_vertices(const Graph& g, const Caps& caps) {
  if (g.vertex_count() > caps.max_vertices || g.vertex_count() > 64) {
    throw CapacityError("graph has " + std::to_string(g.vertex_count()) +
                        " vertices; enumeration cap is " + std::to_string(caps.max_vertices));
  }
}

bool group_consistent(const std::vector<Literal>& term) {
  for (Literal a : term)
    for (Literal b : term)
      if (a == -b) return false;
  return true;
}

// Edmonds' blossom algorithm (BFS from each exposed vertex, contracting odd
// cycles through their base).
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : n_(g.vertex_count()), adj_(g.adjacency_lists()), match_(n_, npos) {}

  std::size_t run() {
    std::size_t size = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (match_[i] != npos) continue;
      std::size_t v = find_augmenting_path(i);
      if (v != npos) ++size;
      while (v != npos) {
        std::size_t pv = parent_[v];
        std::size_t ppv = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = ppv;
      }
    }
    return size;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t lowest_common_base(std::size_t a, std::size_t b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == npos) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(std::size_t v, std::size_t b, std::size_t child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  std::size_t find_augmenting_path(std::size_t root) {
    used_.assign(n_, false);
    parent_.assign(n_, npos);
    base_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != npos && parent_[match_[to]] != npos)) {
          std::size_t cur = lowest_common_base(v, to);
          in_blossom_.assign(n_, false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == npos) {
          parent_[to] = v;
          if (match_[to] == npos) return to;
          used_[match_[to]] = true;
          queue.push_back(match_[to]);
        }
      }
    }
    return npos;
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

// Alive prefix-closed nodes; `leaves_only` counts just those at full depth.
std::uint64_t count_alive(const SubtreeInstance& s, const Prefix& p, bool leaves_only) {
  if (!s.alive.evaluate(p)) return 0;
  if (p.length == s.depth) return 1;
  return (leaves_only ? 0 : 1) + count_alive(s, p.child(false), leaves_only) +
         count_alive(s, p.child(true), leaves_only);
}

bool any_alive_leaf(const SubtreeInstance& s, const Prefix& p) {
  if (!s.alive.evaluate(p)) return false;
  if (p.length == s.depth) return true;
  return any_alive_leaf(s, p.child(false)) || any_alive_leaf(s, p.child(true));
}

}  // namespace

BigInt count_sat(const CnfFormula& f, const Caps& caps) {
  validate(f);
  require_variables(f.variables, caps, "CNF formula");
  const auto masks = to_masks(f.clauses);
  return kernels::count_cnf_models(masks, static_cast<unsigned>(f.variables));
}

BigInt count_dnf_sat(const DnfFormula& f, const Caps& caps) {
  validate(f);
  require_variables(f.variables, caps, "DNF formula");
  const auto masks = to_masks(f.terms);
  return kernels::count_dnf_models(masks, static_cast<unsigned>(f.variables));
}

BigInt unsat_count(const DnfFormula& f, const Caps& caps) {
  return pow2(f.variables) - count_dnf_sat(f, caps);
}

BigInt count_perfect_matchings(const Graph& g, const Caps& caps) {
  require_vertices(g, caps);
  const std::size_t n = g.vertex_count();
  if (n % 2) return 0;
  const auto adj = g.adjacency_masks();
  std::unordered_map<std::uint64_t, BigInt> memo;
  std::function<BigInt(std::uint64_t)> rec = [&](std::uint64_t uncovered) -> BigInt {
    if (uncovered == 0) return 1;
    auto it = memo.find(uncovered);
    if (it != memo.end()) return it->second;
    const unsigned v = static_cast<unsigned>(std::countr_zero(uncovered));
    const std::uint64_t rest = uncovered & ~(std::uint64_t{1} << v);
    BigInt total = 0;
    for (std::uint64_t partners = adj[v] & rest; partners; partners &= partners - 1) {
      const unsigned u = static_cast<unsigned>(std::countr_zero(partners));
      total += rec(rest & ~(std::uint64_t{1} << u));
    }
    memo.emplace(uncovered, total);
    return total;
  };
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return rec(all);
}

BigInt count_independent_sets(const Graph& g, const Caps& caps) {
  require_vertices(g, caps);
  if (g.vertex_count() > kernels::kMaxVariables) {
    throw CapacityError("independent-set enumeration supports at most " +
                        std::to_string(kernels::kMaxVariables) + " vertices");
  }
  // Each edge forbids both endpoints: the clause (not u or not v).
  std::vector<kernels::LiteralMask> clauses;
  clauses.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) {
    clauses.push_back({0, (std::uint64_t{1} << u) | (std::uint64_t{1} << v)});
  }
  return kernels::count_cnf_models(clauses, static_cast<unsigned>(g.vertex_count()));
}

BigInt size_of_subtree(const SubtreeInstance& s, const Caps& caps) {
  require_variables(s.depth, caps, "subtree instance");
  return count_alive(s, Prefix{}, false);
}

BigInt count_full_depth_leaves(const SubtreeInstance& s, const Caps& caps) {
  require_variables(s.depth, caps, "subtree instance");
  return count_alive(s, Prefix{}, true);
}

BigInt count(const ProblemInstance& p, const Caps& caps) {
  switch (p.kind()) {
    case ProblemKind::sat: return count_sat(p.as<CnfFormula>(), caps);
    case ProblemKind::dnf_sat: return count_dnf_sat(p.as<DnfFormula>(), caps);
    case ProblemKind::perfect_matchings: return count_perfect_matchings(p.as<Graph>(), caps);
    case ProblemKind::independent_sets: return count_independent_sets(p.as<Graph>(), caps);
    case ProblemKind::subtree_size: return size_of_subtree(p.as<SubtreeInstance>(), caps);
    case ProblemKind::subtree_leaves: return count_full_depth_leaves(p.as<SubtreeInstance>(), caps);
  }
  throw std::logic_error("unknown problem kind");
}

bool dnf_satisfiable(const DnfFormula& f) {
  validate(f);
  for (const auto& t : f.terms)
    if (group_consistent(t)) return true;
  return false;
}

std::size_t maximum_matching_size(const Graph& g) { return BlossomMatcher(g).run(); }

bool has_perfect_matching(const Graph& g) {
  if (g.vertex_count() % 2) return false;
  return 2 * maximum_matching_size(g) == g.vertex_count();
}

bool decision(const ProblemInstance& p, const Caps& caps) {
  switch (p.kind()) {
    case ProblemKind::sat: return count_sat(p.as<CnfFormula>(), caps) > 0;
    case ProblemKind::dnf_sat: return dnf_satisfiable(p.as<DnfFormula>());
    case ProblemKind::perfect_matchings: return has_perfect_matching(p.as<Graph>());
    case ProblemKind::independent_sets: return true;
    case ProblemKind::subtree_size: return p.as<SubtreeInstance>().alive.evaluate(Prefix{});
    case ProblemKind::subtree_leaves: {
      const auto& s = p.as<SubtreeInstance>();
      require_variables(s.depth, caps, "subtree instance");
      return any_alive_leaf(s, Prefix{});
    }
  }
  throw std::logic_error("unknown problem kind");
}

}  // namespace totp
