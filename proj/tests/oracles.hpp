#pragma once

// Independent reference computations used only by the tests. None of these
// call the library's counters.

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "totp/bigint.hpp"
#include "totp/formula.hpp"
#include "totp/graph.hpp"
#include "totp/machine.hpp"
#include "totp/subtree.hpp"

namespace oracle {

struct Census {
  totp::BigInt total, acc, rej;
  std::size_t depth = 0;
};

// Plain recursion over successors(), no bounds.
inline Census census(const totp::Node& n) {
  Census c;
  const auto kids = n.successors();
  if (kids.empty()) {
    c.total = 1;
    (n.verdict() == totp::Verdict::accept ? c.acc : c.rej) = 1;
    return c;
  }
  for (const auto& k : kids) {
    const Census s = census(k);
    c.total += s.total;
    c.acc += s.acc;
    c.rej += s.rej;
    c.depth = std::max(c.depth, s.depth + 1);
  }
  return c;
}

inline Census census(const totp::Machine& m) { return census(m.root({})); }

inline totp::BigInt tot(const totp::Machine& m) { return census(m).total - 1; }

// Leaf verdicts, left to right.
inline void leaves(const totp::Node& n, std::vector<totp::Verdict>& out) {
  const auto kids = n.successors();
  if (kids.empty()) {
    out.push_back(n.verdict());
    return;
  }
  for (const auto& k : kids) leaves(k, out);
}

inline bool literal_true(int l, std::uint64_t assignment) {
  const bool v = (assignment >> (std::abs(l) - 1)) & 1;
  return l > 0 ? v : !v;
}

inline std::uint64_t cnf_models(const totp::CnfFormula& f) {
  std::uint64_t n = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << f.variables); ++a) {
    bool all = true;
    for (const auto& c : f.clauses) {
      bool any = false;
      for (int l : c) any = any || literal_true(l, a);
      all = all && any;
    }
    n += all;
  }
  return n;
}

inline std::uint64_t dnf_models(const totp::DnfFormula& f) {
  std::uint64_t n = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << f.variables); ++a) {
    bool any = false;
    for (const auto& t : f.terms) {
      bool all = true;
      for (int l : t) all = all && literal_true(l, a);
      any = any || all;
    }
    n += any;
  }
  return n;
}

// Edge subsets of size n/2 that touch every vertex.
inline std::uint64_t perfect_matchings(const totp::Graph& g) {
  const auto& e = g.edges();
  const std::size_t n = g.vertex_count();
  if (n % 2) return 0;
  if (e.size() > 30) std::abort();
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << e.size()); ++s) {
    if (static_cast<std::size_t>(__builtin_popcountll(s)) != n / 2) continue;
    std::uint64_t covered = 0;
    bool ok = true;
    for (std::size_t i = 0; i < e.size() && ok; ++i) {
      if (!(s >> i & 1)) continue;
      const std::uint64_t m = (std::uint64_t{1} << e[i].first) | (std::uint64_t{1} << e[i].second);
      ok = (covered & m) == 0;
      covered |= m;
    }
    count += ok;
  }
  return count;
}

inline std::uint64_t independent_sets(const totp::Graph& g) {
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.vertex_count()); ++s) {
    bool ok = true;
    for (const auto& [u, v] : g.edges()) ok = ok && !((s >> u & 1) && (s >> v & 1));
    count += ok;
  }
  return count;
}

// Nodes (or full-depth leaves) whose every prefix is alive.
inline std::uint64_t alive_nodes(const totp::SubtreeInstance& s, bool leaves_only) {
  std::uint64_t count = 0;
  for (std::size_t len = 0; len <= s.depth; ++len) {
    if (leaves_only && len != s.depth) continue;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      bool ok = true;
      for (std::size_t k = 0; k <= len && ok; ++k) {
        const std::uint64_t mask = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
        ok = s.alive.evaluate(totp::Prefix{bits & mask, k});
      }
      count += ok;
    }
  }
  return count;
}

}  // namespace oracle
