#pragma once

#include "totp/bigint.hpp"
#include "totp/problem.hpp"

namespace totp {

// Exact brute-force oracles. Each throws CapacityError when the instance is
// beyond `caps`.

BigInt count_sat(const CnfFormula& f, const Caps& caps = {});
BigInt count_dnf_sat(const DnfFormula& f, const Caps& caps = {});

/// 2^n - count_dnf_sat(f).
BigInt unsat_count(const DnfFormula& f, const Caps& caps = {});

/// Memoized recursion: match the lowest uncovered vertex with each free
/// neighbour in turn.
BigInt count_perfect_matchings(const Graph& g, const Caps& caps = {});

BigInt count_independent_sets(const Graph& g, const Caps& caps = {});

BigInt size_of_subtree(const SubtreeInstance& s, const Caps& caps = {});
BigInt count_full_depth_leaves(const SubtreeInstance& s, const Caps& caps = {});

/// Dispatch on the instance's problem kind.
BigInt count(const ProblemInstance& p, const Caps& caps = {});

// Decision versions (count > 0).

/// Some term has no complementary pair of literals.
bool dnf_satisfiable(const DnfFormula& f);

/// Edmonds' blossom algorithm; works on general graphs.
bool has_perfect_matching(const Graph& g);

/// Size of a maximum matching (blossom algorithm).
std::size_t maximum_matching_size(const Graph& g);

/// CNF and full-depth-leaf decisions fall back to enumeration and are
/// subject to caps; the others run in polynomial time.
bool decision(const ProblemInstance& p, const Caps& caps = {});

}  // namespace totp
