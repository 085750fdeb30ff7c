#pragma once

#include <cstddef>

#include "totp/bigint.hpp"
#include "totp/machine.hpp"

namespace totp {

// Machine transformations with exact path-count contracts. Every result is
// lazy: operands are simulated, never expanded up front. Writing tot(M) for
// total(M) - 1 and acc(M) for the accepting leaf count, on every input:

/// tot(result) = max(tot(M) - 1, 0). Along the leftmost path, the first
/// branching node with a single-path child loses that child.
Machine subtract_one(const Machine& m);

/// tot(result) = tot(A) + tot(B).
Machine add(const Machine& a, const Machine& b);

/// Every leaf of A replaced by the tree of B: total(result) = total(A) * total(B).
/// A composed leaf accepts iff both replaced leaves accept.
Machine seq(const Machine& a, const Machine& b);

/// tot(result) = tot(A) * tot(B).
Machine multiply(const Machine& a, const Machine& b);

/// Each accepting leaf splits into two: tot grows by acc(M), acc doubles.
Machine double_accepting(const Machine& m);

/// Same shape; only the leftmost leaf rejects, so acc(result) = tot(M).
Machine mark_leftmost_reject(const Machine& m);

/// Each rejecting leaf becomes k rejecting leaves, plus a rejecting dummy
/// leaf at root child 0: tot(result) = acc(M) + k * rej(M). Requires k >= 2.
Machine acc_to_tot_modk(const Machine& m, std::size_t k);

/// Integer function tot(plus) - tot(minus).
struct GapPair {
  Machine plus;
  Machine minus;

  BigInt value(const Input& x = {}) const;
};

/// Pair with tot(plus) - tot(minus) = acc(N) - acc(M).
GapPair gap_decompose(const Machine& n, const Machine& m);

struct NormalizedGap {
  BigInt shifted;   // gval + 2^p - 1
  Machine machine;  // double_accepting(normalize_perfect(M, p))
};

/// gval - acc(M) = shifted - tot(machine), whenever normalize_perfect(M, p)
/// is defined on the input.
NormalizedGap fp_gap_normalize(const BigInt& gval, const Machine& m, std::size_t p);

}  // namespace totp
