#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "totp/bigint.hpp"
#include "totp/class_problems.hpp"
#include "totp/problem.hpp"

namespace totp {

/// Instance map h between counting problems; parsimonious when
/// f(x) = g(h(x)) for the source and target counting functions.
struct Reduction {
  std::string name;
  ProblemKind source;
  ProblemKind target;
  std::function<ProblemInstance(const ProblemInstance&)> transform;
};

/// Checks the input kind and the kind of the produced instance
/// (KindMismatchError otherwise).
ProblemInstance apply_reduction(const Reduction& r, const ProblemInstance& x);

/// transform = second after first. Throws KindMismatchError unless
/// first.target == second.source.
Reduction compose(const Reduction& first, const Reduction& second);

struct ParsimonyEntry {
  std::string id;
  std::optional<BigInt> source_count;  // empty when the oracle hit a cap
  std::optional<BigInt> target_count;
  bool ok = false;
  std::string note;                    // error text for failed evaluations
};

struct ParsimonyReport {
  std::string reduction;
  std::string corpus;
  std::vector<ParsimonyEntry> entries;

  bool passed() const;
  std::size_t failures() const;

  /// One "OK|FAIL <f> <g> <id>" line per instance, then a summary line.
  std::string str() const;
};

/// Evaluates f(x) and g(R(x)) for every x in `instances`. Capacity and
/// format errors are recorded as failed entries; they never abort the run.
ParsimonyReport check_parsimonious(const Reduction& r, const CountingOracle<ProblemInstance>& f,
                                   const CountingOracle<ProblemInstance>& g,
                                   const std::vector<ProblemInstance>& instances,
                                   std::string corpus_description = {});

Reduction identity_reduction(ProblemKind kind);

/// Variable permutation drawn from `seed` and the variable count; literal
/// signs are kept.
Reduction cnf_renaming(std::uint64_t seed);
Reduction dnf_renaming(std::uint64_t seed);

/// DNF over n variables to the depth-n assignment tree: a prefix is alive
/// when it is shorter than n, or when it is a full assignment satisfying
/// the formula. Satisfying assignments are exactly the alive leaves.
Reduction dnf_to_subtree_leaves();

/// Negative control: drops the last clause of a CNF. Not parsimonious.
Reduction broken_drop_last_clause();

/// The reductions shipped as parsimonious.
std::vector<Reduction> shipped_reductions();

}  // namespace totp
