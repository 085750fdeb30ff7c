#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "totp/config.hpp"

namespace totp {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;  // first few failures, serialized
  std::vector<std::string> details;          // extra report lines

  bool passed() const { return failures == 0 && cases > 0; }
};

struct CheckReport {
  std::string proposition;
  std::vector<SuiteResult> suites;

  bool passed() const;
  const SuiteResult* find(std::string_view suite) const;

  /// Deterministic report text: details, one PASS/FAIL line per suite with
  /// its counterexamples, and a final summary line.
  std::string body() const;
  std::string summary() const;
};

/// Known proposition ids, in the order "all" runs them.
const std::vector<std::string>& proposition_ids();
bool known_proposition(std::string_view id);

/// Runs the invariant suite for `id` over the corpus described by `cfg`.
/// Capacity errors propagate; other evaluation errors count as failures.
CheckReport run_check(std::string_view id, const RunConfig& cfg);

// Fixtures shared with the tests.

/// Graph from a '+'-joined list of K2, C4, K4, K6, K33, K44, L4..L8, P3,
/// E0 (empty) components.
Graph graph_from_spec(std::string_view spec);

/// CNF over `variables` variables with exactly `models` satisfying
/// assignments: the first 2^n - models assignments are each excluded by a
/// full-width clause.
CnfFormula cnf_with_count(std::size_t variables, std::size_t models);

struct ScalingQuadruple {
  std::size_t variables;
  std::size_t sat_plus, sat_minus;  // #Sat(phi), #Sat(phi')
  std::string graph_plus, graph_minus;
  std::size_t pm_plus, pm_minus;    // #PerfMatch(G), #PerfMatch(G')
  std::size_t t;
};

/// Hand-built quadruples with 2^T (sat_plus - sat_minus) = pm_plus - pm_minus.
const std::vector<ScalingQuadruple>& scaling_quadruples();

}  // namespace totp
