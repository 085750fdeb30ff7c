#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "totp/bigint.hpp"
#include "totp/formula.hpp"
#include "totp/graph.hpp"
#include "totp/subtree.hpp"

namespace totp {

/// Enumeration limits for the brute-force oracles.
struct Caps {
  std::size_t max_variables = 20;  // CNF/DNF variables and subtree depth
  std::size_t max_vertices = 16;
  std::size_t max_scaling_exponent = 64;
};

/// A counting problem: which function of the instance is being counted.
enum class ProblemKind {
  sat,               // CNF satisfying assignments
  dnf_sat,           // DNF satisfying assignments
  perfect_matchings,
  independent_sets,  // all sizes, including the empty set
  subtree_size,      // alive nodes of a pruned tree
  subtree_leaves,    // alive nodes at full depth
};

const char* to_string(ProblemKind k);

using InstanceData = std::variant<CnfFormula, DnfFormula, Graph, SubtreeInstance>;

/// An instance tagged with the counting problem it is posed for. The
/// constructor rejects data of the wrong shape for the kind.
class ProblemInstance {
 public:
  ProblemInstance(ProblemKind kind, InstanceData data, std::string id = {});

  ProblemKind kind() const { return kind_; }
  const InstanceData& data() const { return data_; }
  const std::string& id() const { return id_; }

  template <typename T>
  const T& as() const { return std::get<T>(data_); }

 private:
  ProblemKind kind_;
  InstanceData data_;
  std::string id_;
};

/// File text of the instance in its native format.
std::string serialize(const ProblemInstance& p);

}  // namespace totp
