#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "totp/bigint.hpp"

namespace totp {

enum class Verdict : std::uint8_t { accept, reject };

inline char verdict_char(Verdict v) { return v == Verdict::accept ? 'A' : 'R'; }

class Node;

/// One configuration of a nondeterministic computation. Implementations are
/// immutable and generate their successors on demand.
class NodeImpl {
 public:
  virtual ~NodeImpl() = default;

  /// Ordered successors; empty exactly at leaves.
  virtual std::vector<Node> successors() const = 0;

  /// Only meaningful at leaves.
  virtual Verdict verdict() const = 0;
};

/// Cheap-to-copy handle over a shared immutable NodeImpl.
class Node {
 public:
  explicit Node(std::shared_ptr<const NodeImpl> impl) : impl_(std::move(impl)) {}

  std::vector<Node> successors() const { return impl_->successors(); }
  Verdict verdict() const { return impl_->verdict(); }

  const NodeImpl* get() const { return impl_.get(); }

 private:
  std::shared_ptr<const NodeImpl> impl_;
};

Node make_leaf(Verdict v);

/// Static internal node. Throws EvaluationError if `children` is empty.
Node make_branch(std::vector<Node> children);

enum class MachineKind : std::uint8_t { leaf, branch, base_problem, combinator };

const char* to_string(MachineKind kind);

using Input = std::string;
using RootFn = std::function<Node(const Input&)>;

/// A machine is a family of computation trees indexed by input. The depth
/// bound stands in for the machine's polynomial running-time bound and is
/// enforced on every traversal, as is the fan-out bound.
class Machine {
 public:
  Machine(MachineKind kind, std::size_t depth_bound, std::size_t fanout_bound,
          std::string label, RootFn root);

  Node root(const Input& x) const { return root_(x); }

  MachineKind kind() const { return kind_; }
  std::size_t depth_bound() const { return depth_bound_; }
  std::size_t fanout_bound() const { return fanout_bound_; }
  const std::string& label() const { return label_; }

 private:
  MachineKind kind_;
  std::size_t depth_bound_;
  std::size_t fanout_bound_;
  std::string label_;
  RootFn root_;
};

Machine leaf_machine(Verdict v);

/// Machine whose root branches over the operands' roots, in order.
Machine branch_machine(std::vector<Machine> children);

/// Perfect binary tree of the given depth with every leaf labelled `v`.
Machine perfect_tree_machine(std::size_t depth, Verdict v);

struct PathCounts {
  BigInt total;
  BigInt accepting;
  BigInt rejecting;

  BigInt tot() const { return total - 1; }
  BigInt gap() const { return accepting - rejecting; }

  friend bool operator==(const PathCounts&, const PathCounts&) = default;
};

/// "total=.. acc=.. rej=.. tot=.. gap=.."
std::string format_counts(const PathCounts& c);

/// Exact leaf census by full traversal of M's tree on x.
PathCounts path_counts(const Machine& m, const Input& x = {});

/// Nodes visited by always descending to child 0, root first.
std::vector<Node> leftmost_path(const Machine& m, const Input& x = {});

inline constexpr std::size_t kUnboundedDepth = std::numeric_limits<std::size_t>::max();

/// True iff no node under `n` has more than one successor. Throws
/// EvaluationError if the chain is longer than `depth_budget` edges.
bool is_deterministic_subtree(const Node& n, std::size_t depth_budget = kUnboundedDepth);

/// Equivalent machine where every internal node has exactly two children.
/// Wider nodes become right-leaning cascades and unary chains are contracted.
Machine binarize(const Machine& m);

/// Pads binarize(m) to the perfect binary tree of depth p. Each original
/// leaf at prefix w keeps its verdict at slot w0...0; all other slots
/// reject. Instantiating the result on an input whose binarized tree is
/// deeper than p throws NormalizationError.
Machine normalize_perfect(const Machine& m, std::size_t p);

/// Deterministic simulation of every path with a running counter; returns
/// the path count minus one. Throws CapacityError once more than
/// `path_limit` paths have been seen.
BigInt evaluate_poly_bounded(const Machine& m, const Input& x = {},
                             std::uint64_t path_limit = std::numeric_limits<std::uint64_t>::max());

}  // namespace totp
