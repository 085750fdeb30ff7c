#include "totp/machine.hpp"

#include <algorithm>
#include <utility>

#include "totp/errors.hpp"
#include "traversal.hpp"

namespace totp {

namespace {

class LeafNode final : public NodeImpl {
 public:
  explicit LeafNode(Verdict v) : verdict_(v) {}
  std::vector<Node> successors() const override { return {}; }
  Verdict verdict() const override { return verdict_; }

 private:
  Verdict verdict_;
};

class BranchNode final : public NodeImpl {
 public:
  explicit BranchNode(std::vector<Node> children) : children_(std::move(children)) {}
  std::vector<Node> successors() const override { return children_; }
  Verdict verdict() const override {
    throw EvaluationError("verdict requested on an internal node");
  }

 private:
  std::vector<Node> children_;
};

// Binarization. A Cascade holds >= 2 siblings and splits off the first one.
Node binarize_node(const Node& n);

class CascadeNode final : public NodeImpl {
 public:
  explicit CascadeNode(std::vector<Node> siblings) : siblings_(std::move(siblings)) {}

  std::vector<Node> successors() const override {
    if (siblings_.size() == 2) return {binarize_node(siblings_[0]), binarize_node(siblings_[1])};
    std::vector<Node> rest(siblings_.begin() + 1, siblings_.end());
    return {binarize_node(siblings_[0]), Node(std::make_shared<CascadeNode>(std::move(rest)))};
  }
  Verdict verdict() const override {
    throw EvaluationError("verdict requested on an internal node");
  }

 private:
  std::vector<Node> siblings_;
};

class BinarizedNode final : public NodeImpl {
 public:
  // `node` already has its unary chain contracted.
  BinarizedNode(Node node, std::vector<Node> kids) : node_(std::move(node)), kids_(std::move(kids)) {}

  std::vector<Node> successors() const override {
    if (kids_.empty()) return {};
    if (kids_.size() == 2) return {binarize_node(kids_[0]), binarize_node(kids_[1])};
    std::vector<Node> rest(kids_.begin() + 1, kids_.end());
    return {binarize_node(kids_[0]), Node(std::make_shared<CascadeNode>(std::move(rest)))};
  }
  Verdict verdict() const override { return node_.verdict(); }

 private:
  Node node_;
  std::vector<Node> kids_;
};

Node binarize_node(const Node& n) {
  Node cur = n;
  auto kids = cur.successors();
  while (kids.size() == 1) {
    cur = kids.front();
    kids = cur.successors();
  }
  return Node(std::make_shared<BinarizedNode>(std::move(cur), std::move(kids)));
}

// Normal form. `source` is a node of the binarized tree (or a leaf being
// carried down its leftmost padding path); `remaining` is the distance to
// depth p.
class PaddingNode final : public NodeImpl {
 public:
  explicit PaddingNode(std::size_t remaining) : remaining_(remaining) {}
  std::vector<Node> successors() const override {
    if (remaining_ == 0) return {};
    Node child(std::make_shared<PaddingNode>(remaining_ - 1));
    return {child, child};
  }
  Verdict verdict() const override { return Verdict::reject; }

 private:
  std::size_t remaining_;
};

class NormalNode final : public NodeImpl {
 public:
  NormalNode(Node source, std::size_t remaining) : source_(std::move(source)), remaining_(remaining) {}

  std::vector<Node> successors() const override {
    auto kids = source_.successors();
    if (remaining_ == 0) {
      if (!kids.empty()) throw NormalizationError("binarized tree is deeper than the target depth");
      return {};
    }
    if (kids.empty()) {
      return {Node(std::make_shared<NormalNode>(source_, remaining_ - 1)),
              Node(std::make_shared<PaddingNode>(remaining_ - 1))};
    }
    return {Node(std::make_shared<NormalNode>(kids[0], remaining_ - 1)),
            Node(std::make_shared<NormalNode>(kids[1], remaining_ - 1))};
  }
  Verdict verdict() const override { return source_.verdict(); }

 private:
  Node source_;
  std::size_t remaining_;
};

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > kUnboundedDepth / a) return kUnboundedDepth;
  return a * b;
}

}  // namespace

Node make_leaf(Verdict v) { return Node(std::make_shared<LeafNode>(v)); }

Node make_branch(std::vector<Node> children) {
  if (children.empty()) throw EvaluationError("branch node needs at least one child");
  return Node(std::make_shared<BranchNode>(std::move(children)));
}

const char* to_string(MachineKind kind) {
  switch (kind) {
    case MachineKind::leaf: return "leaf";
    case MachineKind::branch: return "branch";
    case MachineKind::base_problem: return "base-problem";
    case MachineKind::combinator: return "combinator";
  }
  return "?";
}

Machine::Machine(MachineKind kind, std::size_t depth_bound, std::size_t fanout_bound,
                 std::string label, RootFn root)
    : kind_(kind),
      depth_bound_(depth_bound),
      fanout_bound_(fanout_bound),
      label_(std::move(label)),
      root_(std::move(root)) {}

Machine leaf_machine(Verdict v) {
  Node leaf = make_leaf(v);
  return Machine(MachineKind::leaf, 0, 1, std::string("LEAF(") + verdict_char(v) + ")",
                 [leaf](const Input&) { return leaf; });
}

Machine branch_machine(std::vector<Machine> children) {
  if (children.empty()) throw EvaluationError("branch machine needs at least one child");
  std::size_t depth = 0;
  std::size_t fanout = children.size();
  std::string label = "BR(";
  for (std::size_t i = 0; i < children.size(); ++i) {
    depth = std::max(depth, children[i].depth_bound());
    fanout = std::max(fanout, children[i].fanout_bound());
    if (i) label += ',';
    label += children[i].label();
  }
  label += ')';
  return Machine(MachineKind::branch, depth + 1, fanout, std::move(label),
                 [children = std::move(children)](const Input& x) {
                   std::vector<Node> roots;
                   roots.reserve(children.size());
                   for (const auto& c : children) roots.push_back(c.root(x));
                   return make_branch(std::move(roots));
                 });
}

Machine perfect_tree_machine(std::size_t depth, Verdict v) {
  Node n = make_leaf(v);
  for (std::size_t d = 0; d < depth; ++d) n = make_branch({n, n});
  return Machine(depth == 0 ? MachineKind::leaf : MachineKind::branch, depth, 2,
                 "PERFECT(" + std::to_string(depth) + ")", [n](const Input&) { return n; });
}

std::string format_counts(const PathCounts& c) {
  return "total=" + c.total.str() + " acc=" + c.accepting.str() + " rej=" + c.rejecting.str() +
         " tot=" + c.tot().str() + " gap=" + c.gap().str();
}

PathCounts path_counts(const Machine& m, const Input& x) {
  // Leaves arrive one at a time, so 64-bit partial counters flushed into the
  // exact totals are enough.
  constexpr std::uint64_t kFlush = std::uint64_t{1} << 62;
  std::uint64_t acc = 0;
  std::uint64_t rej = 0;
  PathCounts out;
  detail::for_each_leaf(m.root(x), m.depth_bound(), m.fanout_bound(), [&](Verdict v) {
    std::uint64_t& slot = v == Verdict::accept ? acc : rej;
    if (++slot == kFlush) {
      (v == Verdict::accept ? out.accepting : out.rejecting) += slot;
      slot = 0;
    }
  });
  out.accepting += acc;
  out.rejecting += rej;
  out.total = out.accepting + out.rejecting;
  return out;
}

std::vector<Node> leftmost_path(const Machine& m, const Input& x) {
  std::vector<Node> path{m.root(x)};
  for (;;) {
    auto kids = path.back().successors();
    if (kids.empty()) return path;
    if (path.size() > m.depth_bound()) {
      throw EvaluationError("depth bound " + std::to_string(m.depth_bound()) +
                            " exceeded on the leftmost path at depth " +
                            std::to_string(path.size()));
    }
    path.push_back(kids.front());
  }
}

bool is_deterministic_subtree(const Node& n, std::size_t depth_budget) {
  Node cur = n;
  std::size_t depth = 0;
  for (;;) {
    auto kids = cur.successors();
    if (kids.empty()) return true;
    if (kids.size() > 1) return false;
    if (++depth > depth_budget) {
      throw EvaluationError("depth bound exceeded while following a deterministic chain");
    }
    cur = kids.front();
  }
}

Machine binarize(const Machine& m) {
  // Each original edge becomes at most fanout-1 binary edges.
  std::size_t depth = saturating_mul(m.depth_bound(), std::max<std::size_t>(m.fanout_bound(), 2) - 1);
  return Machine(m.kind(), depth, 2, "BIN(" + m.label() + ")",
                 [m](const Input& x) { return binarize_node(m.root(x)); });
}

Machine normalize_perfect(const Machine& m, std::size_t p) {
  Machine bin = binarize(m);
  return Machine(MachineKind::combinator, p, 2,
                 "NORM(" + m.label() + "," + std::to_string(p) + ")", [bin, p](const Input& x) {
                   Node root = bin.root(x);
                   // Precondition: the binarized tree on x fits in depth p.
                   try {
                     detail::for_each_leaf(root, p, 2, [](Verdict) {});
                   } catch (const NormalizationError&) {
                     throw;
                   } catch (const EvaluationError& e) {
                     throw NormalizationError("cannot normalize to depth " + std::to_string(p) +
                                              ": " + e.what());
                   }
                   return Node(std::make_shared<NormalNode>(root, p));
                 });
}

namespace {

void count_paths(const Node& n, std::size_t depth, std::size_t depth_bound, std::uint64_t limit,
                 BigInt& counter) {
  auto kids = n.successors();
  if (kids.empty()) {
    counter += 1;
    if (counter > limit) throw CapacityError("path limit " + std::to_string(limit) + " exceeded");
    return;
  }
  if (depth + 1 > depth_bound) {
    throw EvaluationError("depth bound " + std::to_string(depth_bound) + " exceeded");
  }
  for (const auto& k : kids) count_paths(k, depth + 1, depth_bound, limit, counter);
}

}  // namespace

BigInt evaluate_poly_bounded(const Machine& m, const Input& x, std::uint64_t path_limit) {
  BigInt counter = 0;
  count_paths(m.root(x), 0, m.depth_bound(), path_limit, counter);
  return counter - 1;
}

}  // namespace totp
