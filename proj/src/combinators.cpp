#include "totp/combinators.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "totp/errors.hpp"

namespace totp {

namespace {

// Wraps the one node on the leftmost path that is still searching for a
// deterministic child to drop. Everything off that path is returned raw.
class SubtractOneNode final : public NodeImpl {
 public:
  SubtractOneNode(Node node, std::size_t depth_budget)
      : node_(std::move(node)), depth_budget_(depth_budget) {}

  std::vector<Node> successors() const override {
    auto kids = node_.successors();
    if (kids.size() >= 2) {
      for (std::size_t i = 0; i < kids.size(); ++i) {
        if (is_deterministic_subtree(kids[i], depth_budget_)) {
          kids.erase(kids.begin() + static_cast<std::ptrdiff_t>(i));
          return kids;
        }
      }
    }
    if (!kids.empty()) {
      std::size_t budget = depth_budget_ == 0 ? 0 : depth_budget_ - 1;
      kids.front() = Node(std::make_shared<SubtractOneNode>(kids.front(), budget));
    }
    return kids;
  }
  Verdict verdict() const override { return node_.verdict(); }

 private:
  Node node_;
  std::size_t depth_budget_;
};

Node subtract_one_node(const Node& root, std::size_t depth_bound) {
  if (is_deterministic_subtree(root, depth_bound)) return root;
  return Node(std::make_shared<SubtractOneNode>(root, depth_bound));
}

// B-tree node hanging below an A-leaf with verdict `upper`.
class ConjunctionNode final : public NodeImpl {
 public:
  ConjunctionNode(Node node, Verdict upper) : node_(std::move(node)), upper_(upper) {}

  std::vector<Node> successors() const override {
    auto kids = node_.successors();
    for (auto& k : kids) k = Node(std::make_shared<ConjunctionNode>(k, upper_));
    return kids;
  }
  Verdict verdict() const override {
    return upper_ == Verdict::accept && node_.verdict() == Verdict::accept ? Verdict::accept
                                                                           : Verdict::reject;
  }

 private:
  Node node_;
  Verdict upper_;
};

class SeqNode final : public NodeImpl {
 public:
  SeqNode(Node a, Node b_root) : a_(std::move(a)), b_root_(std::move(b_root)) {}

  std::vector<Node> successors() const override {
    auto kids = a_.successors();
    if (!kids.empty()) {
      for (auto& k : kids) k = Node(std::make_shared<SeqNode>(k, b_root_));
      return kids;
    }
    Verdict upper = a_.verdict();
    auto b_kids = b_root_.successors();
    for (auto& k : b_kids) k = Node(std::make_shared<ConjunctionNode>(k, upper));
    return b_kids;
  }
  Verdict verdict() const override {
    return a_.verdict() == Verdict::accept && b_root_.verdict() == Verdict::accept
               ? Verdict::accept
               : Verdict::reject;
  }

 private:
  Node a_;
  Node b_root_;
};

class DoubleAcceptNode final : public NodeImpl {
 public:
  explicit DoubleAcceptNode(Node node) : node_(std::move(node)) {}

  std::vector<Node> successors() const override {
    auto kids = node_.successors();
    if (kids.empty()) {
      if (node_.verdict() == Verdict::accept) {
        Node a = make_leaf(Verdict::accept);
        return {a, a};
      }
      return {};
    }
    for (auto& k : kids) k = Node(std::make_shared<DoubleAcceptNode>(k));
    return kids;
  }
  Verdict verdict() const override { return node_.verdict(); }

 private:
  Node node_;
};

class MarkLeftmostNode final : public NodeImpl {
 public:
  MarkLeftmostNode(Node node, bool leftmost) : node_(std::move(node)), leftmost_(leftmost) {}

  std::vector<Node> successors() const override {
    auto kids = node_.successors();
    for (std::size_t i = 0; i < kids.size(); ++i) {
      kids[i] = Node(std::make_shared<MarkLeftmostNode>(kids[i], leftmost_ && i == 0));
    }
    return kids;
  }
  Verdict verdict() const override { return leftmost_ ? Verdict::reject : Verdict::accept; }

 private:
  Node node_;
  bool leftmost_;
};

class ModkNode final : public NodeImpl {
 public:
  ModkNode(Node node, std::size_t k) : node_(std::move(node)), k_(k) {}

  std::vector<Node> successors() const override {
    auto kids = node_.successors();
    if (kids.empty()) {
      if (node_.verdict() == Verdict::reject) {
        return std::vector<Node>(k_, make_leaf(Verdict::reject));
      }
      return {};
    }
    for (auto& k : kids) k = Node(std::make_shared<ModkNode>(k, k_));
    return kids;
  }
  Verdict verdict() const override { return node_.verdict(); }

 private:
  Node node_;
  std::size_t k_;
};

std::size_t sum_bound(std::size_t a, std::size_t b) {
  if (a > kUnboundedDepth - b - 1) return kUnboundedDepth;
  return a + b + 1;
}

}  // namespace

Machine subtract_one(const Machine& m) {
  return Machine(MachineKind::combinator, m.depth_bound(), m.fanout_bound(),
                 "SUB1(" + m.label() + ")", [m](const Input& x) {
                   return subtract_one_node(m.root(x), m.depth_bound());
                 });
}

Machine add(const Machine& a, const Machine& b) {
  std::size_t depth = std::max(a.depth_bound(), b.depth_bound()) + 1;
  std::size_t fanout = std::max({std::size_t{2}, a.fanout_bound(), b.fanout_bound()});
  return Machine(MachineKind::combinator, depth, fanout, "ADD(" + a.label() + "," + b.label() + ")",
                 [a, b](const Input& x) {
                   Node ra = a.root(x);
                   Node rb = b.root(x);
                   if (is_deterministic_subtree(ra, a.depth_bound())) return rb;
                   if (is_deterministic_subtree(rb, b.depth_bound())) return ra;
                   return make_branch({subtract_one_node(ra, a.depth_bound()), rb});
                 });
}

Machine seq(const Machine& a, const Machine& b) {
  return Machine(MachineKind::combinator, sum_bound(a.depth_bound(), b.depth_bound()),
                 std::max(a.fanout_bound(), b.fanout_bound()),
                 "SEQ(" + a.label() + "," + b.label() + ")", [a, b](const Input& x) {
                   return Node(std::make_shared<SeqNode>(a.root(x), b.root(x)));
                 });
}

Machine multiply(const Machine& a, const Machine& b) {
  std::size_t fanout = std::max({std::size_t{2}, a.fanout_bound(), b.fanout_bound()});
  return Machine(MachineKind::combinator, sum_bound(a.depth_bound(), b.depth_bound()), fanout,
                 "MUL(" + a.label() + "," + b.label() + ")", [a, b](const Input& x) {
                   Node ra = a.root(x);
                   Node rb = b.root(x);
                   if (is_deterministic_subtree(ra, a.depth_bound()) ||
                       is_deterministic_subtree(rb, b.depth_bound())) {
                     return make_leaf(Verdict::reject);
                   }
                   Node product = Node(std::make_shared<SeqNode>(
                       subtract_one_node(ra, a.depth_bound()),
                       subtract_one_node(rb, b.depth_bound())));
                   return make_branch({make_leaf(Verdict::reject), product});
                 });
}

Machine double_accepting(const Machine& m) {
  return Machine(MachineKind::combinator, m.depth_bound() + 1,
                 std::max<std::size_t>(2, m.fanout_bound()), "DBLACC(" + m.label() + ")",
                 [m](const Input& x) { return Node(std::make_shared<DoubleAcceptNode>(m.root(x))); });
}

Machine mark_leftmost_reject(const Machine& m) {
  return Machine(MachineKind::combinator, m.depth_bound(), m.fanout_bound(),
                 "MARKLM(" + m.label() + ")", [m](const Input& x) {
                   return Node(std::make_shared<MarkLeftmostNode>(m.root(x), true));
                 });
}

Machine acc_to_tot_modk(const Machine& m, std::size_t k) {
  if (k < 2) throw ParameterError("mod-k conversion needs k >= 2, got " + std::to_string(k));
  // Dummy branch at the root plus the k-way split below each rejecting leaf.
  return Machine(MachineKind::combinator, m.depth_bound() + 2,
                 std::max({std::size_t{2}, k, m.fanout_bound()}),
                 "MODK(" + m.label() + "," + std::to_string(k) + ")", [m, k](const Input& x) {
                   return make_branch({make_leaf(Verdict::reject),
                                       Node(std::make_shared<ModkNode>(m.root(x), k))});
                 });
}

BigInt GapPair::value(const Input& x) const {
  return path_counts(plus, x).tot() - path_counts(minus, x).tot();
}

GapPair gap_decompose(const Machine& n, const Machine& m) {
  return GapPair{add(double_accepting(n), m), add(n, double_accepting(m))};
}

NormalizedGap fp_gap_normalize(const BigInt& gval, const Machine& m, std::size_t p) {
  return NormalizedGap{gval + pow2(p) - 1, double_accepting(normalize_perfect(m, p))};
}

}  // namespace totp
