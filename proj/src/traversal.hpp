#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "totp/errors.hpp"
#include "totp/machine.hpp"

namespace totp::detail {

inline std::string format_prefix(const std::vector<std::size_t>& prefix) {
  if (prefix.empty()) return "<root>";
  std::string s;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(prefix[i]);
  }
  return s;
}

/// Depth-first, left-to-right walk over every leaf under `root`, enforcing
/// the depth and fan-out bounds. `on_leaf(verdict)` is called once per leaf.
template <typename OnLeaf>
void for_each_leaf(const Node& root, std::size_t depth_bound, std::size_t fanout_bound,
                   OnLeaf&& on_leaf) {
  struct Frame {
    std::vector<Node> children;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;

  auto prefix = [&stack] {
    std::vector<std::size_t> p;
    p.reserve(stack.size());
    for (const auto& f : stack) p.push_back(f.next - 1);
    return p;
  };

  auto expand = [&](const Node& n) {
    auto kids = n.successors();
    if (kids.empty()) {
      on_leaf(n.verdict());
      return;
    }
    if (kids.size() > fanout_bound) {
      throw EvaluationError("fan-out " + std::to_string(kids.size()) + " exceeds bound " +
                            std::to_string(fanout_bound) + " at path prefix " +
                            format_prefix(prefix()));
    }
    if (stack.size() + 1 > depth_bound) {
      throw EvaluationError("depth bound " + std::to_string(depth_bound) +
                            " exceeded below path prefix " + format_prefix(prefix()));
    }
    stack.push_back(Frame{std::move(kids), 0});
  };

  expand(root);
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next == f.children.size()) {
      stack.pop_back();
      continue;
    }
    Node child = f.children[f.next++];
    expand(child);
  }
}

}  // namespace totp::detail
