#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace totp {

/// Binary prefix: bit i of `bits` is the i-th branching choice, i < length.
struct Prefix {
  std::uint64_t bits = 0;
  std::size_t length = 0;

  Prefix child(bool one) const {
    return Prefix{bits | (static_cast<std::uint64_t>(one) << length), length + 1};
  }
};

enum class GateOp { input_bit, input_length, constant, negation, conjunction, disjunction };

struct Gate {
  GateOp op = GateOp::constant;
  std::size_t parameter = 0;        // bit index, length, or constant value
  std::vector<std::size_t> inputs;  // indices of earlier gates
};

/// Boolean circuit over a prefix. INPUT BIT i reads choice i (false when
/// i >= length); INPUT LEN j is true iff the prefix has exactly length j.
class Circuit {
 public:
  Circuit() = default;

  /// Gates must be topologically ordered; `output` names one of them.
  Circuit(std::vector<Gate> gates, std::size_t output);

  bool evaluate(const Prefix& p) const;

  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t output() const { return output_; }

 private:
  std::vector<Gate> gates_;
  std::size_t output_ = 0;
};

/// The pruned binary tree of depth `depth` whose nodes are the prefixes w
/// with alive(v) for every prefix v of w (including w and the root).
struct SubtreeInstance {
  std::size_t depth = 0;
  Circuit alive;
};

/// Text format:
///   p subtree <depth> <gate-count>
///   g <id> INPUT BIT <i> | INPUT LEN <j> | CONST 0|1 | NOT <a> | AND <a>... | OR <a>...
///   o <id>
/// Gate ids are arbitrary naturals; operands must be defined earlier.
SubtreeInstance parse_subtree(std::string_view text);

std::string to_circuit_text(const SubtreeInstance& s);

/// Always-alive circuit.
Circuit constant_circuit(bool value);

}  // namespace totp
