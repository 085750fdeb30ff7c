#include <bit>
#include <vector>

#include "model_count_impl.hpp"

// Bit-sliced kernels over 64 assignments per word. Assignments are grouped in
// blocks sharing their high bits; the low six variables vary inside a word
// following kLowPattern, so each clause's low part is one precomputed word.
// The high part is constant within a block and tested once per block.

namespace totp::kernels::swar {

namespace {

constexpr unsigned kLowBits = 6;

struct SplitMask {
  std::uint64_t low_word;  // clause: OR of low literals; term: AND of low literals
  LiteralMask high;
};

std::uint64_t literal_word(unsigned v, bool positive) {
  return positive ? detail::kLowPattern[v] : ~detail::kLowPattern[v];
}

std::vector<SplitMask> split(std::span<const LiteralMask> masks, bool conjunctive) {
  constexpr std::uint64_t low = (std::uint64_t{1} << kLowBits) - 1;
  std::vector<SplitMask> out;
  out.reserve(masks.size());
  for (const auto& m : masks) {
    std::uint64_t w = conjunctive ? ~std::uint64_t{0} : 0;
    for (unsigned v = 0; v < kLowBits; ++v) {
      if (m.positive >> v & 1) w = conjunctive ? (w & literal_word(v, true)) : (w | literal_word(v, true));
      if (m.negative >> v & 1) w = conjunctive ? (w & literal_word(v, false)) : (w | literal_word(v, false));
    }
    out.push_back({w, {m.positive & ~low, m.negative & ~low}});
  }
  return out;
}

std::uint64_t valid_mask(unsigned variables) {
  return variables >= kLowBits ? ~std::uint64_t{0}
                               : (std::uint64_t{1} << (std::uint64_t{1} << variables)) - 1;
}

}  // namespace

std::uint64_t count_cnf(std::span<const LiteralMask> clauses, unsigned variables) {
  const auto parts = split(clauses, false);
  const std::uint64_t blocks = variables > kLowBits ? std::uint64_t{1} << (variables - kLowBits) : 1;
  const std::uint64_t valid = valid_mask(variables);
  std::uint64_t count = 0;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    const std::uint64_t base = b << kLowBits;
    std::uint64_t acc = valid;
    for (const auto& p : parts) {
      if (detail::clause_satisfied_by(p.high, base)) continue;
      acc &= p.low_word;
      if (!acc) break;
    }
    count += static_cast<std::uint64_t>(std::popcount(acc));
  }
  return count;
}

std::uint64_t count_dnf(std::span<const LiteralMask> terms, unsigned variables) {
  const auto parts = split(terms, true);
  const std::uint64_t blocks = variables > kLowBits ? std::uint64_t{1} << (variables - kLowBits) : 1;
  const std::uint64_t valid = valid_mask(variables);
  std::uint64_t count = 0;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    const std::uint64_t base = b << kLowBits;
    std::uint64_t acc = 0;
    for (const auto& p : parts) {
      if (!detail::term_satisfied_by(p.high, base)) continue;
      acc |= p.low_word;
      if (acc == ~std::uint64_t{0}) break;
    }
    count += static_cast<std::uint64_t>(std::popcount(acc & valid));
  }
  return count;
}

}  // namespace totp::kernels::swar
