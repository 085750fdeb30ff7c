#include "model_count_impl.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

#include <vector>
#endif

// 128 assignments per block: two 64-bit lanes, variable 6 selects the lane.

namespace totp::kernels::neon {

#if defined(__aarch64__)

namespace {

constexpr unsigned kLowBits = 7;

struct SplitMask {
  uint64x2_t low;
  LiteralMask high;
};

uint64x2_t literal_vector(unsigned v, bool positive) {
  uint64x2_t w;
  if (v < 6) {
    w = vdupq_n_u64(detail::kLowPattern[v]);
  } else {
    const std::uint64_t lanes[2] = {0, ~std::uint64_t{0}};
    w = vld1q_u64(lanes);
  }
  return positive ? w : veorq_u64(w, vdupq_n_u64(~std::uint64_t{0}));
}

std::vector<SplitMask> split(std::span<const LiteralMask> masks, bool conjunctive) {
  constexpr std::uint64_t low = (std::uint64_t{1} << kLowBits) - 1;
  std::vector<SplitMask> out;
  out.reserve(masks.size());
  for (const auto& m : masks) {
    uint64x2_t w = vdupq_n_u64(conjunctive ? ~std::uint64_t{0} : 0);
    for (unsigned v = 0; v < kLowBits; ++v) {
      for (bool positive : {true, false}) {
        std::uint64_t bits = positive ? m.positive : m.negative;
        if (!(bits >> v & 1)) continue;
        uint64x2_t lit = literal_vector(v, positive);
        w = conjunctive ? vandq_u64(w, lit) : vorrq_u64(w, lit);
      }
    }
    out.push_back({w, {m.positive & ~low, m.negative & ~low}});
  }
  return out;
}

std::uint64_t popcount128(uint64x2_t v) {
  return vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v)));
}

bool all_zero(uint64x2_t v) { return (vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) == 0; }

bool all_ones(uint64x2_t v) { return (vgetq_lane_u64(v, 0) & vgetq_lane_u64(v, 1)) == ~std::uint64_t{0}; }

}  // namespace

bool supported() { return true; }

std::uint64_t count_cnf(std::span<const LiteralMask> clauses, unsigned variables) {
  if (variables < kLowBits) return swar::count_cnf(clauses, variables);
  const auto parts = split(clauses, false);
  const std::uint64_t blocks = std::uint64_t{1} << (variables - kLowBits);
  std::uint64_t count = 0;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    const std::uint64_t base = b << kLowBits;
    uint64x2_t acc = vdupq_n_u64(~std::uint64_t{0});
    for (const auto& p : parts) {
      if (detail::clause_satisfied_by(p.high, base)) continue;
      acc = vandq_u64(acc, p.low);
      if (all_zero(acc)) break;
    }
    count += popcount128(acc);
  }
  return count;
}

std::uint64_t count_dnf(std::span<const LiteralMask> terms, unsigned variables) {
  if (variables < kLowBits) return swar::count_dnf(terms, variables);
  const auto parts = split(terms, true);
  const std::uint64_t blocks = std::uint64_t{1} << (variables - kLowBits);
  std::uint64_t count = 0;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    const std::uint64_t base = b << kLowBits;
    uint64x2_t acc = vdupq_n_u64(0);
    for (const auto& p : parts) {
      if (!detail::term_satisfied_by(p.high, base)) continue;
      acc = vorrq_u64(acc, p.low);
      if (all_ones(acc)) break;
    }
    count += popcount128(acc);
  }
  return count;
}

#else

bool supported() { return false; }
std::uint64_t count_cnf(std::span<const LiteralMask> clauses, unsigned variables) {
  return swar::count_cnf(clauses, variables);
}
std::uint64_t count_dnf(std::span<const LiteralMask> terms, unsigned variables) {
  return swar::count_dnf(terms, variables);
}

#endif

}  // namespace totp::kernels::neon
