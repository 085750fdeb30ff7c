#pragma once

#include <cstdint>
#include <span>

#include "totp/kernels/model_count.hpp"

// Per-backend entry points. Callers guarantee 0 <= variables <= kMaxVariables
// and that every mask only mentions variables below `variables`.

namespace totp::kernels::scalar {
std::uint64_t count_cnf(std::span<const LiteralMask> clauses, unsigned variables);
std::uint64_t count_dnf(std::span<const LiteralMask> terms, unsigned variables);
}  // namespace totp::kernels::scalar

namespace totp::kernels::swar {
std::uint64_t count_cnf(std::span<const LiteralMask> clauses, unsigned variables);
std::uint64_t count_dnf(std::span<const LiteralMask> terms, unsigned variables);
}  // namespace totp::kernels::swar

namespace totp::kernels::avx2 {
bool supported();
std::uint64_t count_cnf(std::span<const LiteralMask> clauses, unsigned variables);
std::uint64_t count_dnf(std::span<const LiteralMask> terms, unsigned variables);
}  // namespace totp::kernels::avx2

namespace totp::kernels::neon {
bool supported();
std::uint64_t count_cnf(std::span<const LiteralMask> clauses, unsigned variables);
std::uint64_t count_dnf(std::span<const LiteralMask> terms, unsigned variables);
}  // namespace totp::kernels::neon

namespace totp::kernels::detail {

// Truth table of variable v (< 6) across the 64 assignments of a block whose
// low six bits run 0..63.
inline constexpr std::uint64_t kLowPattern[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

inline bool clause_satisfied_by(const LiteralMask& c, std::uint64_t assignment) {
  return ((assignment & c.positive) | (~assignment & c.negative)) != 0;
}

inline bool term_satisfied_by(const LiteralMask& t, std::uint64_t assignment) {
  return (assignment & t.positive) == t.positive && (~assignment & t.negative) == t.negative;
}

}  // namespace totp::kernels::detail
