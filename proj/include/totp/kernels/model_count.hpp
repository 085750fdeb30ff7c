#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace totp::kernels {

/// A clause (CNF) or term (DNF) over variables 0..63 as two bit masks.
struct LiteralMask {
  std::uint64_t positive = 0;
  std::uint64_t negative = 0;
};

enum class Backend { scalar, swar64, avx2, neon };

const char* to_string(Backend b);

bool backend_available(Backend b);

/// Every backend usable on this CPU, scalar first.
std::vector<Backend> available_backends();

/// Widest available backend, detected once at first call.
Backend preferred_backend();

inline constexpr unsigned kMaxVariables = 40;

/// Number of assignments over `variables` variables satisfying every clause.
std::uint64_t count_cnf_models(std::span<const LiteralMask> clauses, unsigned variables,
                               Backend backend = preferred_backend());

/// Number of assignments over `variables` variables satisfying some term.
std::uint64_t count_dnf_models(std::span<const LiteralMask> terms, unsigned variables,
                               Backend backend = preferred_backend());

}  // namespace totp::kernels
