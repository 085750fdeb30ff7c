#include "model_count_impl.hpp"

namespace totp::kernels::scalar {

// Reference kernels: one assignment at a time.

std::uint64_t count_cnf(std::span<const LiteralMask> clauses, unsigned variables) {
  const std::uint64_t end = std::uint64_t{1} << variables;
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a < end; ++a) {
    bool ok = true;
    for (const auto& c : clauses) {
      if (!detail::clause_satisfied_by(c, a)) {
        ok = false;
        break;
      }
    }
    count += ok;
  }
  return count;
}

std::uint64_t count_dnf(std::span<const LiteralMask> terms, unsigned variables) {
  const std::uint64_t end = std::uint64_t{1} << variables;
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a < end; ++a) {
    for (const auto& t : terms) {
      if (detail::term_satisfied_by(t, a)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

}  // namespace totp::kernels::scalar
