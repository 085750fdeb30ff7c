#include "model_count_impl.hpp"

#if defined(__x86_64__) || defined(__i386__)
#define TOTP_HAVE_X86 1
#include <immintrin.h>

#include <bit>
#include <vector>
#endif

// 256 assignments per block: four 64-bit lanes. Variables 0-5 vary inside a
// lane, variables 6 and 7 select the lane, the rest are constant per block.
// Compiled with a per-function target so the translation unit builds on any
// x86-64 baseline; callers go through supported() first.

namespace totp::kernels::avx2 {

#if TOTP_HAVE_X86

namespace {

constexpr unsigned kLowBits = 8;

struct SplitMask {
  __m256i low;
  LiteralMask high;
};

__attribute__((target("avx2"))) __m256i literal_vector(unsigned v, bool positive) {
  __m256i w;
  if (v < 6) {
    w = _mm256_set1_epi64x(static_cast<long long>(detail::kLowPattern[v]));
  } else if (v == 6) {
    w = _mm256_set_epi64x(-1, 0, -1, 0);
  } else {
    w = _mm256_set_epi64x(-1, -1, 0, 0);
  }
  return positive ? w : _mm256_xor_si256(w, _mm256_set1_epi64x(-1));
}

__attribute__((target("avx2"))) std::vector<SplitMask> split(std::span<const LiteralMask> masks,
                                                              bool conjunctive) {
  constexpr std::uint64_t low = (std::uint64_t{1} << kLowBits) - 1;
  std::vector<SplitMask> out;
  out.reserve(masks.size());
  for (const auto& m : masks) {
    __m256i w = conjunctive ? _mm256_set1_epi64x(-1) : _mm256_setzero_si256();
    for (unsigned v = 0; v < kLowBits; ++v) {
      for (bool positive : {true, false}) {
        std::uint64_t bits = positive ? m.positive : m.negative;
        if (!(bits >> v & 1)) continue;
        __m256i lit = literal_vector(v, positive);
        w = conjunctive ? _mm256_and_si256(w, lit) : _mm256_or_si256(w, lit);
      }
    }
    out.push_back({w, {m.positive & ~low, m.negative & ~low}});
  }
  return out;
}

__attribute__((target("avx2"))) std::uint64_t popcount256(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return static_cast<std::uint64_t>(std::popcount(lanes[0]) + std::popcount(lanes[1]) +
                                    std::popcount(lanes[2]) + std::popcount(lanes[3]));
}

__attribute__((target("avx2"))) std::uint64_t cnf_blocks(std::span<const LiteralMask> clauses,
                                                          unsigned variables) {
  const auto parts = split(clauses, false);
  const std::uint64_t blocks = std::uint64_t{1} << (variables - kLowBits);
  std::uint64_t count = 0;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    const std::uint64_t base = b << kLowBits;
    __m256i acc = _mm256_set1_epi64x(-1);
    for (const auto& p : parts) {
      if (detail::clause_satisfied_by(p.high, base)) continue;
      acc = _mm256_and_si256(acc, p.low);
      if (_mm256_testz_si256(acc, acc)) break;
    }
    count += popcount256(acc);
  }
  return count;
}

__attribute__((target("avx2"))) std::uint64_t dnf_blocks(std::span<const LiteralMask> terms,
                                                          unsigned variables) {
  const auto parts = split(terms, true);
  const std::uint64_t blocks = std::uint64_t{1} << (variables - kLowBits);
  const __m256i ones = _mm256_set1_epi64x(-1);
  std::uint64_t count = 0;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    const std::uint64_t base = b << kLowBits;
    __m256i acc = _mm256_setzero_si256();
    for (const auto& p : parts) {
      if (!detail::term_satisfied_by(p.high, base)) continue;
      acc = _mm256_or_si256(acc, p.low);
      if (_mm256_testc_si256(acc, ones)) break;
    }
    count += popcount256(acc);
  }
  return count;
}

}  // namespace

bool supported() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
}

// Fewer than eight variables do not fill a block; those go to the 64-bit kernel.
std::uint64_t count_cnf(std::span<const LiteralMask> clauses, unsigned variables) {
  if (variables < kLowBits) return swar::count_cnf(clauses, variables);
  return cnf_blocks(clauses, variables);
}

std::uint64_t count_dnf(std::span<const LiteralMask> terms, unsigned variables) {
  if (variables < kLowBits) return swar::count_dnf(terms, variables);
  return dnf_blocks(terms, variables);
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

}  // namespace totp::kernels::avx2
