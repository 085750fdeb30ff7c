#include <random>
#include <vector>

#include "doctest.h"
#include "totp/errors.hpp"
#include "totp/kernels/model_count.hpp"

using namespace totp;
using namespace totp::kernels;

namespace {

bool holds(const LiteralMask& m, std::uint64_t a, bool clause) {
  if (clause) return (a & m.positive) || (~a & m.negative);
  return (a & m.positive) == m.positive && (~a & m.negative) == m.negative;
}

// Assignment-by-assignment reference.
std::uint64_t naive(const std::vector<LiteralMask>& groups, unsigned n, bool cnf) {
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    bool result = cnf;
    for (const auto& g : groups) {
      const bool h = holds(g, a, cnf);
      result = cnf ? result && h : result || h;
    }
    count += result;
  }
  return count;
}

std::vector<LiteralMask> random_groups(std::mt19937_64& rng, unsigned n, std::size_t count, unsigned width) {
  std::vector<LiteralMask> out(count);
  if (n == 0) return out;
  for (auto& g : out) {
    for (unsigned i = 0; i < width; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << (rng() % n);
      (rng() % 2 ? g.positive : g.negative) |= bit;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("backend discovery") {
  const auto all = available_backends();
  REQUIRE(!all.empty());
  CHECK(all.front() == Backend::scalar);
  CHECK(backend_available(Backend::scalar));
  CHECK(backend_available(Backend::swar64));
  CHECK(backend_available(preferred_backend()));
  CHECK(std::string(to_string(Backend::avx2)) == "avx2");
  for (Backend b : {Backend::avx2, Backend::neon}) {
    if (!backend_available(b)) {
      const LiteralMask one{1, 0};
      CHECK_THROWS_AS(count_cnf_models({&one, 1}, 3, b), ParameterError);
    }
  }
}

TEST_CASE("every backend agrees with naive enumeration") {
  std::mt19937_64 rng(2024);
  for (unsigned n = 0; n <= 22; ++n) {
    for (int round = 0; round < 6; ++round) {
      const std::size_t count = rng() % 9;
      const unsigned width = 1 + rng() % 4;
      const auto groups = random_groups(rng, n, count, width);
      const std::uint64_t cnf = naive(groups, n, true);
      const std::uint64_t dnf = naive(groups, n, false);
      for (Backend b : available_backends()) {
        INFO("backend " << to_string(b) << " n=" << n << " groups=" << count);
        CHECK(count_cnf_models(groups, n, b) == cnf);
        CHECK(count_dnf_models(groups, n, b) == dnf);
      }
    }
  }
}

TEST_CASE("edge shapes") {
  const std::vector<LiteralMask> none;
  const std::vector<LiteralMask> empty_group(1);
  const std::vector<LiteralMask> tautology{{1, 1}};
  for (Backend b : available_backends()) {
    INFO(to_string(b));
    CHECK(count_cnf_models(none, 0, b) == 1);
    CHECK(count_cnf_models(none, 10, b) == 1024);
    CHECK(count_dnf_models(none, 10, b) == 0);
    // Empty clause is false; empty term is true.
    CHECK(count_cnf_models(empty_group, 12, b) == 0);
    CHECK(count_dnf_models(empty_group, 12, b) == 4096);
    CHECK(count_cnf_models(tautology, 9, b) == 512);
    CHECK(count_dnf_models(tautology, 9, b) == 0);
  }
}

TEST_CASE("wider formulas: backends agree with scalar") {
  std::mt19937_64 rng(99);
  for (unsigned n : {24u, 26u}) {
    const auto groups = random_groups(rng, n, 6, 3);
    const std::uint64_t cnf = count_cnf_models(groups, n, Backend::scalar);
    const std::uint64_t dnf = count_dnf_models(groups, n, Backend::scalar);
    for (Backend b : available_backends()) {
      CHECK(count_cnf_models(groups, n, b) == cnf);
      CHECK(count_dnf_models(groups, n, b) == dnf);
    }
    CHECK(cnf + dnf <= (std::uint64_t{2} << n));
  }
}

TEST_CASE("capacity and mask checks") {
  const std::vector<LiteralMask> none;
  CHECK_THROWS_AS(count_cnf_models(none, kMaxVariables + 1), CapacityError);
  CHECK_THROWS_AS(count_dnf_models(none, 64), CapacityError);
  const std::vector<LiteralMask> outside{{std::uint64_t{1} << 5, 0}};
  CHECK_THROWS_AS(count_cnf_models(outside, 5), ParameterError);
  CHECK(count_cnf_models(outside, 6) == 32);
}
