#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "totp/machine.hpp"
#include "totp/problem.hpp"

namespace totp {

/// Recipe for a reproducible set of random machines. Expressions are drawn
/// over LEAF and BR; with `wrap_percent` > 0 a share of them is wrapped in
/// SUB1 or MARKLM.
struct CorpusConfig {
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  std::size_t max_depth = 6;
  std::size_t max_fanout = 3;
  unsigned leaf_percent = 35;  // chance that a non-root node below max depth is a leaf
  unsigned wrap_percent = 10;
};

/// Small deterministic generator. Bounded draws use plain modulo so results
/// depend only on the mt19937_64 stream, which the standard fixes.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool percent(unsigned p) { return below(100) < p; }

 private:
  std::mt19937_64 engine_;
};

std::string random_expression(Rng& rng, const CorpusConfig& cfg);

/// Expression texts, index i drawn from a stream seeded by (seed, i).
std::vector<std::string> corpus_expressions(const CorpusConfig& cfg);

struct CorpusEntry {
  std::size_t index;
  std::string expression;
  Machine machine;
};

std::vector<CorpusEntry> generate_corpus(const CorpusConfig& cfg);

// Random problem instances for the problem-level suites.

CnfFormula random_cnf(Rng& rng, std::size_t variables, std::size_t clauses, std::size_t width);
DnfFormula random_dnf(Rng& rng, std::size_t variables, std::size_t terms, std::size_t width);

/// Each edge present with probability percent/100.
Graph random_graph(Rng& rng, std::size_t vertices, unsigned percent);

/// Random edges between sides {0..left-1} and {left..left+right-1}, with
/// the bipartition declared.
Graph random_bipartite(Rng& rng, std::size_t left, std::size_t right, unsigned percent);

/// Random circuit over the prefix bits of a depth-`depth` tree.
SubtreeInstance random_subtree(Rng& rng, std::size_t depth, std::size_t gates);

}  // namespace totp
