#include "totp/corpus.hpp"

#include "totp/expression.hpp"

namespace totp {

namespace {

void emit(Rng& rng, const CorpusConfig& cfg, std::size_t depth, std::string& out) {
  const bool root = depth == 0;
  if (depth >= cfg.max_depth || (!root && rng.percent(cfg.leaf_percent))) {
    out += rng.percent(50) ? "LEAF(A)" : "LEAF(R)";
    return;
  }
  const std::size_t width = rng.between(1, std::max<std::size_t>(cfg.max_fanout, 1));
  out += "BR(";
  for (std::size_t i = 0; i < width; ++i) {
    if (i) out += ',';
    emit(rng, cfg, depth + 1, out);
  }
  out += ')';
}

std::vector<Literal> random_group(Rng& rng, std::size_t variables, std::size_t width) {
  std::vector<Literal> g;
  const std::size_t w = rng.between(1, std::max<std::size_t>(width, 1));
  for (std::size_t i = 0; i < w; ++i) {
    const Literal v = static_cast<Literal>(rng.between(1, variables));
    g.push_back(rng.percent(50) ? v : -v);
  }
  return g;
}

}  // namespace

std::string random_expression(Rng& rng, const CorpusConfig& cfg) {
  std::string body;
  emit(rng, cfg, 0, body);
  if (rng.percent(cfg.wrap_percent)) {
    return (rng.percent(50) ? "SUB1(" : "MARKLM(") + body + ")";
  }
  return body;
}

std::vector<std::string> corpus_expressions(const CorpusConfig& cfg) {
  std::vector<std::string> out;
  out.reserve(cfg.count);
  for (std::size_t i = 0; i < cfg.count; ++i) {
    Rng rng(cfg.seed * 0x100000001b3ULL + i);
    out.push_back(random_expression(rng, cfg));
  }
  return out;
}

std::vector<CorpusEntry> generate_corpus(const CorpusConfig& cfg) {
  std::vector<CorpusEntry> out;
  out.reserve(cfg.count);
  std::size_t i = 0;
  for (auto& e : corpus_expressions(cfg)) {
    Machine m = parse_machine(e);
    out.push_back(CorpusEntry{i++, std::move(e), std::move(m)});
  }
  return out;
}

CnfFormula random_cnf(Rng& rng, std::size_t variables, std::size_t clauses, std::size_t width) {
  CnfFormula f{variables, {}};
  if (variables == 0) return f;
  for (std::size_t i = 0; i < clauses; ++i) f.clauses.push_back(random_group(rng, variables, width));
  return f;
}

DnfFormula random_dnf(Rng& rng, std::size_t variables, std::size_t terms, std::size_t width) {
  DnfFormula f{variables, {}};
  if (variables == 0) return f;
  for (std::size_t i = 0; i < terms; ++i) f.terms.push_back(random_group(rng, variables, width));
  return f;
}

Graph random_graph(Rng& rng, std::size_t vertices, unsigned percent) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < vertices; ++u)
    for (std::size_t v = u + 1; v < vertices; ++v)
      if (rng.percent(percent)) edges.emplace_back(u, v);
  return Graph(vertices, std::move(edges));
}

Graph random_bipartite(Rng& rng, std::size_t left, std::size_t right, unsigned percent) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < left; ++u)
    for (std::size_t v = 0; v < right; ++v)
      if (rng.percent(percent)) edges.emplace_back(u, left + v);
  std::vector<bool> side(left + right, false);
  for (std::size_t u = 0; u < left; ++u) side[u] = true;
  return Graph(left + right, std::move(edges), std::move(side));
}

SubtreeInstance random_subtree(Rng& rng, std::size_t depth, std::size_t gates) {
  std::vector<Gate> g;
  const std::size_t inputs = std::max<std::size_t>(2, gates / 2);
  for (std::size_t i = 0; i < inputs; ++i) {
    if (depth > 0 && rng.percent(80)) {
      g.push_back({GateOp::input_bit, rng.below(depth), {}});
    } else {
      g.push_back({GateOp::input_length, rng.below(depth + 1), {}});
    }
  }
  while (g.size() < inputs + gates) {
    const std::size_t n = g.size();
    switch (rng.below(3)) {
      case 0: g.push_back({GateOp::negation, 0, {rng.below(n)}}); break;
      case 1: g.push_back({GateOp::conjunction, 0, {rng.below(n), rng.below(n)}}); break;
      default: g.push_back({GateOp::disjunction, 0, {rng.below(n), rng.below(n)}}); break;
    }
  }
  // Keep most roots alive so the trees are not trivially empty.
  if (rng.percent(80)) {
    g.push_back({GateOp::input_length, 0, {}});
    g.push_back({GateOp::disjunction, 0, {g.size() - 1, g.size() - 2}});
  }
  const std::size_t out = g.size() - 1;
  return SubtreeInstance{depth, Circuit(std::move(g), out)};
}

}  // namespace totp
