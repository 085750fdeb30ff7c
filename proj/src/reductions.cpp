#include "totp/reductions.hpp"

#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>

#include "totp/errors.hpp"

namespace totp {

namespace {

std::vector<Literal> permutation(std::size_t n, std::uint64_t seed) {
  std::vector<Literal> perm(n + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (n + 1)));
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i], perm[1 + rng() % i]);
  }
  return perm;
}

std::vector<std::vector<Literal>> rename(const std::vector<std::vector<Literal>>& groups,
                                         const std::vector<Literal>& perm) {
  auto out = groups;
  for (auto& g : out)
    for (auto& l : g) l = l > 0 ? perm[static_cast<std::size_t>(l)] : -perm[static_cast<std::size_t>(-l)];
  return out;
}

std::string renamed_id(const ProblemInstance& x, const std::string& tag) {
  return x.id().empty() ? tag : x.id() + "/" + tag;
}

}  // namespace

ProblemInstance apply_reduction(const Reduction& r, const ProblemInstance& x) {
  if (x.kind() != r.source) {
    throw KindMismatchError(r.name + " expects " + to_string(r.source) + ", got " +
                            to_string(x.kind()));
  }
  ProblemInstance y = r.transform(x);
  if (y.kind() != r.target) {
    throw KindMismatchError(r.name + " produced " + std::string(to_string(y.kind())) +
                            " instead of " + to_string(r.target));
  }
  return y;
}

Reduction compose(const Reduction& first, const Reduction& second) {
  if (first.target != second.source) {
    throw KindMismatchError("cannot compose " + first.name + " (to " + to_string(first.target) +
                            ") with " + second.name + " (from " + to_string(second.source) + ")");
  }
  return Reduction{second.name + " . " + first.name, first.source, second.target,
                   [first, second](const ProblemInstance& x) {
                     return apply_reduction(second, apply_reduction(first, x));
                   }};
}

bool ParsimonyReport::passed() const { return failures() == 0; }

std::size_t ParsimonyReport::failures() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += !e.ok;
  return n;
}

std::string ParsimonyReport::str() const {
  std::ostringstream out;
  for (const auto& e : entries) {
    out << (e.ok ? "OK" : "FAIL") << ' ' << (e.source_count ? e.source_count->str() : "?") << ' '
        << (e.target_count ? e.target_count->str() : "?") << ' ' << e.id;
    if (!e.note.empty()) out << " (" << e.note << ')';
    out << '\n';
  }
  out << (passed() ? "PASS " : "FAIL ") << reduction << ": " << entries.size() - failures() << '/'
      << entries.size() << " parsimonious";
  if (!corpus.empty()) out << " on " << corpus;
  out << '\n';
  return out.str();
}

ParsimonyReport check_parsimonious(const Reduction& r, const CountingOracle<ProblemInstance>& f,
                                   const CountingOracle<ProblemInstance>& g,
                                   const std::vector<ProblemInstance>& instances,
                                   std::string corpus_description) {
  ParsimonyReport report{r.name, std::move(corpus_description), {}};
  report.entries.reserve(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const ProblemInstance& x = instances[i];
    ParsimonyEntry e;
    e.id = x.id().empty() ? "#" + std::to_string(i) : x.id();
    try {
      e.source_count = f.count(x);
      e.target_count = g.count(apply_reduction(r, x));
      e.ok = *e.source_count == *e.target_count;
    } catch (const Error& err) {
      e.note = err.what();
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

Reduction identity_reduction(ProblemKind kind) {
  return Reduction{std::string("identity[") + to_string(kind) + "]", kind, kind,
                   [](const ProblemInstance& x) { return x; }};
}

Reduction cnf_renaming(std::uint64_t seed) {
  return Reduction{"cnf-renaming[" + std::to_string(seed) + "]", ProblemKind::sat, ProblemKind::sat,
                   [seed](const ProblemInstance& x) {
                     const auto& f = x.as<CnfFormula>();
                     CnfFormula out{f.variables, rename(f.clauses, permutation(f.variables, seed))};
                     return ProblemInstance(ProblemKind::sat, out, renamed_id(x, "renamed"));
                   }};
}

Reduction dnf_renaming(std::uint64_t seed) {
  return Reduction{"dnf-renaming[" + std::to_string(seed) + "]", ProblemKind::dnf_sat,
                   ProblemKind::dnf_sat, [seed](const ProblemInstance& x) {
                     const auto& f = x.as<DnfFormula>();
                     DnfFormula out{f.variables, rename(f.terms, permutation(f.variables, seed))};
                     return ProblemInstance(ProblemKind::dnf_sat, out, renamed_id(x, "renamed"));
                   }};
}

Reduction dnf_to_subtree_leaves() {
  return Reduction{
      "dnf-to-subtree-leaves", ProblemKind::dnf_sat, ProblemKind::subtree_leaves,
      [](const ProblemInstance& x) {
        const auto& f = x.as<DnfFormula>();
        validate(f);
        if (f.variables > 63) throw CapacityError("assignment tree deeper than 63 levels");
        std::vector<Gate> gates;
        auto push = [&](Gate g) {
          gates.push_back(std::move(g));
          return gates.size() - 1;
        };
        std::vector<std::size_t> term_gates;
        for (const auto& term : f.terms) {
          Gate conj{GateOp::conjunction, 0, {}};
          for (Literal l : term) {
            const std::size_t in = push({GateOp::input_bit, static_cast<std::size_t>(std::abs(l)) - 1, {}});
            conj.inputs.push_back(l > 0 ? in : push({GateOp::negation, 0, {in}}));
          }
          term_gates.push_back(push(std::move(conj)));
        }
        const std::size_t formula = push({GateOp::disjunction, 0, term_gates});
        const std::size_t full = push({GateOp::input_length, f.variables, {}});
        const std::size_t partial = push({GateOp::negation, 0, {full}});
        const std::size_t out = push({GateOp::disjunction, 0, {partial, formula}});
        SubtreeInstance s{f.variables, Circuit(std::move(gates), out)};
        return ProblemInstance(ProblemKind::subtree_leaves, s, renamed_id(x, "tree"));
      }};
}

Reduction broken_drop_last_clause() {
  return Reduction{"broken-drop-last-clause", ProblemKind::sat, ProblemKind::sat,
                   [](const ProblemInstance& x) {
                     CnfFormula f = x.as<CnfFormula>();
                     if (!f.clauses.empty()) f.clauses.pop_back();
                     return ProblemInstance(ProblemKind::sat, f, renamed_id(x, "dropped"));
                   }};
}

std::vector<Reduction> shipped_reductions() {
  return {identity_reduction(ProblemKind::sat), identity_reduction(ProblemKind::perfect_matchings),
          cnf_renaming(1), dnf_renaming(1), dnf_to_subtree_leaves(),
          compose(dnf_renaming(2), dnf_to_subtree_leaves())};
}

}  // namespace totp
