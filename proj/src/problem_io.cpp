#include "totp/problem_io.hpp"

#include <fstream>
#include <sstream>

#include "totp/errors.hpp"

namespace totp {

namespace {

constexpr ProblemKind kAllKinds[] = {ProblemKind::sat,          ProblemKind::dnf_sat,
                                     ProblemKind::perfect_matchings, ProblemKind::independent_sets,
                                     ProblemKind::subtree_size, ProblemKind::subtree_leaves};

bool fits(ProblemKind k, const InstanceData& d) {
  switch (k) {
    case ProblemKind::sat: return std::holds_alternative<CnfFormula>(d);
    case ProblemKind::dnf_sat: return std::holds_alternative<DnfFormula>(d);
    case ProblemKind::perfect_matchings:
    case ProblemKind::independent_sets: return std::holds_alternative<Graph>(d);
    case ProblemKind::subtree_size:
    case ProblemKind::subtree_leaves: return std::holds_alternative<SubtreeInstance>(d);
  }
  return false;
}

std::string header_format(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string tok;
    std::string fmt;
    if (!(words >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "p" && (words >> fmt)) return fmt;
    break;
  }
  throw FormatError("problem file has no 'p <format> ...' header line");
}

}  // namespace

const char* to_string(ProblemKind k) {
  switch (k) {
    case ProblemKind::sat: return "sat";
    case ProblemKind::dnf_sat: return "dnf-sat";
    case ProblemKind::perfect_matchings: return "perfect-matchings";
    case ProblemKind::independent_sets: return "independent-sets";
    case ProblemKind::subtree_size: return "subtree-size";
    case ProblemKind::subtree_leaves: return "subtree-leaves";
  }
  return "?";
}

ProblemInstance::ProblemInstance(ProblemKind kind, InstanceData data, std::string id)
    : kind_(kind), data_(std::move(data)), id_(std::move(id)) {
  if (!fits(kind_, data_)) {
    throw KindMismatchError(std::string("instance data does not fit problem kind ") + to_string(kind_));
  }
}

std::string serialize(const ProblemInstance& p) {
  return std::visit(
      [](const auto& d) -> std::string {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Graph>) {
          return to_edge_list(d);
        } else if constexpr (std::is_same_v<T, SubtreeInstance>) {
          return to_circuit_text(d);
        } else {
          return to_dimacs(d);
        }
      },
      p.data());
}

std::optional<ProblemKind> parse_problem_kind(std::string_view name) {
  for (ProblemKind k : kAllKinds)
    if (name == to_string(k)) return k;
  return std::nullopt;
}

ProblemInstance parse_problem(std::string_view text, std::optional<ProblemKind> as, std::string id) {
  const std::string fmt = header_format(text);
  InstanceData data;
  ProblemKind kind;
  if (fmt == "cnf") {
    data = parse_cnf(text);
    kind = ProblemKind::sat;
  } else if (fmt == "dnf") {
    data = parse_dnf(text);
    kind = ProblemKind::dnf_sat;
  } else if (fmt == "edge") {
    data = parse_graph(text);
    kind = ProblemKind::perfect_matchings;
  } else if (fmt == "subtree") {
    data = parse_subtree(text);
    kind = ProblemKind::subtree_size;
  } else {
    throw FormatError("unknown problem format '" + fmt + "'");
  }
  if (as) {
    if (!fits(*as, data)) {
      throw FormatError(std::string("a '") + fmt + "' file cannot be counted as " + to_string(*as));
    }
    kind = *as;
  }
  return ProblemInstance(kind, std::move(data), std::move(id));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ProblemInstance load_problem(const std::filesystem::path& path, std::optional<ProblemKind> as) {
  return parse_problem(read_text_file(path), as, path.filename().string());
}

}  // namespace totp
