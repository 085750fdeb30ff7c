#include "totp/formula.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "totp/errors.hpp"

namespace totp {

namespace {

void validate_groups(const std::vector<std::vector<Literal>>& groups, std::size_t variables,
                     const char* what) {
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (Literal l : groups[i]) {
      if (l == 0 || static_cast<std::size_t>(std::abs(l)) > variables) {
        throw FormatError(std::string(what) + " " + std::to_string(i + 1) + " has literal " +
                          std::to_string(l) + " outside 1.." + std::to_string(variables));
      }
    }
  }
}

struct Dimacs {
  std::size_t variables = 0;
  std::vector<std::vector<Literal>> groups;
};

Dimacs parse_dimacs(std::string_view text, std::string_view kind) {
  Dimacs out;
  bool header = false;
  std::size_t declared = 0;
  std::vector<Literal> current;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string line(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    std::istringstream in(line);
    std::string tok;
    if (!(in >> tok)) continue;
    if (tok == "c" || tok[0] == '%') continue;
    if (tok == "p") {
      std::string fmt;
      long long n = -1;
      long long m = -1;
      if (header) throw FormatError("duplicate header", line_no, 1);
      if (!(in >> fmt >> n >> m) || fmt != kind || n < 0 || m < 0) {
        throw FormatError("expected header 'p " + std::string(kind) + " <vars> <count>'", line_no, 1);
      }
      out.variables = static_cast<std::size_t>(n);
      declared = static_cast<std::size_t>(m);
      header = true;
      continue;
    }
    if (!header) throw FormatError("data before 'p " + std::string(kind) + "' header", line_no, 1);
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::string word = line.substr(start, i - start);
      char* end = nullptr;
      long v = std::strtol(word.c_str(), &end, 10);
      if (*end != '\0') throw FormatError("not an integer literal: '" + word + "'", line_no, start + 1);
      if (v == 0) {
        out.groups.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (static_cast<std::size_t>(std::labs(v)) > out.variables) {
        throw FormatError("literal " + word + " exceeds declared variable count", line_no, start + 1);
      }
      current.push_back(static_cast<Literal>(v));
    }
  }
  if (!header) throw FormatError("missing 'p " + std::string(kind) + "' header");
  if (!current.empty()) throw FormatError("last " + std::string(kind) + " group not terminated by 0");
  if (out.groups.size() != declared) {
    throw FormatError("header declares " + std::to_string(declared) + " groups, found " +
                      std::to_string(out.groups.size()));
  }
  return out;
}

std::string write_dimacs(std::string_view kind, std::size_t variables,
                         const std::vector<std::vector<Literal>>& groups) {
  std::string s = "p " + std::string(kind) + " " + std::to_string(variables) + " " +
                  std::to_string(groups.size()) + "\n";
  for (const auto& g : groups) {
    for (Literal l : g) s += std::to_string(l) + " ";
    s += "0\n";
  }
  return s;
}

}  // namespace

void validate(const CnfFormula& f) { validate_groups(f.clauses, f.variables, "clause"); }
void validate(const DnfFormula& f) { validate_groups(f.terms, f.variables, "term"); }

CnfFormula parse_cnf(std::string_view text) {
  auto d = parse_dimacs(text, "cnf");
  return CnfFormula{d.variables, std::move(d.groups)};
}

DnfFormula parse_dnf(std::string_view text) {
  auto d = parse_dimacs(text, "dnf");
  return DnfFormula{d.variables, std::move(d.groups)};
}

std::string to_dimacs(const CnfFormula& f) { return write_dimacs("cnf", f.variables, f.clauses); }
std::string to_dimacs(const DnfFormula& f) { return write_dimacs("dnf", f.variables, f.terms); }

std::vector<kernels::LiteralMask> to_masks(const std::vector<std::vector<Literal>>& groups) {
  std::vector<kernels::LiteralMask> out;
  out.reserve(groups.size());
  for (const auto& g : groups) {
    kernels::LiteralMask m;
    for (Literal l : g) {
      const std::uint64_t bit = std::uint64_t{1} << (std::abs(l) - 1);
      (l > 0 ? m.positive : m.negative) |= bit;
    }
    out.push_back(m);
  }
  return out;
}

}  // namespace totp
