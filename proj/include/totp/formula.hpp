#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "totp/kernels/model_count.hpp"

namespace totp {

/// DIMACS-style signed literal: +v is variable v true, -v is v false, v >= 1.
using Literal = int;

struct CnfFormula {
  std::size_t variables = 0;
  std::vector<std::vector<Literal>> clauses;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

struct DnfFormula {
  std::size_t variables = 0;
  std::vector<std::vector<Literal>> terms;

  friend bool operator==(const DnfFormula&, const DnfFormula&) = default;
};

/// Throws FormatError if a literal is 0 or mentions a variable above `variables`.
void validate(const CnfFormula& f);
void validate(const DnfFormula& f);

/// "p cnf n m" followed by m zero-terminated clauses; "c" lines are comments.
CnfFormula parse_cnf(std::string_view text);

/// Same layout with header "p dnf n m"; each zero-terminated group is a term.
DnfFormula parse_dnf(std::string_view text);

std::string to_dimacs(const CnfFormula& f);
std::string to_dimacs(const DnfFormula& f);

/// Clause/term list as kernel masks (variable v maps to bit v-1).
std::vector<kernels::LiteralMask> to_masks(const std::vector<std::vector<Literal>>& groups);

}  // namespace totp
