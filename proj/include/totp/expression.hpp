#pragma once

#include <filesystem>
#include <string_view>

#include "totp/machine.hpp"
#include "totp/problem.hpp"

namespace totp {

struct ExpressionContext {
  std::filesystem::path base_dir;  // PROB(...) paths are relative to this
  Caps caps;
  bool audit = false;              // audit PROB machines against brute force
};

/// Machine expression grammar:
///
///   expr := LEAF(A|R) | BR(expr, ...) | SUB1(expr) | ADD(expr,expr)
///         | MUL(expr,expr) | SEQ(expr,expr) | DBLACC(expr) | MODK(expr,k)
///         | MARKLM(expr) | NORM(expr,p) | PROB(path[,kind])
///
/// Whitespace is ignored between tokens. Errors are FormatErrors carrying
/// the line and column of the offending token.
Machine parse_machine(std::string_view text, const ExpressionContext& ctx = {});

/// Reads `path` and parses it with PROB paths resolved next to the file.
Machine load_machine(const std::filesystem::path& path, const Caps& caps = {});

}  // namespace totp
