#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "totp/problem.hpp"

namespace totp {

/// Accepts the names printed by to_string(ProblemKind).
std::optional<ProblemKind> parse_problem_kind(std::string_view name);

/// Picks the parser from the "p <format>" header. Edge lists default to
/// perfect matchings and circuits to subtree size; `as` overrides that
/// choice and must fit the file format.
ProblemInstance parse_problem(std::string_view text, std::optional<ProblemKind> as = std::nullopt,
                              std::string id = {});

ProblemInstance load_problem(const std::filesystem::path& path,
                             std::optional<ProblemKind> as = std::nullopt);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace totp
