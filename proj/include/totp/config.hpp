#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "totp/corpus.hpp"
#include "totp/problem.hpp"

namespace totp {

/// Settings shared by the verification suites.
struct RunConfig {
  CorpusConfig corpus;
  std::vector<std::size_t> ks{2, 3, 4, 5, 6, 7};
  Caps caps;
  std::filesystem::path report_dir;
};

/// "vars=20,vertices=16,T=64"; keys may be omitted.
Caps parse_caps(std::string_view text, Caps base = {});
std::string format_caps(const Caps& c);

/// "2..7", "2,3,5" or a single value; every k must be at least 2.
std::vector<std::size_t> parse_k_list(std::string_view text);

/// Sets one key: seed, count, max-depth, max-fanout, leaf-percent,
/// wrap-percent, k, caps, report-dir. Throws FormatError for unknown keys
/// or bad values.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// Flat "key = value" file; '#' starts a comment.
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

/// One line naming every setting that affects results.
std::string describe(const RunConfig& cfg);

}  // namespace totp
