#include "totp/config.hpp"

#include <charconv>
#include <sstream>

#include "totp/errors.hpp"
#include "totp/problem_io.hpp"

namespace totp {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_natural(std::string_view key, std::string_view text) {
  text = trim(text);
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw FormatError(std::string(key) + ": expected a natural number, got '" + std::string(text) + "'");
  }
  return v;
}

unsigned parse_percent(std::string_view key, std::string_view text) {
  const auto v = parse_natural(key, text);
  if (v > 100) throw FormatError(std::string(key) + ": percentage above 100");
  return static_cast<unsigned>(v);
}

}  // namespace

Caps parse_caps(std::string_view text, Caps base) {
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw FormatError("caps: expected key=value, got '" + std::string(item) + "'");
    const std::string_view key = trim(item.substr(0, eq));
    const std::size_t v = parse_natural(key, item.substr(eq + 1));
    if (key == "vars") {
      base.max_variables = v;
    } else if (key == "vertices") {
      base.max_vertices = v;
    } else if (key == "T") {
      base.max_scaling_exponent = v;
    } else {
      throw FormatError("caps: unknown key '" + std::string(key) + "'");
    }
  }
  return base;
}

std::string format_caps(const Caps& c) {
  return "vars=" + std::to_string(c.max_variables) + ",vertices=" + std::to_string(c.max_vertices) +
         ",T=" + std::to_string(c.max_scaling_exponent);
}

std::vector<std::size_t> parse_k_list(std::string_view text) {
  std::vector<std::size_t> ks;
  text = trim(text);
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const std::size_t lo = parse_natural("k", text.substr(0, dots));
    const std::size_t hi = parse_natural("k", text.substr(dots + 2));
    if (hi < lo || hi - lo > 1000) throw FormatError("k: bad range '" + std::string(text) + "'");
    for (std::size_t k = lo; k <= hi; ++k) ks.push_back(k);
  } else {
    while (!text.empty()) {
      const auto comma = text.find(',');
      ks.push_back(parse_natural("k", text.substr(0, comma)));
      text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    }
  }
  if (ks.empty()) throw FormatError("k: empty list");
  for (std::size_t k : ks)
    if (k < 2) throw FormatError("k: every k must be at least 2, got " + std::to_string(k));
  return ks;
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "seed") {
    cfg.corpus.seed = parse_natural(key, value);
  } else if (key == "count") {
    cfg.corpus.count = parse_natural(key, value);
  } else if (key == "max-depth") {
    cfg.corpus.max_depth = parse_natural(key, value);
  } else if (key == "max-fanout") {
    cfg.corpus.max_fanout = parse_natural(key, value);
    if (cfg.corpus.max_fanout == 0) throw FormatError("max-fanout must be at least 1");
  } else if (key == "leaf-percent") {
    cfg.corpus.leaf_percent = parse_percent(key, value);
  } else if (key == "wrap-percent") {
    cfg.corpus.wrap_percent = parse_percent(key, value);
  } else if (key == "k") {
    cfg.ks = parse_k_list(value);
  } else if (key == "caps") {
    cfg.caps = parse_caps(value, cfg.caps);
  } else if (key == "report-dir") {
    cfg.report_dir = std::string(value);
  } else {
    throw FormatError("unknown setting '" + std::string(key) + "'");
  }
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
  std::istringstream in(read_text_file(path));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view l = line;
    if (const auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
    if (trim(l).empty()) continue;
    const auto eq = l.find('=');
    if (eq == std::string_view::npos) throw FormatError("expected key = value", line_no, 1);
    try {
      apply_setting(base, l.substr(0, eq), l.substr(eq + 1));
    } catch (const FormatError& e) {
      throw FormatError(e.what(), line_no, 1);
    }
  }
  return base;
}

std::string describe(const RunConfig& cfg) {
  std::ostringstream out;
  out << "seed=" << cfg.corpus.seed << " count=" << cfg.corpus.count
      << " max-depth=" << cfg.corpus.max_depth << " max-fanout=" << cfg.corpus.max_fanout
      << " leaf-percent=" << cfg.corpus.leaf_percent << " wrap-percent=" << cfg.corpus.wrap_percent
      << " k=";
  for (std::size_t i = 0; i < cfg.ks.size(); ++i) out << (i ? "," : "") << cfg.ks[i];
  out << " caps=" << format_caps(cfg.caps);
  return out.str();
}

}  // namespace totp
