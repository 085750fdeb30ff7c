#include "totp/expression.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "totp/combinators.hpp"
#include "totp/errors.hpp"
#include "totp/problem_io.hpp"
#include "totp/self_reduction.hpp"

namespace totp {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ExpressionContext& ctx) : text_(text), ctx_(ctx) {}

  Machine parse_all() {
    Machine m = expr();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input after expression");
    return m;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }

  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw FormatError(what, line, col);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size()) fail(std::string("expected '") + c + "', found end of input");
    if (text_[pos_] != c) {
      fail(std::string("expected '") + c + "', found '" + text_[pos_] + "'");
    }
    ++pos_;
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) {
      if (pos_ >= text_.size()) fail("expected expression, found end of input");
      fail(std::string("unexpected character '") + text_[pos_] + "'");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t natural() {
    skip_space();
    const std::size_t start = pos_;
    std::size_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::size_t{1} << 40)) fail_at("number too large", start);
      v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (start == pos_) fail("expected a natural number");
    return v;
  }

  // Raw argument text up to the next ',' or ')', trimmed.
  std::string raw_argument() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')') ++pos_;
    std::size_t end = pos_;
    while (end > start && std::isspace(static_cast<unsigned char>(text_[end - 1]))) --end;
    if (end == start) fail_at("expected a problem file path", start);
    return std::string(text_.substr(start, end - start));
  }

  std::vector<Machine> operands(const std::string& head, std::size_t at, std::size_t arity) {
    std::vector<Machine> args;
    args.push_back(expr());
    while (peek(',')) {
      expect(',');
      args.push_back(expr());
    }
    expect(')');
    if (arity && args.size() != arity) {
      fail_at(head + " takes " + std::to_string(arity) + " argument" + (arity == 1 ? "" : "s") +
                  ", got " + std::to_string(args.size()),
              at);
    }
    return args;
  }

  Machine expr() {
    skip_space();
    const std::size_t at = pos_;
    const std::string head = word();
    expect('(');
    if (head == "LEAF") {
      skip_space();
      const std::size_t vat = pos_;
      const std::string v = word();
      expect(')');
      if (v == "A") return leaf_machine(Verdict::accept);
      if (v == "R") return leaf_machine(Verdict::reject);
      fail_at("LEAF takes A or R, got '" + v + "'", vat);
    }
    if (head == "BR") return branch_machine(operands(head, at, 0));
    if (head == "SUB1") return subtract_one(operands(head, at, 1)[0]);
    if (head == "DBLACC") return double_accepting(operands(head, at, 1)[0]);
    if (head == "MARKLM") return mark_leftmost_reject(operands(head, at, 1)[0]);
    if (head == "ADD" || head == "MUL" || head == "SEQ") {
      auto args = operands(head, at, 2);
      if (head == "ADD") return add(args[0], args[1]);
      if (head == "MUL") return multiply(args[0], args[1]);
      return seq(args[0], args[1]);
    }
    if (head == "MODK" || head == "NORM") {
      Machine m = expr();
      expect(',');
      skip_space();
      const std::size_t nat = pos_;
      const std::size_t n = natural();
      expect(')');
      if (head == "NORM") return normalize_perfect(m, n);
      if (n < 2) fail_at("MODK needs k >= 2, got " + std::to_string(n), nat);
      return acc_to_tot_modk(m, n);
    }
    if (head == "PROB") return problem(at);
    fail_at("unknown head '" + head + "'", at);
  }

  Machine problem(std::size_t at) {
    const std::string ref = raw_argument();
    std::optional<ProblemKind> kind;
    if (peek(',')) {
      expect(',');
      skip_space();
      const std::size_t kat = pos_;
      const std::string name = raw_argument();
      kind = parse_problem_kind(name);
      if (!kind) fail_at("unknown problem kind '" + name + "'", kat);
    }
    expect(')');
    std::filesystem::path path(ref);
    if (path.is_relative()) path = ctx_.base_dir / path;
    try {
      return self_reducible_machine(load_problem(path, kind), ctx_.caps, ctx_.audit);
    } catch (const FormatError& e) {
      fail_at("in " + path.string() + ": " + e.what(), at);
    }
  }

  std::string_view text_;
  const ExpressionContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Machine parse_machine(std::string_view text, const ExpressionContext& ctx) {
  return Parser(text, ctx).parse_all();
}

Machine load_machine(const std::filesystem::path& path, const Caps& caps) {
  ExpressionContext ctx;
  ctx.base_dir = path.parent_path();
  ctx.caps = caps;
  return parse_machine(read_text_file(path), ctx);
}

}  // namespace totp
