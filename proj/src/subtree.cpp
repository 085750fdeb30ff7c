#include "totp/subtree.hpp"

#include <map>
#include <sstream>

#include "totp/errors.hpp"

namespace totp {

Circuit::Circuit(std::vector<Gate> gates, std::size_t output)
    : gates_(std::move(gates)), output_(output) {
  if (output_ >= gates_.size()) throw FormatError("circuit output names a missing gate");
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    for (std::size_t in : g.inputs) {
      if (in >= i) throw FormatError("gate " + std::to_string(i) + " uses a later gate");
    }
    if (g.op == GateOp::negation && g.inputs.size() != 1) throw FormatError("NOT takes one operand");
    if (g.op == GateOp::input_bit && g.parameter >= 64) throw FormatError("INPUT BIT index above 63");
  }
}

bool Circuit::evaluate(const Prefix& p) const {
  // Gates are topologically ordered; small circuits, so a fresh scratch row.
  std::vector<char> value(gates_.size(), 0);
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    bool v = false;
    switch (g.op) {
      case GateOp::input_bit: v = g.parameter < p.length && (p.bits >> g.parameter & 1); break;
      case GateOp::input_length: v = p.length == g.parameter; break;
      case GateOp::constant: v = g.parameter != 0; break;
      case GateOp::negation: v = !value[g.inputs[0]]; break;
      case GateOp::conjunction:
        v = true;
        for (std::size_t in : g.inputs) v = v && value[in];
        break;
      case GateOp::disjunction:
        for (std::size_t in : g.inputs) v = v || value[in];
        break;
    }
    value[i] = v;
  }
  return value[output_];
}

SubtreeInstance parse_subtree(std::string_view text) {
  bool header = false;
  std::size_t depth = 0;
  std::size_t declared = 0;
  std::vector<Gate> gates;
  std::map<long long, std::size_t> ids;
  long long output_id = -1;
  std::size_t output_line = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto operand = [&](const std::string& word, std::size_t line) {
    char* end = nullptr;
    long long id = std::strtoll(word.c_str(), &end, 10);
    auto it = ids.find(id);
    if (*end != '\0' || it == ids.end()) {
      throw FormatError("operand '" + word + "' is not a previously defined gate", line, 1);
    }
    return it->second;
  };
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string line(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    std::istringstream in(line);
    std::string tok;
    if (!(in >> tok) || tok == "c") continue;
    if (tok == "p") {
      std::string fmt;
      long long d = -1;
      long long m = -1;
      if (header) throw FormatError("duplicate header", line_no, 1);
      if (!(in >> fmt >> d >> m) || fmt != "subtree" || d < 0 || d > 63 || m < 0) {
        throw FormatError("expected header 'p subtree <depth 0..63> <gate-count>'", line_no, 1);
      }
      depth = static_cast<std::size_t>(d);
      declared = static_cast<std::size_t>(m);
      header = true;
      continue;
    }
    if (!header) throw FormatError("data before 'p subtree' header", line_no, 1);
    if (tok == "o") {
      if (output_id != -1) throw FormatError("duplicate output line", line_no, 1);
      if (!(in >> output_id)) throw FormatError("expected 'o <gate-id>'", line_no, 1);
      output_line = line_no;
      continue;
    }
    if (tok != "g") throw FormatError("unknown line type '" + tok + "'", line_no, 1);
    long long id = -1;
    std::string op;
    if (!(in >> id >> op)) throw FormatError("expected 'g <id> <op> ...'", line_no, 1);
    if (ids.count(id)) throw FormatError("gate id " + std::to_string(id) + " defined twice", line_no, 1);
    Gate g;
    std::string word;
    if (op == "INPUT") {
      std::string which;
      long long k = -1;
      if (!(in >> which >> k) || k < 0 || (which != "BIT" && which != "LEN")) {
        throw FormatError("expected 'INPUT BIT <i>' or 'INPUT LEN <j>'", line_no, 1);
      }
      g.op = which == "BIT" ? GateOp::input_bit : GateOp::input_length;
      g.parameter = static_cast<std::size_t>(k);
    } else if (op == "CONST") {
      long long k = -1;
      if (!(in >> k) || (k != 0 && k != 1)) throw FormatError("expected 'CONST 0|1'", line_no, 1);
      g.op = GateOp::constant;
      g.parameter = static_cast<std::size_t>(k);
    } else if (op == "NOT" || op == "AND" || op == "OR") {
      g.op = op == "NOT" ? GateOp::negation : op == "AND" ? GateOp::conjunction : GateOp::disjunction;
      while (in >> word) g.inputs.push_back(operand(word, line_no));
      if (g.op == GateOp::negation && g.inputs.size() != 1) {
        throw FormatError("NOT takes exactly one operand", line_no, 1);
      }
    } else {
      throw FormatError("unknown gate '" + op + "'", line_no, 1);
    }
    if (g.op == GateOp::input_bit && g.parameter >= 64) {
      throw FormatError("INPUT BIT index above 63", line_no, 1);
    }
    ids[id] = gates.size();
    gates.push_back(std::move(g));
  }
  if (!header) throw FormatError("missing 'p subtree' header");
  if (gates.size() != declared) {
    throw FormatError("header declares " + std::to_string(declared) + " gates, found " +
                      std::to_string(gates.size()));
  }
  if (output_id == -1) throw FormatError("missing output line 'o <gate-id>'");
  auto it = ids.find(output_id);
  if (it == ids.end()) throw FormatError("output names an undefined gate", output_line, 1);
  return SubtreeInstance{depth, Circuit(std::move(gates), it->second)};
}

std::string to_circuit_text(const SubtreeInstance& s) {
  const auto& gates = s.alive.gates();
  std::string out = "p subtree " + std::to_string(s.depth) + " " + std::to_string(gates.size()) + "\n";
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    out += "g " + std::to_string(i) + " ";
    switch (g.op) {
      case GateOp::input_bit: out += "INPUT BIT " + std::to_string(g.parameter); break;
      case GateOp::input_length: out += "INPUT LEN " + std::to_string(g.parameter); break;
      case GateOp::constant: out += "CONST " + std::to_string(g.parameter); break;
      case GateOp::negation: out += "NOT"; break;
      case GateOp::conjunction: out += "AND"; break;
      case GateOp::disjunction: out += "OR"; break;
    }
    for (std::size_t in : g.inputs) out += " " + std::to_string(in);
    out += "\n";
  }
  out += "o " + std::to_string(s.alive.output()) + "\n";
  return out;
}

Circuit constant_circuit(bool value) {
  return Circuit({Gate{GateOp::constant, value ? 1u : 0u, {}}}, 0);
}

}  // namespace totp
