#include "totp/class_problems.hpp"

#include "totp/counting.hpp"
#include "totp/errors.hpp"

namespace totp {

CountingOracle<ProblemInstance> problem_oracle(const Caps& caps) {
  return {"brute-force", [caps](const ProblemInstance& p) { return count(p, caps); }};
}

CountingOracle<Input> acc_oracle(const Machine& m) {
  return {"acc " + m.label(), [m](const Input& x) { return path_counts(m, x).accepting; }};
}

CountingOracle<Input> tot_oracle(const Machine& m) {
  return {"tot " + m.label(), [m](const Input& x) { return path_counts(m, x).tot(); }};
}

std::string PromiseVerdict::str() const {
  switch (tag_) {
    case Tag::yes: return "YES";
    case Tag::no: return "NO";
    case Tag::violated: return "VIOLATED " + difference_.str();
  }
  return {};
}

PromiseVerdict parse_verdict(const std::string& token) {
  if (token == "YES") return PromiseVerdict::yes();
  if (token == "NO") return PromiseVerdict::no();
  const std::string prefix = "VIOLATED ";
  if (token.rfind(prefix, 0) == 0 && token.size() > prefix.size()) {
    try {
      return PromiseVerdict::violated(BigInt(token.substr(prefix.size())));
    } catch (const std::exception&) {
    }
  }
  throw FormatError("not a verdict: '" + token + "'");
}

PromiseVerdict difference_verdict(const BigInt& difference, const BigInt& k) {
  if (difference == k) return PromiseVerdict::yes();
  if (difference == 0) return PromiseVerdict::no();
  return PromiseVerdict::violated(difference);
}

ModResult residue_verdict(const BigInt& count, std::size_t k) {
  BigInt r = count % k;
  if (r < 0) r += k;
  return ModResult{r, r != 0};
}

bool verify_diff_scaling(const CnfFormula& phi, const CnfFormula& phi_prime, const Graph& g,
                         const Graph& g_prime, std::size_t t, const Caps& caps) {
  if (t > caps.max_scaling_exponent) {
    throw ParameterError("scaling exponent " + std::to_string(t) + " exceeds cap " +
                         std::to_string(caps.max_scaling_exponent));
  }
  const BigInt sat_diff = count_sat(phi, caps) - count_sat(phi_prime, caps);
  const BigInt pm_diff = count_perfect_matchings(g, caps) - count_perfect_matchings(g_prime, caps);
  return (sat_diff << t) == pm_diff;
}

const char* to_string(ClassCondition c) {
  switch (c) {
    case ClassCondition::up: return "UP";
    case ClassCondition::fewp: return "FewP";
    case ClassCondition::parity: return "ParityP";
    case ClassCondition::modk: return "ModkP";
    case ClassCondition::spp: return "SPP";
    case ClassCondition::wpp: return "WPP";
    case ClassCondition::ceq: return "C=P";
    case ClassCondition::pp: return "PP";
  }
  return "?";
}

PromiseVerdict evaluate_condition(ClassCondition c, const BigInt& v, const BigInt& parameter) {
  auto verdict = [](bool b) { return b ? PromiseVerdict::yes() : PromiseVerdict::no(); };
  switch (c) {
    case ClassCondition::up:
    case ClassCondition::spp:
      if (v == 0 || v == 1) return verdict(v == 1);
      return PromiseVerdict::violated(v);
    case ClassCondition::fewp:
      if (v < 0 || v > parameter) return PromiseVerdict::violated(v);
      return verdict(v > 0);
    case ClassCondition::parity: return verdict(v % 2 != 0);
    case ClassCondition::modk: {
      if (parameter < 2) throw ParameterError("mod-k condition needs k >= 2");
      return verdict(residue_verdict(v, static_cast<std::size_t>(parameter)).accept);
    }
    case ClassCondition::wpp:
      if (parameter <= 0) throw ParameterError("WPP condition needs a positive bound");
      if (v == 0 || v == parameter) return verdict(v == parameter);
      return PromiseVerdict::violated(v);
    case ClassCondition::ceq: return verdict(v == 0);
    case ClassCondition::pp: return verdict(v > 0);
  }
  throw std::logic_error("unknown class condition");
}

}  // namespace totp
