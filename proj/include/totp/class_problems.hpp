#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "totp/bigint.hpp"
#include "totp/errors.hpp"
#include "totp/machine.hpp"
#include "totp/problem.hpp"

namespace totp {

/// Exact counting function over instances of type X.
template <typename X>
struct CountingOracle {
  std::string name;
  std::function<BigInt(const X&)> count;
};

/// Brute-force oracle for the instance's own problem kind.
CountingOracle<ProblemInstance> problem_oracle(const Caps& caps = {});

/// acc(M) on the given input.
CountingOracle<Input> acc_oracle(const Machine& m);

/// tot(M) on the given input.
CountingOracle<Input> tot_oracle(const Machine& m);

/// Outcome of a promise problem: inside I_YES, inside I_NO, or outside both
/// with the difference that put it there.
class PromiseVerdict {
 public:
  static PromiseVerdict yes() { return PromiseVerdict(Tag::yes, 0); }
  static PromiseVerdict no() { return PromiseVerdict(Tag::no, 0); }
  static PromiseVerdict violated(BigInt difference) {
    return PromiseVerdict(Tag::violated, std::move(difference));
  }

  bool is_yes() const { return tag_ == Tag::yes; }
  bool is_no() const { return tag_ == Tag::no; }
  bool is_violated() const { return tag_ == Tag::violated; }

  /// Witnessing difference; zero unless violated.
  const BigInt& difference() const { return difference_; }

  /// YES, NO or "VIOLATED <diff>".
  std::string str() const;

  friend bool operator==(const PromiseVerdict&, const PromiseVerdict&) = default;

 private:
  enum class Tag { yes, no, violated };
  PromiseVerdict(Tag t, BigInt d) : tag_(t), difference_(std::move(d)) {}

  Tag tag_;
  BigInt difference_;
};

/// Parses the str() form; throws FormatError.
PromiseVerdict parse_verdict(const std::string& token);

struct ModResult {
  BigInt residue;
  bool accept = false;  // residue != 0
};

/// The verdict for count(x) - count(y) against target difference k >= 1.
PromiseVerdict difference_verdict(const BigInt& difference, const BigInt& k);

ModResult residue_verdict(const BigInt& count, std::size_t k);

template <typename X>
bool parity_of(const CountingOracle<X>& a, const X& x) {
  return a.count(x) % 2 != 0;
}

template <typename X>
ModResult modk_of(const CountingOracle<X>& a, const X& x, std::size_t k) {
  if (k < 2) throw ParameterError("mod-k problem needs k >= 2, got " + std::to_string(k));
  return residue_verdict(a.count(x), k);
}

template <typename X>
bool diff_eq0(const CountingOracle<X>& a, const X& x, const X& y) {
  return a.count(x) == a.count(y);
}

template <typename X>
bool diff_gt0(const CountingOracle<X>& a, const X& x, const X& y) {
  return a.count(x) > a.count(y);
}

template <typename X>
PromiseVerdict diff_eqg(const CountingOracle<X>& a, const X& x, const X& y, const BigInt& k) {
  if (k <= 0) throw ParameterError("difference target must be positive, got " + k.str());
  return difference_verdict(a.count(x) - a.count(y), k);
}

template <typename X>
PromiseVerdict diff_eq1(const CountingOracle<X>& a, const X& x, const X& y) {
  return diff_eqg(a, x, y, BigInt(1));
}

/// 2^T (#Sat(phi) - #Sat(phi')) == #PerfMatch(G) - #PerfMatch(G'). T above
/// caps.max_scaling_exponent is a ParameterError.
bool verify_diff_scaling(const CnfFormula& phi, const CnfFormula& phi_prime, const Graph& g,
                         const Graph& g_prime, std::size_t t, const Caps& caps = {});

/// Acceptance conditions of the counting classes, applied to a function
/// value v (an accepting-path count, or a gap for the gap-definable ones).
enum class ClassCondition {
  up,       // v in {0, 1}; accept iff v == 1
  fewp,     // accept iff v > 0, given v <= bound
  parity,   // accept iff v odd
  modk,     // accept iff v mod k != 0
  spp,      // v in {0, 1}; accept iff v == 1
  wpp,      // v in {0, bound}; accept iff v == bound
  ceq,      // accept iff v == 0
  pp,       // accept iff v > 0
};

const char* to_string(ClassCondition c);

/// Promise-aware verdict: conditions with a promise (up, fewp, spp, wpp)
/// report violated(v) when v lies outside it. `parameter` is k for modk and
/// the bound for fewp and wpp.
PromiseVerdict evaluate_condition(ClassCondition c, const BigInt& v, const BigInt& parameter = 0);

}  // namespace totp
