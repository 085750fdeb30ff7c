#include <stdexcept>
#include <string>

#include "model_count_impl.hpp"
#include "totp/errors.hpp"

namespace totp::kernels {

namespace {

void check_arguments(std::span<const LiteralMask> masks, unsigned variables) {
  if (variables > kMaxVariables) {
    throw CapacityError("kernel supports at most " + std::to_string(kMaxVariables) +
                        " variables, got " + std::to_string(variables));
  }
  const std::uint64_t allowed = variables == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << variables) - 1;
  for (const auto& m : masks) {
    if ((m.positive | m.negative) & ~allowed) {
      throw ParameterError("literal mask mentions a variable outside 0.." +
                           std::to_string(variables));
    }
  }
}

void require(Backend b) {
  if (!backend_available(b)) {
    throw ParameterError(std::string("kernel backend not available on this CPU: ") + to_string(b));
  }
}

}  // namespace

const char* to_string(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::swar64: return "swar64";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "?";
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::scalar:
    case Backend::swar64: return true;
    case Backend::avx2: {
      static const bool ok = avx2::supported();
      return ok;
    }
    case Backend::neon: return neon::supported();
  }
  return false;
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::scalar, Backend::swar64, Backend::avx2, Backend::neon}) {
    if (backend_available(b)) out.push_back(b);
  }
  return out;
}

Backend preferred_backend() {
  static const Backend best = available_backends().back();
  return best;
}

std::uint64_t count_cnf_models(std::span<const LiteralMask> clauses, unsigned variables,
                               Backend backend) {
  check_arguments(clauses, variables);
  require(backend);
  switch (backend) {
    case Backend::scalar: return scalar::count_cnf(clauses, variables);
    case Backend::swar64: return swar::count_cnf(clauses, variables);
    case Backend::avx2: return avx2::count_cnf(clauses, variables);
    case Backend::neon: return neon::count_cnf(clauses, variables);
  }
  throw std::logic_error("unknown kernel backend");
}

std::uint64_t count_dnf_models(std::span<const LiteralMask> terms, unsigned variables,
                               Backend backend) {
  check_arguments(terms, variables);
  require(backend);
  switch (backend) {
    case Backend::scalar: return scalar::count_dnf(terms, variables);
    case Backend::swar64: return swar::count_dnf(terms, variables);
    case Backend::avx2: return avx2::count_dnf(terms, variables);
    case Backend::neon: return neon::count_dnf(terms, variables);
  }
  throw std::logic_error("unknown kernel backend");
}

}  // namespace totp::kernels
