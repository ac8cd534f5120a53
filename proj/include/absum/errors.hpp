#pragma once

#include <stdexcept>
#include <string>

namespace absum {

enum class errc {
  not_prime,
  no_irreducible_found,
  no_root_found,
  cross_field,
  degree_violation,
  empty_f,
  zero_t0,
  zero_leading_pb,
  singular_matrix,
  sampling_exhausted,
  interiority_violation,
  polytope_mismatch,
  regime_violation,
  unsupported_ab,
  negative_hodge_number,
  empty_input,
  reconstruction_unstable,
  not_polynomial,
  non_integral,
  root_finding_failed,
  hypothesis_unmet,
  budget_exceeded,
  degree_mismatch,
  parse_error,
  internal,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_prime: return "NotPrime";
    case errc::no_irreducible_found: return "NoIrreducibleFound";
    case errc::no_root_found: return "NoRootFound";
    case errc::cross_field: return "CrossField";
    case errc::degree_violation: return "DegreeViolation";
    case errc::empty_f: return "EmptyF";
    case errc::zero_t0: return "ZeroT0";
    case errc::zero_leading_pb: return "ZeroLeadingPB";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::sampling_exhausted: return "SamplingExhausted";
    case errc::interiority_violation: return "InteriorityViolation";
    case errc::polytope_mismatch: return "PolytopeMismatch";
    case errc::regime_violation: return "RegimeViolation";
    case errc::unsupported_ab: return "UnsupportedAB";
    case errc::negative_hodge_number: return "NegativeHodgeNumber";
    case errc::empty_input: return "EmptyInput";
    case errc::reconstruction_unstable: return "ReconstructionUnstable";
    case errc::not_polynomial: return "NotPolynomial";
    case errc::non_integral: return "NonIntegral";
    case errc::root_finding_failed: return "RootFindingFailed";
    case errc::hypothesis_unmet: return "HypothesisUnmet";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::parse_error: return "ParseError";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool ok, errc code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace absum
