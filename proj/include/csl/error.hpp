#pragma once

#include <stdexcept>
#include <string>

namespace csl {

// Every failure mode the library can report. The names double as the
// stable error_code strings emitted on the CLI surface.
enum class errc {
  parse_error,
  not_symmetric,
  not_positive_definite,
  singular,
  not_similarity,
  orientation_reversing,
  not_commensurate,
  not_sublattice,
  rank_deficient,
  division_by_zero,
  mixed_field,
  not_unit_modulus,
  zero_input,
  not_split_prime,
  not_coincidence,
  lattice_mismatch,
  both_zero,
  dimension_violation,
  suite_failed,
  internal,
};

inline const char* code_name(errc c) {
  switch (c) {
    case errc::parse_error: return "ParseError";
    case errc::not_symmetric: return "NotSymmetric";
    case errc::not_positive_definite: return "NotPositiveDefinite";
    case errc::singular: return "Singular";
    case errc::not_similarity: return "NotSimilarity";
    case errc::orientation_reversing: return "OrientationReversing";
    case errc::not_commensurate: return "NotCommensurate";
    case errc::not_sublattice: return "NotSublattice";
    case errc::rank_deficient: return "RankDeficient";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::mixed_field: return "MixedField";
    case errc::not_unit_modulus: return "NotUnitModulus";
    case errc::zero_input: return "ZeroInput";
    case errc::not_split_prime: return "NotSplitPrime";
    case errc::not_coincidence: return "NotCoincidence";
    case errc::lattice_mismatch: return "LatticeMismatch";
    case errc::both_zero: return "BothZero";
    case errc::dimension_violation: return "DimensionViolation";
    case errc::suite_failed: return "SuiteFailed";
    case errc::internal: return "InternalError";
  }
  return "InternalError";
}

// Process exit codes: 0 is success, each error class gets its own code.
inline int exit_code(errc c) { return 2 + static_cast<int>(c); }

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}

  errc code() const noexcept { return code_; }
  const char* code_name() const noexcept { return csl::code_name(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace csl
