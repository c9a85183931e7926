#pragma once

#include <stdexcept>
#include <string>

namespace ggrover {

/// Machine-readable failure codes. The CLI prints these on the diagnostic
/// stream and maps them to exit codes (parse errors -> 2, everything else -> 1).
enum class errc {
  non_square,
  non_hermitian,
  rank_deficient,
  index_out_of_range,
  dimension_mismatch,
  duplicate_target,
  duplicate_source_index,
  orthogonal_to_targets,
  rank_violation,
  degenerate_mode,
  non_positive_c,
  out_of_range,
  improbable_outcome,
  infeasible_size,
  degenerate_fit,
  parse_error,
  validation_error,
  numerical_failure,
};

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::non_square: return "non_square";
    case errc::non_hermitian: return "non_hermitian";
    case errc::rank_deficient: return "rank_deficient";
    case errc::index_out_of_range: return "index_out_of_range";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::duplicate_target: return "duplicate_target";
    case errc::duplicate_source_index: return "duplicate_source_index";
    case errc::orthogonal_to_targets: return "orthogonal_to_targets";
    case errc::rank_violation: return "rank_violation";
    case errc::degenerate_mode: return "degenerate_mode";
    case errc::non_positive_c: return "non_positive_c";
    case errc::out_of_range: return "out_of_range";
    case errc::improbable_outcome: return "improbable_outcome";
    case errc::infeasible_size: return "infeasible_size";
    case errc::degenerate_fit: return "degenerate_fit";
    case errc::parse_error: return "parse_error";
    case errc::validation_error: return "validation_error";
    case errc::numerical_failure: return "numerical_failure";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace ggrover
