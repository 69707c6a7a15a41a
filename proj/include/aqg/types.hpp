#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace aqg {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Global default absolute tolerance for all residual checks.
inline constexpr double kDefaultTol = 1e-9;

/// Relative singular-value cutoff used for invertibility verdicts.
inline constexpr double kRankCutoff = 1e-9;

enum class ErrorCode {
  ok = 0,
  check_failed = 1,
  parse_error = 2,
  schema_error = 3,
  axiom_rejected = 4,
  no_counit = 5,
  non_unique_counit = 6,
  no_antipode = 7,
  singular_antipode = 8,
  no_haar = 9,
  non_unique_haar = 10,
  not_faithful = 11,
  positivity_required = 12,
  inconsistent_delta = 13,
  singular_system = 14,
  not_intertwining = 15,
  not_relatively_invariant = 16,
  not_group_like = 17,
  not_corep = 18,
  not_star_hom = 19,
  singular_pairing = 20,
  not_a_group = 21,
  algebra_mismatch = 22,
};

const char* error_code_name(ErrorCode code);

/// Library error carrying a machine-readable code for the CLI exit table.
class AqgError : public std::runtime_error {
 public:
  AqgError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw AqgError(code, message);
}

}  // namespace aqg
