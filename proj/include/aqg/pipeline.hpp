#pragma once

#include "aqg/duality.hpp"
#include "aqg/examples.hpp"
#include "aqg/gns.hpp"
#include "aqg/symmetry.hpp"
#include "aqg/universal.hpp"

namespace aqg {

struct PipelineOptions {
  double tol = kDefaultTol;
  unsigned seed = 1;
  std::vector<double> times{0.3, 1.0, -0.7};
};

/// Everything the pipeline derives for one input.  Positive-only members
/// are empty optionals in the non-positive branch.
struct Derived {
  QuantumGroup qg;
  std::optional<DualQuantumGroup> dual;
  std::optional<GnsData> gns;
  std::optional<DualGns> dual_gns;
  std::optional<BigUnitary> w;
  std::optional<BigUnitary> v;
  std::optional<BigUnitary> u;
  std::optional<UniversalRealization> universal;
  std::optional<OneParameterData> one_param;
  std::optional<PolarData> polar;
};

/// Run every applicable check on one input and collect one report.  The
/// GNS-dependent sections are skipped (with reasons) for non-positive Haar
/// functionals; `strict` commands that require them throw instead.
VerificationReport full_report(const AlgebraWithComult& input,
                               const PipelineOptions& opt,
                               Derived* out = nullptr);

/// Stage runners behind the CLI subcommands; each runs the pipeline up to
/// the requested stage and throws POSITIVITY_REQUIRED etc. when the stage
/// is not applicable.
VerificationReport run_stage(const std::string& stage,
                             const AlgebraWithComult& input,
                             const PipelineOptions& opt);

}  // namespace aqg
