#pragma once

#include "aqg/gns.hpp"
#include "aqg/universal.hpp"

namespace aqg {

/// A pair of *-automorphisms with (alpha (x) beta) D = D alpha, their
/// relative invariance scalar r, and the implementing unitaries on H.
struct AutomorphismPair {
  AlgebraMap alpha;
  AlgebraMap beta;
  double r = 1.0;
  Matrix u;
  Matrix v;
};

AutomorphismPair analyze_automorphism_pair(const QuantumGroup& qg,
                                           const GnsData& gns,
                                           const BigUnitary& w,
                                           const BigUnitary& v_corep,
                                           const Matrix& alpha,
                                           const Matrix& beta, double tol,
                                           VerificationReport* report = nullptr);

/// The positive implementing operators of the modular, deformation and
/// scaling groups, their spectral data and the scaling constant nu.
struct OneParameterData {
  Matrix nabla;
  Matrix P;
  Matrix Q;
  double nu = 1.0;
  std::vector<double> times{0.3, 1.0, -0.7};

  /// Algebra-coordinate action of sigma_t / K_t / tau_t (spectral calculus).
  Matrix sigma(double t, const GnsData& gns) const;
  Matrix deformation(double t, const GnsData& gns) const;  // K_t
  Matrix tau(double t, const GnsData& gns) const;
  /// Analytic continuation tau_z(x) = Q^{iz} x Q^{-iz}; z = -i/2 is the
  /// half-shift in the polar decomposition of the antipode.
  Matrix tau_analytic(Complex z, const GnsData& gns) const;
};

OneParameterData build_one_parameter(const QuantumGroup& qg, const GnsData& gns,
                                     const BigUnitary& w, double tol,
                                     const std::vector<double>& times,
                                     VerificationReport* report = nullptr);

/// The unitary antipode R (pulled back from J^ (.)* J^ on the reduced
/// algebra), the half-shifted scaling map tau_{-i/2} and the polar
/// decomposition S = R o tau_{-i/2}.
struct PolarData {
  AlgebraMap R;          // linear, antimultiplicative, star-preserving
  Matrix tau_minus_i2;   // algebra-coordinate action of tau_{-i/2}
  AlgebraMap kappa;      // R o tau_{-i/2}
};

PolarData build_polar(const QuantumGroup& qg, const GnsData& gns,
                      const DualGns& dual_gns, const OneParameterData& op,
                      double tol, VerificationReport* report = nullptr);

struct GroupLikeReport {
  Vector element;
  double lambda = 1.0;
  VerificationReport checks;
};

/// Analyze a group-like candidate: D(v) = v (x) v and v unitary (or strictly
/// positive).  Solves sigma_t(v) = lambda^{it} v and verifies tau_t(v) = v,
/// R(v) = v*.  Throws NOT_GROUP_LIKE.
GroupLikeReport analyze_group_like(const QuantumGroup& qg, const GnsData& gns,
                                   const OneParameterData& op,
                                   const PolarData& polar, const Vector& v,
                                   double tol);

/// The modular element identity suite.  The analytic parts need positivity;
/// the purely algebraic identities run for every input (pass gns = nullptr
/// for the non-positive branch).
VerificationReport modular_element_suite(const QuantumGroup& qg,
                                         const GnsData* gns,
                                         const OneParameterData* op,
                                         const PolarData* polar, double tol);

}  // namespace aqg
