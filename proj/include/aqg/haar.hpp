#pragma once

#include "aqg/mhopf.hpp"

namespace aqg {

struct HaarData {
  LinearFunctional phi;  // left invariant, phi(1) = 1 when possible
  LinearFunctional psi;  // right invariant, psi = phi o S
  bool positive = false;
  bool faithful = false;
  Matrix gram;  // G[i][j] = phi(e_i* e_j)
};

struct ModularPackage {
  AlgebraMap rho;        // phi(ab) = phi(b rho(a))
  AlgebraMap rho_prime;  // psi(ab) = psi(b rho'(a))
  Vector delta;          // modular element
  Vector delta_inv;
  Complex mu = 1.0;      // phi o S^2 = mu phi
  double nu = 1.0;       // scaling constant, filled by the one-parameter module
};

/// Solve the left-invariance system for the Haar functional.  The nullspace
/// of {(id (x) om)D(a) - om(a) 1 = 0} must be one-dimensional; the solution
/// is normalized to phi(1) = 1 when phi(1) != 0, otherwise by the first
/// largest-modulus Gram entry (the Gram diagonal can vanish identically for
/// non-positive integrals).  Positivity and faithfulness are read off the
/// Gram matrix spectrally.
HaarData solve_left_haar(const FiniteStarAlgebra& a, const Comultiplication& d,
                         const HopfPackage& pkg, double tol);

/// Weak KMS automorphisms rho (for phi) and rho' (for psi = phi o S), plus
/// their compatibility identities.
ModularPackage derive_rho(const FiniteStarAlgebra& a, const Comultiplication& d,
                          const HopfPackage& pkg, const HaarData& haar,
                          double tol, VerificationReport* report = nullptr);

/// Modular element delta solved from (phi (x) id)(D(a)(1 (x) b)) =
/// phi(a) delta b, and the scaling scalar mu from phi o S^2 = mu phi.
void derive_delta_mu(const FiniteStarAlgebra& a, const Comultiplication& d,
                     const HopfPackage& pkg, const HaarData& haar,
                     ModularPackage& mod, double tol,
                     VerificationReport* report = nullptr);

/// A fully derived quantum group: the validated comultiplication plus the
/// counit/antipode/Haar/modular package.
struct QuantumGroup {
  FiniteStarAlgebra algebra;
  Comultiplication comult;
  HopfPackage hopf;
  HaarData haar;
  ModularPackage modular;

  Eigen::Index dim() const { return algebra.dim(); }

  /// Run the whole derivation pipeline on raw input data.  `report`, when
  /// given, collects the axiom residuals encountered along the way.
  static QuantumGroup derive(FiniteStarAlgebra algebra, const Matrix& comult,
                             double tol, VerificationReport* report = nullptr);
};

/// Residual suite for the invariance and modular identities: strong left
/// invariance, the delta-twisted right invariance, phi(S(a)) = phi(a delta)
/// = mu phi(delta a), phi(S^2(a)) = phi(delta^-1 a delta), and right
/// invariance of psi.
VerificationReport run_identity_suite(const QuantumGroup& qg, double tol);

}  // namespace aqg
