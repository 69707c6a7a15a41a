#pragma once

#include "aqg/haar.hpp"

namespace aqg {

/**
 * GNS data of the left Haar functional on H = C^n.
 *
 * lambda is an invertible matrix L with L* L = gram, so L(a) = L * coords(a)
 * and <L(a), L(b)> = phi(b* a).  The Hermitian square root is used rather
 * than a Cholesky factor so that reports are equivariant under basis
 * permutations.  T is the closure of L(a) -> L(a*), stored as an antilinear
 * (matrix, conjugation) pair; nabla = T* T and J = T nabla^{-1/2}.
 */
struct GnsData {
  Matrix gram;
  Matrix lambda;      // L
  Matrix lambda_inv;  // L^-1
  std::vector<Matrix> pi;  // pi(e_i) acting on H
  AntiLinearOp T;
  Matrix nabla;
  AntiLinearOp J;

  Eigen::Index dim() const { return gram.rows(); }
  Vector Lambda(const Vector& coords) const { return lambda * coords; }
  Matrix represent(const Vector& coords) const;
  /// Coordinates of the algebra element with pi(a) = x; throws when x is not
  /// (numerically) in the image of pi.
  Vector corepresent(const Matrix& x, double tol) const;
};

/// Operator on a tensor product of GNS spaces (W, V, U, X all live here).
/// Dimension bookkeeping: a two-leg unitary on H (x) H stores n^4 scalars.
struct BigUnitary {
  std::vector<Eigen::Index> legs;
  Matrix matrix;

  Eigen::Index total_dim() const {
    Eigen::Index t = 1;
    for (auto d : legs) t *= d;
    return t;
  }
  double unitarity_residual() const;
};

/// GNS construction for a positive faithful Haar functional.  Throws
/// POSITIVITY_REQUIRED / NOT_FAITHFUL otherwise.
GnsData build_gns(const QuantumGroup& qg, double tol,
                  VerificationReport* report = nullptr);

/// The GNS/Tomita core for an arbitrary faithful positive functional on a
/// finite-dimensional *-algebra (no invariance assumed); build_gns runs
/// this on the Haar functional.  For non-tracial states the modular
/// operator is nontrivial.
GnsData gns_from_functional(const FiniteStarAlgebra& a,
                            const LinearFunctional& phi, double tol);

/// The fundamental unitary, solved from
///   W (L (x) L)(D(b)(a (x) 1)) = L(a) (x) L(b).
BigUnitary build_fundamental_unitary(const QuantumGroup& qg, const GnsData& gns,
                                     double tol,
                                     VerificationReport* report = nullptr);

/// Pentagon residual |W12 W13 W23 - W23 W12| on H (x) H (x) H.
VerificationReport verify_pentagon(const BigUnitary& w, double tol);

/// GNS data of the dual weight on the same Hilbert space: the dual GNS map
/// identifies L^(a^) = L(a), and J_hat is the modular conjugation obtained
/// from the dual Tomita operator T^ L^(om) = L^(om*).
struct DualGns {
  Matrix lambda_hat;           // equals lambda of the primal GNS
  std::vector<Matrix> pi_hat;  // pi^(e^_i) on H
  AntiLinearOp T_hat;
  Matrix nabla_hat;
  AntiLinearOp J_hat;
};

class DualQuantumGroup;  // duality.hpp

DualGns build_dual_gns(const QuantumGroup& qg, const DualQuantumGroup& dual,
                       const GnsData& gns, double tol,
                       VerificationReport* report = nullptr);

/// The reduced-level identity suite: comultiplication implementation,
/// the slice formulas for pi and pi^, the span property of the slices of W,
/// coassociativity and match of the dual comultiplication, the modular
/// conjugation symmetry of W, and compatibility with the universal
/// algebraic corepresentation X.
VerificationReport reduced_structures(const QuantumGroup& qg,
                                      const GnsData& gns, const BigUnitary& w,
                                      const DualQuantumGroup& dual,
                                      const DualGns& dual_gns, double tol,
                                      unsigned seed = 1);

}  // namespace aqg
