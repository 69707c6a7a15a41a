#pragma once

#include "aqg/haar.hpp"

namespace aqg {

/**
 * The dual quantum group on the basis e^_i = e_i phi, materialized as a
 * concrete FiniteStarAlgebra: the convolution product
 * (om1 om2)(a) = (om1 (x) om2)(D(a)), the involution
 * om*(a) = conj(om(S(a)*)), and the comultiplication
 * D^(om)(x (x) y) = om(xy) are all expanded against the pairing
 * P[i][j] = (e_i phi)(e_j) = phi(e_j e_i) once, and the whole derivation
 * pipeline is re-run on the result.
 */
class DualQuantumGroup {
 public:
  QuantumGroup qg;        // the dual as a quantum group in its own right
  Matrix pairing;         // P[i][j] = phi(e_j e_i)
  Matrix pairing_inv_t;   // solves covector -> dual coordinates
  LinearFunctional psi_hat;  // right invariant, psi^(a^) = eps(a)

  Eigen::Index dim() const { return qg.dim(); }

  /// Dual coordinates of the functional with the given covector of values
  /// on the primal basis.
  Vector from_covector(const Vector& values) const {
    return pairing_inv_t * values;
  }
  /// Covector of values on the primal basis of a dual element.
  Vector to_covector(const Vector& dual_coords) const {
    return pairing.transpose() * dual_coords;
  }
  /// Evaluate a dual element on a primal element.
  Complex evaluate(const Vector& dual_coords, const Vector& primal) const {
    return to_covector(dual_coords).transpose() * primal;
  }
};

/// Construct the dual and re-run the full axiom suite on it.  Positivity of
/// the primal Haar functional is not required.
DualQuantumGroup build_dual(const QuantumGroup& qg, double tol,
                            VerificationReport* report = nullptr);

/// Fourier transform a -> a phi (coordinates in the dual basis) and its
/// inverse.
Vector fourier(const DualQuantumGroup& dual, const Vector& a);
Vector fourier_inv(const DualQuantumGroup& dual, const Vector& a_hat);

/// The universal algebraic corepresentation X = sum e_i (x) x^i in A (x) A^,
/// where {x^i} is the basis of the dual pairing-dual to {e_i}.
struct AlgebraicX {
  Vector coords;  // element of A (x) A^, row-major
  Matrix dual_basis_coeff;  // row i: coordinates of x^i in the e^ basis
};

AlgebraicX build_X(const QuantumGroup& qg, const DualQuantumGroup& dual,
                   double tol, VerificationReport* report = nullptr);

/// Biduality: the canonical evaluation map A -> (A^)^ is a *-isomorphism
/// intertwining the comultiplications, and flip(X) is the universal
/// corepresentation of the dual.
VerificationReport verify_biduality(const QuantumGroup& qg, double tol);

/// Plancherel / convolution checks at a given seed.
VerificationReport verify_fourier(const QuantumGroup& qg,
                                  const DualQuantumGroup& dual, double tol,
                                  unsigned seed, int samples = 100);

}  // namespace aqg
