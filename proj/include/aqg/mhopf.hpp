#pragma once

#include "aqg/algebra.hpp"
#include "aqg/report.hpp"

namespace aqg {

/**
 * A candidate comultiplication D: A -> A (x) A as an n^2 x n coordinate
 * matrix, together with the two canonical mixed-multiplication maps
 *   T1: a (x) b -> D(a)(b (x) 1)   and   T2: a (x) b -> D(a)(1 (x) b).
 * Bijectivity of T1 and T2 is what replaces the existence of an antipode in
 * the defining axioms; both are kept as explicit n^2 x n^2 matrices.
 */
struct Comultiplication {
  Matrix map;  // n^2 x n
  Matrix t1;   // n^2 x n^2
  Matrix t2;   // n^2 x n^2

  static Comultiplication build(const FiniteStarAlgebra& a, const Matrix& map);

  Vector apply(const Vector& x) const { return map * x; }
};

struct HopfPackage {
  LinearFunctional counit;
  AlgebraMap antipode;      // linear, antimultiplicative
  AlgebraMap antipode_inv;  // linear, antimultiplicative
};

/// Residual suite for the comultiplication axioms: *-homomorphism property,
/// unitality, coassociativity, and invertibility of T1/T2.  Throws
/// REJECTED_AXIOM naming the first failing identity when `strict`.
VerificationReport check_comultiplication(const FiniteStarAlgebra& a,
                                          const Comultiplication& d, double tol,
                                          bool strict = true);

/// Solve (eps (x) id)D = (id (x) eps)D = id for the unique counit; verified
/// to be a *-homomorphism.  Throws NO_COUNIT / NON_UNIQUE.
LinearFunctional derive_counit(const FiniteStarAlgebra& a,
                               const Comultiplication& d, double tol,
                               VerificationReport* report = nullptr);

/// Solve m(S (x) id)(D(a)(1 (x) b)) = eps(a) b for the unique antipode and
/// its inverse; cross-checked against the mirror relation
/// m(id (x) S)((b (x) 1)D(a)) = eps(a) b.
HopfPackage derive_antipode(const FiniteStarAlgebra& a,
                            const Comultiplication& d,
                            const LinearFunctional& counit, double tol,
                            VerificationReport* report = nullptr);

/// Residuals for S(S(a*)*) = a and flip (S (x) S) D = D S, plus the counit
/// compatibility eps o S = eps.
VerificationReport verify_antipode_identities(const FiniteStarAlgebra& a,
                                              const Comultiplication& d,
                                              const HopfPackage& pkg,
                                              double tol);

}  // namespace aqg
