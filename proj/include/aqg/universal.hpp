#pragma once

#include "aqg/duality.hpp"
#include "aqg/gns.hpp"

namespace aqg {

/// A *-representation of the algebra, given by its images on the basis.
struct StarRepresentation {
  std::string name;
  std::vector<Matrix> images;

  Matrix apply(const Vector& coords) const;
};

/**
 * The universal C*-completion, realized concretely through the GNS
 * representation: at finite dimension every C*-norm on the enveloping
 * algebra agrees with the reduced one, and the bridge A_u -> A_r is an
 * isomorphism.  That statement is executed, not assumed: the norm function
 * is compared against a registry of structurally generated
 * *-representations, each of which has to factor with norm at most |.|_u.
 */
struct UniversalRealization {
  std::vector<Matrix> pi_u;  // equals the GNS representation matrices
  std::vector<StarRepresentation> registry;

  Matrix represent(const Vector& coords) const;
  double norm_u(const Vector& coords) const { return operator_norm(represent(coords)); }
};

UniversalRealization build_universal(const QuantumGroup& qg, const GnsData& gns,
                                     double tol, unsigned seed,
                                     VerificationReport* report = nullptr);

/// Worst violation over the registry (including representations appended by
/// callers) of the *-representation axioms and of the norm bound
/// |theta(a)| <= |a|_u, sampled on the basis and on seeded random elements.
double registry_residual(const FiniteStarAlgebra& a,
                         const UniversalRealization& u, unsigned seed);

enum class CorepSide { reduced, universal, algebraic };

/// A unitary corepresentation on a finite-dimensional carrier K = C^k,
/// stored as its matrix on H (x) K.
struct Corepresentation {
  Eigen::Index dim_h = 0;
  Eigen::Index dim_c = 0;
  Matrix matrix;
  CorepSide side = CorepSide::reduced;
};

/// Residuals of the corepresentation axioms ((D (x) id)U = U13 U23 via the
/// implementing unitary, unitarity, and leg-1 membership in pi(A)).
double corep_residual(const GnsData& gns, const BigUnitary& w,
                      const Corepresentation& u);

/// The left regular corepresentation V of the universal level, solved from
/// V (pi_u (x) L)(D(b)(a (x) 1)) = pi_u(a) (x) L(b).
BigUnitary build_V(const QuantumGroup& qg, const GnsData& gns,
                   const BigUnitary& w, const UniversalRealization& universal,
                   double tol, unsigned seed,
                   VerificationReport* report = nullptr);

/// The universal corepresentation U = (pi_u (x) pi^_u)(X).
BigUnitary build_U(const QuantumGroup& qg, const GnsData& gns,
                   const DualQuantumGroup& dual, const DualGns& dual_gns,
                   const BigUnitary& w, double tol,
                   VerificationReport* report = nullptr);

/// Slice a corepresentation into the *-homomorphism theta(om) =
/// (om (x) id)(U) on the dual; throws NOT_COREP / NOT_STAR_HOM.
std::vector<Matrix> corep_to_hom(const GnsData& gns, const BigUnitary& w,
                                 const DualQuantumGroup& dual,
                                 const Corepresentation& u, double tol);

/// Rebuild the corepresentation (id (x) theta)(X) from a *-homomorphism on
/// the dual; throws NOT_STAR_HOM when theta fails the algebra maps.
Corepresentation hom_to_corep(const QuantumGroup& qg, const GnsData& gns,
                              const DualQuantumGroup& dual,
                              const std::vector<Matrix>& theta, double tol);

/// Residual of theta being a unital *-homomorphism on the dual.
double star_hom_residual(const FiniteStarAlgebra& dual_algebra,
                         const std::vector<Matrix>& theta);

/// Lift a reduced corepresentation to the universal level; verifies
/// (pi (x) id)(U_u) = U and the uniqueness formula
/// (U_u)13 = V12* U23 V12 U23*.
Corepresentation lift_corep(const GnsData& gns, const BigUnitary& w,
                            const BigUnitary& v, const Corepresentation& u,
                            double tol, VerificationReport* report = nullptr);

/// Rank-stability check that the slice space {(om_{p,q} (x) id)(U)} is
/// closed under products and adjoints.
bool slice_algebra_closed(const GnsData& gns, const Corepresentation& u,
                          double tol);

}  // namespace aqg
