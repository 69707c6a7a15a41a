#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "aqg/types.hpp"

namespace aqg {

// Dense complex linear algebra helpers shared by every module.  Tensor legs
// are always ordered row-major: the basis vector e_i (x) f_j of a product of
// spaces with dimensions (n, m) sits at flat index i*m + j.

/// Max-norm of a matrix (largest absolute entry).
double max_norm(const Matrix& m);
double max_norm(const Vector& v);

/// Operator 2-norm (largest singular value).
double operator_norm(const Matrix& m);

/// Kronecker product, row-major leg convention.
Matrix kron(const Matrix& a, const Matrix& b);

/// Identity on a d-dimensional leg.
Matrix eye(Eigen::Index d);

/// Numerical rank with relative singular value cutoff.
int numeric_rank(const Matrix& m, double cutoff = kRankCutoff);

/// Smallest and largest singular value.
std::pair<double, double> singular_value_range(const Matrix& m);

/// True when the smallest singular value clears the relative cutoff.
bool is_invertible(const Matrix& m, double cutoff = kRankCutoff);

/// Least-squares solve of a (possibly overdetermined) system.
Vector lstsq(const Matrix& a, const Vector& b);

/// Orthonormal basis of the nullspace, columns spanning ker(m).
Matrix nullspace(const Matrix& m, double cutoff = kRankCutoff);

/// Hermitian matrix function via spectral calculus; eigenvalues below
/// `floor` are clamped before `f` is applied.
Matrix hermitian_apply(const Matrix& m, const std::function<Complex(double)>& f,
                       double floor = 0.0);

Matrix hermitian_sqrt(const Matrix& m);
/// t -> m^{it} for positive definite m.
Matrix positive_imaginary_power(const Matrix& m, double t);
/// z -> m^{z} for positive definite m and complex exponent z.
Matrix positive_power(const Matrix& m, Complex z);

bool is_hermitian(const Matrix& m, double tol);
/// Hermitian within tol and all eigenvalues >= -tol * scale.
bool is_positive_semidefinite(const Matrix& m, double tol);
bool is_unitary(const Matrix& m, double tol);

/// Permutation matrix for a tensor space with leg dimensions `dims`,
/// sending leg p to position perm[p].  perm is the image list: the basis
/// vector with multi-index (i_0, ..., i_{k-1}) maps to the basis vector
/// whose index at position perm[p] is i_p.
Matrix leg_permutation(const std::vector<Eigen::Index>& dims,
                       const std::vector<int>& perm);

/// Embed an operator acting on a subset of legs into the full product space.
/// `legs` lists which legs of `dims` the operator acts on, in the operator's
/// own leg order; remaining legs carry the identity.
Matrix embed_legs(const Matrix& op, const std::vector<int>& legs,
                  const std::vector<Eigen::Index>& dims);

/// Flip on a two-leg space: x (x) y -> y (x) x.
Matrix flip_matrix(Eigen::Index da, Eigen::Index db);

/// Slice the second leg of an operator on H1 (x) H2 against the vector state
/// omega_{p,q}(x) = <x p, q>: returns the H1-operator
/// M[i][j] = sum_{k,l} conj(q_k) W[(i,k),(j,l)] p_l.
Matrix slice_leg2(const Matrix& w, Eigen::Index d1, Eigen::Index d2,
                  const Vector& p, const Vector& q);

/// Same for the first leg: M[k][l] = sum_{i,j} conj(q_i) W[(i,k),(j,l)] p_j.
Matrix slice_leg1(const Matrix& w, Eigen::Index d1, Eigen::Index d2,
                  const Vector& p, const Vector& q);

/// Antilinear operator on C^n, acting as x -> m * conj(x).  Composition
/// rules:
///   (antilinear f) o (linear g)      : x -> f.m * conj(g x)
///   (antilinear f) o (antilinear g)  : x -> f.m * conj(g.m) * x   (linear)
struct AntiLinearOp {
  Matrix m;

  Vector apply(const Vector& x) const { return m * x.conjugate(); }
  /// Composition with another antilinear map yields a linear matrix.
  Matrix compose_antilinear(const AntiLinearOp& other) const;
  bool is_antiunitary(double tol) const;
  /// J o J = 1 as an antilinear statement: m * conj(m) = 1.
  double involution_residual() const;
};

/// Tensor of two antilinear operators (again antilinear).
AntiLinearOp antilinear_kron(const AntiLinearOp& a, const AntiLinearOp& b);

/// Seeded standard-normal complex vector, for reproducible random checks.
class RandomElements {
 public:
  explicit RandomElements(unsigned seed) : state_(seed) {}
  Vector vector(Eigen::Index n);
  Complex scalar();

 private:
  unsigned long long state_;
  double normal();
};

}  // namespace aqg
