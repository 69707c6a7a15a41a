#pragma once

#include <memory>
#include <string>
#include <vector>

#include "aqg/linalg.hpp"
#include "aqg/report.hpp"

namespace aqg {

/**
 * A finite-dimensional *-algebra given by structure constants.
 *
 * Basis vectors e_0,...,e_{n-1}; the product is stored as the family of
 * left-multiplication matrices: left_mult[i](k, j) is the coefficient of e_k
 * in e_i e_j.  The involution is the conjugate-linear map with coordinate
 * action a* = star * conj(a).  Every algebra here is unital: at finite
 * dimension a non-degenerate *-algebra carrying a faithful positive
 * functional is automatically unital and equals its own multiplier algebra,
 * so multipliers are represented as plain elements throughout.
 *
 * Tensor products use row-major basis ordering: e_i (x) f_j sits at flat
 * index i*dim(B) + j.  This ordering is part of the public contract so that
 * derived matrices are reproducible bit-for-bit.
 */
class FiniteStarAlgebra {
 public:
  FiniteStarAlgebra() = default;
  FiniteStarAlgebra(std::string name, std::vector<std::string> labels,
                    std::vector<Matrix> left_mult, Matrix star, Vector unit);

  Eigen::Index dim() const { return static_cast<Eigen::Index>(labels_.size()); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vector& unit() const { return unit_; }
  const Matrix& star_matrix() const { return star_; }
  const Matrix& left_mult(Eigen::Index i) const { return left_mult_[i]; }

  /// Structure constant m[i][j][k]: coefficient of e_k in e_i e_j.
  Complex structure_constant(Eigen::Index i, Eigen::Index j,
                             Eigen::Index k) const {
    return left_mult_[i](k, j);
  }

  Vector basis_vector(Eigen::Index i) const;

  /// Coordinates of the product ab.
  Vector multiply(const Vector& a, const Vector& b) const;
  /// Conjugate-linear involution a -> a*.
  Vector involute(const Vector& a) const;
  /// Left/right multiplication operators as matrices on coordinates.
  Matrix left_mult_operator(const Vector& a) const;
  Matrix right_mult_operator(const Vector& b) const;
  /// Inverse of a, solved from the left-multiplication operator.
  Vector inverse(const Vector& a) const;

  bool is_commutative(double tol) const;

  /// Residual suite for the *-algebra axioms: associativity, two-sided unit,
  /// (ab)* = b* a*, a** = a.  Appends entries to `report`.
  void axiom_suite(VerificationReport& report, double tol) const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Matrix> left_mult_;
  Matrix star_;
  Vector unit_;
};

/// Algebraic tensor product with componentwise product and star.
FiniteStarAlgebra tensor_algebra(const FiniteStarAlgebra& a,
                                 const FiniteStarAlgebra& b);

/// A linear functional on an algebra, stored as the covector of its values
/// on the basis.
struct LinearFunctional {
  Vector covector;

  Complex operator()(const Vector& coords) const {
    return covector.transpose() * coords;
  }
  Eigen::Index dim() const { return covector.size(); }
};

/// A linear (or conjugate-linear) map between coordinate spaces.  The
/// `antimultiplicative` flag is bookkeeping for maps like the antipode and
/// the unitary antipode; composing two antimultiplicative maps yields a
/// multiplicative one and the compose routine tracks that.
struct AlgebraMap {
  Matrix matrix;
  bool antilinear = false;
  bool antimultiplicative = false;

  Vector apply(const Vector& x) const {
    return antilinear ? Vector(matrix * x.conjugate()) : Vector(matrix * x);
  }
  AlgebraMap compose(const AlgebraMap& inner) const;
  AlgebraMap inverse() const;
  static AlgebraMap identity(Eigen::Index n) {
    return {Matrix::Identity(n, n), false, false};
  }
};

/// Partial application of a functional to one leg of a two-leg tensor
/// element:  slice(omega, 1, x) = (omega (x) id)(x), slice(omega, 2, x) =
/// (id (x) omega)(x).  `dim_a`, `dim_b` give the leg dimensions of x.
Vector slice(const LinearFunctional& omega, int leg, const Vector& x,
             Eigen::Index dim_a, Eigen::Index dim_b);

/// Evaluate a two-leg functional omega1 (x) omega2 on a tensor element.
Complex pair_functional(const LinearFunctional& omega1,
                        const LinearFunctional& omega2, const Vector& x,
                        Eigen::Index dim_a, Eigen::Index dim_b);

}  // namespace aqg
