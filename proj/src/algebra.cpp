#include "aqg/algebra.hpp"

#include <utility>

namespace aqg {

FiniteStarAlgebra::FiniteStarAlgebra(std::string name,
                                     std::vector<std::string> labels,
                                     std::vector<Matrix> left_mult, Matrix star,
                                     Vector unit)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      left_mult_(std::move(left_mult)),
      star_(std::move(star)),
      unit_(std::move(unit)) {
  const auto n = dim();
  if (static_cast<Eigen::Index>(left_mult_.size()) != n || star_.rows() != n ||
      star_.cols() != n || unit_.size() != n)
    fail(ErrorCode::schema_error, "algebra data shapes are inconsistent");
  for (const auto& m : left_mult_)
    if (m.rows() != n || m.cols() != n)
      fail(ErrorCode::schema_error, "left multiplication matrix has bad shape");
  if (!unit_.allFinite() || !star_.allFinite())
    fail(ErrorCode::schema_error, "algebra data contains non-finite scalars");
  for (const auto& m : left_mult_)
    if (!m.allFinite())
      fail(ErrorCode::schema_error, "structure constants contain non-finite scalars");
}

Vector FiniteStarAlgebra::basis_vector(Eigen::Index i) const {
  Vector v = Vector::Zero(dim());
  v(i) = 1.0;
  return v;
}

Vector FiniteStarAlgebra::multiply(const Vector& a, const Vector& b) const {
  if (a.size() != dim() || b.size() != dim())
    fail(ErrorCode::algebra_mismatch, "element does not belong to this algebra");
  Vector out = Vector::Zero(dim());
  for (Eigen::Index i = 0; i < dim(); ++i)
    if (a(i) != Complex(0.0)) out += a(i) * (left_mult_[i] * b);
  return out;
}

Vector FiniteStarAlgebra::involute(const Vector& a) const {
  return star_ * a.conjugate();
}

Matrix FiniteStarAlgebra::left_mult_operator(const Vector& a) const {
  Matrix out = Matrix::Zero(dim(), dim());
  for (Eigen::Index i = 0; i < dim(); ++i)
    if (a(i) != Complex(0.0)) out += a(i) * left_mult_[i];
  return out;
}

Matrix FiniteStarAlgebra::right_mult_operator(const Vector& b) const {
  Matrix out = Matrix::Zero(dim(), dim());
  for (Eigen::Index i = 0; i < dim(); ++i) {
    // column i: coordinates of e_i b.
    out.col(i) = left_mult_[i] * b;
  }
  return out;
}

Vector FiniteStarAlgebra::inverse(const Vector& a) const {
  Matrix l = left_mult_operator(a);
  if (!is_invertible(l))
    fail(ErrorCode::singular_system, "element is not invertible");
  return l.partialPivLu().solve(unit_);
}

bool FiniteStarAlgebra::is_commutative(double tol) const {
  for (Eigen::Index i = 0; i < dim(); ++i)
    for (Eigen::Index j = i + 1; j < dim(); ++j)
      if (max_norm(Vector(left_mult_[i] * basis_vector(j) -
                          left_mult_[j] * basis_vector(i))) >= tol)
        return false;
  return true;
}

void FiniteStarAlgebra::axiom_suite(VerificationReport& report,
                                    double tol) const {
  const auto n = dim();

  // Associativity as L(e_i) L(e_j) = L(e_i e_j), which covers all triples.
  double assoc = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Matrix lhs = left_mult_[i] * left_mult_[j];
      Matrix rhs = left_mult_operator(left_mult_[i] * basis_vector(j));
      assoc = std::max(assoc, max_norm(Matrix(lhs - rhs)));
    }
  report.check("algebra.associativity", "(ab)c = a(bc)", assoc, tol);

  double unit_res =
      std::max(max_norm(Matrix(left_mult_operator(unit_) - eye(n))),
               max_norm(Matrix(right_mult_operator(unit_) - eye(n))));
  report.check("algebra.unit", "two-sided multiplicative identity", unit_res,
               tol);

  double antihom = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Vector ab = multiply(basis_vector(i), basis_vector(j));
      Vector lhs = involute(ab);
      Vector rhs = multiply(involute(basis_vector(j)), involute(basis_vector(i)));
      antihom = std::max(antihom, max_norm(Vector(lhs - rhs)));
    }
  report.check("algebra.star-antihom", "(ab)* = b* a*", antihom, tol);

  // a** = a as the matrix identity star * conj(star) = 1.
  double invol = max_norm(Matrix(star_ * star_.conjugate() - eye(n)));
  report.check("algebra.star-involution", "a** = a", invol, tol);
}

FiniteStarAlgebra tensor_algebra(const FiniteStarAlgebra& a,
                                 const FiniteStarAlgebra& b) {
  const auto n = a.dim();
  const auto m = b.dim();
  std::vector<std::string> labels;
  labels.reserve(n * m);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      labels.push_back(a.labels()[i] + "(x)" + b.labels()[j]);

  std::vector<Matrix> left;
  left.reserve(n * m);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      left.push_back(kron(a.left_mult(i), b.left_mult(j)));

  return FiniteStarAlgebra(a.name() + "(x)" + b.name(), std::move(labels),
                           std::move(left), kron(a.star_matrix(), b.star_matrix()),
                           kron(a.unit(), b.unit()));
}

AlgebraMap AlgebraMap::compose(const AlgebraMap& inner) const {
  AlgebraMap out;
  out.antilinear = antilinear != inner.antilinear;
  out.antimultiplicative = antimultiplicative != inner.antimultiplicative;
  out.matrix = antilinear ? Matrix(matrix * inner.matrix.conjugate())
                          : Matrix(matrix * inner.matrix);
  return out;
}

AlgebraMap AlgebraMap::inverse() const {
  AlgebraMap out;
  out.antilinear = antilinear;
  out.antimultiplicative = antimultiplicative;
  // For antilinear f: x -> M conj(x), the inverse is x -> conj(M^{-1} x).
  out.matrix = antilinear ? Matrix(matrix.inverse().conjugate())
                          : Matrix(matrix.inverse());
  return out;
}

Vector slice(const LinearFunctional& omega, int leg, const Vector& x,
             Eigen::Index dim_a, Eigen::Index dim_b) {
  if (x.size() != dim_a * dim_b)
    fail(ErrorCode::algebra_mismatch, "tensor element has wrong length");
  if (leg == 1) {
    if (omega.dim() != dim_a)
      fail(ErrorCode::algebra_mismatch, "functional does not live on leg 1");
    Vector out = Vector::Zero(dim_b);
    for (Eigen::Index i = 0; i < dim_a; ++i)
      out += omega.covector(i) * x.segment(i * dim_b, dim_b);
    return out;
  }
  if (leg == 2) {
    if (omega.dim() != dim_b)
      fail(ErrorCode::algebra_mismatch, "functional does not live on leg 2");
    Vector out = Vector::Zero(dim_a);
    for (Eigen::Index i = 0; i < dim_a; ++i)
      out(i) = omega(x.segment(i * dim_b, dim_b));
    return out;
  }
  fail(ErrorCode::algebra_mismatch, "leg must be 1 or 2");
}

Complex pair_functional(const LinearFunctional& omega1,
                        const LinearFunctional& omega2, const Vector& x,
                        Eigen::Index dim_a, Eigen::Index dim_b) {
  return omega2(slice(omega1, 1, x, dim_a, dim_b));
}

}  // namespace aqg
