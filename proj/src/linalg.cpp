#include "aqg/linalg.hpp"

#include <functional>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

namespace aqg {


double max_norm(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_norm(const Vector& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  // largest singular value through the Gram operator; the divide-and-conquer
  // SVD in this Eigen release emits NaNs on rank-deficient complex input
  Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(m.adjoint() * m),
                                           Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b);
}

Matrix eye(Eigen::Index d) { return Matrix::Identity(d, d); }

int numeric_rank(const Matrix& m, double cutoff) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  const double top = sv(0);
  if (top == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff * top) ++rank;
  return rank;
}

std::pair<double, double> singular_value_range(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  return {sv(sv.size() - 1), sv(0)};
}

bool is_invertible(const Matrix& m, double cutoff) {
  if (m.rows() != m.cols() || m.size() == 0) return false;
  auto [lo, hi] = singular_value_range(m);
  return hi > 0.0 && lo > cutoff * hi;
}

Vector lstsq(const Matrix& a, const Vector& b) {
  return a.completeOrthogonalDecomposition().solve(b);
}

Matrix nullspace(const Matrix& m, double cutoff) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (top > 0.0 && sv(i) > cutoff * top) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

Matrix hermitian_apply(const Matrix& m, const std::function<Complex(double)>& f,
                       double floor) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  Vector d(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    d(i) = f(std::max(es.eigenvalues()(i), floor));
  return es.eigenvectors() * d.asDiagonal() *
         es.eigenvectors().adjoint();
}

Matrix hermitian_sqrt(const Matrix& m) {
  return hermitian_apply(
      m, [](double x) { return Complex(std::sqrt(x), 0.0); }, 0.0);
}

Matrix positive_imaginary_power(const Matrix& m, double t) {
  return positive_power(m, Complex(0.0, t));
}

Matrix positive_power(const Matrix& m, Complex z) {
  return hermitian_apply(m, [z](double x) { return std::pow(Complex(x), z); });
}

bool is_hermitian(const Matrix& m, double tol) {
  return max_norm(Matrix(m - m.adjoint())) < tol;
}

bool is_positive_semidefinite(const Matrix& m, double tol) {
  if (!is_hermitian(m, tol)) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  const double scale = std::max(1.0, std::abs(es.eigenvalues().maxCoeff()));
  return es.eigenvalues().minCoeff() > -tol * scale;
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_norm(Matrix(m.adjoint() * m - eye(m.rows()))) < tol &&
         max_norm(Matrix(m * m.adjoint() - eye(m.rows()))) < tol;
}

Matrix leg_permutation(const std::vector<Eigen::Index>& dims,
                       const std::vector<int>& perm) {
  const int k = static_cast<int>(dims.size());
  Eigen::Index total = 1;
  for (auto d : dims) total *= d;
  std::vector<Eigen::Index> out_dims(k);
  for (int p = 0; p < k; ++p) out_dims[perm[p]] = dims[p];
  std::vector<Eigen::Index> out_strides(k, 1);
  for (int p = k - 2; p >= 0; --p)
    out_strides[p] = out_strides[p + 1] * out_dims[p + 1];

  Matrix result = Matrix::Zero(total, total);
  std::vector<Eigen::Index> idx(k, 0);
  for (Eigen::Index flat = 0; flat < total; ++flat) {
    Eigen::Index rest = flat;
    for (int p = k - 1; p >= 0; --p) {
      idx[p] = rest % dims[p];
      rest /= dims[p];
    }
    Eigen::Index target = 0;
    for (int p = 0; p < k; ++p) target += idx[p] * out_strides[perm[p]];
    result(target, flat) = 1.0;
  }
  return result;
}

Matrix embed_legs(const Matrix& op, const std::vector<int>& legs,
                  const std::vector<Eigen::Index>& dims) {
  const int k = static_cast<int>(dims.size());
  Eigen::Index total = 1;
  for (auto d : dims) total *= d;
  std::vector<Eigen::Index> strides(k, 1);
  for (int p = k - 2; p >= 0; --p) strides[p] = strides[p + 1] * dims[p + 1];

  Eigen::Index op_dim = 1;
  std::vector<Eigen::Index> op_strides(legs.size(), 1);
  for (int i = static_cast<int>(legs.size()) - 2; i >= 0; --i)
    op_strides[i] = op_strides[i + 1] * dims[legs[i + 1]];
  for (int leg : legs) op_dim *= dims[leg];
  if (op.rows() != op_dim || op.cols() != op_dim)
    fail(ErrorCode::schema_error, "operator does not fit the chosen legs");

  std::vector<bool> on_op(k, false);
  for (int leg : legs) on_op[leg] = true;
  std::vector<Eigen::Index> rest_legs;
  for (int p = 0; p < k; ++p)
    if (!on_op[p]) rest_legs.push_back(p);
  Eigen::Index rest = 1;
  for (auto p : rest_legs) rest *= dims[p];

  // Enumerate (operator entry, spectator index) pairs and write them
  // directly; avoids forming permutation matrices.
  Matrix out = Matrix::Zero(total, total);
  std::vector<Eigen::Index> op_idx(legs.size(), 0);
  for (Eigen::Index r = 0; r < op_dim; ++r) {
    Eigen::Index rr = r;
    for (int i = static_cast<int>(legs.size()) - 1; i >= 0; --i) {
      op_idx[i] = rr % dims[legs[i]];
      rr /= dims[legs[i]];
    }
    Eigen::Index row_base = 0;
    for (std::size_t i = 0; i < legs.size(); ++i)
      row_base += op_idx[i] * strides[legs[i]];
    for (Eigen::Index c = 0; c < op_dim; ++c) {
      const Complex v = op(r, c);
      if (v == Complex(0.0)) continue;
      Eigen::Index cc = c;
      Eigen::Index col_base = 0;
      for (int i = static_cast<int>(legs.size()) - 1; i >= 0; --i) {
        col_base += (cc % dims[legs[i]]) * strides[legs[i]];
        cc /= dims[legs[i]];
      }
      for (Eigen::Index s = 0; s < rest; ++s) {
        Eigen::Index ss = s;
        Eigen::Index spect = 0;
        for (int i = static_cast<int>(rest_legs.size()) - 1; i >= 0; --i) {
          spect += (ss % dims[rest_legs[i]]) * strides[rest_legs[i]];
          ss /= dims[rest_legs[i]];
        }
        out(row_base + spect, col_base + spect) += v;
      }
    }
  }
  return out;
}

Matrix flip_matrix(Eigen::Index da, Eigen::Index db) {
  return leg_permutation({da, db}, {1, 0});
}

Matrix slice_leg2(const Matrix& w, Eigen::Index d1, Eigen::Index d2,
                  const Vector& p, const Vector& q) {
  Matrix out = Matrix::Zero(d1, d1);
  for (Eigen::Index i = 0; i < d1; ++i)
    for (Eigen::Index j = 0; j < d1; ++j) {
      Complex acc = 0.0;
      for (Eigen::Index k = 0; k < d2; ++k)
        for (Eigen::Index l = 0; l < d2; ++l)
          acc += std::conj(q(k)) * w(i * d2 + k, j * d2 + l) * p(l);
      out(i, j) = acc;
    }
  return out;
}

Matrix slice_leg1(const Matrix& w, Eigen::Index d1, Eigen::Index d2,
                  const Vector& p, const Vector& q) {
  Matrix out = Matrix::Zero(d2, d2);
  for (Eigen::Index k = 0; k < d2; ++k)
    for (Eigen::Index l = 0; l < d2; ++l) {
      Complex acc = 0.0;
      for (Eigen::Index i = 0; i < d1; ++i)
        for (Eigen::Index j = 0; j < d1; ++j)
          acc += std::conj(q(i)) * w(i * d2 + k, j * d2 + l) * p(j);
      out(k, l) = acc;
    }
  return out;
}

Matrix AntiLinearOp::compose_antilinear(const AntiLinearOp& other) const {
  return m * other.m.conjugate();
}

bool AntiLinearOp::is_antiunitary(double tol) const {
  return is_unitary(m, tol);
}

double AntiLinearOp::involution_residual() const {
  return max_norm(Matrix(m * m.conjugate() - eye(m.rows())));
}

AntiLinearOp antilinear_kron(const AntiLinearOp& a, const AntiLinearOp& b) {
  return AntiLinearOp{kron(a.m, b.m)};
}

Vector RandomElements::vector(Eigen::Index n) {
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = scalar();
  return v;
}

Complex RandomElements::scalar() { return {normal(), normal()}; }

double RandomElements::normal() {
  // splitmix64-fed Box-Muller keeps the stream identical across platforms,
  // which the byte-identical report requirement needs.
  auto next = [this]() {
    state_ += 0x9e3779b97f4a7c15ull;
    unsigned long long z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  const double u1 =
      (static_cast<double>(next() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
  const double u2 =
      (static_cast<double>(next() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * 3.14159265358979323846 * u2);
}

}  // namespace aqg
