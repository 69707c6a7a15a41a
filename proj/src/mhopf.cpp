#include "aqg/mhopf.hpp"

namespace aqg {

Comultiplication Comultiplication::build(const FiniteStarAlgebra& a,
                                         const Matrix& map) {
  const auto n = a.dim();
  if (map.rows() != n * n || map.cols() != n)
    fail(ErrorCode::schema_error, "comultiplication matrix has wrong shape");
  FiniteStarAlgebra aa = tensor_algebra(a, a);
  Matrix t1(n * n, n * n), t2(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vector da = map.col(i);
    for (Eigen::Index j = 0; j < n; ++j) {
      const Vector b1 = kron(Matrix(a.basis_vector(j)), Matrix(a.unit())).col(0);
      const Vector b2 = kron(Matrix(a.unit()), Matrix(a.basis_vector(j))).col(0);
      t1.col(i * n + j) = aa.multiply(da, b1);
      t2.col(i * n + j) = aa.multiply(da, b2);
    }
  }
  return {map, std::move(t1), std::move(t2)};
}

VerificationReport check_comultiplication(const FiniteStarAlgebra& a,
                                          const Comultiplication& d, double tol,
                                          bool strict) {
  const auto n = a.dim();
  VerificationReport report(tol);
  FiniteStarAlgebra aa = tensor_algebra(a, a);

  double hom = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Vector lhs = d.apply(a.multiply(a.basis_vector(i), a.basis_vector(j)));
      Vector rhs = aa.multiply(d.map.col(i), d.map.col(j));
      hom = std::max(hom, max_norm(Vector(lhs - rhs)));
    }
  report.check("comult.homomorphism", "D(ab) = D(a)D(b)", hom);

  report.check("comult.unital", "D(1) = 1 (x) 1",
               max_norm(Vector(d.apply(a.unit()) - aa.unit())));

  // D o star = star_(AxA) o D as antilinear maps: D St = St_AA conj(D).
  report.check("comult.star", "D(a*) = D(a)*",
               max_norm(Matrix(d.map * a.star_matrix() -
                               aa.star_matrix() * d.map.conjugate())));

  Matrix lhs = kron(d.map, eye(n)) * d.map;
  Matrix rhs = kron(eye(n), d.map) * d.map;
  report.check("comult.coassociativity", "(D (x) id)D = (id (x) D)D",
               max_norm(Matrix(lhs - rhs)));

  auto [lo1, hi1] = singular_value_range(d.t1);
  auto [lo2, hi2] = singular_value_range(d.t2);
  report.check_flag("comult.t1-invertible",
                    "a (x) b -> D(a)(b (x) 1) bijective",
                    hi1 > 0.0 && lo1 > kRankCutoff * hi1);
  report.check_flag("comult.t2-invertible",
                    "a (x) b -> D(a)(1 (x) b) bijective",
                    hi2 > 0.0 && lo2 > kRankCutoff * hi2);

  if (strict && !report.all_passed()) {
    fail(ErrorCode::axiom_rejected,
         "comultiplication rejected: " + report.first_failure()->id);
  }
  return report;
}

LinearFunctional derive_counit(const FiniteStarAlgebra& a,
                               const Comultiplication& d, double tol,
                               VerificationReport* report) {
  const auto n = a.dim();
  // Stack (eps (x) id)D(e_i) = e_i and (id (x) eps)D(e_i) = e_i:
  // unknowns eps_p, equations indexed by (i, q).
  Matrix sys(2 * n * n, n);
  Vector rhs(2 * n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index q = 0; q < n; ++q) {
      for (Eigen::Index p = 0; p < n; ++p) {
        sys(i * n + q, p) = d.map(p * n + q, i);
        sys(n * n + i * n + q, p) = d.map(q * n + p, i);
      }
      rhs(i * n + q) = (q == i) ? 1.0 : 0.0;
      rhs(n * n + i * n + q) = (q == i) ? 1.0 : 0.0;
    }
  if (numeric_rank(sys) < n)
    fail(ErrorCode::non_unique_counit,
         "counit system is rank deficient: solution not unique");
  Vector eps = lstsq(sys, rhs);
  const double defining = max_norm(Vector(sys * eps - rhs));
  if (defining >= tol)
    fail(ErrorCode::no_counit, "counit system is inconsistent");

  // *-homomorphism: eps(ab) = eps(a)eps(b), eps(a*) = conj(eps(a)), eps(1)=1.
  LinearFunctional functional{eps};
  double hom = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      hom = std::max(hom, std::abs(functional(a.multiply(a.basis_vector(i),
                                                         a.basis_vector(j))) -
                                   eps(i) * eps(j)));
  for (Eigen::Index i = 0; i < n; ++i)
    hom = std::max(hom, std::abs(functional(a.involute(a.basis_vector(i))) -
                                 std::conj(eps(i))));
  hom = std::max(hom, std::abs(functional(a.unit()) - Complex(1.0)));
  if (hom >= tol)
    fail(ErrorCode::no_counit, "solved counit is not a *-homomorphism");
  if (report) {
    report->check("counit.defining", "(eps (x) id)D = (id (x) eps)D = id",
                  defining);
    report->check("counit.star-homomorphism", "eps is a *-homomorphism", hom);
  }
  return functional;
}

HopfPackage derive_antipode(const FiniteStarAlgebra& a,
                            const Comultiplication& d,
                            const LinearFunctional& counit, double tol,
                            VerificationReport* report) {
  const auto n = a.dim();
  // Unknowns: the n^2 entries of S (column-major: s_{kp} = S(e_p)_k).
  // Equations: for every (i, j), m(S (x) id)(T2(e_i (x) e_j)) = eps(e_i) e_j,
  // i.e. sum_{p,q} T2[(p,q),(i,j)] R(e_q) S e_p = eps_i e_j.
  Matrix sys = Matrix::Zero(n * n * n, n * n);
  Vector rhs = Vector::Zero(n * n * n);
  std::vector<Matrix> rmul(n);
  for (Eigen::Index q = 0; q < n; ++q)
    rmul[q] = a.right_mult_operator(a.basis_vector(q));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Eigen::Index row0 = (i * n + j) * n;
      for (Eigen::Index p = 0; p < n; ++p)
        for (Eigen::Index q = 0; q < n; ++q) {
          const Complex c = d.t2(p * n + q, i * n + j);
          if (c == Complex(0.0)) continue;
          // contribution c * R(e_q) * S.col(p): rows row0..row0+n-1,
          // columns p*n..p*n+n-1 (S.col(p) entries).
          for (Eigen::Index r = 0; r < n; ++r)
            for (Eigen::Index k = 0; k < n; ++k)
              sys(row0 + r, p * n + k) += c * rmul[q](r, k);
        }
      rhs.segment(row0, n) = counit.covector(i) * a.basis_vector(j);
    }
  Vector s_vec = lstsq(sys, rhs);
  const double defining = max_norm(Vector(sys * s_vec - rhs));
  if (defining >= tol)
    fail(ErrorCode::no_antipode, "antipode system is inconsistent");
  Matrix s_mat(n, n);
  for (Eigen::Index p = 0; p < n; ++p) s_mat.col(p) = s_vec.segment(p * n, n);

  if (!is_invertible(s_mat))
    fail(ErrorCode::singular_antipode, "solved antipode is singular");

  // Mirror relation m(id (x) S)((b (x) 1)D(a)) = eps(a) b.
  FiniteStarAlgebra aa = tensor_algebra(a, a);
  double mirror = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Vector b1 =
          kron(Matrix(a.basis_vector(j)), Matrix(a.unit())).col(0);
      Vector x = aa.multiply(b1, d.map.col(i));
      Vector acc = Vector::Zero(n);
      for (Eigen::Index p = 0; p < n; ++p) {
        const Vector leg2 = x.segment(p * n, n);
        acc += a.multiply(a.basis_vector(p), s_mat * leg2);
      }
      mirror = std::max(
          mirror, max_norm(Vector(
                      acc - counit.covector(i) * a.basis_vector(j))));
    }
  if (mirror >= tol)
    fail(ErrorCode::no_antipode,
         "antipode fails the mirror defining relation");

  // Antihomomorphism check: S(ab) = S(b)S(a).
  double antihom = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Vector lhs = s_mat * a.multiply(a.basis_vector(i), a.basis_vector(j));
      Vector rhs2 = a.multiply(Vector(s_mat.col(j)), Vector(s_mat.col(i)));
      antihom = std::max(antihom, max_norm(Vector(lhs - rhs2)));
    }
  if (antihom >= tol)
    fail(ErrorCode::no_antipode, "solved antipode is not antimultiplicative");

  if (report) {
    report->check("antipode.defining-left",
                  "m(S (x) id)(D(a)(1 (x) b)) = eps(a) b", defining);
    report->check("antipode.defining-right",
                  "m(id (x) S)((b (x) 1)D(a)) = eps(a) b", mirror);
    report->check("antipode.antihomomorphism", "S(ab) = S(b)S(a)", antihom);
  }

  HopfPackage pkg;
  pkg.counit = counit;
  pkg.antipode = {s_mat, false, true};
  pkg.antipode_inv = {s_mat.inverse(), false, true};
  return pkg;
}

VerificationReport verify_antipode_identities(const FiniteStarAlgebra& a,
                                              const Comultiplication& d,
                                              const HopfPackage& pkg,
                                              double tol) {
  const auto n = a.dim();
  VerificationReport report(tol);
  const Matrix& s = pkg.antipode.matrix;
  const Matrix& st = a.star_matrix();

  // S(S(a*)*) = a as S St conj(S) conj(St) = 1.
  report.check("antipode.star-square", "S(S(a*)*) = a",
               max_norm(Matrix(s * st * s.conjugate() * st.conjugate() -
                               eye(n))));

  Matrix flip = flip_matrix(n, n);
  report.check("antipode.flip-comult", "flip (S (x) S) D = D S",
               max_norm(Matrix(flip * kron(s, s) * d.map - d.map * s)));

  report.check("counit.antipode-compat", "eps o S = eps",
               max_norm(Vector(Vector(s.transpose() * pkg.counit.covector) -
                               pkg.counit.covector)));

  // (eps (x) eps) D = eps.
  Vector ee(n);
  for (Eigen::Index i = 0; i < n; ++i)
    ee(i) = pair_functional(pkg.counit, pkg.counit, d.map.col(i), n, n);
  report.check("counit.pair", "(eps (x) eps)D = eps",
               max_norm(Vector(ee - pkg.counit.covector)));

  report.check("antipode.invertible", "S has a linear inverse",
               max_norm(Matrix(s * pkg.antipode_inv.matrix - eye(n))));
  return report;
}

}  // namespace aqg
