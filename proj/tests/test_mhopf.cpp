#include <doctest.h>

#include "aqg/examples.hpp"
#include "aqg/mhopf.hpp"

using namespace aqg;

TEST_SUITE_BEGIN("mhopf");

namespace {
constexpr double tol = kDefaultTol;
}

TEST_CASE("Z2 group comultiplication passes all axioms") {
  auto ex = make_group_algebra(CayleyTable::cyclic(2));
  auto d = Comultiplication::build(ex.algebra, ex.comult);
  auto report = check_comultiplication(ex.algebra, d, tol);
  CHECK(report.all_passed());
  CHECK(report.max_residual() < 1e-14);
}

TEST_CASE("broken comultiplication D(g) = g (x) e is rejected") {
  auto ex = make_group_algebra(CayleyTable::cyclic(2));
  Matrix bad = Matrix::Zero(4, 2);
  bad(0 * 2 + 0, 0) = 1.0;  // D(e) = e (x) e
  bad(1 * 2 + 0, 1) = 1.0;  // D(g) = g (x) e
  auto d = Comultiplication::build(ex.algebra, bad);
  CHECK_THROWS_AS(check_comultiplication(ex.algebra, d, tol), AqgError);
  auto report = check_comultiplication(ex.algebra, d, tol, /*strict=*/false);
  CHECK(!report.all_passed());
  // the mixed multiplication map a (x) b -> D(a)(b (x) 1) degenerates
  CHECK(!report.find("comult.t1-invertible")->pass);
}

TEST_CASE("kac-paljutkin passes the comultiplication axioms") {
  auto ex = make_kac_paljutkin();
  auto d = Comultiplication::build(ex.algebra, ex.comult);
  auto report = check_comultiplication(ex.algebra, d, tol);
  CHECK(report.all_passed());
}

TEST_CASE("counit of the Z2 group algebra") {
  auto ex = make_group_algebra(CayleyTable::cyclic(2));
  auto d = Comultiplication::build(ex.algebra, ex.comult);
  auto eps = derive_counit(ex.algebra, d, tol);
  CHECK(std::abs(eps.covector(0) - Complex(1.0)) < 1e-12);
  CHECK(std::abs(eps.covector(1) - Complex(1.0)) < 1e-12);
  CHECK(std::abs(eps(ex.algebra.unit()) - Complex(1.0)) < 1e-12);
}

TEST_CASE("antipode of the Z2 group algebra is inversion") {
  auto ex = make_group_algebra(CayleyTable::cyclic(2));
  auto d = Comultiplication::build(ex.algebra, ex.comult);
  auto eps = derive_counit(ex.algebra, d, tol);
  auto pkg = derive_antipode(ex.algebra, d, eps, tol);
  CHECK(max_norm(Vector(pkg.antipode.apply(ex.algebra.basis_vector(1)) -
                        ex.algebra.basis_vector(1))) < 1e-12);
  CHECK(max_norm(Vector(pkg.antipode.apply(ex.algebra.unit()) -
                        ex.algebra.unit())) < 1e-12);
  CHECK(max_norm(Vector(pkg.antipode_inv.apply(ex.algebra.basis_vector(1)) -
                        ex.algebra.basis_vector(1))) < 1e-12);
  CHECK(pkg.antipode.antimultiplicative);
  auto rep = verify_antipode_identities(ex.algebra, d, pkg, tol);
  CHECK(rep.all_passed());
  CHECK(rep.max_residual() < 1e-13);
}

TEST_CASE("sweedler antipode: S^2 is not the identity but S^4 is") {
  auto ex = make_sweedler();
  auto d = Comultiplication::build(ex.algebra, ex.comult);
  auto report = check_comultiplication(ex.algebra, d, tol);
  CHECK(report.all_passed());
  auto eps = derive_counit(ex.algebra, d, tol);
  auto pkg = derive_antipode(ex.algebra, d, eps, tol);
  const Matrix s = pkg.antipode.matrix;
  const Matrix s2 = s * s;
  CHECK(max_norm(Matrix(s2 - eye(4))) > 0.5);
  CHECK(max_norm(Matrix(s2 * s2 - eye(4))) < 1e-12);
  // frozen from the presentation: S(x) = -gx, S(gx) = x
  CHECK(max_norm(Vector(Vector(s.col(2)) + ex.algebra.basis_vector(3))) <
        1e-12);
  CHECK(max_norm(Vector(Vector(s.col(3)) - ex.algebra.basis_vector(2))) <
        1e-12);
  auto rep = verify_antipode_identities(ex.algebra, d, pkg, tol);
  CHECK(rep.all_passed());
}

TEST_CASE("derivations are invariant under basis permutation") {
  auto ex = make_kac_paljutkin();
  const auto n = ex.algebra.dim();

  // permute the basis and rebuild
  std::vector<int> perm(n);
  for (Eigen::Index i = 0; i < n; ++i) perm[i] = static_cast<int>((i + 3) % n);
  Matrix p = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) p(perm[i], i) = 1.0;
  const Matrix p_inv = p.transpose();

  std::vector<Matrix> left(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    // new basis f_j = e_{perm^-1(j)} in old coordinates: columns of p_inv
    left[i] = p * ex.algebra.left_mult_operator(Vector(p_inv.col(i))) * p_inv;
  }
  Matrix star = p * ex.algebra.star_matrix() * p_inv.conjugate();
  Vector unit = p * ex.algebra.unit();
  Matrix comult = kron(p, p) * ex.comult * p_inv;
  FiniteStarAlgebra permuted("kp-permuted", ex.algebra.labels(),
                             std::move(left), std::move(star), std::move(unit));

  auto d0 = Comultiplication::build(ex.algebra, ex.comult);
  auto d1 = Comultiplication::build(permuted, comult);
  auto eps0 = derive_counit(ex.algebra, d0, tol);
  auto eps1 = derive_counit(permuted, d1, tol);
  CHECK(max_norm(Vector(Vector(p.transpose() * eps1.covector) -
                        eps0.covector)) < 1e-11);
  auto s0 = derive_antipode(ex.algebra, d0, eps0, tol);
  auto s1 = derive_antipode(permuted, d1, eps1, tol);
  CHECK(max_norm(Matrix(p_inv * s1.antipode.matrix * p - s0.antipode.matrix)) <
        1e-11);
}

TEST_CASE("T1/T2 inverses compose to the identity") {
  auto ex = make_kac_paljutkin();
  auto d = Comultiplication::build(ex.algebra, ex.comult);
  CHECK(max_norm(Matrix(d.t1 * d.t1.inverse() - eye(64))) < 1e-11);
  CHECK(max_norm(Matrix(d.t2.inverse() * d.t2 - eye(64))) < 1e-11);
}

TEST_SUITE_END();
