#include <doctest.h>

#include "aqg/examples.hpp"
#include "aqg/universal.hpp"

using namespace aqg;

TEST_SUITE_BEGIN("universal");

namespace {
constexpr double tol = kDefaultTol;

struct Fixture {
  VerificationReport report{tol};
  QuantumGroup qg;
  GnsData gns;
  BigUnitary w;
  DualQuantumGroup dual;
  DualGns dual_gns;
  UniversalRealization uni;
  BigUnitary v;
  BigUnitary u;

  explicit Fixture(const AlgebraWithComult& ex)
      : qg(QuantumGroup::derive(ex.algebra, ex.comult, tol)),
        gns(build_gns(qg, tol)),
        w(build_fundamental_unitary(qg, gns, tol)),
        dual(build_dual(qg, tol)),
        dual_gns(build_dual_gns(qg, dual, gns, tol)),
        uni(build_universal(qg, gns, tol, 1, &report)),
        v(build_V(qg, gns, w, uni, tol, 1, &report)),
        u(build_U(qg, gns, dual, dual_gns, w, tol, &report)) {}
};
}  // namespace

TEST_CASE("universal realization of C[Z2]: norms, registry, counit") {
  Fixture f(make_group_algebra(CayleyTable::cyclic(2)));
  CHECK(f.report.all_passed());
  CHECK(std::abs(f.uni.norm_u(f.qg.algebra.unit()) - 1.0) < 1e-12);
  // the one-dimensional counit representation is norm bounded by |.|_u
  RandomElements rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    Vector x = rng.vector(2);
    CHECK(std::abs(f.qg.hopf.counit(x)) <= f.uni.norm_u(x) + 1e-10);
  }
}

TEST_CASE("V coincides with W in the identified picture") {
  Fixture f(make_group_algebra(CayleyTable::cyclic(2)));
  CHECK(max_norm(Matrix(f.v.matrix - f.w.matrix)) < 1e-11);
  // V fixes L(1) (x) L(1), the a = b = unit case of the defining relation
  Vector l1 = f.gns.Lambda(f.qg.algebra.unit());
  Vector v1 = kron(Matrix(l1), Matrix(l1)).col(0);
  CHECK(max_norm(Vector(f.v.matrix * v1 - v1)) < 1e-11);
}

TEST_CASE("universal suite passes for kac-paljutkin") {
  Fixture f(make_kac_paljutkin());
  CHECK(f.report.all_passed());
  CHECK(f.report.max_residual() < 1e-9);
  CHECK(f.report.find("V.implement-comult") != nullptr);
  CHECK(f.report.find("U.corep-right") != nullptr);
}

TEST_CASE("norm bound of the counit on random kac-paljutkin elements") {
  Fixture f(make_kac_paljutkin());
  RandomElements rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    Vector x = rng.vector(8);
    CHECK(std::abs(f.qg.hopf.counit(x)) <= f.uni.norm_u(x) + 1e-9);
  }
}

TEST_CASE("caller-registered representations join the norm check") {
  Fixture f(make_group_algebra(CayleyTable::cyclic(4)));
  UniversalRealization ext = f.uni;
  // direct sum of the reduced representation with itself
  StarRepresentation doubled{"doubled", {}};
  for (const auto& m : f.gns.pi) {
    Matrix big = Matrix::Zero(8, 8);
    big.topLeftCorner(4, 4) = m;
    big.bottomRightCorner(4, 4) = m;
    doubled.images.push_back(big);
  }
  ext.registry.push_back(doubled);
  CHECK(registry_residual(f.qg.algebra, ext, 5) < 1e-10);

  // a scaled copy violates the universal bound and is flagged
  StarRepresentation broken{"scaled", {}};
  for (const auto& m : f.gns.pi) broken.images.push_back(Matrix(2.0 * m));
  ext.registry.push_back(broken);
  CHECK(registry_residual(f.qg.algebra, ext, 5) > 0.5);
}

TEST_CASE("corep <-> hom bijection on U itself") {
  Fixture f(make_group_algebra(CayleyTable::cyclic(4)));
  const auto n = f.qg.dim();
  Corepresentation u_corep{n, n, f.u.matrix, CorepSide::universal};
  auto theta = corep_to_hom(f.gns, f.w, f.dual, u_corep, tol);
  for (Eigen::Index i = 0; i < n; ++i)
    CHECK(max_norm(Matrix(theta[i] - f.dual_gns.pi_hat[i])) < 1e-10);
  auto back = hom_to_corep(f.qg, f.gns, f.dual, theta, tol);
  CHECK(max_norm(Matrix(back.matrix - f.u.matrix)) < 1e-10);
}

TEST_CASE("corep <-> hom bijection on the trivial corepresentation") {
  Fixture f(make_group_algebra(CayleyTable::cyclic(2)));
  Corepresentation trivial{2, 1, eye(2), CorepSide::reduced};
  auto theta = corep_to_hom(f.gns, f.w, f.dual, trivial, tol);
  // theta = eps^ into C
  for (Eigen::Index i = 0; i < 2; ++i)
    CHECK(std::abs(theta[i](0, 0) - f.dual.qg.hopf.counit.covector(i)) <
          1e-11);
  auto back = hom_to_corep(f.qg, f.gns, f.dual, theta, tol);
  CHECK(max_norm(Matrix(back.matrix - eye(2))) < 1e-11);
}

TEST_CASE("W as corepresentation on the dual slices to the reduced quotient") {
  Fixture f(make_group_algebra(CayleyTable::cyclic(2)));
  Corepresentation w_corep{2, 2, f.w.matrix, CorepSide::reduced};
  auto theta = corep_to_hom(f.gns, f.w, f.dual, w_corep, tol);
  for (Eigen::Index i = 0; i < 2; ++i)
    CHECK(max_norm(Matrix(theta[i] - f.dual_gns.pi_hat[i])) < 1e-11);
}

TEST_CASE("character pair of C[Z2] round trips and lifts") {
  Fixture f(make_group_algebra(CayleyTable::cyclic(2)));
  // two-dimensional corepresentation from the characters of Z2:
  // projections onto (1,1)/sqrt2 and (1,-1)/sqrt2
  Matrix p_plus(2, 2), p_minus(2, 2);
  p_plus << 0.5, 0.5, 0.5, 0.5;
  p_minus << 0.5, -0.5, -0.5, 0.5;
  Matrix m = kron(f.gns.pi[0], p_plus) + kron(f.gns.pi[1], p_minus);
  Corepresentation chars{2, 2, m, CorepSide::reduced};
  CHECK(corep_residual(f.gns, f.w, chars) < 1e-11);

  auto theta = corep_to_hom(f.gns, f.w, f.dual, chars, tol);
  auto back = hom_to_corep(f.qg, f.gns, f.dual, theta, tol);
  CHECK(max_norm(Matrix(back.matrix - m)) < 1e-10);

  VerificationReport rep(tol);
  auto lifted = lift_corep(f.gns, f.w, f.v, chars, tol, &rep);
  CHECK(rep.all_passed());
  CHECK(max_norm(Matrix(lifted.matrix - m)) < 1e-12);
}

TEST_CASE("lift of W is V and the lift of the trivial corep is trivial") {
  Fixture f(make_group_algebra(CayleyTable::cyclic(2)));
  Corepresentation w_corep{2, 2, f.w.matrix, CorepSide::reduced};
  VerificationReport rep(tol);
  auto lifted = lift_corep(f.gns, f.w, f.v, w_corep, tol, &rep);
  CHECK(rep.all_passed());
  CHECK(max_norm(Matrix(lifted.matrix - f.v.matrix)) < 1e-11);

  Corepresentation trivial{2, 1, eye(2), CorepSide::reduced};
  VerificationReport rep2(tol);
  auto lifted2 = lift_corep(f.gns, f.w, f.v, trivial, tol, &rep2);
  CHECK(rep2.all_passed());
  CHECK(max_norm(Matrix(lifted2.matrix - eye(2))) < 1e-12);
}

TEST_CASE("non-corepresentations are rejected") {
  Fixture f(make_group_algebra(CayleyTable::cyclic(2)));
  Corepresentation bad{2, 2, Matrix(f.w.matrix * 2.0), CorepSide::reduced};
  CHECK_THROWS_AS(corep_to_hom(f.gns, f.w, f.dual, bad, tol), AqgError);
  try {
    corep_to_hom(f.gns, f.w, f.dual, bad, tol);
  } catch (const AqgError& e) {
    CHECK(e.code() == ErrorCode::not_corep);
  }
}

TEST_CASE("maps that are not *-homomorphisms are rejected") {
  Fixture f(make_group_algebra(CayleyTable::cyclic(2)));
  std::vector<Matrix> broken(2, Matrix::Zero(2, 2));
  broken[0] = eye(2);
  broken[1] << 0, 1, 0, 0;  // not star-preserving
  CHECK(star_hom_residual(f.dual.qg.algebra, broken) > 0.1);
  CHECK_THROWS_AS(hom_to_corep(f.qg, f.gns, f.dual, broken, tol), AqgError);
}

TEST_CASE("slice algebra of U is closed under products and adjoints") {
  Fixture f(make_group_algebra(CayleyTable::cyclic(4)));
  Corepresentation u_corep{4, 4, f.u.matrix, CorepSide::universal};
  CHECK(slice_algebra_closed(f.gns, u_corep, tol));
}

TEST_SUITE_END();
