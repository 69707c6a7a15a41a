#include <doctest.h>

#include "aqg/examples.hpp"
#include "aqg/symmetry.hpp"

using namespace aqg;

TEST_SUITE_BEGIN("symmetry");

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
  OneParameterData op;
  PolarData polar;

  explicit Fixture(const AlgebraWithComult& ex)
      : qg(QuantumGroup::derive(ex.algebra, ex.comult, tol)),
        gns(build_gns(qg, tol)),
        w(build_fundamental_unitary(qg, gns, tol)),
        dual(build_dual(qg, tol)),
        dual_gns(build_dual_gns(qg, dual, gns, tol)),
        uni(build_universal(qg, gns, tol, 1)),
        v(build_V(qg, gns, w, uni, tol, 1)),
        op(build_one_parameter(qg, gns, w, tol, {}, &report)),
        polar(build_polar(qg, gns, dual_gns, op, tol, &report)) {}
};
}  // namespace

TEST_CASE("identity automorphism pair has r = 1 and trivial unitaries") {
  Fixture f(make_group_algebra(CayleyTable::cyclic(2)));
  VerificationReport rep(tol);
  auto pair = analyze_automorphism_pair(f.qg, f.gns, f.w, f.v, eye(2), eye(2),
                                        tol, &rep);
  CHECK(rep.all_passed());
  CHECK(pair.r == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(max_norm(Matrix(pair.u - eye(2))) < 1e-12);
  CHECK(max_norm(Matrix(pair.v - eye(2))) < 1e-12);
}

TEST_CASE("Z4 inversion automorphism lifts with r = 1") {
  Fixture f(make_group_algebra(CayleyTable::cyclic(4)));
  // alpha(g^k) = g^(-k)
  Matrix alpha = Matrix::Zero(4, 4);
  alpha(0, 0) = 1.0;
  alpha(3, 1) = 1.0;
  alpha(2, 2) = 1.0;
  alpha(1, 3) = 1.0;
  VerificationReport rep(tol);
  auto pair =
      analyze_automorphism_pair(f.qg, f.gns, f.w, f.v, alpha, alpha, tol, &rep);
  CHECK(rep.all_passed());
  CHECK(std::abs(pair.r - 1.0) < 1e-12);
  // u is the induced permutation unitary on the gns space
  Matrix expect = f.gns.lambda * alpha * f.gns.lambda_inv;
  CHECK(max_norm(Matrix(pair.u - expect)) < 1e-12);
  CHECK(rep.find("auto.commutation-uv")->residual < 1e-9);
  CHECK(rep.find("auto.projection")->residual < 1e-10);
  CHECK(rep.find("auto.roundtrip")->residual < 1e-10);
}

TEST_CASE("S^2 on kac-paljutkin is the identity pair") {
  Fixture f(make_kac_paljutkin());
  const Matrix s2 = f.qg.hopf.antipode.matrix * f.qg.hopf.antipode.matrix;
  CHECK(max_norm(Matrix(s2 - eye(8))) < 1e-10);  // tracial case
  VerificationReport rep(tol);
  auto pair = analyze_automorphism_pair(f.qg, f.gns, f.w, f.v, s2, s2, tol, &rep);
  CHECK(rep.all_passed());
  CHECK(std::abs(pair.r - 1.0) < 1e-12);
}

TEST_CASE("maps that do not intertwine the comultiplication are rejected") {
  Fixture f(make_group_algebra(CayleyTable::cyclic(4)));
  // swapping g and g^2 is not even an algebra automorphism
  Matrix bad = Matrix::Zero(4, 4);
  bad(0, 0) = 1.0;
  bad(2, 1) = 1.0;
  bad(1, 2) = 1.0;
  bad(3, 3) = 1.0;
  CHECK_THROWS_AS(analyze_automorphism_pair(f.qg, f.gns, f.w, f.v, bad, bad,
                                            tol, nullptr),
                  AqgError);
}

TEST_CASE("one-parameter data collapses to the trivial case yet all identities run") {
  for (const auto& name : {"group_z2", "functions_s3", "kac_paljutkin"}) {
    CAPTURE(name);
    Fixture f(make_bundled_example(name));
    CHECK(f.report.all_passed());
    const auto n = f.qg.dim();
    CHECK(max_norm(Matrix(f.op.nabla - eye(n))) < 1e-10);
    CHECK(max_norm(Matrix(f.op.P - eye(n))) < 1e-10);
    CHECK(max_norm(Matrix(f.op.Q - eye(n))) < 1e-10);
    CHECK(std::abs(f.op.nu - 1.0) < 1e-10);
    // sigma_0 = id
    CHECK(max_norm(Matrix(f.op.sigma(0.0, f.gns) - eye(n))) < 1e-10);
    // analytic extension against the independently solved rho
    CHECK(f.report.find("oneparam.sigma-analytic")->residual < 1e-9);
  }
}

TEST_CASE("polar decomposition: R = S on kac-paljutkin and R^2 = id") {
  Fixture f(make_kac_paljutkin());
  CHECK(f.report.all_passed());
  CHECK(max_norm(Matrix(f.polar.R.matrix - f.qg.hopf.antipode.matrix)) <
        1e-9);
  CHECK(max_norm(Matrix(f.polar.R.matrix * f.polar.R.matrix - eye(8))) <
        1e-9);
  CHECK(f.polar.R.antimultiplicative);
  CHECK(f.polar.kappa.antimultiplicative);
  // R(unit) = unit
  CHECK(max_norm(Vector(f.polar.R.apply(f.qg.algebra.unit()) -
                        f.qg.algebra.unit())) < 1e-10);
}

TEST_CASE("group-like analysis of g in C[Z2]") {
  Fixture f(make_group_algebra(CayleyTable::cyclic(2)));
  auto gl = analyze_group_like(f.qg, f.gns, f.op, f.polar,
                               f.qg.algebra.basis_vector(1), tol);
  CHECK(gl.checks.all_passed());
  CHECK(std::abs(gl.lambda - 1.0) < 1e-10);

  // unit is group-like with lambda = 1
  auto gl2 = analyze_group_like(f.qg, f.gns, f.op, f.polar, f.qg.algebra.unit(),
                                tol);
  CHECK(gl2.checks.all_passed());

  // e + g is not group-like
  Vector bad = f.qg.algebra.basis_vector(0) + f.qg.algebra.basis_vector(1);
  CHECK_THROWS_AS(analyze_group_like(f.qg, f.gns, f.op, f.polar, bad, tol),
                  AqgError);
}

TEST_CASE("characters of the base group are group-like in the function algebra") {
  // sign character of S3: real-valued, and the order-4 character of Z4:
  // genuinely complex coordinates
  {
    Fixture f(make_function_algebra(CayleyTable::symmetric3()));
    Vector sgn(6);
    sgn << 1, 1, 1, -1, -1, -1;  // e, r, r2 even; s, rs, r2s odd
    auto gl = analyze_group_like(f.qg, f.gns, f.op, f.polar, sgn, tol);
    CHECK(gl.checks.all_passed());
    CHECK(std::abs(gl.lambda - 1.0) < 1e-10);
  }
  {
    Fixture f(make_function_algebra(CayleyTable::cyclic(4)));
    const Complex I(0, 1);
    Vector chi(4);
    chi << 1.0, I, -1.0, -I;
    auto gl = analyze_group_like(f.qg, f.gns, f.op, f.polar, chi, tol);
    CHECK(gl.checks.all_passed());
    // R(chi) = chi* = conj coordinates
    CHECK(max_norm(Vector(f.polar.R.apply(chi) - chi.conjugate())) < 1e-10);
  }
}

TEST_CASE("modular element suite: positive branch on kac-paljutkin") {
  Fixture f(make_kac_paljutkin());
  auto rep = modular_element_suite(f.qg, &f.gns, &f.op, &f.polar, tol);
  CHECK(rep.all_passed());
  CHECK(rep.max_residual() < 1e-9);
  CHECK(max_norm(Vector(f.qg.modular.delta - f.qg.algebra.unit())) < 1e-10);
}

TEST_CASE("modular element suite: algebraic branch on sweedler") {
  auto ex = make_sweedler();
  auto qg = QuantumGroup::derive(ex.algebra, ex.comult, tol);
  auto rep = modular_element_suite(qg, nullptr, nullptr, nullptr, tol);
  CHECK(rep.all_passed());
  // delta = g and S(delta) = delta^-1 = g
  CHECK(max_norm(Vector(qg.modular.delta - qg.algebra.basis_vector(1))) <
        1e-11);
  CHECK(max_norm(Vector(qg.modular.delta_inv - qg.algebra.basis_vector(1))) <
        1e-11);
  CHECK(!rep.skipped().empty());
}

TEST_SUITE_END();
