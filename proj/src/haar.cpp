#include "aqg/haar.hpp"

namespace aqg {

HaarData solve_left_haar(const FiniteStarAlgebra& a, const Comultiplication& d,
                         const HopfPackage& pkg, double tol) {
  const auto n = a.dim();
  // (id (x) om)D(e_i) = om(e_i) unit: for each (i, p) the equation
  // sum_q D[(p,q),i] om_q - unit_p om_i = 0.
  Matrix sys = Matrix::Zero(n * n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = 0; q < n; ++q)
        sys(i * n + p, q) += d.map(p * n + q, i);
      sys(i * n + p, i) -= a.unit()(p);
    }
  Matrix null = nullspace(sys);
  if (null.cols() == 0)
    fail(ErrorCode::no_haar, "no left invariant functional exists");
  if (null.cols() > 1)
    fail(ErrorCode::non_unique_haar,
         "left invariance nullspace has dimension " +
             std::to_string(null.cols()));

  HaarData haar;
  haar.phi = LinearFunctional{null.col(0)};
  const Complex at_unit = haar.phi(a.unit());
  if (std::abs(at_unit) > tol) {
    haar.phi.covector /= at_unit;
  } else {
    // phi(1) = 0 can only happen without positivity; the Gram diagonal may
    // then vanish identically (it does for the four-dimensional example), so
    // normalize the first largest-modulus Gram entry to 1 instead.
    Complex pivot = 0.0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        const Complex g = haar.phi(
            a.multiply(a.involute(a.basis_vector(i)), a.basis_vector(j)));
        if (std::abs(g) > best + tol) {
          best = std::abs(g);
          pivot = g;
        }
      }
    if (best <= tol)
      fail(ErrorCode::no_haar, "invariant functional pairs to zero");
    haar.phi.covector /= pivot;
  }

  haar.gram = Matrix(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      haar.gram(i, j) = haar.phi(
          a.multiply(a.involute(a.basis_vector(i)), a.basis_vector(j)));
  haar.positive = is_positive_semidefinite(haar.gram, tol);
  haar.faithful = is_invertible(haar.gram);

  haar.psi = LinearFunctional{
      Vector(pkg.antipode.matrix.transpose() * haar.phi.covector)};
  return haar;
}

namespace {

// B[i][j] = omega(e_i e_j); the KMS automorphism of omega is B^-1 B^T.
Matrix kms_automorphism(const FiniteStarAlgebra& a,
                        const LinearFunctional& omega) {
  const auto n = a.dim();
  Matrix b(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      b(i, j) = omega(a.multiply(a.basis_vector(i), a.basis_vector(j)));
  if (!is_invertible(b))
    fail(ErrorCode::not_faithful,
         "functional is not faithful: no KMS automorphism");
  return b.partialPivLu().solve(Matrix(b.transpose()));
}

double kms_residual(const FiniteStarAlgebra& a, const LinearFunctional& omega,
                    const Matrix& rho) {
  const auto n = a.dim();
  double res = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Complex lhs =
          omega(a.multiply(a.basis_vector(i), a.basis_vector(j)));
      const Complex rhs =
          omega(a.multiply(a.basis_vector(j), Vector(rho.col(i))));
      res = std::max(res, std::abs(lhs - rhs));
    }
  return res;
}

}  // namespace

ModularPackage derive_rho(const FiniteStarAlgebra& a, const Comultiplication& d,
                          const HopfPackage& pkg, const HaarData& haar,
                          [[maybe_unused]] double tol,
                          VerificationReport* report) {
  if (!haar.faithful)
    fail(ErrorCode::not_faithful, "Haar functional Gram matrix is singular");
  const auto n = a.dim();
  ModularPackage mod;
  Matrix rho = kms_automorphism(a, haar.phi);
  Matrix rho_prime = kms_automorphism(a, haar.psi);
  mod.rho = {rho, false, false};
  mod.rho_prime = {rho_prime, false, false};

  if (report) {
    report->check("modular.kms", "phi(ab) = phi(b rho(a))",
                  kms_residual(a, haar.phi, rho));
    report->check("modular.kms-prime", "psi(ab) = psi(b rho'(a))",
                  kms_residual(a, haar.psi, rho_prime));
    const Matrix st = a.star_matrix();
    report->check("modular.rho-star", "rho(rho(a*)*) = a",
                  max_norm(Matrix(rho * st * rho.conjugate() * st.conjugate() -
                                  eye(n))));
    const Matrix s = pkg.antipode.matrix;
    report->check("modular.rho-antipode", "S rho' = rho S",
                  max_norm(Matrix(s * rho_prime - rho * s)));
    const Matrix s2 = s * s;
    report->check("modular.rho-comult", "D rho = (S^2 (x) rho) D",
                  max_norm(Matrix(d.map * rho - kron(s2, rho) * d.map)));
    const Matrix s2inv = s2.inverse();
    report->check("modular.rho-prime-comult", "D rho' = (rho' (x) S^-2) D",
                  max_norm(Matrix(d.map * rho_prime -
                                  kron(rho_prime, s2inv) * d.map)));
    report->check("modular.s2-commutes-rho", "S^2 commutes with rho and rho'",
                  std::max(max_norm(Matrix(s2 * rho - rho * s2)),
                           max_norm(Matrix(s2 * rho_prime - rho_prime * s2))));
  }
  return mod;
}

void derive_delta_mu(const FiniteStarAlgebra& a, const Comultiplication& d,
                     const HopfPackage& pkg, const HaarData& haar,
                     ModularPackage& mod, double tol,
                     VerificationReport* report) {
  const auto n = a.dim();
  // (phi (x) id)(T2(e_i (x) e_j)) = phi(e_i) delta e_j: stack over (i, j).
  Matrix sys = Matrix::Zero(n * n * n, n);
  Vector rhs = Vector::Zero(n * n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Eigen::Index row0 = (i * n + j) * n;
      const Matrix rj = a.right_mult_operator(a.basis_vector(j));
      sys.block(row0, 0, n, n) = haar.phi.covector(i) * rj;
      rhs.segment(row0, n) =
          slice(haar.phi, 1, d.t2.col(i * n + j), n, n);
    }
  Vector delta = lstsq(sys, rhs);
  const double delta_res = max_norm(Vector(sys * delta - rhs));
  if (delta_res >= tol)
    fail(ErrorCode::inconsistent_delta,
         "modular element defining relation has residual " +
             std::to_string(delta_res));
  mod.delta = delta;
  mod.delta_inv = a.inverse(delta);

  // mu from phi o S^2 = mu phi.
  const Matrix s2 = pkg.antipode.matrix * pkg.antipode.matrix;
  const Vector phiS2 = s2.transpose() * haar.phi.covector;
  const Complex mu = haar.phi.covector.dot(phiS2) /
                     haar.phi.covector.dot(haar.phi.covector);
  mod.mu = mu;

  if (report) {
    report->check("modular.delta-defining",
                  "(phi (x) id)(D(a)(1 (x) b)) = phi(a) delta b", delta_res);
    report->check("modular.delta-invertible", "delta has an inverse",
                  max_norm(Vector(a.multiply(delta, mod.delta_inv) - a.unit())));
    report->check("modular.mu-defining", "phi o S^2 = mu phi",
                  max_norm(Vector(phiS2 - mu * haar.phi.covector)));
    if (haar.positive)
      report->check("modular.mu-modulus", "|mu| = 1",
                    std::abs(std::abs(mu) - 1.0));
    report->check("modular.delta-antipode", "S(delta) = delta^-1",
                  max_norm(Vector(pkg.antipode.apply(delta) - mod.delta_inv)));
    report->check("modular.delta-grouplike", "D(delta) = delta (x) delta",
                  max_norm(Vector(d.apply(delta) -
                                  kron(Matrix(delta), Matrix(delta)).col(0))));
    report->check("modular.delta-counit", "eps(delta) = 1",
                  std::abs(pkg.counit(delta) - Complex(1.0)));
    const Complex mu_inv = 1.0 / mu;
    report->check(
        "modular.rho-delta", "rho(delta) = rho'(delta) = mu^-1 delta",
        std::max(max_norm(Vector(mod.rho.apply(delta) - mu_inv * delta)),
                 max_norm(Vector(mod.rho_prime.apply(delta) - mu_inv * delta))));
    // rho'(a) = delta rho(a) delta^-1.
    double conj_res = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      Vector lhs = mod.rho_prime.apply(a.basis_vector(i));
      Vector rhs2 = a.multiply(delta, a.multiply(mod.rho.apply(a.basis_vector(i)),
                                                 mod.delta_inv));
      conj_res = std::max(conj_res, max_norm(Vector(lhs - rhs2)));
    }
    report->check("modular.rho-prime-conjugation",
                  "rho'(a) = delta rho(a) delta^-1", conj_res);
  }
}

QuantumGroup QuantumGroup::derive(FiniteStarAlgebra algebra,
                                  const Matrix& comult_map, double tol,
                                  VerificationReport* report) {
  VerificationReport local(tol);
  VerificationReport& rep = report ? *report : local;

  algebra.axiom_suite(rep, tol);
  if (!rep.all_passed())
    fail(ErrorCode::axiom_rejected,
         "algebra axioms failed: " + rep.first_failure()->id);

  QuantumGroup qg{std::move(algebra), {}, {}, {}, {}};
  qg.comult = Comultiplication::build(qg.algebra, comult_map);
  rep.merge(check_comultiplication(qg.algebra, qg.comult, tol));
  qg.hopf.counit = derive_counit(qg.algebra, qg.comult, tol, &rep);
  qg.hopf = derive_antipode(qg.algebra, qg.comult, qg.hopf.counit, tol, &rep);
  rep.merge(verify_antipode_identities(qg.algebra, qg.comult, qg.hopf, tol));
  qg.haar = solve_left_haar(qg.algebra, qg.comult, qg.hopf, tol);
  qg.modular = derive_rho(qg.algebra, qg.comult, qg.hopf, qg.haar, tol, &rep);
  derive_delta_mu(qg.algebra, qg.comult, qg.hopf, qg.haar, qg.modular, tol,
                  &rep);
  return qg;
}

VerificationReport run_identity_suite(const QuantumGroup& qg, double tol) {
  VerificationReport report(tol);
  const auto& a = qg.algebra;
  const auto n = a.dim();
  const auto& d = qg.comult;
  const auto& phi = qg.haar.phi;
  const auto& psi = qg.haar.psi;
  const Matrix& s = qg.hopf.antipode.matrix;
  const Vector& delta = qg.modular.delta;
  const Vector& delta_inv = qg.modular.delta_inv;
  const Complex mu = qg.modular.mu;
  FiniteStarAlgebra aa = tensor_algebra(a, a);

  // Left invariance and uniqueness.
  double left_inv = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    Vector sliced = slice(phi, 2, d.map.col(i), n, n);
    left_inv = std::max(
        left_inv, max_norm(Vector(sliced - phi.covector(i) * a.unit())));
  }
  report.check("haar.left-invariance", "(id (x) phi)D(a) = phi(a) 1", left_inv);
  report.check_flag("haar.unique",
                    "left invariance nullspace is one-dimensional", true);
  report.check_flag("haar.faithful", "Gram matrix of phi is nonsingular",
                    qg.haar.faithful);

  // Strong left invariance:
  // (id (x) phi)((1 (x) a)D(b)) = S((id (x) phi)(D(a)(1 (x) b))).
  double strong = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Vector one_a =
          kron(Matrix(a.unit()), Matrix(a.basis_vector(i))).col(0);
      Vector lhs = slice(phi, 2, aa.multiply(one_a, d.map.col(j)), n, n);
      Vector rhs = s * slice(phi, 2, d.t2.col(i * n + j), n, n);
      strong = std::max(strong, max_norm(Vector(lhs - rhs)));
    }
  report.check("invariance.strong-left",
               "(id (x) phi)((1 (x) a)D(b)) = S((id (x) phi)(D(a)(1 (x) b)))",
               strong);

  // (id (x) phi S)(D(a)(b (x) 1)) = (phi S)(a) delta^-1 b.
  double right_delta = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Vector lhs = slice(psi, 2, d.t1.col(i * n + j), n, n);
      Vector rhs = psi.covector(i) *
                   a.multiply(delta_inv, a.basis_vector(j));
      right_delta = std::max(right_delta, max_norm(Vector(lhs - rhs)));
    }
  report.check("invariance.right-delta",
               "(id (x) phi S)(D(a)(b (x) 1)) = (phi S)(a) delta^-1 b",
               right_delta);

  // phi(S(a)) = phi(a delta) = mu phi(delta a).
  double antipode_delta = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vector e = a.basis_vector(i);
    const Complex lhs = phi(Vector(s * e));
    antipode_delta =
        std::max(antipode_delta, std::abs(lhs - phi(a.multiply(e, delta))));
    antipode_delta = std::max(antipode_delta,
                              std::abs(lhs - mu * phi(a.multiply(delta, e))));
  }
  report.check("invariance.antipode-delta",
               "phi(S(a)) = phi(a delta) = mu phi(delta a)", antipode_delta);

  // phi(S^2(a)) = phi(delta^-1 a delta).
  double s2_conj = 0.0;
  const Matrix s2 = s * s;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vector e = a.basis_vector(i);
    s2_conj = std::max(
        s2_conj,
        std::abs(phi(Vector(s2 * e)) -
                 phi(a.multiply(delta_inv, a.multiply(e, delta)))));
  }
  report.check("invariance.s2-conjugation",
               "phi(S^2(a)) = phi(delta^-1 a delta)", s2_conj);

  // Right invariance of psi = phi o S.
  double right_inv = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    Vector sliced = slice(psi, 1, d.map.col(i), n, n);
    right_inv = std::max(
        right_inv, max_norm(Vector(sliced - psi.covector(i) * a.unit())));
  }
  report.check("haar.right-invariance",
               "(psi (x) id)D(a) = psi(a) 1 for psi = phi o S", right_inv);
  return report;
}

}  // namespace aqg
