#include "aqg/symmetry.hpp"

namespace aqg {

namespace {

double star_automorphism_residual(const FiniteStarAlgebra& a, const Matrix& m) {
  const auto n = a.dim();
  double res = is_invertible(m) ? 0.0 : 1.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Vector lhs = m * a.multiply(a.basis_vector(i), a.basis_vector(j));
      Vector rhs = a.multiply(Vector(m.col(i)), Vector(m.col(j)));
      res = std::max(res, max_norm(Vector(lhs - rhs)));
    }
  res = std::max(res, max_norm(Vector(m * a.unit() - a.unit())));
  // alpha(a*) = alpha(a)*:  m St = St conj(m).
  res = std::max(res, max_norm(Matrix(m * a.star_matrix() -
                                      a.star_matrix() * m.conjugate())));
  return res;
}

// Pull an operator map on B(H) back to algebra coordinates: the matrix
// sending coords(a) to coords(b) with pi(b) = F(pi(a)).
Matrix algebra_level(const GnsData& gns, const std::function<Matrix(const Matrix&)>& f,
                     double tol) {
  const auto n = gns.dim();
  Matrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    out.col(i) = gns.corepresent(f(gns.pi[i]), tol);
  return out;
}

}  // namespace

AutomorphismPair analyze_automorphism_pair(
    const QuantumGroup& qg, const GnsData& gns, const BigUnitary& w,
    const BigUnitary& v_corep, const Matrix& alpha, const Matrix& beta,
    double tol, VerificationReport* report) {
  const auto& a = qg.algebra;
  const auto n = a.dim();

  const double auto_res = std::max(star_automorphism_residual(a, alpha),
                                   star_automorphism_residual(a, beta));
  if (auto_res >= tol)
    fail(ErrorCode::not_intertwining,
         "alpha/beta are not *-automorphisms (residual " +
             std::to_string(auto_res) + ")");
  const double intertwine =
      max_norm(Matrix(kron(alpha, beta) * qg.comult.map - qg.comult.map * alpha));
  if (intertwine >= tol)
    fail(ErrorCode::not_intertwining,
         "(alpha (x) beta) D = D alpha fails (residual " +
             std::to_string(intertwine) + ")");

  // phi o alpha = r phi = phi o beta with one strictly positive scalar.
  const Vector phi = qg.haar.phi.covector;
  const Vector pa = alpha.transpose() * phi;
  const Vector pb = beta.transpose() * phi;
  const Complex ra = phi.dot(pa) / phi.dot(phi);
  const Complex rb = phi.dot(pb) / phi.dot(phi);
  const double rel_res =
      std::max(max_norm(Vector(pa - ra * phi)), max_norm(Vector(pb - rb * phi)));
  if (rel_res >= tol || std::abs(ra - rb) >= tol || ra.real() <= 0.0 ||
      std::abs(ra.imag()) >= tol)
    fail(ErrorCode::not_relatively_invariant,
         "no strictly positive scalar r with phi o alpha = r phi = phi o beta");

  AutomorphismPair pair;
  pair.alpha = {alpha, false, false};
  pair.beta = {beta, false, false};
  pair.r = ra.real();
  const double rs = 1.0 / std::sqrt(pair.r);
  pair.u = rs * gns.lambda * alpha * gns.lambda_inv;
  pair.v = rs * gns.lambda * beta * gns.lambda_inv;

  if (report) {
    report->check("auto.intertwine", "(alpha (x) beta) D = D alpha",
                  std::max(auto_res, intertwine));
    report->check("auto.beta-comult", "(beta (x) beta) D = D beta",
                  max_norm(Matrix(kron(beta, beta) * qg.comult.map -
                                  qg.comult.map * beta)));
    report->check("auto.relative-invariance",
                  "phi o alpha = r phi = phi o beta",
                  std::max(rel_res, std::abs(ra - rb)));
    report->check_flag("auto.unitary-u-v", "u, v are unitary",
                       is_unitary(pair.u, tol) && is_unitary(pair.v, tol));
    const Matrix& wm = w.matrix;
    report->check("auto.commutation-uv", "W(u (x) v) = (u (x) u)W",
                  operator_norm(Matrix(wm * kron(pair.u, pair.v) -
                                       kron(pair.u, pair.u) * wm)));
    report->check("auto.commutation-vv", "W(v (x) v) = (v (x) v)W",
                  operator_norm(Matrix(wm * kron(pair.v, pair.v) -
                                       kron(pair.v, pair.v) * wm)));
    // u, v commute with J and nabla.
    double modular = 0.0;
    for (const Matrix& x : {pair.u, pair.v}) {
      modular = std::max(
          modular, max_norm(Matrix(gns.J.m * x.conjugate() - x * gns.J.m)));
      modular = std::max(modular,
                         max_norm(Matrix(gns.nabla * x - x * gns.nabla)));
    }
    report->check("auto.modular-commutation", "u, v commute with J and nabla",
                  modular);

    // (alpha_u (x) id)(V) = (1 (x) u*) V (1 (x) v): alpha_u acts on leg 1
    // through pi(alpha(.)).
    Matrix lhs = Matrix::Zero(n * n, n * n);
    {
      // decompose V's first leg in the pi basis and apply alpha there
      Matrix basis(n * n, n);
      for (Eigen::Index i = 0; i < n; ++i) basis.col(i) = gns.pi[i].reshaped();
      const auto solver = basis.completeOrthogonalDecomposition();
      for (Eigen::Index qi = 0; qi < n; ++qi)
        for (Eigen::Index s = 0; s < n; ++s) {
          Matrix block(n, n);
          for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index r = 0; r < n; ++r)
              block(p, r) = v_corep.matrix(p * n + qi, r * n + s);
          Vector coeff = solver.solve(Vector(block.reshaped()));
          const Vector moved = alpha * coeff;
          Matrix newblock = Matrix::Zero(n, n);
          for (Eigen::Index i = 0; i < n; ++i) newblock += moved(i) * gns.pi[i];
          for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index r = 0; r < n; ++r)
              lhs(p * n + qi, r * n + s) = newblock(p, r);
        }
    }
    const Matrix rhs = kron(eye(n), Matrix(pair.u.adjoint())) * v_corep.matrix *
                       kron(eye(n), pair.v);
    report->check("auto.lift-slice",
                  "(alpha_u (x) id)(V) = (1 (x) u*) V (1 (x) v)",
                  operator_norm(Matrix(lhs - rhs)));

    // pi o alpha_u = alpha: u pi(a) u* = pi(alpha(a)).
    double proj = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      proj = std::max(
          proj, operator_norm(Matrix(pair.u * gns.pi[i] * pair.u.adjoint() -
                                     gns.represent(Vector(alpha.col(i))))));
    report->check("auto.projection", "pi o alpha_u = alpha", proj);

    // Round trips through the slices of V:
    // alpha_u((id (x) om_{p,q})(V)) = (id (x) om_{v p, u q})(V).
    double round = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index qi = 0; qi < n; ++qi) {
        const Vector lp = Vector(gns.lambda.col(p));
        const Vector lq = Vector(gns.lambda.col(qi));
        const Matrix slice_a = slice_leg2(v_corep.matrix, n, n, lp, lq);
        const Matrix moved = slice_leg2(v_corep.matrix, n, n,
                                        Vector(pair.v * lp), Vector(pair.u * lq));
        const Vector lifted = alpha * gns.corepresent(slice_a, tol);
        round = std::max(
            round, operator_norm(Matrix(gns.represent(lifted) - moved)));
      }
    report->check("auto.roundtrip", "(alpha_u)_r = alpha and (alpha_r)_u = alpha",
                  round);

    Matrix stacked(n * n, n);
    for (Eigen::Index i = 0; i < n; ++i) stacked.col(i) = gns.pi[i].reshaped();
    report->check_flag("auto.unique", "alpha_u is determined by its projection",
                       numeric_rank(stacked) == n);
  }
  return pair;
}

Matrix OneParameterData::sigma(double t, const GnsData& gns) const {
  const Matrix nt = positive_imaginary_power(nabla, t);
  Matrix out(nabla.rows(), nabla.cols());
  for (Eigen::Index i = 0; i < nabla.rows(); ++i)
    out.col(i) = gns.corepresent(Matrix(nt * gns.pi[i] * nt.adjoint()), 1e-7);
  return out;
}

Matrix OneParameterData::deformation(double t, const GnsData& gns) const {
  // K_t = Ad(P^it) on operators; on coordinates this is conjugation of the
  // left multiplication, computed through the GNS representation.
  const Matrix pt = positive_imaginary_power(P, t);
  Matrix out(nabla.rows(), nabla.cols());
  for (Eigen::Index i = 0; i < nabla.rows(); ++i)
    out.col(i) = gns.corepresent(
        Matrix(pt * gns.pi[i] * pt.adjoint()), 1e-7);
  return out;
}

Matrix OneParameterData::tau(double t, const GnsData& gns) const {
  return tau_analytic(Complex(t, 0.0), gns);
}

Matrix OneParameterData::tau_analytic(Complex z, const GnsData& gns) const {
  const Matrix qz = positive_power(Q, Complex(0, 1) * z);
  const Matrix qz_inv = positive_power(Q, Complex(0, -1) * z);
  Matrix out(nabla.rows(), nabla.cols());
  for (Eigen::Index i = 0; i < nabla.rows(); ++i)
    out.col(i) = gns.corepresent(Matrix(qz * gns.pi[i] * qz_inv), 1e-7);
  return out;
}

OneParameterData build_one_parameter(const QuantumGroup& qg, const GnsData& gns,
                                     const BigUnitary& w, double tol,
                                     const std::vector<double>& times,
                                     VerificationReport* report) {
  if (!qg.haar.positive)
    fail(ErrorCode::positivity_required,
         "one-parameter groups need the positive case");
  const auto& a = qg.algebra;
  const auto n = a.dim();
  OneParameterData op;
  if (!times.empty()) op.times = times;
  op.nabla = gns.nabla;

  // P from its action L(a) -> L(delta^-1 S^-2(a) delta).
  const Matrix s2 = qg.hopf.antipode.matrix * qg.hopf.antipode.matrix;
  const Matrix s2inv = s2.inverse();
  const Matrix p_coords = a.left_mult_operator(qg.modular.delta_inv) *
                          a.right_mult_operator(qg.modular.delta) * s2inv;
  op.P = gns.lambda * p_coords * gns.lambda_inv;

  // Q: the positive part of B = L S^2 L^-1, whose polar phase is nu^{-i/2}.
  const Matrix b = gns.lambda * s2 * gns.lambda_inv;
  op.Q = hermitian_sqrt(Matrix(b.adjoint() * b));
  const Matrix phase = b * op.Q.inverse();
  Complex c = phase.trace() / static_cast<double>(n);

  // nu solved from phi o tau_t = nu^t phi at t = 1.
  const Matrix tau1 = op.tau(1.0, gns);
  const Vector pt = tau1.transpose() * qg.haar.phi.covector;
  const Complex nu_c =
      qg.haar.phi.covector.dot(pt) / qg.haar.phi.covector.dot(qg.haar.phi.covector);
  op.nu = nu_c.real();

  if (report) {
    report->check_flag(
        "oneparam.nabla-positive", "nabla is positive and nonsingular",
        is_positive_semidefinite(op.nabla, tol) && is_invertible(op.nabla));

    // P action for k = 1 and k = -1.
    double p_act = max_norm(
        Matrix(op.P * gns.lambda - gns.lambda * p_coords));
    p_act = std::max(
        p_act, max_norm(Matrix(op.P.inverse() * gns.lambda -
                               gns.lambda * Matrix(p_coords.inverse()))));
    p_act = std::max(p_act, is_positive_semidefinite(op.P, tol) ? 0.0 : 1.0);
    report->check("oneparam.P-action",
                  "P^k L(a) = L(delta^-k S^-2k(a) delta^k)", p_act);

    report->check("oneparam.nu", "phi o tau_t = nu^t phi",
                  std::max(max_norm(Vector(pt - nu_c * qg.haar.phi.covector)),
                           std::abs(nu_c.imag())));
    // solved, never assumed; the finite-dimensional positive case must
    // nevertheless come out at nu = 1
    report->check("oneparam.nu-collapse", "nu = 1 in the positive case",
                  std::abs(op.nu - 1.0));

    // Q action: Q L(a) = nu^{i/2} L(S^2(a)), nu^{i/2} = conj(phase scalar).
    const Complex nu_half =
        std::pow(Complex(op.nu, 0.0), Complex(0.0, 0.5));
    double q_act =
        max_norm(Matrix(op.Q - nu_half * b));
    q_act = std::max(q_act, max_norm(Matrix(phase - c * eye(n))));
    q_act = std::max(q_act, std::abs(c - std::conj(nu_half)));
    report->check("oneparam.Q-action", "Q^k L(a) = nu^(ki/2) L(S^2k(a))",
                  q_act);

    // (nab^it (x) nab^it) W = W (nab^it (x) P^it) at sampled times.
    double bicov = 0.0;
    for (double t : op.times) {
      const Matrix nt = positive_imaginary_power(op.nabla, t);
      const Matrix ptm = positive_imaginary_power(op.P, t);
      bicov = std::max(bicov,
                       operator_norm(Matrix(kron(nt, nt) * w.matrix -
                                            w.matrix * kron(nt, ptm))));
    }
    report->check("oneparam.W-bicovariance",
                  "(nab^it (x) nab^it) W = W (nab^it (x) P^it)", bicov);

    // Intertwinings at sampled times (coordinate level).
    double sk = 0.0, ts = 0.0, tt = 0.0;
    for (double t : op.times) {
      const Matrix st = op.sigma(t, gns);
      const Matrix kt = op.deformation(t, gns);
      const Matrix taut = op.tau(t, gns);
      sk = std::max(sk, max_norm(Matrix(kron(st, kt) * qg.comult.map -
                                        qg.comult.map * st)));
      ts = std::max(ts, max_norm(Matrix(kron(taut, st) * qg.comult.map -
                                        qg.comult.map * st)));
      tt = std::max(tt, max_norm(Matrix(kron(taut, taut) * qg.comult.map -
                                        qg.comult.map * taut)));
    }
    report->check("oneparam.sigma-K-intertwine", "(sig_t (x) K_t) D = D sig_t",
                  sk);
    report->check("oneparam.tau-sigma-intertwine",
                  "(tau_t (x) sig_t) D = D sig_t", ts);
    report->check("oneparam.tau-comult", "(tau_t (x) tau_t) D = D tau_t", tt);

    // Analytic extensions: sig_i = rho^-1 and tau_i = S^-2 on coordinates.
    const Matrix rho_inv = qg.modular.rho.matrix.inverse();
    double an = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      an = std::max(
          an, max_norm(Matrix(
                  op.nabla.inverse() * gns.pi[i] * op.nabla -
                  gns.represent(Vector(rho_inv * a.basis_vector(i))))));
    }
    report->check("oneparam.sigma-analytic",
                  "sig_i(pi_u(a)) = pi_u(rho^-1(a))", an);
    double tn = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      tn = std::max(
          tn, max_norm(Matrix(op.Q.inverse() * gns.pi[i] * op.Q -
                              gns.represent(Vector(s2inv * a.basis_vector(i))))));
    report->check("oneparam.tau-analytic", "tau_i(pi_u(a)) = pi_u(S^-2(a))",
                  tn);
  }
  return op;
}

PolarData build_polar(const QuantumGroup& qg, const GnsData& gns,
                      const DualGns& dual_gns, const OneParameterData& op,
                      double tol, VerificationReport* report) {
  if (!qg.haar.positive)
    fail(ErrorCode::positivity_required, "polar decomposition needs the positive case");
  const auto& a = qg.algebra;
  const auto n = a.dim();

  // R(x) = J^ x* J^ on the reduced algebra, pulled back to coordinates;
  // as a linear map this is x -> J^m x^T conj(J^m).
  const Matrix jh = dual_gns.J_hat.m;
  const Matrix jh_conj = jh.conjugate();
  auto r_op = [&](const Matrix& x) {
    return Matrix(jh * x.transpose() * jh_conj);
  };
  PolarData polar;
  polar.R = {algebra_level(gns, r_op, tol), false, true};

  // tau_{-i/2}(x) = Q^{1/2} x Q^{-1/2}, on coordinates.
  polar.tau_minus_i2 = op.tau_analytic(Complex(0.0, -0.5), gns);
  polar.kappa = polar.R.compose(AlgebraMap{polar.tau_minus_i2, false, false});

  if (report) {
    const Matrix& r = polar.R.matrix;
    report->check("polar.R-involution", "R^2 = id",
                  max_norm(Matrix(r * r - eye(n))));
    report->check("polar.R-star", "R(a*) = R(a)*",
                  max_norm(Matrix(r * a.star_matrix() -
                                  a.star_matrix() * r.conjugate())));
    double antimult = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        Vector lhs = r * a.multiply(a.basis_vector(i), a.basis_vector(j));
        Vector rhs = a.multiply(Vector(r.col(j)), Vector(r.col(i)));
        antimult = std::max(antimult, max_norm(Vector(lhs - rhs)));
      }
    report->check("polar.R-antimultiplicative", "R(ab) = R(b)R(a)", antimult);
    report->check("polar.R-comult", "flip (R (x) R) D = D R",
                  max_norm(Matrix(flip_matrix(n, n) * kron(r, r) * qg.comult.map -
                                  qg.comult.map * r)));
    double rt = 0.0;
    for (double t : op.times) {
      const Matrix taut = op.tau(t, gns);
      rt = std::max(rt, max_norm(Matrix(r * taut - taut * r)));
    }
    report->check("polar.R-tau-commute", "R tau_t = tau_t R", rt);
    report->check("polar.decomposition", "R(tau_{-i/2}(a)) = S(a)",
                  max_norm(Matrix(polar.kappa.matrix -
                                  qg.hopf.antipode.matrix)));
    // psi = phi o R is right invariant.
    LinearFunctional psi{Vector(r.transpose() * qg.haar.phi.covector)};
    double right = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      Vector sliced = slice(psi, 1, qg.comult.map.col(i), n, n);
      right = std::max(right,
                       max_norm(Vector(sliced - psi.covector(i) * a.unit())));
    }
    report->check("polar.psi-right-invariant", "phi o R is right invariant",
                  right);

    // (sig'_t (x) tau_-t) D = D sig'_t with sig'_t = R sig_-t R.
    double sp = 0.0;
    for (double t : op.times) {
      const Matrix sig_p = r * op.sigma(-t, gns) * r;
      const Matrix tau_m = op.tau(-t, gns);
      sp = std::max(sp, max_norm(Matrix(kron(sig_p, tau_m) * qg.comult.map -
                                        qg.comult.map * sig_p)));
    }
    report->check("oneparam.sigma-prime-intertwine",
                  "(sig'_t (x) tau_-t) D = D sig'_t", sp);
  }
  return polar;
}

GroupLikeReport analyze_group_like(const QuantumGroup& qg, const GnsData& gns,
                                   const OneParameterData& op,
                                   const PolarData& polar, const Vector& v,
                                   double tol) {
  const auto& a = qg.algebra;
  GroupLikeReport out;
  out.element = v;
  out.checks = VerificationReport(tol);

  const double grouplike = max_norm(
      Vector(qg.comult.apply(v) - kron(Matrix(v), Matrix(v)).col(0)));
  const Matrix pv = gns.represent(v);
  const bool positive_case =
      is_positive_semidefinite(pv, tol) && is_invertible(pv);
  const double unitary_res =
      std::max(max_norm(Vector(a.multiply(a.involute(v), v) - a.unit())),
               max_norm(Vector(a.multiply(v, a.involute(v)) - a.unit())));
  if (grouplike >= tol || (unitary_res >= tol && !positive_case))
    fail(ErrorCode::not_group_like,
         "element is not a group-like unitary (or strictly positive)");
  out.checks.check("grouplike.comult", "D(v) = v (x) v", grouplike);
  out.checks.check("grouplike.unitary", "v is unitary",
                   positive_case ? 0.0 : unitary_res);

  // sigma_t(v) = lambda^{it} v (unitary case) or lambda^t v (positive case).
  double lam_res = 0.0;
  double lambda = 1.0;
  bool have = false;
  for (double t : op.times) {
    if (t == 0.0) continue;
    const Vector moved = op.sigma(t, gns) * v;
    const Complex c = v.dot(moved) / v.dot(v);
    lam_res = std::max(lam_res, max_norm(Vector(moved - c * v)));
    const double l = positive_case ? std::pow(std::abs(c), 1.0 / t)
                                   : std::exp(std::arg(c) / t);
    if (!have) {
      lambda = l;
      have = true;
    } else {
      lam_res = std::max(lam_res, std::abs(l - lambda));
    }
    if (!positive_case) lam_res = std::max(lam_res, std::abs(std::abs(c) - 1.0));
  }
  out.lambda = lambda;
  out.checks.check("grouplike.lambda", "sig_t(v) = lambda^it v", lam_res);

  double tau_fix = 0.0;
  for (double t : op.times)
    tau_fix = std::max(tau_fix, max_norm(Vector(op.tau(t, gns) * v - v)));
  out.checks.check("grouplike.tau-fixed", "tau_t(v) = v", tau_fix);

  const Vector rv = polar.R.apply(v);
  const Vector expected = positive_case ? a.inverse(v) : a.involute(v);
  out.checks.check("grouplike.R-star",
                   positive_case ? "R(v) = v^-1" : "R(v) = v*",
                   max_norm(Vector(rv - expected)));
  return out;
}

VerificationReport modular_element_suite(const QuantumGroup& qg,
                                         const GnsData* gns,
                                         const OneParameterData* op,
                                         const PolarData* polar, double tol) {
  VerificationReport report(tol);
  const auto& a = qg.algebra;
  const auto n = a.dim();
  const Vector& delta = qg.modular.delta;

  // Algebraic branch (runs for every input).
  report.check("modular.delta-grouplike", "D(delta) = delta (x) delta",
               max_norm(Vector(qg.comult.apply(delta) -
                               kron(Matrix(delta), Matrix(delta)).col(0))));
  report.check("modular.delta-antipode", "S(delta) = delta^-1",
               max_norm(Vector(qg.hopf.antipode.apply(delta) -
                               qg.modular.delta_inv)));
  report.check("modular.delta-counit", "eps(delta) = 1",
               std::abs(qg.hopf.counit(delta) - Complex(1.0)));
  const Complex mu_inv = 1.0 / qg.modular.mu;
  report.check("modular.rho-delta", "rho(delta) = rho'(delta) = mu^-1 delta",
               std::max(max_norm(Vector(qg.modular.rho.apply(delta) -
                                        mu_inv * delta)),
                        max_norm(Vector(qg.modular.rho_prime.apply(delta) -
                                        mu_inv * delta))));

  if (!gns || !op || !polar) {
    report.skip("modelem.analytic", "positive Haar functional required");
    return report;
  }

  const Matrix pd = gns->represent(delta);
  report.check_flag("modelem.pi-delta",
                    "the lifted modular element projects onto delta",
                    is_positive_semidefinite(pd, tol) && is_invertible(pd));

  double tau_fix = 0.0, sigma_scale = 0.0;
  for (double t : op->times) {
    tau_fix = std::max(tau_fix,
                       max_norm(Vector(op->tau(t, *gns) * delta - delta)));
    const double scale = std::pow(op->nu, -t);
    sigma_scale = std::max(
        sigma_scale,
        max_norm(Vector(op->sigma(t, *gns) * delta - scale * delta)));
  }
  report.check("modelem.tau-fixed", "tau_t(delta) = delta", tau_fix);
  report.check("modelem.sigma-scaling", "sig_t(delta) = nu^-t delta",
               sigma_scale);
  report.check("modelem.R-inverse", "R(delta) = delta^-1",
               max_norm(Vector(polar->R.apply(delta) - qg.modular.delta_inv)));

  // psi(a) = phi(delta^{1/2} a delta^{1/2}) with psi = phi o R.
  const Vector delta_half = gns->corepresent(hermitian_sqrt(pd), tol);
  double rn = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex lhs = qg.haar.phi(Vector(
        a.multiply(delta_half, a.multiply(a.basis_vector(i), delta_half))));
    const Complex rhs =
        qg.haar.phi(polar->R.apply(a.basis_vector(i)));
    rn = std::max(rn, std::abs(lhs - rhs));
  }
  report.check("modelem.radon-nikodym",
               "psi(a) = phi(delta^(1/2) a delta^(1/2))", rn);

  // delta^z pi_u(a) = pi_u(delta^z a) for z in {i, -i, 1/2}.
  double powers = 0.0;
  for (Complex z : {Complex(0, 1), Complex(0, -1), Complex(0.5, 0)}) {
    const Matrix pz = positive_power(pd, z);
    const Vector dz = gns->corepresent(pz, tol);
    for (Eigen::Index i = 0; i < n; ++i)
      powers = std::max(
          powers, max_norm(Matrix(pz * gns->pi[i] -
                                  gns->represent(a.multiply(dz, a.basis_vector(i))))));
  }
  report.check("modelem.powers",
               "delta^z pi_u(a) = pi_u(delta^z a), z in {i,-i,1/2}", powers);

  // (phi (x) id)D(y) = phi(y) delta on the span of squares.
  double sl = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vector y =
        a.multiply(a.involute(a.basis_vector(i)), a.basis_vector(i));
    sl = std::max(sl, max_norm(Vector(slice(qg.haar.phi, 1,
                                            qg.comult.apply(y), n, n) -
                                      qg.haar.phi(y) * delta)));
  }
  report.check("modelem.slice", "(phi (x) id)D(y) = phi(y) delta", sl);

  // sig'_t = Ad(delta^it) sig_t and K_t = Ad(delta^-it) tau_-t.
  double spk = 0.0;
  for (double t : op->times) {
    const Vector dit = gns->corepresent(positive_imaginary_power(pd, t), tol);
    const Vector dmit = gns->corepresent(positive_imaginary_power(pd, -t), tol);
    const Matrix sig_p =
        polar->R.matrix * op->sigma(-t, *gns) * polar->R.matrix;
    const Matrix kt = op->deformation(t, *gns);
    const Matrix tau_m = op->tau(-t, *gns);
    for (Eigen::Index i = 0; i < n; ++i) {
      const Vector lhs1 = sig_p * a.basis_vector(i);
      const Vector rhs1 = a.multiply(
          dit, a.multiply(Vector(op->sigma(t, *gns) * a.basis_vector(i)), dmit));
      spk = std::max(spk, max_norm(Vector(lhs1 - rhs1)));
      const Vector lhs2 = kt * a.basis_vector(i);
      const Vector rhs2 = a.multiply(
          dmit, a.multiply(Vector(tau_m * a.basis_vector(i)), dit));
      spk = std::max(spk, max_norm(Vector(lhs2 - rhs2)));
    }
  }
  report.check("modelem.sigma-prime-K",
               "sig'_t = Ad(delta^it) sig_t and K_t = Ad(delta^-it) tau_-t",
               spk);
  return report;
}

}  // namespace aqg
