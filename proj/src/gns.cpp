#include "aqg/gns.hpp"

#include "aqg/duality.hpp"

namespace aqg {

Matrix GnsData::represent(const Vector& coords) const {
  Matrix out = Matrix::Zero(dim(), dim());
  for (Eigen::Index i = 0; i < dim(); ++i)
    if (coords(i) != Complex(0.0)) out += coords(i) * pi[i];
  return out;
}

Vector GnsData::corepresent(const Matrix& x, double tol) const {
  const auto n = dim();
  Matrix basis(n * n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    basis.col(i) = pi[i].reshaped();
  Vector coords = lstsq(basis, Vector(x.reshaped()));
  if (max_norm(Vector(basis * coords - Vector(x.reshaped()))) >= tol)
    fail(ErrorCode::singular_system,
         "operator is not in the image of the GNS representation");
  return coords;
}

double BigUnitary::unitarity_residual() const {
  const auto d = matrix.rows();
  return std::max(operator_norm(Matrix(matrix.adjoint() * matrix - eye(d))),
                  operator_norm(Matrix(matrix * matrix.adjoint() - eye(d))));
}

GnsData gns_from_functional(const FiniteStarAlgebra& a,
                            const LinearFunctional& phi, double tol) {
  const auto n = a.dim();
  GnsData gns;
  gns.gram = Matrix(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      gns.gram(i, j) =
          phi(a.multiply(a.involute(a.basis_vector(i)), a.basis_vector(j)));
  if (!is_positive_semidefinite(gns.gram, tol))
    fail(ErrorCode::positivity_required,
         "GNS construction needs a positive functional");
  if (!is_invertible(gns.gram))
    fail(ErrorCode::not_faithful, "GNS construction needs a faithful functional");

  gns.lambda = hermitian_sqrt(gns.gram);
  gns.lambda_inv = gns.lambda.inverse();
  gns.pi.resize(n);
  for (Eigen::Index i = 0; i < n; ++i)
    gns.pi[i] = gns.lambda * a.left_mult(i) * gns.lambda_inv;

  // T L(a) = L(a*):  T = L St conj(L)^-1 as an antilinear map.
  gns.T = AntiLinearOp{gns.lambda * a.star_matrix() *
                       gns.lambda_inv.conjugate()};
  // nabla = T* T; for antilinear T with matrix M this is M^T conj(M).
  gns.nabla = gns.T.m.transpose() * gns.T.m.conjugate();
  // J = T o nabla^{-1/2}, antilinear with matrix M conj(nabla^{-1/2}).
  const Matrix nabla_inv_sqrt = positive_power(gns.nabla, Complex(-0.5, 0.0));
  gns.J = AntiLinearOp{gns.T.m * nabla_inv_sqrt.conjugate()};
  return gns;
}

GnsData build_gns(const QuantumGroup& qg, double tol,
                  VerificationReport* report) {
  if (!qg.haar.positive)
    fail(ErrorCode::positivity_required,
         "GNS construction needs a positive Haar functional");
  if (!qg.haar.faithful)
    fail(ErrorCode::not_faithful, "GNS construction needs a faithful Haar functional");

  const auto& a = qg.algebra;
  const auto n = a.dim();
  GnsData gns = gns_from_functional(a, qg.haar.phi, tol);

  if (report) {
    report->check_flag("gns.positivity",
                       "Gram matrix is positive semidefinite", true);
    // <L(e_i), L(e_j)> = phi(e_j* e_i).
    double inner = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        const Complex lhs =
            gns.Lambda(a.basis_vector(j)).dot(gns.Lambda(a.basis_vector(i)));
        const Complex rhs = qg.haar.phi(
            a.multiply(a.involute(a.basis_vector(j)), a.basis_vector(i)));
        inner = std::max(inner, std::abs(lhs - rhs));
      }
    report->check("gns.inner-product", "<La, Lb> = phi(b* a)", inner);

    double rep = 0.0, star = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j)
        rep = std::max(
            rep, max_norm(Vector(gns.pi[i] * gns.Lambda(a.basis_vector(j)) -
                                 gns.Lambda(a.multiply(a.basis_vector(i),
                                                       a.basis_vector(j))))));
      star = std::max(
          star, max_norm(Matrix(gns.represent(a.involute(a.basis_vector(i))) -
                                gns.pi[i].adjoint())));
    }
    report->check("gns.representation", "pi(a) L(b) = L(ab)", rep);
    report->check("gns.pi-star", "pi(a*) = pi(a)*", star);

    Matrix stacked(n * n, n);
    for (Eigen::Index i = 0; i < n; ++i) stacked.col(i) = gns.pi[i].reshaped();
    report->check_flag("gns.pi-injective", "pi is injective",
                       numeric_rank(stacked) == n);

    double t_action = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      t_action = std::max(
          t_action,
          max_norm(Vector(gns.T.apply(gns.Lambda(a.basis_vector(i))) -
                          gns.Lambda(a.involute(a.basis_vector(i))))));
    report->check("gns.T-action", "T L(a) = L(a*)", t_action);

    // nabla^k L(a) = L(rho^k(a)) for k in {-2,-1,1,2}.
    double nab = 0.0;
    const Matrix rho = qg.modular.rho.matrix;
    for (int k : {-2, -1, 1, 2}) {
      Matrix nk = positive_power(gns.nabla, Complex(k, 0.0));
      Matrix rk = eye(n);
      for (int t = 0; t < std::abs(k); ++t)
        rk = rk * (k > 0 ? rho : Matrix(rho.inverse()));
      for (Eigen::Index i = 0; i < n; ++i)
        nab = std::max(
            nab, max_norm(Vector(nk * gns.Lambda(a.basis_vector(i)) -
                                 gns.Lambda(Vector(rk * a.basis_vector(i))))));
    }
    report->check("gns.nabla-rho",
                  "nabla^k L(a) = L(rho^k(a)), k in {-2,-1,1,2}", nab);

    const Matrix nabla_sqrt = positive_power(gns.nabla, Complex(0.5, 0.0));
    report->check(
        "gns.nabla-polar", "nabla = T* T, T = J nabla^(1/2)",
        max_norm(Matrix(gns.J.m * nabla_sqrt.conjugate() - gns.T.m)));
    report->check("gns.J-involution", "J is an antiunitary involution",
                  std::max(gns.J.involution_residual(),
                           gns.J.is_antiunitary(tol) ? 0.0 : 1.0));
  }
  return gns;
}

BigUnitary build_fundamental_unitary(const QuantumGroup& qg,
                                     const GnsData& gns, double tol,
                                     VerificationReport* report) {
  const auto n = qg.dim();
  // G1: a (x) b -> (L (x) L)(D(b)(a (x) 1)) = (L (x) L) T1 flip;
  // W G1 = L (x) L.
  const Matrix ll = kron(gns.lambda, gns.lambda);
  const Matrix g1 = ll * qg.comult.t1 * flip_matrix(n, n);
  if (!is_invertible(g1))
    fail(ErrorCode::singular_system,
         "defining vectors of the fundamental unitary do not span H (x) H");
  BigUnitary w{{n, n}, ll * g1.inverse()};

  if (report) {
    report->check("fundamental.defining",
                  "W (L (x) L)(D(b)(a (x) 1)) = L(a) (x) L(b)",
                  operator_norm(Matrix(w.matrix * g1 - ll)));
    report->check("fundamental.unitary", "W* W = W W* = 1",
                  w.unitarity_residual());
  }
  return w;
}

VerificationReport verify_pentagon(const BigUnitary& w, double tol) {
  VerificationReport report(tol);
  const auto n = w.legs[0];
  const std::vector<Eigen::Index> dims{n, n, n};
  const Matrix w12 = embed_legs(w.matrix, {0, 1}, dims);
  const Matrix w13 = embed_legs(w.matrix, {0, 2}, dims);
  const Matrix w23 = embed_legs(w.matrix, {1, 2}, dims);
  report.check("fundamental.pentagon", "W12 W13 W23 = W23 W12",
               operator_norm(Matrix(w12 * w13 * w23 - w23 * w12)));
  return report;
}

DualGns build_dual_gns(const QuantumGroup& qg, const DualQuantumGroup& dual,
                       const GnsData& gns, [[maybe_unused]] double tol,
                       VerificationReport* report) {
  const auto n = qg.dim();
  DualGns dg;
  // L^(a^) = L(a) and the Fourier transform is the coordinate identity, so
  // the dual GNS matrix is the primal one.
  dg.lambda_hat = gns.lambda;
  const Matrix lambda_hat_inv = gns.lambda_inv;
  dg.pi_hat.resize(n);
  for (Eigen::Index i = 0; i < n; ++i)
    dg.pi_hat[i] =
        dg.lambda_hat * dual.qg.algebra.left_mult(i) * lambda_hat_inv;

  dg.T_hat = AntiLinearOp{dg.lambda_hat * dual.qg.algebra.star_matrix() *
                          lambda_hat_inv.conjugate()};
  dg.nabla_hat = dg.T_hat.m.transpose() * dg.T_hat.m.conjugate();
  const Matrix inv_sqrt = positive_power(dg.nabla_hat, Complex(-0.5, 0.0));
  dg.J_hat = AntiLinearOp{dg.T_hat.m * inv_sqrt.conjugate()};

  if (report) {
    // <L^(om1), L^(om2)> = psi^(om2* om1).
    const auto& da = dual.qg.algebra;
    double inner = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        const Complex lhs = Vector(dg.lambda_hat * da.basis_vector(j))
                                .dot(Vector(dg.lambda_hat * da.basis_vector(i)));
        const Complex rhs = dual.psi_hat(
            da.multiply(da.involute(da.basis_vector(j)), da.basis_vector(i)));
        inner = std::max(inner, std::abs(lhs - rhs));
      }
    report->check("dual.gns-compat", "<L^(om1), L^(om2)> = psi^(om2* om1)",
                  inner);
    report->check("gns.J-involution", "J^ is an antiunitary involution",
                  std::max(dg.J_hat.involution_residual(),
                           dg.J_hat.is_antiunitary(tol) ? 0.0 : 1.0));
  }
  return dg;
}

VerificationReport reduced_structures(const QuantumGroup& qg,
                                      const GnsData& gns, const BigUnitary& w,
                                      const DualQuantumGroup& dual,
                                      const DualGns& dual_gns, double tol,
                                      unsigned seed) {
  VerificationReport report(tol);
  const auto& a = qg.algebra;
  const auto n = a.dim();
  const Matrix& wm = w.matrix;

  // W*(1 (x) pi(a))W = (pi (x) pi)(D(a)).
  double impl = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    Matrix lhs = wm.adjoint() * kron(eye(n), gns.pi[i]) * wm;
    Matrix rhs = Matrix::Zero(n * n, n * n);
    const Vector dc = qg.comult.map.col(i);
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = 0; q < n; ++q)
        if (dc(p * n + q) != Complex(0.0))
          rhs += dc(p * n + q) * kron(gns.pi[p], gns.pi[q]);
    impl = std::max(impl, operator_norm(Matrix(lhs - rhs)));
  }
  report.check("fundamental.comult-implementation",
               "W*(1 (x) pi(a))W = (pi (x) pi)D(a)", impl);

  // Slice formula: pi((id (x) phi)(D(b*)(1 (x) a))) = (id (x) om_{La,Lb})(W).
  double slice_phi = 0.0;
  FiniteStarAlgebra aa = tensor_algebra(a, a);
  for (Eigen::Index ia = 0; ia < n; ++ia)
    for (Eigen::Index ib = 0; ib < n; ++ib) {
      const Vector bstar = a.involute(a.basis_vector(ib));
      const Vector one_a =
          kron(Matrix(a.unit()), Matrix(a.basis_vector(ia))).col(0);
      const Vector x = aa.multiply(qg.comult.apply(bstar), one_a);
      const Matrix lhs = gns.represent(slice(qg.haar.phi, 2, x, n, n));
      const Matrix rhs = slice_leg2(wm, n, n, gns.Lambda(a.basis_vector(ia)),
                                    gns.Lambda(a.basis_vector(ib)));
      slice_phi = std::max(slice_phi, operator_norm(Matrix(lhs - rhs)));
    }
  report.check("fundamental.slice-phi",
               "pi((id (x) phi)(D(b*)(1 (x) a))) = (id (x) om_{La,Lb})(W)",
               slice_phi);

  // Dual slice formula:
  // (om_{L^(th),L^(et)} (x) id)(W) = pi^((psi^ (x) id)((et* (x) 1)D^(th))).
  const auto& da = dual.qg.algebra;
  FiniteStarAlgebra daa = tensor_algebra(da, da);
  double slice_dual = 0.0;
  for (Eigen::Index it = 0; it < n; ++it)
    for (Eigen::Index ie = 0; ie < n; ++ie) {
      const Vector eta_star =
          kron(Matrix(da.involute(da.basis_vector(ie))), Matrix(da.unit()))
              .col(0);
      const Vector x = daa.multiply(eta_star, dual.qg.comult.map.col(it));
      Matrix rhs = Matrix::Zero(n, n);
      const Vector sliced = slice(dual.psi_hat, 1, x, n, n);
      for (Eigen::Index k = 0; k < n; ++k) rhs += sliced(k) * dual_gns.pi_hat[k];
      const Matrix lhs =
          slice_leg1(wm, n, n, Vector(dual_gns.lambda_hat * da.basis_vector(it)),
                     Vector(dual_gns.lambda_hat * da.basis_vector(ie)));
      slice_dual = std::max(slice_dual, operator_norm(Matrix(lhs - rhs)));
    }
  report.check(
      "fundamental.slice-dual",
      "(om_{L^(th),L^(et)} (x) id)(W) = pi^((psi^ (x) id)((et* (x) 1)D^(th)))",
      slice_dual);

  // Slices of W span pi(A).
  {
    Matrix pi_basis(n * n, n);
    for (Eigen::Index i = 0; i < n; ++i) pi_basis.col(i) = gns.pi[i].reshaped();
    Matrix slices(n * n, n * n);
    Eigen::Index col = 0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = 0; q < n; ++q)
        slices.col(col++) =
            slice_leg2(wm, n, n, Vector(gns.lambda.col(p)),
                       Vector(gns.lambda.col(q)))
                .reshaped();
    const int rank = numeric_rank(slices);
    // every slice must lie in span(pi_basis)
    Matrix residual =
        slices - pi_basis * Matrix(pi_basis.completeOrthogonalDecomposition()
                                       .solve(slices));
    const bool ok = (rank == n) && max_norm(residual) < tol;
    report.check_flag("fundamental.slice-span", "slices of W span pi(A)", ok);
  }

  // Dual comultiplication D^(x) = W (x (x) 1) W*: matches the dual quantum
  // group and is coassociative.
  double match = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Matrix lhs = wm * kron(dual_gns.pi_hat[i], eye(n)) * wm.adjoint();
    Matrix rhs = Matrix::Zero(n * n, n * n);
    const Vector dc = dual.qg.comult.map.col(i);
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = 0; q < n; ++q)
        if (dc(p * n + q) != Complex(0.0))
          rhs += dc(p * n + q) * kron(dual_gns.pi_hat[p], dual_gns.pi_hat[q]);
    match = std::max(match, operator_norm(Matrix(lhs - rhs)));
  }
  report.check("fundamental.dual-comult-match",
               "W(x (x) 1)W* realizes the dual comultiplication", match);

  {
    // (W12 W13) x1 (W12 W13)* = (W23 W12) x1 (W23 W12)* for all x is, by
    // unitarity, the commutation of C = (W23 W12)*(W12 W13) with every
    // x (x) 1 (x) 1; the block products with x (x) 1 (x) 1 stay cheap.
    const std::vector<Eigen::Index> dims{n, n, n};
    const Matrix w12 = embed_legs(wm, {0, 1}, dims);
    const Matrix w13 = embed_legs(wm, {0, 2}, dims);
    const Matrix w23 = embed_legs(wm, {1, 2}, dims);
    const Matrix c = (w23 * w12).adjoint() * (w12 * w13);
    const Eigen::Index block = n * n;
    double coassoc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const Matrix& x = dual_gns.pi_hat[i];
      Matrix lhs = Matrix::Zero(n * block, n * block);
      Matrix rhs = Matrix::Zero(n * block, n * block);
      for (Eigen::Index p = 0; p < n; ++p)
        for (Eigen::Index q = 0; q < n; ++q) {
          if (x(p, q) != Complex(0.0)) {
            lhs.middleCols(q * block, block) +=
                x(p, q) * c.middleCols(p * block, block);
            rhs.middleRows(p * block, block) +=
                x(p, q) * c.middleRows(q * block, block);
          }
        }
      coassoc = std::max(coassoc, operator_norm(Matrix(lhs - rhs)));
    }
    report.check("fundamental.dual-comult-coassoc",
                 "dual comultiplication is coassociative", coassoc);
  }

  // (J^ (x) J) W* (J^ (x) J) = W.
  {
    const AntiLinearOp jj = antilinear_kron(dual_gns.J_hat, gns.J);
    const Matrix lhs = jj.m * wm.adjoint().conjugate() * jj.m.conjugate();
    report.check("fundamental.conjugation-symmetry",
                 "(J^ (x) J) W* (J^ (x) J) = W",
                 operator_norm(Matrix(lhs - wm)));
  }

  // W (pi (x) pi^)(x) = (pi (x) pi^)(X x) for x in a basis of A (x) A^.
  {
    const AlgebraicX x_el = build_X(qg, dual, tol, nullptr);
    FiniteStarAlgebra mixed = tensor_algebra(a, dual.qg.algebra);
    double compat = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        const Vector basis_x =
            kron(Matrix(a.basis_vector(i)), Matrix(da.basis_vector(j))).col(0);
        const Vector xx = mixed.multiply(x_el.coords, basis_x);
        Matrix lhs = wm * kron(gns.pi[i], dual_gns.pi_hat[j]);
        Matrix rhs = Matrix::Zero(n * n, n * n);
        for (Eigen::Index p = 0; p < n; ++p)
          for (Eigen::Index q = 0; q < n; ++q)
            if (xx(p * n + q) != Complex(0.0))
              rhs += xx(p * n + q) * kron(gns.pi[p], dual_gns.pi_hat[q]);
        compat = std::max(compat, operator_norm(Matrix(lhs - rhs)));
      }
    report.check("fundamental.multiplier-compat",
                 "W (pi (x) pi^)(x) = (pi (x) pi^)(X x)", compat);
  }

  // Defining relation replayed on random pairs.
  {
    RandomElements rng(seed);
    double replay = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      const Vector ca = rng.vector(n);
      const Vector cb = rng.vector(n);
      const Vector arg = aa.multiply(
          qg.comult.apply(cb), kron(Matrix(ca), Matrix(a.unit())).col(0));
      const Vector lhs = wm * kron(gns.lambda, gns.lambda) * arg;
      const Vector rhs =
          kron(Matrix(gns.Lambda(ca)), Matrix(gns.Lambda(cb))).col(0);
      replay = std::max(replay, max_norm(Vector(lhs - rhs)) /
                                    std::max(1.0, max_norm(rhs)));
    }
    report.check("fundamental.defining-replay",
                 "defining relation on random pairs", replay);
  }
  return report;
}

}  // namespace aqg
