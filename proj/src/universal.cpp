#include "aqg/universal.hpp"

namespace aqg {

Matrix StarRepresentation::apply(const Vector& coords) const {
  Matrix out = Matrix::Zero(images[0].rows(), images[0].cols());
  for (std::size_t i = 0; i < images.size(); ++i)
    if (coords(static_cast<Eigen::Index>(i)) != Complex(0.0))
      out += coords(static_cast<Eigen::Index>(i)) * images[i];
  return out;
}

Matrix UniversalRealization::represent(const Vector& coords) const {
  Matrix out = Matrix::Zero(pi_u[0].rows(), pi_u[0].cols());
  for (std::size_t i = 0; i < pi_u.size(); ++i)
    if (coords(static_cast<Eigen::Index>(i)) != Complex(0.0))
      out += coords(static_cast<Eigen::Index>(i)) * pi_u[i];
  return out;
}

namespace {

double representation_residual(const FiniteStarAlgebra& a,
                               const StarRepresentation& rep) {
  const auto n = a.dim();
  double res = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      Matrix lhs = rep.images[i] * rep.images[j];
      Matrix rhs = rep.apply(a.multiply(a.basis_vector(i), a.basis_vector(j)));
      res = std::max(res, max_norm(Matrix(lhs - rhs)));
    }
    res = std::max(res, max_norm(Matrix(rep.apply(a.involute(a.basis_vector(i))) -
                                        rep.images[i].adjoint())));
  }
  res = std::max(
      res, max_norm(Matrix(rep.apply(a.unit()) -
                           eye(rep.images[0].rows()))));
  return res;
}

// Decompose an operator on H (x) K with first leg in pi(A):
// u = sum_i pi(e_i) (x) out[i].  Returns the decomposition residual.
double decompose_leg1(const GnsData& gns, const Matrix& u, Eigen::Index dim_c,
                      std::vector<Matrix>& out) {
  const auto n = gns.dim();
  Matrix basis(n * n, n);
  for (Eigen::Index i = 0; i < n; ++i) basis.col(i) = gns.pi[i].reshaped();
  const auto solver = basis.completeOrthogonalDecomposition();

  out.assign(n, Matrix::Zero(dim_c, dim_c));
  double residual = 0.0;
  // For each carrier entry (q, s), the H-block u[(·,q),(·,s)] is decomposed
  // against the pi basis.
  for (Eigen::Index q = 0; q < dim_c; ++q)
    for (Eigen::Index s = 0; s < dim_c; ++s) {
      Matrix block(n, n);
      for (Eigen::Index p = 0; p < n; ++p)
        for (Eigen::Index r = 0; r < n; ++r)
          block(p, r) = u(p * dim_c + q, r * dim_c + s);
      Vector coeff = solver.solve(Vector(block.reshaped()));
      residual = std::max(
          residual,
          max_norm(Vector(basis * coeff - Vector(block.reshaped()))));
      for (Eigen::Index i = 0; i < n; ++i) out[i](q, s) = coeff(i);
    }
  return residual;
}

}  // namespace

UniversalRealization build_universal(const QuantumGroup& qg, const GnsData& gns,
                                     [[maybe_unused]] double tol, unsigned seed,
                                     VerificationReport* report) {
  if (!qg.haar.positive)
    fail(ErrorCode::positivity_required,
         "universal realization needs a positive Haar functional");
  const auto& a = qg.algebra;
  const auto n = a.dim();
  UniversalRealization u;
  u.pi_u = gns.pi;

  // Registry: the reduced representation, the counit as a one-dimensional
  // representation, (eps (x) pi) o D (which collapses to pi) and
  // (pi (x) pi) o D on H (x) H.
  StarRepresentation red{"reduced", gns.pi};
  StarRepresentation eps{"counit", {}};
  for (Eigen::Index i = 0; i < n; ++i) {
    Matrix m(1, 1);
    m(0, 0) = qg.hopf.counit.covector(i);
    eps.images.push_back(m);
  }
  StarRepresentation eps_pi{"counit-tensor-reduced", {}};
  StarRepresentation pipi{"comultiplied", {}};
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vector dc = qg.comult.map.col(i);
    Matrix m1 = Matrix::Zero(n, n);
    Matrix m2 = Matrix::Zero(n * n, n * n);
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = 0; q < n; ++q) {
        const Complex c = dc(p * n + q);
        if (c == Complex(0.0)) continue;
        m1 += c * qg.hopf.counit.covector(p) * gns.pi[q];
        m2 += c * kron(gns.pi[p], gns.pi[q]);
      }
    eps_pi.images.push_back(m1);
    pipi.images.push_back(m2);
  }
  u.registry = {red, eps, eps_pi, pipi};

  if (report) {
    report->check("universal.norm-registry",
                  "every registered representation is bounded by |.|_u",
                  registry_residual(a, u, seed));

    Matrix stacked(n * n, n);
    for (Eigen::Index i = 0; i < n; ++i) stacked.col(i) = gns.pi[i].reshaped();
    report->check_flag("universal.pi-injective",
                       "the bridge pi: A_u -> A_r has trivial kernel",
                       numeric_rank(stacked) == n);

    // |pi_u(a)| = |pi_r(a)| over seeded random elements (the finite
    // dimensional collapse of universal = reduced, computed on both routes).
    double agree = 0.0;
    RandomElements rng2(seed + 1);
    for (int trial = 0; trial < 100; ++trial) {
      const Vector x = rng2.vector(n);
      agree = std::max(agree,
                       std::abs(u.norm_u(x) - operator_norm(gns.represent(x))));
    }
    report->check("universal.norms-agree", "|pi_u(a)| = |pi_r(a)|", agree);

    // Delta_u extends the comultiplication and the counit property holds at
    // the operator level: slicing Delta_u(pi_u(a)) with eps_u returns
    // pi_u(a).
    double delta_u = 0.0;
    double counit_u = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      std::vector<Matrix> legs;
      const double dec = decompose_leg1(gns, pipi.images[i], n, legs);
      delta_u = std::max(delta_u, dec);
      Matrix left = Matrix::Zero(n, n);
      for (Eigen::Index k = 0; k < n; ++k)
        left += qg.hopf.counit.covector(k) * legs[k];
      counit_u = std::max(counit_u, max_norm(Matrix(left - gns.pi[i])));
      counit_u =
          std::max(counit_u, max_norm(Matrix(eps_pi.images[i] - gns.pi[i])));
    }
    report->check("universal.delta-u", "Delta_u extends the comultiplication",
                  delta_u);
    report->check("universal.epsilon-u-counit",
                  "(eps_u (x) id)Delta_u = (id (x) eps_u)Delta_u = id",
                  counit_u);
  }
  return u;
}

double corep_residual(const GnsData& gns, const BigUnitary& w,
                      const Corepresentation& u) {
  const auto n = gns.dim();
  const auto k = u.dim_c;
  double res = u.matrix.rows() == n * k ? 0.0 : 1.0;
  if (res > 0) return res;
  res = std::max(res,
                 std::max(operator_norm(Matrix(u.matrix.adjoint() * u.matrix -
                                               eye(n * k))),
                          operator_norm(Matrix(u.matrix * u.matrix.adjoint() -
                                               eye(n * k)))));
  const std::vector<Eigen::Index> dims{n, n, k};
  const Matrix w12 = embed_legs(w.matrix, {0, 1}, dims);
  const Matrix u13 = embed_legs(u.matrix, {0, 2}, dims);
  const Matrix u23 = embed_legs(u.matrix, {1, 2}, dims);
  res = std::max(
      res, operator_norm(Matrix(w12.adjoint() * u23 * w12 - u13 * u23)));
  std::vector<Matrix> legs;
  res = std::max(res, decompose_leg1(gns, u.matrix, k, legs));
  return res;
}

BigUnitary build_V(const QuantumGroup& qg, const GnsData& gns,
                   const BigUnitary& w, const UniversalRealization& universal,
                   double tol, unsigned seed, VerificationReport* report) {
  const auto& a = qg.algebra;
  const auto n = a.dim();

  // The defining relation, flattened over the carrier vector h in H:
  // V [(pi_u (x) L)(D(b)(a (x) 1))] h = pi_u(a) h (x) L(b).  Each element x
  // of A (x) A yields the map H -> H (x) H, M(x) = sum x_{pq} pi_u(e_p) (.)
  // tensor L(e_q), columns stacked over a basis of inputs (a, b).
  auto op_map = [&](const Vector& x) {
    Matrix m = Matrix::Zero(n * n, n);
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = 0; q < n; ++q) {
        const Complex c = x(p * n + q);
        if (c == Complex(0.0)) continue;
        const Vector lq = gns.Lambda(a.basis_vector(q));
        for (Eigen::Index r = 0; r < n; ++r)
          for (Eigen::Index s = 0; s < n; ++s)
            m.row(r * n + s) += c * lq(s) * universal.pi_u[p].row(r);
      }
    return m;
  };

  FiniteStarAlgebra aa = tensor_algebra(a, a);
  Matrix lhs_stack(n * n, n * n * n);
  Matrix rhs_stack(n * n, n * n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Vector arg = qg.comult.t1.col(j * n + i);  // D(e_j)(e_i (x) 1)
      lhs_stack.block(0, (i * n + j) * n, n * n, n) = op_map(arg);
      const Vector basic =
          kron(Matrix(a.basis_vector(i)), Matrix(a.basis_vector(j))).col(0);
      rhs_stack.block(0, (i * n + j) * n, n * n, n) = op_map(basic);
    }
  // V lhs_stack = rhs_stack; the columns span H (x) H by the bijectivity of
  // the mixed multiplication map.
  if (numeric_rank(lhs_stack) < n * n)
    fail(ErrorCode::singular_system,
         "defining relation of the left regular corepresentation is singular");
  const Matrix v_adj = lhs_stack.transpose()
                           .completeOrthogonalDecomposition()
                           .solve(rhs_stack.transpose());
  BigUnitary v{{n, n}, v_adj.transpose()};

  if (report) {
    report->check("V.defining",
                  "V (pi_u (x) L)(D(b)(a (x) 1)) = pi_u(a) (x) L(b)",
                  operator_norm(Matrix(v.matrix * lhs_stack - rhs_stack)));
    report->check("V.unitary", "V is unitary", v.unitarity_residual());
    report->check("V.lift-W", "(pi (x) id)(V) = W",
                  operator_norm(Matrix(v.matrix - w.matrix)));

    // Slice formula.
    double slice_res = 0.0;
    for (Eigen::Index ia = 0; ia < n; ++ia)
      for (Eigen::Index ib = 0; ib < n; ++ib) {
        const Vector bstar = a.involute(a.basis_vector(ib));
        const Vector one_a =
            kron(Matrix(a.unit()), Matrix(a.basis_vector(ia))).col(0);
        const Vector x = aa.multiply(qg.comult.apply(bstar), one_a);
        const Matrix lhs = slice_leg2(v.matrix, n, n,
                                      gns.Lambda(a.basis_vector(ia)),
                                      gns.Lambda(a.basis_vector(ib)));
        const Matrix rhs = gns.represent(slice(qg.haar.phi, 2, x, n, n));
        slice_res = std::max(slice_res, operator_norm(Matrix(lhs - rhs)));
      }
    report->check("V.slice",
                  "(id (x) om_{La,Lb})(V) = pi_u((id (x) phi)(D(b*)(1 (x) a)))",
                  slice_res);

    const std::vector<Eigen::Index> dims{n, n, n};
    const Matrix w12 = embed_legs(w.matrix, {0, 1}, dims);
    const Matrix v12 = embed_legs(v.matrix, {0, 1}, dims);
    const Matrix v13 = embed_legs(v.matrix, {0, 2}, dims);
    const Matrix v23 = embed_legs(v.matrix, {1, 2}, dims);
    const Matrix w23 = embed_legs(w.matrix, {1, 2}, dims);
    report->check("V.corep-left", "(Delta_u (x) id)(V) = V13 V23",
                  operator_norm(
                      Matrix(w12.adjoint() * v23 * w12 - v13 * v23)));
    report->check("V.corep-right", "(id (x) D^_r)(V) = V12 V13",
                  operator_norm(
                      Matrix(w23 * v12 * w23.adjoint() - v12 * v13)));

    // (id (x) pi)Delta_u(a) = V*(1 (x) pi(a))V.
    double impl = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      Matrix lhs = Matrix::Zero(n * n, n * n);
      const Vector dc = qg.comult.map.col(i);
      for (Eigen::Index p = 0; p < n; ++p)
        for (Eigen::Index q = 0; q < n; ++q)
          if (dc(p * n + q) != Complex(0.0))
            lhs += dc(p * n + q) * kron(gns.pi[p], gns.pi[q]);
      Matrix rhs = v.matrix.adjoint() * kron(eye(n), gns.pi[i]) * v.matrix;
      impl = std::max(impl, operator_norm(Matrix(lhs - rhs)));
    }
    report->check("V.implement-comult",
                  "(id (x) pi)Delta_u(a) = V*(1 (x) pi(a))V", impl);

    // Adjoint slice formula at sampled vectors.
    RandomElements rng(seed);
    const Matrix nab_half = positive_power(gns.nabla, Complex(0.5, 0.0));
    const Matrix nab_mhalf = positive_power(gns.nabla, Complex(-0.5, 0.0));
    double adj = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const Vector p = rng.vector(n);
      const Vector q = rng.vector(n);
      const Matrix lhs = slice_leg2(Matrix(v.matrix.adjoint()), n, n, p, q);
      const Matrix rhs = slice_leg2(v.matrix, n, n,
                                    gns.J.apply(Vector(nab_mhalf * q)),
                                    gns.J.apply(Vector(nab_half * p)));
      adj = std::max(adj, operator_norm(Matrix(lhs - rhs)) /
                              std::max(1.0, operator_norm(lhs)));
    }
    report->check(
        "V.adjoint-slice",
        "(id (x) om_{p,q})(V*) = (id (x) om_{J nab^-1/2 q, J nab^1/2 p})(V)",
        adj);
  }
  return v;
}

BigUnitary build_U(const QuantumGroup& qg, const GnsData& gns,
                   const DualQuantumGroup& dual, const DualGns& dual_gns,
                   const BigUnitary& w, double tol,
                   VerificationReport* report) {
  const auto& a = qg.algebra;
  const auto n = a.dim();
  AlgebraicX x = build_X(qg, dual, tol, nullptr);
  const Matrix& c = x.dual_basis_coeff;
  Matrix u_mat = Matrix::Zero(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k)
      if (c(i, k) != Complex(0.0))
        u_mat += c(i, k) * kron(gns.pi[i], dual_gns.pi_hat[k]);
  BigUnitary u{{n, n}, std::move(u_mat)};

  if (report) {
    report->check("U.unitary", "U is unitary", u.unitarity_residual());
    report->check("U.lift-W", "(pi (x) pi^)(U) = W",
                  operator_norm(Matrix(u.matrix - w.matrix)));

    const std::vector<Eigen::Index> dims{n, n, n};
    const Matrix w12 = embed_legs(w.matrix, {0, 1}, dims);
    const Matrix w23 = embed_legs(w.matrix, {1, 2}, dims);
    const Matrix u12 = embed_legs(u.matrix, {0, 1}, dims);
    const Matrix u13 = embed_legs(u.matrix, {0, 2}, dims);
    const Matrix u23 = embed_legs(u.matrix, {1, 2}, dims);
    report->check("U.corep-left", "(Delta (x) id)(U) = U13 U23",
                  operator_norm(
                      Matrix(w12.adjoint() * u23 * w12 - u13 * u23)));
    report->check("U.corep-right", "(id (x) Delta^)(U) = U12 U13",
                  operator_norm(
                      Matrix(w23 * u12 * w23.adjoint() - u12 * u13)));

    // Slice formulas.
    double left = 0.0, right = 0.0;
    FiniteStarAlgebra aa = tensor_algebra(a, a);
    for (Eigen::Index ia = 0; ia < n; ++ia)
      for (Eigen::Index ib = 0; ib < n; ++ib) {
        const Vector la = gns.Lambda(a.basis_vector(ia));
        const Vector lb = gns.Lambda(a.basis_vector(ib));
        // (om'_{La,Lb} (x) id)(U) = pi^_u(a phi b*), (a phi b*)(x) =
        // phi(b* x a).
        Vector values(n);
        for (Eigen::Index k = 0; k < n; ++k)
          values(k) = qg.haar.phi(
              a.multiply(a.involute(a.basis_vector(ib)),
                         a.multiply(a.basis_vector(k), a.basis_vector(ia))));
        Matrix expected = Matrix::Zero(n, n);
        const Vector coords = dual.from_covector(values);
        for (Eigen::Index k = 0; k < n; ++k)
          expected += coords(k) * dual_gns.pi_hat[k];
        left = std::max(left, operator_norm(Matrix(
                                  slice_leg1(u.matrix, n, n, la, lb) - expected)));

        const Vector bstar = a.involute(a.basis_vector(ib));
        const Vector one_a =
            kron(Matrix(a.unit()), Matrix(a.basis_vector(ia))).col(0);
        const Vector arg = aa.multiply(qg.comult.apply(bstar), one_a);
        const Matrix rhs = gns.represent(slice(qg.haar.phi, 2, arg, n, n));
        right = std::max(right, operator_norm(Matrix(
                                    slice_leg2(u.matrix, n, n, la, lb) - rhs)));
      }
    report->check("U.slice-left", "(om'_{La,Lb} (x) id)(U) = pi^_u(a phi b*)",
                  left);
    report->check("U.slice-right",
                  "(id (x) om^'_{La,Lb})(U) = pi_u((id (x) phi)(D(b*)(1 (x) a)))",
                  right);

    // Density surrogate: slices of U span an n-dimensional space.
    Matrix slices(n * n, n * n);
    Eigen::Index col = 0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = 0; q < n; ++q)
        slices.col(col++) = slice_leg2(u.matrix, n, n,
                                       Vector(gns.lambda.col(p)),
                                       Vector(gns.lambda.col(q)))
                                .reshaped();
    report->check_flag("U.span-rank",
                       "slices of U span an n-dimensional space",
                       numeric_rank(slices) == n);
  }
  return u;
}

std::vector<Matrix> corep_to_hom(const GnsData& gns, const BigUnitary& w,
                                 const DualQuantumGroup& dual,
                                 const Corepresentation& u, double tol) {
  const auto n = gns.dim();
  if (corep_residual(gns, w, u) >= tol)
    fail(ErrorCode::not_corep,
         "input does not satisfy the corepresentation invariants");

  std::vector<Matrix> legs;
  decompose_leg1(gns, u.matrix, u.dim_c, legs);
  // theta(e^_i) = sum_j e^_i(e_j) legs[j].
  std::vector<Matrix> theta(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Matrix m = Matrix::Zero(u.dim_c, u.dim_c);
    for (Eigen::Index j = 0; j < n; ++j) m += dual.pairing(i, j) * legs[j];
    theta[i] = m;
  }
  const double hom_res = star_hom_residual(dual.qg.algebra, theta);
  if (hom_res >= tol)
    fail(ErrorCode::not_star_hom,
         "sliced map is not a *-homomorphism (residual " +
             std::to_string(hom_res) + ")");
  return theta;
}

Corepresentation hom_to_corep(const QuantumGroup& qg, const GnsData& gns,
                              const DualQuantumGroup& dual,
                              const std::vector<Matrix>& theta, double tol) {
  const auto n = gns.dim();
  const double hom_res = star_hom_residual(dual.qg.algebra, theta);
  if (hom_res >= tol)
    fail(ErrorCode::not_star_hom, "input is not a *-homomorphism on the dual");
  AlgebraicX x = build_X(qg, dual, tol, nullptr);
  const auto k = theta[0].rows();
  Matrix out = Matrix::Zero(n * k, n * k);
  for (Eigen::Index i = 0; i < n; ++i) {
    Matrix th = Matrix::Zero(k, k);
    for (Eigen::Index m = 0; m < n; ++m)
      if (x.dual_basis_coeff(i, m) != Complex(0.0))
        th += x.dual_basis_coeff(i, m) * theta[m];
    out += kron(gns.pi[i], th);
  }
  return Corepresentation{n, k, std::move(out), CorepSide::reduced};
}

double registry_residual(const FiniteStarAlgebra& a,
                         const UniversalRealization& u, unsigned seed) {
  const auto n = a.dim();
  double worst = 0.0;
  RandomElements rng(seed);
  for (const auto& rep : u.registry) {
    worst = std::max(worst, representation_residual(a, rep));
    for (Eigen::Index i = 0; i < n; ++i) {
      const Vector e = a.basis_vector(i);
      worst = std::max(worst, operator_norm(rep.apply(e)) - u.norm_u(e));
    }
    for (int trial = 0; trial < 100; ++trial) {
      const Vector x = rng.vector(n);
      worst = std::max(worst, operator_norm(rep.apply(x)) - u.norm_u(x));
    }
  }
  return worst;
}

double star_hom_residual(const FiniteStarAlgebra& dual_algebra,
                         const std::vector<Matrix>& theta) {
  const auto n = dual_algebra.dim();
  StarRepresentation rep{"theta", theta};
  double res = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      Matrix lhs = theta[i] * theta[j];
      Matrix rhs = rep.apply(dual_algebra.multiply(
          dual_algebra.basis_vector(i), dual_algebra.basis_vector(j)));
      res = std::max(res, max_norm(Matrix(lhs - rhs)));
    }
    res = std::max(
        res, max_norm(Matrix(rep.apply(dual_algebra.involute(
                                 dual_algebra.basis_vector(i))) -
                             theta[i].adjoint())));
  }
  res = std::max(res, max_norm(Matrix(rep.apply(dual_algebra.unit()) -
                                      eye(theta[0].rows()))));
  return res;
}

Corepresentation lift_corep(const GnsData& gns, const BigUnitary& w,
                            const BigUnitary& v, const Corepresentation& u,
                            double tol, VerificationReport* report) {
  const auto n = gns.dim();
  const auto k = u.dim_c;
  if (corep_residual(gns, w, u) >= tol)
    fail(ErrorCode::not_corep,
         "input does not satisfy the corepresentation invariants");
  Corepresentation lifted = u;
  lifted.side = CorepSide::universal;

  if (report) {
    report->check("lift.projection", "(pi (x) id)(corep_u) = corep",
                  operator_norm(Matrix(lifted.matrix - u.matrix)));
    const std::vector<Eigen::Index> dims{n, n, k};
    const Matrix v12 = embed_legs(v.matrix, {0, 1}, dims);
    const Matrix u23 = embed_legs(u.matrix, {1, 2}, dims);
    const Matrix l13 = embed_legs(lifted.matrix, {0, 2}, dims);
    report->check("lift.formula",
                  "(corep_u)13 = V12* corep23 V12 corep23*",
                  operator_norm(Matrix(l13 - v12.adjoint() * u23 * v12 *
                                                 u23.adjoint())));
  }
  return lifted;
}

bool slice_algebra_closed(const GnsData& gns, const Corepresentation& u,
                          [[maybe_unused]] double tol) {
  const auto n = gns.dim();
  const auto k = u.dim_c;
  Matrix slices(k * k, n * n);
  Eigen::Index col = 0;
  for (Eigen::Index p = 0; p < n; ++p)
    for (Eigen::Index q = 0; q < n; ++q)
      slices.col(col++) = slice_leg1(u.matrix, n, k, Vector(gns.lambda.col(p)),
                                     Vector(gns.lambda.col(q)))
                              .reshaped();
  const int base_rank = numeric_rank(slices);

  // Append products and adjoints of a spanning set; the rank must not grow.
  Eigen::JacobiSVD<Matrix> svd(slices, Eigen::ComputeThinU);
  Matrix basis = svd.matrixU().leftCols(base_rank);
  std::vector<Matrix> gens;
  for (int i = 0; i < base_rank; ++i)
    gens.push_back(basis.col(i).reshaped(k, k));
  Matrix extended(k * k, base_rank * base_rank + base_rank);
  Eigen::Index c2 = 0;
  for (const auto& x : gens)
    for (const auto& y : gens) extended.col(c2++) = Matrix(x * y).reshaped();
  for (const auto& x : gens)
    extended.col(c2++) = Matrix(x.adjoint()).reshaped();
  Matrix joint(k * k, slices.cols() + extended.cols());
  joint << slices, extended;
  return numeric_rank(joint) == base_rank;
}

}  // namespace aqg
