#include "aqg/duality.hpp"

namespace aqg {

DualQuantumGroup build_dual(const QuantumGroup& qg, double tol,
                            VerificationReport* report) {
  const auto& a = qg.algebra;
  const auto n = a.dim();

  DualQuantumGroup dual;
  dual.pairing = Matrix(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      dual.pairing(i, j) =
          qg.haar.phi(a.multiply(a.basis_vector(j), a.basis_vector(i)));
  if (!is_invertible(dual.pairing))
    fail(ErrorCode::singular_pairing,
         "pairing <e_i phi, e_j> is singular; Haar functional not faithful");
  dual.pairing_inv_t = dual.pairing.transpose().inverse();
  if (report)
    report->check_flag("dual.pairing-nonsingular",
                       "pairing <e_i phi, e_j> is nonsingular", true);

  // Convolution product: (e^_i e^_j)(e_k) = (e^_i (x) e^_j)(D(e_k)).
  std::vector<Matrix> left(n, Matrix::Zero(n, n));
  {
    LinearFunctional wi, wj;
    for (Eigen::Index i = 0; i < n; ++i) {
      wi.covector = dual.pairing.transpose().col(i);
      for (Eigen::Index j = 0; j < n; ++j) {
        wj.covector = dual.pairing.transpose().col(j);
        Vector values(n);
        for (Eigen::Index k = 0; k < n; ++k)
          values(k) = pair_functional(wi, wj, qg.comult.map.col(k), n, n);
        const Vector coords = dual.pairing_inv_t * values;
        for (Eigen::Index k = 0; k < n; ++k) left[i](k, j) = coords(k);
      }
    }
  }

  // Involution om*(a) = conj(om(S(a)*)).
  Matrix star(n, n);
  {
    const Matrix s = qg.hopf.antipode.matrix;
    const Matrix st = a.star_matrix();
    for (Eigen::Index i = 0; i < n; ++i) {
      Vector values(n);
      for (Eigen::Index k = 0; k < n; ++k) {
        const Vector arg = a.involute(Vector(s * a.basis_vector(k)));
        values(k) =
            std::conj(Complex(dual.pairing.transpose().col(i).transpose() * arg));
      }
      star.col(i) = dual.pairing_inv_t * values;
    }
  }

  // Unit of the dual is the counit.
  const Vector unit = dual.pairing_inv_t * qg.hopf.counit.covector;

  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(l + "^");
  FiniteStarAlgebra dual_alg(a.name() + "^", std::move(labels), std::move(left),
                             std::move(star), unit);

  // Dual comultiplication D^(e^_i)(e_j (x) e_k) = e^_i(e_j e_k).
  Matrix comult(n * n, n);
  const Matrix pp = kron(dual.pairing.transpose(), dual.pairing.transpose());
  const auto pp_solver = pp.partialPivLu();
  for (Eigen::Index i = 0; i < n; ++i) {
    Vector values(n * n);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        values(j * n + k) =
            dual.pairing.transpose().col(i).transpose() *
            a.multiply(a.basis_vector(j), a.basis_vector(k));
    comult.col(i) = pp_solver.solve(values);
  }

  // Re-run the whole derivation pipeline on the dual.
  dual.qg = QuantumGroup::derive(std::move(dual_alg), comult, tol, report);

  // psi^(a^) = eps(a): covector in the e^ basis.
  dual.psi_hat = LinearFunctional{qg.hopf.counit.covector};

  if (report) {
    const auto& da = dual.qg.algebra;
    // eps^(om) = om(1).
    double eps_res = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const Complex direct = dual.evaluate(da.basis_vector(i), a.unit());
      eps_res = std::max(
          eps_res, std::abs(dual.qg.hopf.counit.covector(i) - direct));
    }
    report->check("dual.counit-evaluation", "eps^(om) = om(1)", eps_res);

    // S^(om) = om o S.
    double s_res = 0.0;
    const Matrix s_t = qg.hopf.antipode.matrix.transpose();
    for (Eigen::Index i = 0; i < n; ++i) {
      const Vector expected =
          dual.from_covector(Vector(s_t * dual.to_covector(da.basis_vector(i))));
      s_res = std::max(
          s_res, max_norm(Vector(
                     Vector(dual.qg.hopf.antipode.matrix.col(i)) - expected)));
    }
    report->check("dual.antipode-compose", "S^(om) = om o S", s_res);

    // psi^ is right invariant.
    double right = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      Vector sliced = slice(dual.psi_hat, 1, dual.qg.comult.map.col(i), n, n);
      right = std::max(right, max_norm(Vector(
                                  sliced - dual.psi_hat.covector(i) * da.unit())));
    }
    report->check("dual.psi-right-invariant",
                  "psi^ is right invariant on the dual", right);
  }
  return dual;
}

Vector fourier(const DualQuantumGroup& dual, const Vector& a) {
  // a phi = sum a_i (e_i phi): the coordinates carry over.
  (void)dual;
  return a;
}

Vector fourier_inv(const DualQuantumGroup& dual, const Vector& a_hat) {
  (void)dual;
  return a_hat;
}

AlgebraicX build_X(const QuantumGroup& qg, const DualQuantumGroup& dual,
                   [[maybe_unused]] double tol, VerificationReport* report) {
  const auto& a = qg.algebra;
  const auto& da = dual.qg.algebra;
  const auto n = a.dim();
  AlgebraicX x;
  x.dual_basis_coeff = dual.pairing.inverse();
  x.coords = Vector(n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    x.coords.segment(i * n, n) = x.dual_basis_coeff.row(i).transpose();

  if (report) {
    const Matrix& c = x.dual_basis_coeff;

    // (D (x) id)(X) = X13 X23 in A (x) A (x) A^.
    Vector lhs = Vector::Zero(n * n * n);
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = 0; q < n; ++q)
        for (Eigen::Index k = 0; k < n; ++k) {
          Complex acc = 0.0;
          for (Eigen::Index i = 0; i < n; ++i)
            acc += qg.comult.map(p * n + q, i) * c(i, k);
          lhs((p * n + q) * n + k) = acc;
        }
    Vector rhs = Vector::Zero(n * n * n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        const Vector prod = da.multiply(Vector(c.row(i).transpose()),
                                        Vector(c.row(j).transpose()));
        for (Eigen::Index k = 0; k < n; ++k)
          rhs((i * n + j) * n + k) += prod(k);
      }
    report->check("corep.x-left", "(D (x) id)(X) = X13 X23",
                  max_norm(Vector(lhs - rhs)));

    // (id (x) D^)(X) = X12 X13 in A (x) A^ (x) A^.
    Vector lhs2 = Vector::Zero(n * n * n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index p = 0; p < n; ++p)
        for (Eigen::Index q = 0; q < n; ++q) {
          Complex acc = 0.0;
          for (Eigen::Index k = 0; k < n; ++k)
            acc += c(i, k) * dual.qg.comult.map(p * n + q, k);
          lhs2((i * n + p) * n + q) = acc;
        }
    Vector rhs2 = Vector::Zero(n * n * n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        const Vector prod = a.multiply(a.basis_vector(i), a.basis_vector(j));
        for (Eigen::Index m = 0; m < n; ++m)
          if (prod(m) != Complex(0.0))
            for (Eigen::Index p = 0; p < n; ++p)
              for (Eigen::Index q = 0; q < n; ++q)
                rhs2((m * n + p) * n + q) += prod(m) * c(i, p) * c(j, q);
      }
    report->check("corep.x-right", "(id (x) D^)(X) = X12 X13",
                  max_norm(Vector(lhs2 - rhs2)));

    // (eps (x) id)(X) = unit of the dual.
    Vector eps_slice = Vector::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i)
      eps_slice += qg.hopf.counit.covector(i) * c.row(i).transpose();
    report->check("corep.x-counit-slice", "(eps (x) id)(X) = unit of the dual",
                  max_norm(Vector(eps_slice - da.unit())));

    // X invertible in A (x) A^; unitary when the Haar functional is positive.
    FiniteStarAlgebra mixed = tensor_algebra(a, da);
    const Matrix xl = mixed.left_mult_operator(x.coords);
    bool ok = is_invertible(xl);
    double res = ok ? 0.0 : 1.0;
    if (ok && qg.haar.positive) {
      res = max_norm(Vector(mixed.multiply(mixed.involute(x.coords), x.coords) -
                            mixed.unit()));
    }
    report->check("corep.x-invertible",
                  "X is invertible (unitary in the positive case)", res);
  }
  return x;
}

VerificationReport verify_biduality(const QuantumGroup& qg, double tol) {
  VerificationReport report(tol);
  const auto& a = qg.algebra;
  const auto n = a.dim();
  DualQuantumGroup dual = build_dual(qg, tol);
  DualQuantumGroup bidual = build_dual(dual.qg, tol);
  const auto& dd = bidual.qg.algebra;

  // Canonical evaluation map: ev(e_j)(om) = om(e_j).
  Matrix ev = bidual.pairing_inv_t * dual.pairing;

  double mult_res = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Vector lhs = ev * a.multiply(a.basis_vector(i), a.basis_vector(j));
      Vector rhs = dd.multiply(Vector(ev.col(i)), Vector(ev.col(j)));
      mult_res = std::max(mult_res, max_norm(Vector(lhs - rhs)));
    }
  const bool invertible = is_invertible(ev);
  report.check("bidual.iso-algebra",
               "a -> ev_a is an algebra isomorphism onto the bidual",
               invertible ? mult_res : 1.0);

  double star_res = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    Vector lhs = ev * a.involute(a.basis_vector(i));
    Vector rhs = dd.involute(Vector(ev.col(i)));
    star_res = std::max(star_res, max_norm(Vector(lhs - rhs)));
  }
  report.check("bidual.iso-star", "ev preserves the involution", star_res);

  report.check("bidual.iso-unit", "ev(1) is the bidual unit",
               max_norm(Vector(ev * a.unit() - dd.unit())));

  report.check("bidual.intertwine", "ev intertwines the comultiplications",
               max_norm(Matrix(bidual.qg.comult.map * ev -
                               kron(ev, ev) * qg.comult.map)));

  // flip(X) is the universal corepresentation of the dual:
  // (D^ (x) id)(flip X) = (flip X)13 (flip X)23 and
  // (id (x) D)(flip X) = (flip X)12 (flip X)13, with A identified with the
  // bidual through ev.
  {
    AlgebraicX x = build_X(qg, dual, tol);
    const Matrix& c = x.dual_basis_coeff;
    const auto& da = dual.qg.algebra;
    double flip_res = 0.0;

    // (D^ (x) id)(flip X) = (flip X)13 (flip X)23 in A^ (x) A^ (x) A.
    Vector lhs = Vector::Zero(n * n * n);
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = 0; q < n; ++q)
        for (Eigen::Index i = 0; i < n; ++i) {
          Complex acc = 0.0;
          for (Eigen::Index k = 0; k < n; ++k)
            acc += c(i, k) * dual.qg.comult.map(p * n + q, k);
          lhs((p * n + q) * n + i) = acc;
        }
    Vector rhs = Vector::Zero(n * n * n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        const Vector prod = a.multiply(a.basis_vector(i), a.basis_vector(j));
        for (Eigen::Index p = 0; p < n; ++p)
          for (Eigen::Index q = 0; q < n; ++q)
            for (Eigen::Index m = 0; m < n; ++m)
              if (prod(m) != Complex(0.0))
                rhs((p * n + q) * n + m) += c(i, p) * c(j, q) * prod(m);
      }
    flip_res = std::max(flip_res, max_norm(Vector(lhs - rhs)));

    // (id (x) D)(flip X) = (flip X)12 (flip X)13 in A^ (x) A (x) A.
    Vector lhs2 = Vector::Zero(n * n * n);
    for (Eigen::Index k = 0; k < n; ++k)
      for (Eigen::Index p = 0; p < n; ++p)
        for (Eigen::Index q = 0; q < n; ++q) {
          Complex acc = 0.0;
          for (Eigen::Index i = 0; i < n; ++i)
            acc += c(i, k) * qg.comult.map(p * n + q, i);
          lhs2((k * n + p) * n + q) = acc;
        }
    Vector rhs2 = Vector::Zero(n * n * n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        const Vector prod = da.multiply(Vector(c.row(i).transpose()),
                                        Vector(c.row(j).transpose()));
        for (Eigen::Index m = 0; m < n; ++m)
          if (prod(m) != Complex(0.0))
            rhs2((m * n + i) * n + j) += prod(m);
      }
    flip_res = std::max(flip_res, max_norm(Vector(lhs2 - rhs2)));
    report.check("bidual.flip-universal",
                 "flip(X) is the universal corepresentation of the dual",
                 flip_res);
  }
  return report;
}

VerificationReport verify_fourier(const QuantumGroup& qg,
                                  const DualQuantumGroup& dual, double tol,
                                  unsigned seed, int samples) {
  VerificationReport report(tol);
  const auto& a = qg.algebra;
  const auto& da = dual.qg.algebra;
  const auto n = a.dim();
  RandomElements rng(seed);

  double round_trip = 0.0;
  double plancherel = 0.0;
  double convolution = 0.0;
  for (int trial = 0; trial < samples; ++trial) {
    const Vector ca = rng.vector(n);
    const Vector cb = rng.vector(n);
    round_trip =
        std::max(round_trip, max_norm(Vector(fourier_inv(dual, fourier(dual, ca)) - ca)));

    // psi^(a^* a^) = phi(a* a).
    const Vector a_hat = fourier(dual, ca);
    const Complex lhs =
        dual.psi_hat(da.multiply(da.involute(a_hat), a_hat));
    const Complex rhs = qg.haar.phi(a.multiply(a.involute(ca), ca));
    plancherel = std::max(plancherel, std::abs(lhs - rhs));

    // Product in the dual is the convolution forced by the pairing.
    const Vector prod = da.multiply(fourier(dual, ca), fourier(dual, cb));
    double conv = 0.0;
    LinearFunctional fa{dual.to_covector(fourier(dual, ca))};
    LinearFunctional fb{dual.to_covector(fourier(dual, cb))};
    for (Eigen::Index k = 0; k < n; ++k) {
      const Complex direct =
          pair_functional(fa, fb, qg.comult.map.col(k), n, n);
      conv = std::max(conv,
                      std::abs(dual.evaluate(prod, a.basis_vector(k)) - direct));
    }
    convolution = std::max(convolution, conv);
  }
  report.check("dual.fourier-bijective", "a -> a phi is a bijection",
               round_trip);
  if (qg.haar.positive)
    report.check("dual.plancherel", "psi^(a^* a^) = phi(a* a)", plancherel);
  else
    report.skip("dual.plancherel",
                "holds for positive Haar functionals; the integral here is "
                "not positive");
  report.check("dual.convolution", "(ab)^ = convolution product in the dual",
               convolution);

  // psi^(a^) = eps(a) on the basis (definition).
  double psi_def = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    psi_def = std::max(
        psi_def, std::abs(dual.psi_hat(fourier(dual, a.basis_vector(i))) -
                          qg.hopf.counit(a.basis_vector(i))));
  report.check("dual.psi-defining", "psi^(a^) = eps(a)", psi_def);
  return report;
}

}  // namespace aqg
