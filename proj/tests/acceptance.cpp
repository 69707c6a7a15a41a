// Acceptance suite: runs each acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion.  Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "aqg/io.hpp"
#include "aqg/pipeline.hpp"

using namespace aqg;

namespace {

int failures = 0;

void line(int criterion, const std::string& what, bool ok,
          const std::string& detail) {
  std::printf("[%s] criterion %2d: %s — %s\n", ok ? "PASS" : "FAIL", criterion,
              what.c_str(), detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

struct Context {
  AlgebraWithComult input;
  Derived d;
  VerificationReport report{kDefaultTol};
};

}  // namespace

int main() {
  const double tol = 1e-9;
  PipelineOptions opt;
  opt.tol = tol;
  opt.seed = 2024;

  std::map<std::string, Context> ctx;

  // ---- criterion 1: axiom suite on all bundled examples, < 10 s ----------
  const auto t0 = std::chrono::steady_clock::now();
  bool all_pass = true;
  double worst = 0.0;
  std::string worst_name;
  for (const auto& name : bundled_example_names()) {
    Context c;
    c.input = make_bundled_example(name);
    c.report = full_report(c.input, opt, &c.d);
    if (!c.report.all_passed()) {
      all_pass = false;
      if (auto f = c.report.first_failure())
        worst_name = name + ":" + f->id;
    }
    if (c.report.max_residual() > worst) {
      worst = c.report.max_residual();
      worst_name = worst_name.empty() ? name : worst_name;
    }
    ctx.emplace(name, std::move(c));
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  line(1, "axiom suite on all seven bundled examples",
       all_pass && elapsed < 10.0,
       "max residual " + fmt(worst) + ", runtime " + fmt(elapsed) + " s" +
           (all_pass ? "" : " (first failure " + worst_name + ")"));

  // ---- criterion 2: pentagon incl. 512-dim check and negative control ----
  {
    bool ok = true;
    double worst_p = 0.0;
    for (const auto& name : {"kac_paljutkin", "group_z2", "group_z4",
                             "group_s3", "functions_z2", "functions_s3"}) {
      const auto& c = ctx.at(name);
      auto rep = verify_pentagon(*c.d.w, tol);
      ok = ok && rep.all_passed();
      worst_p = std::max(worst_p, rep.max_residual());
    }
    BigUnitary perturbed = *ctx.at("kac_paljutkin").d.w;
    perturbed.matrix(0, 0) += 1e-3;
    auto neg = verify_pentagon(perturbed, tol);
    const bool neg_ok = !neg.all_passed() && neg.max_residual() > 1e-4;
    line(2, "pentagon equation incl. 512-dimensional check", ok && neg_ok,
         "max residual " + fmt(worst_p) + ", perturbed control residual " +
             fmt(neg.max_residual()) + (neg_ok ? " (FAILs as required)" : ""));
  }

  // ---- criterion 3: plancherel on positive examples ----------------------
  {
    bool ok = true;
    double worst_p = 0.0;
    for (const auto& name : bundled_example_names()) {
      const auto& c = ctx.at(name);
      if (!c.d.qg.haar.positive) continue;
      auto rep = verify_fourier(c.d.qg, *c.d.dual, tol, opt.seed, 100);
      const auto* e = rep.find("dual.plancherel");
      ok = ok && e && e->pass;
      if (e) worst_p = std::max(worst_p, e->residual);
    }
    line(3, "plancherel over 100 seeded random elements", ok,
         "max residual " + fmt(worst_p));
  }

  // ---- criterion 4: nontrivial modular branch on sweedler ----------------
  {
    const auto& c = ctx.at("sweedler");
    auto rep = run_identity_suite(c.d.qg, tol);
    const auto n = c.d.qg.dim();
    const bool delta_nontrivial =
        max_norm(Vector(c.d.qg.modular.delta - c.d.qg.algebra.unit())) > 0.5;
    const bool rho_nontrivial =
        max_norm(Matrix(c.d.qg.modular.rho.matrix - eye(n))) > 0.5;
    line(4, "strong left invariance and modular identities on sweedler",
         rep.all_passed() && delta_nontrivial && rho_nontrivial,
         "max residual " + fmt(rep.max_residual()) +
             ", delta != 1: " + (delta_nontrivial ? "yes" : "no") +
             ", rho != id: " + (rho_nontrivial ? "yes" : "no"));
  }

  // ---- criterion 5: biduality for every bundled example ------------------
  {
    bool ok = true;
    double worst_b = 0.0;
    for (const auto& name : bundled_example_names()) {
      auto rep = verify_biduality(ctx.at(name).d.qg, tol);
      ok = ok && rep.all_passed();
      worst_b = std::max(worst_b, rep.max_residual());
    }
    line(5, "biduality isomorphism on every bundled example", ok,
         "max residual " + fmt(worst_b));
  }

  // ---- criterion 6: corepresentation <-> homomorphism bijection ----------
  {
    const auto& c = ctx.at("group_z2");
    const auto& qg = c.d.qg;
    const auto& gns = *c.d.gns;
    const auto& w = *c.d.w;
    const auto& dual = *c.d.dual;
    double worst_r = 0.0;
    bool ok = true;
    auto round_trip = [&](const Corepresentation& u) {
      try {
        auto theta = corep_to_hom(gns, w, dual, u, tol);
        auto back = hom_to_corep(qg, gns, dual, theta, tol);
        worst_r = std::max(worst_r, max_norm(Matrix(back.matrix - u.matrix)));
        auto theta2 = corep_to_hom(gns, w, dual, back, tol);
        for (std::size_t i = 0; i < theta.size(); ++i)
          worst_r =
              std::max(worst_r, max_norm(Matrix(theta2[i] - theta[i])));
        return u;
      } catch (const AqgError&) {
        ok = false;
        return u;
      }
    };
    const auto n = qg.dim();
    round_trip(Corepresentation{n, n, c.d.u->matrix, CorepSide::universal});
    round_trip(Corepresentation{n, 1, eye(n), CorepSide::reduced});
    Matrix p_plus(2, 2), p_minus(2, 2);
    p_plus << 0.5, 0.5, 0.5, 0.5;
    p_minus << 0.5, -0.5, -0.5, 0.5;
    Corepresentation chars{
        2, 2, Matrix(kron(gns.pi[0], p_plus) + kron(gns.pi[1], p_minus)),
        CorepSide::reduced};
    round_trip(chars);

    VerificationReport lift_rep(tol);
    for (const auto* u : {&chars}) {
      lift_corep(gns, w, *c.d.v, *u, tol, &lift_rep);
    }
    Corepresentation w_corep{n, n, w.matrix, CorepSide::reduced};
    lift_corep(gns, w, *c.d.v, w_corep, tol, &lift_rep);
    ok = ok && lift_rep.all_passed();
    line(6, "corepresentation <-> *-homomorphism bijection and lifting",
         ok && worst_r < tol,
         "max round-trip residual " + fmt(worst_r) + ", lift residual " +
             fmt(lift_rep.max_residual()));
  }

  // ---- criterion 7: polar decomposition on every positive example --------
  {
    bool ok = true;
    double worst_p = 0.0;
    for (const auto& name : bundled_example_names()) {
      const auto& c = ctx.at(name);
      if (!c.d.qg.haar.positive) continue;
      VerificationReport rep(tol);
      build_polar(c.d.qg, *c.d.gns, *c.d.dual_gns, *c.d.one_param, tol, &rep);
      for (const char* id :
           {"polar.decomposition", "polar.R-involution", "polar.R-comult"}) {
        const auto* e = rep.find(id);
        ok = ok && e && e->pass;
        if (e) worst_p = std::max(worst_p, e->residual);
      }
    }
    line(7, "polar decomposition of the antipode", ok,
         "max residual " + fmt(worst_p));
  }

  // ---- criterion 8: Z4 inversion automorphism lifting --------------------
  {
    const auto& c = ctx.at("group_z4");
    Matrix alpha = Matrix::Zero(4, 4);
    alpha(0, 0) = 1.0;
    alpha(3, 1) = 1.0;
    alpha(2, 2) = 1.0;
    alpha(1, 3) = 1.0;
    VerificationReport rep(tol);
    bool ok = true;
    double r_err = 1.0;
    try {
      auto pair = analyze_automorphism_pair(c.d.qg, *c.d.gns, *c.d.w, *c.d.v,
                                            alpha, alpha, tol, &rep);
      r_err = std::abs(pair.r - 1.0);
    } catch (const AqgError&) {
      ok = false;
    }
    ok = ok && rep.all_passed() && r_err < 1e-12;
    const auto* comm = rep.find("auto.commutation-uv");
    const auto* proj = rep.find("auto.projection");
    const auto* round = rep.find("auto.roundtrip");
    ok = ok && comm && comm->residual < 1e-9 && proj && round;
    line(8, "Z4 inversion automorphism lifting", ok,
         "|r - 1| = " + fmt(r_err) + ", commutation residual " +
             fmt(comm ? comm->residual : 1.0) + ", round-trip residual " +
             fmt(round ? round->residual : 1.0));
  }

  // ---- criterion 9: universal = reduced at finite dimension --------------
  {
    bool ok = true;
    double worst_n = 0.0;
    for (const auto& name : bundled_example_names()) {
      const auto& c = ctx.at(name);
      if (!c.d.qg.haar.positive) continue;
      VerificationReport rep(tol);
      build_universal(c.d.qg, *c.d.gns, tol, opt.seed, &rep);
      for (const char* id : {"universal.pi-injective", "universal.norms-agree",
                             "universal.norm-registry"}) {
        const auto* e = rep.find(id);
        ok = ok && e && e->pass;
        if (e) worst_n = std::max(worst_n, e->residual);
      }
    }
    line(9, "universal equals reduced: kernel, norms, registry bounds", ok,
         "max residual " + fmt(worst_n));
  }

  // ---- criterion 10: modular element suite --------------------------------
  {
    bool ok = true;
    double worst_m = 0.0;
    for (const auto& name : bundled_example_names()) {
      const auto& c = ctx.at(name);
      if (!c.d.qg.haar.positive) continue;
      // delta = 1 is a computed outcome of the defining relation
      ok = ok && max_norm(Vector(c.d.qg.modular.delta -
                                 c.d.qg.algebra.unit())) < tol;
      auto rep = modular_element_suite(c.d.qg, &*c.d.gns, &*c.d.one_param,
                                       &*c.d.polar, tol);
      ok = ok && rep.all_passed();
      worst_m = std::max(worst_m, rep.max_residual());
    }
    const auto& sw = ctx.at("sweedler");
    auto rep = modular_element_suite(sw.d.qg, nullptr, nullptr, nullptr, tol);
    ok = ok && rep.all_passed();
    ok = ok && max_norm(Vector(sw.d.qg.modular.delta -
                               sw.d.qg.algebra.basis_vector(1))) < tol;
    ok = ok && std::abs(sw.d.qg.modular.mu - Complex(-1.0)) < tol;
    worst_m = std::max(worst_m, rep.max_residual());
    line(10, "modular element suite (positive collapse and sweedler branch)",
         ok, "max residual " + fmt(worst_m) + ", sweedler mu = -1 and delta = g");
  }

  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "OK" : "FAILED",
              failures);
  return failures == 0 ? 0 : 1;
}
