#include "aqg/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace aqg {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ok: return "OK";
    case ErrorCode::check_failed: return "CHECK_FAILED";
    case ErrorCode::parse_error: return "PARSE_ERROR";
    case ErrorCode::schema_error: return "SCHEMA_ERROR";
    case ErrorCode::axiom_rejected: return "REJECTED_AXIOM";
    case ErrorCode::no_counit: return "NO_COUNIT";
    case ErrorCode::non_unique_counit: return "NON_UNIQUE";
    case ErrorCode::no_antipode: return "NO_ANTIPODE";
    case ErrorCode::singular_antipode: return "SINGULAR_ANTIPODE";
    case ErrorCode::no_haar: return "NO_HAAR";
    case ErrorCode::non_unique_haar: return "NON_UNIQUE_HAAR";
    case ErrorCode::not_faithful: return "NOT_FAITHFUL";
    case ErrorCode::positivity_required: return "POSITIVITY_REQUIRED";
    case ErrorCode::inconsistent_delta: return "INCONSISTENT_DELTA";
    case ErrorCode::singular_system: return "SINGULAR_SYSTEM";
    case ErrorCode::not_intertwining: return "NOT_INTERTWINING";
    case ErrorCode::not_relatively_invariant: return "NOT_RELATIVELY_INVARIANT";
    case ErrorCode::not_group_like: return "NOT_GROUP_LIKE";
    case ErrorCode::not_corep: return "NOT_COREP";
    case ErrorCode::not_star_hom: return "NOT_STAR_HOM";
    case ErrorCode::singular_pairing: return "SINGULAR_PAIRING";
    case ErrorCode::not_a_group: return "NOT_A_GROUP";
    case ErrorCode::algebra_mismatch: return "ALGEBRA_MISMATCH";
  }
  return "UNKNOWN";
}

bool VerificationReport::check(const std::string& id, const std::string& ref,
                               double residual) {
  return check(id, ref, residual, tol_);
}

bool VerificationReport::check(const std::string& id, const std::string& ref,
                               double residual, double tolerance) {
  ReportEntry e{id, ref, residual, tolerance, residual < tolerance};
  entries_.push_back(e);
  return e.pass;
}

bool VerificationReport::check_flag(const std::string& id,
                                    const std::string& ref, bool ok) {
  entries_.push_back({id, ref, ok ? 0.0 : 1.0, tol_, ok});
  return ok;
}

void VerificationReport::skip(const std::string& id,
                              const std::string& reason) {
  skipped_.push_back({id, reason});
}

void VerificationReport::merge(const VerificationReport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  skipped_.insert(skipped_.end(), other.skipped_.begin(), other.skipped_.end());
}

bool VerificationReport::all_passed() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const ReportEntry& e) { return e.pass; });
}

double VerificationReport::max_residual() const {
  double r = 0.0;
  for (const auto& e : entries_) r = std::max(r, e.residual);
  return r;
}

const ReportEntry* VerificationReport::find(const std::string& id) const {
  for (const auto& e : entries_)
    if (e.id == id) return &e;
  return nullptr;
}

std::optional<ReportEntry> VerificationReport::first_failure() const {
  for (const auto& e : entries_)
    if (!e.pass) return e;
  return std::nullopt;
}

std::string VerificationReport::to_json(const std::string& subject) const {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["tool_version"] = "0.1.0";
  j["subject"] = subject;
  j["tolerance"] = tol_;
  j["norm"] = norm_;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : entries_) {
    arr.push_back({{"id", e.id},
                   {"ref", e.ref},
                   {"residual", e.residual},
                   {"tolerance", e.tolerance},
                   {"pass", e.pass}});
  }
  j["entries"] = arr;
  auto sk = nlohmann::ordered_json::array();
  for (const auto& s : skipped_) sk.push_back({{"id", s.id}, {"reason", s.reason}});
  j["skipped"] = sk;
  std::size_t passed = 0;
  for (const auto& e : entries_) passed += e.pass ? 1 : 0;
  j["summary"] = {{"total", entries_.size()},
                  {"passed", passed},
                  {"failed", entries_.size() - passed},
                  {"skipped", skipped_.size()}};
  return j.dump(2);
}

std::string VerificationReport::to_text(const std::string& subject) const {
  std::ostringstream os;
  os << "== " << subject << " (tol " << tol_ << ", norm " << norm_ << ") ==\n";
  for (const auto& e : entries_) {
    os << (e.pass ? "  pass  " : "  FAIL  ") << e.id << "  residual "
       << e.residual << "  [" << e.ref << "]\n";
  }
  for (const auto& s : skipped_)
    os << "  skip  " << s.id << "  (" << s.reason << ")\n";
  std::size_t passed = 0;
  for (const auto& e : entries_) passed += e.pass ? 1 : 0;
  os << "  " << passed << "/" << entries_.size() << " passed, "
     << skipped_.size() << " skipped\n";
  return os.str();
}

const std::vector<ManifestRow>& identity_manifest() {
  static const std::vector<ManifestRow> rows = {
      {"algebra.associativity", "(ab)c = a(bc)"},
      {"algebra.unit", "two-sided multiplicative identity"},
      {"algebra.star-antihom", "(ab)* = b* a*"},
      {"algebra.star-involution", "a** = a"},
      {"comult.homomorphism", "D(ab) = D(a)D(b)"},
      {"comult.unital", "D(1) = 1 (x) 1"},
      {"comult.star", "D(a*) = D(a)*"},
      {"comult.coassociativity", "(D (x) id)D = (id (x) D)D"},
      {"comult.t1-invertible", "a (x) b -> D(a)(b (x) 1) bijective"},
      {"comult.t2-invertible", "a (x) b -> D(a)(1 (x) b) bijective"},
      {"counit.defining", "(eps (x) id)D = (id (x) eps)D = id"},
      {"counit.star-homomorphism", "eps is a *-homomorphism"},
      {"counit.pair", "(eps (x) eps)D = eps"},
      {"counit.antipode-compat", "eps o S = eps"},
      {"antipode.defining-left", "m(S (x) id)(D(a)(1 (x) b)) = eps(a) b"},
      {"antipode.defining-right", "m(id (x) S)((b (x) 1)D(a)) = eps(a) b"},
      {"antipode.antihomomorphism", "S(ab) = S(b)S(a)"},
      {"antipode.invertible", "S has a linear inverse"},
      {"antipode.star-square", "S(S(a*)*) = a"},
      {"antipode.flip-comult", "flip (S (x) S) D = D S"},
      {"haar.left-invariance", "(id (x) phi)D(a) = phi(a) 1"},
      {"haar.unique", "left invariance nullspace is one-dimensional"},
      {"haar.faithful", "Gram matrix of phi is nonsingular"},
      {"haar.right-invariance", "(psi (x) id)D(a) = psi(a) 1 for psi = phi o S"},
      {"modular.kms", "phi(ab) = phi(b rho(a))"},
      {"modular.kms-prime", "psi(ab) = psi(b rho'(a))"},
      {"modular.rho-star", "rho(rho(a*)*) = a"},
      {"modular.rho-antipode", "S rho' = rho S"},
      {"modular.rho-comult", "D rho = (S^2 (x) rho) D"},
      {"modular.rho-prime-comult", "D rho' = (rho' (x) S^-2) D"},
      {"modular.s2-commutes-rho", "S^2 commutes with rho and rho'"},
      {"modular.delta-defining", "(phi (x) id)(D(a)(1 (x) b)) = phi(a) delta b"},
      {"modular.delta-invertible", "delta has an inverse"},
      {"modular.delta-antipode", "S(delta) = delta^-1"},
      {"modular.delta-grouplike", "D(delta) = delta (x) delta"},
      {"modular.delta-counit", "eps(delta) = 1"},
      {"modular.rho-delta", "rho(delta) = rho'(delta) = mu^-1 delta"},
      {"modular.rho-prime-conjugation", "rho'(a) = delta rho(a) delta^-1"},
      {"modular.mu-defining", "phi o S^2 = mu phi"},
      {"modular.mu-modulus", "|mu| = 1"},
      {"invariance.strong-left",
       "(id (x) phi)((1 (x) a)D(b)) = S((id (x) phi)(D(a)(1 (x) b)))"},
      {"invariance.right-delta",
       "(id (x) phi S)(D(a)(b (x) 1)) = (phi S)(a) delta^-1 b"},
      {"invariance.antipode-delta", "phi(S(a)) = phi(a delta) = mu phi(delta a)"},
      {"invariance.s2-conjugation", "phi(S^2(a)) = phi(delta^-1 a delta)"},
      {"gns.positivity", "Gram matrix is positive semidefinite"},
      {"gns.inner-product", "<La, Lb> = phi(b* a)"},
      {"gns.representation", "pi(a) L(b) = L(ab)"},
      {"gns.pi-star", "pi(a*) = pi(a)*"},
      {"gns.pi-injective", "pi is injective"},
      {"gns.T-action", "T L(a) = L(a*)"},
      {"gns.nabla-rho", "nabla^k L(a) = L(rho^k(a)), k in {-2,-1,1,2}"},
      {"gns.nabla-polar", "nabla = T* T, T = J nabla^(1/2)"},
      {"gns.J-involution", "J is an antiunitary involution"},
      {"fundamental.defining", "W (L (x) L)(D(b)(a (x) 1)) = L(a) (x) L(b)"},
      {"fundamental.defining-replay", "defining relation on random pairs"},
      {"fundamental.unitary", "W* W = W W* = 1"},
      {"fundamental.pentagon", "W12 W13 W23 = W23 W12"},
      {"fundamental.comult-implementation", "W*(1 (x) pi(a))W = (pi (x) pi)D(a)"},
      {"fundamental.slice-phi",
       "pi((id (x) phi)(D(b*)(1 (x) a))) = (id (x) om_{La,Lb})(W)"},
      {"fundamental.slice-dual",
       "(om_{L^(th),L^(et)} (x) id)(W) = pi^((psi^ (x) id)((et* (x) 1)D^(th)))"},
      {"fundamental.slice-span", "slices of W span pi(A)"},
      {"fundamental.dual-comult-match", "W(x (x) 1)W* realizes the dual comultiplication"},
      {"fundamental.dual-comult-coassoc", "dual comultiplication is coassociative"},
      {"fundamental.conjugation-symmetry", "(J^ (x) J) W* (J^ (x) J) = W"},
      {"fundamental.multiplier-compat", "W (pi (x) pi^)(x) = (pi (x) pi^)(X x)"},
      {"dual.pairing-nonsingular", "pairing <e_i phi, e_j> is nonsingular"},
      {"dual.counit-evaluation", "eps^(om) = om(1)"},
      {"dual.antipode-compose", "S^(om) = om o S"},
      {"dual.psi-defining", "psi^(a^) = eps(a)"},
      {"dual.psi-right-invariant", "psi^ is right invariant on the dual"},
      {"dual.gns-compat", "<L^(om1), L^(om2)> = psi^(om2* om1)"},
      {"dual.fourier-bijective", "a -> a phi is a bijection"},
      {"dual.plancherel", "psi^(a^* a^) = phi(a* a)"},
      {"dual.convolution", "(ab)^ = convolution product in the dual"},
      {"corep.x-left", "(D (x) id)(X) = X13 X23"},
      {"corep.x-right", "(id (x) D^)(X) = X12 X13"},
      {"corep.x-counit-slice", "(eps (x) id)(X) = unit of the dual"},
      {"corep.x-invertible", "X is invertible (unitary in the positive case)"},
      {"bidual.iso-algebra", "a -> ev_a is an algebra isomorphism onto the bidual"},
      {"bidual.iso-star", "ev preserves the involution"},
      {"bidual.iso-unit", "ev(1) is the bidual unit"},
      {"bidual.intertwine", "ev intertwines the comultiplications"},
      {"bidual.flip-universal", "flip(X) is the universal corepresentation of the dual"},
      {"universal.norm-registry", "every registered representation is bounded by |.|_u"},
      {"universal.pi-injective", "the bridge pi: A_u -> A_r has trivial kernel"},
      {"universal.norms-agree", "|pi_u(a)| = |pi_r(a)|"},
      {"universal.delta-u", "Delta_u extends the comultiplication"},
      {"universal.epsilon-u-counit", "(eps_u (x) id)Delta_u = (id (x) eps_u)Delta_u = id"},
      {"V.defining", "V (pi_u (x) L)(D(b)(a (x) 1)) = pi_u(a) (x) L(b)"},
      {"V.unitary", "V is unitary"},
      {"V.lift-W", "(pi (x) id)(V) = W"},
      {"V.slice", "(id (x) om_{La,Lb})(V) = pi_u((id (x) phi)(D(b*)(1 (x) a)))"},
      {"V.corep-left", "(Delta_u (x) id)(V) = V13 V23"},
      {"V.corep-right", "(id (x) D^_r)(V) = V12 V13"},
      {"V.implement-comult", "(id (x) pi)Delta_u(a) = V*(1 (x) pi(a))V"},
      {"V.adjoint-slice",
       "(id (x) om_{p,q})(V*) = (id (x) om_{J nab^-1/2 q, J nab^1/2 p})(V)"},
      {"U.unitary", "U is unitary"},
      {"U.corep-left", "(Delta (x) id)(U) = U13 U23"},
      {"U.corep-right", "(id (x) Delta^)(U) = U12 U13"},
      {"U.slice-left", "(om'_{La,Lb} (x) id)(U) = pi^_u(a phi b*)"},
      {"U.slice-right", "(id (x) om^'_{La,Lb})(U) = pi_u((id (x) phi)(D(b*)(1 (x) a)))"},
      {"U.lift-W", "(pi (x) pi^)(U) = W"},
      {"U.span-rank", "slices of U span an n-dimensional space"},
      {"bijection.corep-to-hom", "om -> (om (x) id)(corep) is a *-homomorphism"},
      {"bijection.hom-to-corep", "(id (x) th)(U) is a corepresentation"},
      {"bijection.roundtrip", "both compositions are the identity"},
      {"bijection.b-algebra-closure", "the slice space is a sub-*-algebra"},
      {"lift.projection", "(pi (x) id)(corep_u) = corep"},
      {"lift.formula", "(corep_u)13 = V12* corep23 V12 corep23*"},
      {"auto.intertwine", "(alpha (x) beta) D = D alpha"},
      {"auto.beta-comult", "(beta (x) beta) D = D beta"},
      {"auto.relative-invariance", "phi o alpha = r phi = phi o beta"},
      {"auto.unitary-u-v", "u, v are unitary"},
      {"auto.commutation-uv", "W(u (x) v) = (u (x) u)W"},
      {"auto.commutation-vv", "W(v (x) v) = (v (x) v)W"},
      {"auto.modular-commutation", "u, v commute with J and nabla"},
      {"auto.lift-slice", "(alpha_u (x) id)(V) = (1 (x) u*) V (1 (x) v)"},
      {"auto.projection", "pi o alpha_u = alpha"},
      {"auto.roundtrip", "(alpha_u)_r = alpha and (alpha_r)_u = alpha"},
      {"auto.unique", "alpha_u is determined by its projection"},
      {"oneparam.nabla-positive", "nabla is positive and nonsingular"},
      {"oneparam.P-action", "P^k L(a) = L(delta^-k S^-2k(a) delta^k)"},
      {"oneparam.Q-action", "Q^k L(a) = nu^(ki/2) L(S^2k(a))"},
      {"oneparam.nu", "phi o tau_t = nu^t phi"},
      {"oneparam.nu-collapse", "nu = 1 in the positive case"},
      {"oneparam.W-bicovariance", "(nab^it (x) nab^it) W = W (nab^it (x) P^it)"},
      {"oneparam.sigma-K-intertwine", "(sig_t (x) K_t) D = D sig_t"},
      {"oneparam.tau-sigma-intertwine", "(tau_t (x) sig_t) D = D sig_t"},
      {"oneparam.tau-comult", "(tau_t (x) tau_t) D = D tau_t"},
      {"oneparam.sigma-prime-intertwine", "(sig'_t (x) tau_-t) D = D sig'_t"},
      {"oneparam.sigma-analytic", "sig_i(pi_u(a)) = pi_u(rho^-1(a))"},
      {"oneparam.tau-analytic", "tau_i(pi_u(a)) = pi_u(S^-2(a))"},
      {"polar.R-involution", "R^2 = id"},
      {"polar.R-star", "R(a*) = R(a)*"},
      {"polar.R-antimultiplicative", "R(ab) = R(b)R(a)"},
      {"polar.R-comult", "flip (R (x) R) D = D R"},
      {"polar.R-tau-commute", "R tau_t = tau_t R"},
      {"polar.decomposition", "R(tau_{-i/2}(a)) = S(a)"},
      {"polar.psi-right-invariant", "phi o R is right invariant"},
      {"grouplike.comult", "D(v) = v (x) v"},
      {"grouplike.unitary", "v is unitary"},
      {"grouplike.lambda", "sig_t(v) = lambda^it v"},
      {"grouplike.tau-fixed", "tau_t(v) = v"},
      {"grouplike.R-star", "R(v) = v*"},
      {"modelem.pi-delta", "the lifted modular element projects onto delta"},
      {"modelem.tau-fixed", "tau_t(delta) = delta"},
      {"modelem.R-inverse", "R(delta) = delta^-1"},
      {"modelem.sigma-scaling", "sig_t(delta) = nu^-t delta"},
      {"modelem.radon-nikodym", "psi(a) = phi(delta^(1/2) a delta^(1/2))"},
      {"modelem.powers", "delta^z pi_u(a) = pi_u(delta^z a), z in {i,-i,1/2}"},
      {"modelem.slice", "(phi (x) id)D(y) = phi(y) delta"},
      {"modelem.sigma-prime-K",
       "sig'_t = Ad(delta^it) sig_t and K_t = Ad(delta^-it) tau_-t"},
  };
  return rows;
}

}  // namespace aqg
