#include "mhol/commands.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "mhol/holomorph_oracle.hpp"

namespace mhol {

namespace {

Json form_to_json(const BilinearForm& f) {
  const std::size_t n = f.spec().n();
  Json t = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(f.at(i, j));
    t.push_back(std::move(row));
  }
  return Json{{"kind", "tensor"}, {"T", t}};
}

// Verifies w and fills the shared part of a verify report. `t` is I + 2 sigma
// for the anti-symmetric part of the target form.
CommandResult finish_verify(const GroupSpec& spec, IsoWitness w, const FpMatrix& t, const std::string& kind,
                            const RunOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  verify_witness(w, opt.pairs, rng);
  const ResPair res = induced_res(w);
  const FpMatrix expected = wedge_matrix(spec, res.alpha) * t;
  const PresentationCheck pres = circle_presentation_matrix(spec, t);

  CommandResult out;
  Json& r = out.report;
  r["command"] = "verify";
  r["witness"] = kind;
  r["spec"] = spec_to_json(spec);
  r["pair_order"] = spec.pair_order();
  r["form"] = form_to_json(w.form);
  r["verified"] = w.verified;
  r["exhaustive"] = w.exhaustive;
  r["pairs_checked"] = w.pairs_checked;
  r["res"] = Json{{"alpha", matrix_to_json(res.alpha)}, {"beta", matrix_to_json(res.beta)}};
  r["T"] = matrix_to_json(t);
  r["res_beta_equals_wedgeA_T"] = res.beta == expected;
  r["D_circ"] = matrix_to_json(pres.d_circ);
  r["presentation_relations_hold"] = pres.relations_hold;

  const bool ok = w.verified && res.beta == expected && pres.relations_hold;
  out.exit_code = ok ? 0 : 1;
  std::ostringstream os;
  os << "witness      " << kind << "\n";
  os << "verified     " << (w.verified ? "yes" : "NO") << " (" << w.pairs_checked << " pairs, "
     << (w.exhaustive ? "exhaustive" : "sampled") << ")\n";
  os << "res alpha    " << res.alpha.to_string() << "\n";
  os << "res beta     " << res.beta.to_string() << (res.beta == expected ? "  = wedge(A) T" : "  != wedge(A) T") << "\n";
  os << "D_circ       " << pres.d_circ.to_string() << (pres.relations_hold ? "" : "  (relations FAIL)") << "\n";
  out.text = os.str();
  return out;
}

FpMatrix tau_of(const BilinearForm& form) { return antisym_to_sigma(sym_antisym_split(form).antisymmetric).tau; }

}  // namespace

AnalysisReport analyze(const GroupSpec& spec, const RunOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.p = spec.p();
  r.n = spec.n();
  r.m = spec.m();
  r.d = spec.d();
  r.pair_order = spec.pair_order();
  r.rank_d = rank(spec.d());
  r.omega1_in_derived = omega1_in_derived(spec);
  r.sym_part_order = sym_part_order(spec);

  std::mt19937_64 rng(opt.seed);
  const StabilizerResult stab = induced_aut_stabilizer(spec, opt.budget, rng);
  r.stabilizer_found = stab.members.size();
  r.stabilizer_scanned = stab.scanned;
  r.stabilizer_exhaustive = stab.exhaustive;
  if (stab.members.size() > 1) r.stabilizer = StabilizerStatus::Nontrivial;
  else if (stab.certifies_trivial()) r.stabilizer = StabilizerStatus::Trivial;
  else r.stabilizer = StabilizerStatus::Unknown;

  if (r.omega1_in_derived) {
    r.res_group_order = res_group_order(spec);
    const TGOrder tg = tg_order(spec, stab.certifies_trivial());
    r.tg_order = tg.value;
    r.tg_unconditional = tg.unconditional;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

CommandResult cmd_analyze(const GroupSpec& spec, const RunOptions& opt) {
  const AnalysisReport r = analyze(spec, opt);
  return {to_json(r), to_text(r), 0};
}

CommandResult cmd_verify_power(const GroupSpec& spec, std::int64_t c, const RunOptions& opt) {
  IsoWitness w = theta_d(spec, c);
  CommandResult out = finish_verify(spec, w, tau_of(w.form), "theta_d", opt);
  out.report["c"] = c;
  out.report["d"] = theta_exponent(spec, c);
  return out;
}

CommandResult cmd_verify_form(const GroupSpec& spec, const BilinearForm& form, const RunOptions& opt) {
  const FormSplit parts = sym_antisym_split(form);
  const FpMatrix t = antisym_to_sigma(parts.antisymmetric).tau;
  if (!is_invertible(t))
    throw Error(ErrorKind::CriterionFails, "I + 2 sigma is singular, so (G, o) is not isomorphic to G");
  IsoWitness sym = sym_isomorphism(spec, parts.symmetric);
  if (parts.antisymmetric.is_zero()) return finish_verify(spec, sym, t, "sym_isomorphism", opt);

  // Find A with A^-1 D wedge(A) = D T^-1.
  if (gl_order(static_cast<unsigned>(spec.n()), spec.p()) > 10'000'000)
    throw Error(ErrorKind::BoundExceeded, "GL_n too large to search for A; use --criterion A.json T.json");
  std::optional<FpMatrix> found;
  for_each_invertible(spec.field(), spec.n(), [&](const FpMatrix& a) {
    if (!criterion_holds(spec, a, t)) return true;
    found = a;
    return false;
  });
  if (!found) throw Error(ErrorKind::CriterionFails, "no A in GL_n satisfies the criterion for this sigma");
  IsoWitness anti = build_isomorphism(spec, {*found, t});
  IsoWitness w = parts.symmetric.is_zero() ? anti : compose_witnesses(anti, sym);
  CommandResult out = finish_verify(spec, w, t, parts.symmetric.is_zero() ? "build_isomorphism" : "composite", opt);
  out.report["A"] = matrix_to_json(*found);
  out.report["form_matches_input"] = w.form == form;
  if (!(w.form == form)) out.exit_code = 1;
  return out;
}

CommandResult cmd_verify_criterion(const GroupSpec& spec, const FpMatrix& a, const FpMatrix& t, const RunOptions& opt) {
  if (a.rows() != spec.n() || a.cols() != spec.n())
    throw Error(ErrorKind::DimensionMismatch, "A: expected " + std::to_string(spec.n()) + "x" + std::to_string(spec.n()));
  if (t.rows() != spec.m() || t.cols() != spec.m())
    throw Error(ErrorKind::DimensionMismatch, "T: expected " + std::to_string(spec.m()) + "x" + std::to_string(spec.m()));
  IsoWitness w = build_isomorphism(spec, {a, t});
  CommandResult out = finish_verify(spec, w, t, "build_isomorphism", opt);
  out.report["A"] = matrix_to_json(a);
  const bool res_alpha_ok = induced_res(w).alpha == a;
  out.report["res_alpha_equals_A"] = res_alpha_ok;
  if (!res_alpha_ok) out.exit_code = 1;
  return out;
}

CommandResult cmd_oracle(const GroupSpec& spec, const RunOptions& opt, bool corrupt) {
  const CayleyTable g(spec);
  CommandResult out;
  Json& r = out.report;
  r["command"] = "oracle";
  r["spec"] = spec_to_json(spec);
  r["pair_order"] = spec.pair_order();
  std::ostringstream os;

  const CorrespondenceReport cc = cross_check_correspondence(g);
  r["correspondence"] = Json{{"forms_scanned", cc.forms_scanned},
                             {"equivariant_forms", cc.equivariant_forms},
                             {"forms_with_valid_subgroup", cc.forms_with_valid_subgroup},
                             {"distinct_form_subgroups", cc.distinct_form_subgroups},
                             {"candidates_scanned", cc.candidates_scanned},
                             {"subgroups_found", cc.subgroups_found},
                             {"aut_order", cc.aut_order},
                             {"aut_cz_order", cc.aut_cz_order},
                             {"hol_order", cc.hol_order},
                             {"bijection", cc.bijection},
                             {"failures", cc.failures}};
  bool ok = cc.bijection;
  os << "|Aut(G)| = " << cc.aut_order << ", |Aut_c cap Aut_z| = " << cc.aut_cz_order << ", |Hol(G)| = " << cc.hol_order
     << "\n";
  os << "forms: " << cc.forms_scanned << " scanned, " << cc.equivariant_forms << " equivariant, "
     << cc.distinct_form_subgroups << " distinct subgroups\n";
  os << "subgroups: " << cc.candidates_scanned << " candidates, " << cc.subgroups_found << " normal regular\n";
  os << "bijection: " << (cc.bijection ? "yes" : "NO") << "\n";
  for (const auto& f : cc.failures) os << "  failure: " << f << "\n";

  // Conjugation checks for every theta_d and a few symmetric witnesses.
  Json conj = Json::array();
  std::mt19937_64 rng(opt.seed);
  auto record = [&](const std::string& name, const IsoWitness& w) {
    const bool c = conjugation_check(w, g);
    conj.push_back(Json{{"witness", name}, {"holds", c}});
    ok = ok && c;
    os << "conjugation " << name << ": " << (c ? "ok" : "FAIL") << "\n";
  };
  for (std::uint32_t c = 0; c < spec.p(); ++c) {
    if ((2 * c + 1) % spec.p() == 0) continue;
    record("theta_d c=" + std::to_string(c), theta_d(spec, c));
  }
  std::uniform_int_distribution<Residue> dist(0, spec.p() - 1);
  for (int k = 0; k < 3; ++k) {
    std::vector<FpVec> t(spec.n() * spec.n(), FpVec(spec.m()));
    for (auto& v : t)
      for (auto& x : v) x = dist(rng);
    const BilinearForm s = sym_antisym_split(BilinearForm(spec, t)).symmetric;
    record("sym #" + std::to_string(k), sym_isomorphism(spec, s));
  }
  r["conjugation"] = conj;

  if (corrupt) {
    // Tamper one value of the zero form and one image of the identity map.
    const Holomorph hol = build_holomorph(g);
    const PermGroupSmall aut_cz = filter_aut_c_z(hol.automorphisms(), g);
    const FormTable zero(BilinearForm(spec), g.indexer());
    const std::uint32_t u = 1, v = std::min<std::uint32_t>(2, g.indexer().quotient_order() - 1);
    const FormTable bad = zero.with_entry(u, v, 1);
    const SubgroupReport sub = subgroup_from_form(g, bad, hol, aut_cz);
    std::vector<std::string> failed;
    if (!sub.is_regular) failed.push_back("regular");
    if (!sub.is_subgroup) failed.push_back("subgroup");
    if (!sub.is_normal_in_hol) failed.push_back("normal_in_hol");
    if (!sub.gamma_in_aut_cz) failed.push_back("gamma_in_aut_cz");
    if (!sub.gamma_anti_hom) failed.push_back("gamma_anti_hom");
    if (!sub.equivariant) failed.push_back("equivariant");

    Perm theta = perm_identity(g.order());
    std::swap(theta[1], theta[2]);
    const bool conj_bad = conjugation_check(theta, g, circle_translations(g, zero));
    r["corrupted"] = Json{{"form_entry", Json{{"u", u}, {"v", v}, {"value", 1}}},
                          {"failed_properties", failed},
                          {"swapped_witness_passes_conjugation", conj_bad}};
    os << "corrupted form: Delta(quotient " << u << ", quotient " << v << ") set to derived code 1\n";
    os << "  counterexample fails:";
    for (const auto& f : failed) os << " " << f;
    os << "\n  swapped witness (1 <-> 2) conjugation: " << (conj_bad ? "passes" : "fails") << "\n";
    ok = ok && failed.empty() && conj_bad;
  }
  r["passed"] = ok;
  out.exit_code = ok ? 0 : 1;
  out.text = os.str();
  return out;
}

CommandResult cmd_selftest(const RunOptions& opt) {
  const auto suites = run_selftest(opt);
  CommandResult out;
  Json arr = Json::array();
  std::ostringstream os;
  bool ok = true;
  for (const auto& s : suites) {
    arr.push_back(Json{{"suite", s.name}, {"checks", s.checks}, {"failures", s.failures}, {"first_failure", s.first_failure}});
    os << (s.failures == 0 ? "ok   " : "FAIL ") << s.name << ": " << s.checks << " checks, " << s.failures << " failures";
    if (!s.first_failure.empty()) os << " (" << s.first_failure << ")";
    os << "\n";
    ok = ok && s.failures == 0;
  }
  out.report = Json{{"command", "selftest"},
                    {"seed", opt.seed},
                    {"pairs", opt.pairs},
                    {"exhaustive_small", opt.exhaustive_small},
                    {"suites", arr},
                    {"passed", ok}};
  out.text = os.str();
  out.exit_code = ok ? 0 : 1;
  return out;
}

}  // namespace mhol
