#include "eqwb/verify.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

namespace eqwb {

bool CriterionReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.verified; });
}

namespace {

using Rng = std::mt19937_64;

Rng rng_for(const VerifyOptions& options, int criterion) {
  std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                    static_cast<std::uint32_t>(criterion)};
  return Rng(seq);
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

int trials_or(const VerifyOptions& options, int fallback) { return options.trials > 0 ? options.trials : fallback; }

void append(std::vector<CheckResult>& out, const std::vector<CheckResult>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

CheckResult check(std::string case_name, std::string relation, bool ok, std::string lhs, std::string rhs) {
  return {std::move(case_name), std::move(relation), ok, std::move(lhs), std::move(rhs)};
}

// ---- 1-3: Coulomb branches -------------------------------------------------

CriterionReport coulomb_3d_relations() {
  CriterionReport r{1, "Coulomb 3d relations in the additive shift algebra", {}};
  const CoulombPresentation p = coulomb_3d();
  append(r.checks, verify_relations(p, p.relations, "coulomb-3d"));
  append(r.checks, verify_relations(p, coulomb_3d_commutation_relations(), "coulomb-3d-commutation"));
  append(r.checks, check_involution(p));
  return r;
}

CriterionReport coulomb_4d_relations() {
  CriterionReport r{2, "Coulomb 4d relations in the multiplicative shift algebra", {}};
  const CoulombPresentation p = coulomb_4d();
  append(r.checks, verify_relations(p, p.relations, "coulomb-4d"));
  append(r.checks, verify_relations(p, coulomb_4d_corrected_relations(), "coulomb-4d-corrected"));
  append(r.checks, check_involution(p));
  append(r.checks, classical_limit(p).relations);
  return r;
}

CriterionReport coulomb_3d_classical() {
  CriterionReport r{3, "Classical 3d limit and Poisson brackets", {}};
  const ClassicalLimit limit = classical_limit(coulomb_3d());
  append(r.checks, limit.relations);
  for (const auto& b : limit.brackets) {
    r.checks.push_back(check("coulomb-3d-poisson", "{" + b.left + "," + b.right + "} = " + b.expected, b.verified,
                             b.derived, b.expected));
  }
  r.checks.push_back(check("coulomb-3d-poisson", "cyclic sum {Phi,{U,V}} + {U,{V,Phi}} + {V,{Phi,U}} = 0", limit.jacobi,
                           limit.jacobi ? "0" : "nonzero", "0"));
  return r;
}

// ---- 4: Kostant slice ------------------------------------------------------

CriterionReport kostant() {
  CriterionReport r{4, "Kostant centralizer: Borel entry b", {}};
  struct Case {
    const char* group;
    LawKind law;
    const char* expected;
  };
  const Case cases[] = {{"SL2", LawKind::Additive, "(a - a^-1)/(2*x)"},
                        {"PGL2", LawKind::Additive, "(a - 1)/x"},
                        {"SL2", LawKind::Multiplicative, "(a - a^-1)/(x^2 - 1)"},
                        {"PGL2", LawKind::Multiplicative, "(a - 1)/(x - 1)"}};
  for (const auto& c : cases) {
    const CentralizerSolution s = kostant_centralizer_solve(c.group, c.law);
    const RatFunc want = RatFunc::parse(s.free_params, c.expected);
    const std::string name = std::string("kostant-") + c.group + "-" + to_string(c.law);
    r.checks.push_back(check(name, std::string("b = ") + c.expected, s.constraint == want, s.constraint.to_string(),
                             want.to_string()));
    r.checks.push_back(check(name, "Ad_g(M) - M = 0 at that b", s.annihilates, s.annihilates ? "0" : "nonzero", "0"));
  }
  return r;
}

// ---- 5: GKM ----------------------------------------------------------------

LaurentPoly random_linear(Rng& rng, const VarList& coords) {
  LaurentPoly p = LaurentPoly::constant(coords, uniform(rng, -3, 3));
  for (const auto& v : coords) p += LaurentPoly::variable(coords, v) * Rational(uniform(rng, -2, 2));
  return p;
}

void gkm_checks(CriterionReport& r, const std::string& name, const std::shared_ptr<const MomentGraph>& graph, int trials,
                Rng& rng) {
  const PsiBasis basis(graph);
  const MomentGraph& g = *graph;
  const std::string size = std::to_string(g.size()) + " vertices";

  std::string bad;
  for (std::size_t w = 0; w < basis.size() && bad.empty(); ++w) {
    if (auto e = check_gkm(basis[static_cast<int>(w)])) bad = "psi_" + std::to_string(w) + " fails on edge " + std::to_string(*e);
  }
  r.checks.push_back(check(name, "every psi_w satisfies the edge congruences", bad.empty(), bad.empty() ? size : bad, size));

  bad.clear();
  for (std::size_t w = 0; w < g.size() && bad.empty(); ++w) {
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (!g.leq(static_cast<int>(w), static_cast<int>(v)) && !basis[static_cast<int>(w)].values[v].is_zero()) {
        bad = "psi_" + std::to_string(w) + "(" + std::to_string(v) + ") = " + basis[static_cast<int>(w)].values[v].to_string();
        break;
      }
    }
  }
  r.checks.push_back(check(name, "psi_w(v) = 0 unless w <= v", bad.empty(), bad.empty() ? size : bad, size));

  bad.clear();
  std::string want_text;
  for (std::size_t w = 0; w < g.size() && bad.empty(); ++w) {
    LaurentPoly want = g.one();
    for (const AffineRoot& beta : g.group().inversion_set(g.vertices()[w].element)) want *= g.label(beta);
    const LaurentPoly& got = basis[static_cast<int>(w)].values[w];
    if (!(got - want).is_zero()) {
      bad = "psi_" + std::to_string(w) + "(" + std::to_string(w) + ") = " + got.to_string();
      want_text = want.to_string();
    }
  }
  r.checks.push_back(check(name, "psi_w(w) = product of edge labels over the inversion set of w", bad.empty(),
                           bad.empty() ? size : bad, bad.empty() ? size : want_text));

  bad.clear();
  for (int trial = 0; trial < trials && bad.empty(); ++trial) {
    std::map<int, LaurentPoly> coefficients;
    const int terms = uniform(rng, 1, 4);
    for (int k = 0; k < terms; ++k) {
      LaurentPoly c = random_linear(rng, g.coords());
      if (!c.is_zero()) coefficients[uniform(rng, 0, static_cast<int>(g.size()) - 1)] = c;
    }
    std::map<int, LaurentPoly> back;
    try {
      back = decompose(recombine(coefficients, basis), basis);
    } catch (const std::domain_error& e) {
      bad = std::string("trial ") + std::to_string(trial) + ": " + e.what();
      break;
    }
    for (auto it = back.begin(); it != back.end();) it = it->second.is_zero() ? back.erase(it) : std::next(it);
    bool same = back.size() == coefficients.size();
    for (auto a = back.begin(), b = coefficients.begin(); same && a != back.end(); ++a, ++b) {
      same = a->first == b->first && (a->second - b->second).is_zero();
    }
    if (!same) bad = "trial " + std::to_string(trial) + " differs";
  }
  const std::string runs = std::to_string(trials) + " random combinations";
  r.checks.push_back(check(name, "decompose(recombine(c)) = c", bad.empty(), bad.empty() ? runs : bad, runs));
}

CriterionReport gkm(const VerifyOptions& options) {
  CriterionReport r{5, "GKM: psi_w basis and decomposition", {}};
  Rng rng = rng_for(options, 5);
  const int trials = trials_or(options, 50);
  const RootDatum sl2 = RootDatum::build("SL2", 1);
  const RootDatum a2 = RootDatum::build("A", 2);
  for (const GroupLaw& law : {GroupLaw::additive(), GroupLaw::multiplicative()}) {
    const std::string suffix = "-" + to_string(law.kind());
    gkm_checks(r, "gkm-Gr-SL2" + suffix, std::make_shared<const MomentGraph>(sl2, law, GraphOptions{false, {1}, 5, false}),
               trials, rng);
    gkm_checks(r, "gkm-Fl-SL2" + suffix, std::make_shared<const MomentGraph>(sl2, law, GraphOptions{false, {}, 5, false}),
               trials, rng);
    gkm_checks(r, "gkm-finite-A2" + suffix, std::make_shared<const MomentGraph>(a2, law, GraphOptions{true, {}, 3, false}),
               trials, rng);
  }
  return r;
}

// ---- 6: blowups ------------------------------------------------------------

CriterionReport blowups() {
  CriterionReport r{6, "Fraction identity and rank-1 blowup presentations", {}};
  for (const char* family : {"SL2", "PGL2"}) {
    for (const GroupLaw& law : {GroupLaw::additive(), GroupLaw::multiplicative()}) {
      append(r.checks, blowup_identity_check(RootDatum::build(family, 1), law, 8));
    }
  }
  for (const auto& p : blowup_presentations()) append(r.checks, check_blowup_presentation(p));
  return r;
}

// ---- 7: n-series -----------------------------------------------------------

CriterionReport n_series(const VerifyOptions& options) {
  CriterionReport r{7, "n-series additivity and the multiplicative n-series", {}};
  Rng rng = rng_for(options, 7);
  const int laws = trials_or(options, 20);
  constexpr int kOrder = 8;
  constexpr int kRange = 6;
  for (int k = 0; k < laws; ++k) {
    const GroupLaw law = GroupLaw::random_formal(rng, kOrder);
    std::string bad;
    std::string lhs;
    std::string rhs;
    for (int n = -kRange; n <= kRange && bad.empty(); ++n) {
      for (int m = -kRange; m <= kRange; ++m) {
        const LaurentPoly sum = law.n_series(n + m).to_laurent();
        const LaurentPoly composed = law.add(law.n_series(n).to_laurent(), law.n_series(m).to_laurent());
        if (!(sum - composed).is_zero()) {
          bad = "n=" + std::to_string(n) + ", m=" + std::to_string(m);
          lhs = sum.to_string();
          rhs = composed.to_string();
          break;
        }
      }
    }
    r.checks.push_back(check("n-series-formal-" + std::to_string(k), "[n+m]_F = [n]_F +_F [m]_F mod t^9, |n|,|m| <= 6",
                             bad.empty(), bad.empty() ? "169 pairs" : bad + ": " + lhs, bad.empty() ? "169 pairs" : rhs));
  }
  const GroupLaw mult = GroupLaw::multiplicative();
  const VarList t{"t"};
  for (int n = -kRange; n <= kRange; ++n) {
    const RatFunc got = mult.n_series(n);
    const RatFunc want = RatFunc::parse(t, "(1+t)^" + std::to_string(n) + " - 1");
    r.checks.push_back(check("n-series-multiplicative", "[" + std::to_string(n) + "](t) = (1+t)^" + std::to_string(n) + " - 1",
                             got == want, got.to_string(), want.to_string()));
  }
  std::string bad;
  for (int n = -kRange; n <= kRange && bad.empty(); ++n) {
    for (int m = -kRange; m <= kRange; ++m) {
      const RatFunc a = mult.n_series(n);
      const RatFunc b = mult.n_series(m);
      if (mult.n_series(n + m) != a + b + a * b) {
        bad = "n=" + std::to_string(n) + ", m=" + std::to_string(m);
        break;
      }
    }
  }
  r.checks.push_back(check("n-series-multiplicative", "[n+m](t) = [n](t) + [m](t) + [n](t)[m](t), |n|,|m| <= 6",
                           bad.empty(), bad.empty() ? "169 pairs" : bad, "169 pairs"));
  return r;
}

// ---- 8: F-de Rham ----------------------------------------------------------

CriterionReport de_rham() {
  CriterionReport r{8, "F-de Rham weights", {}};
  constexpr int kMax = 10;
  for (const GroupLaw& law : {GroupLaw::additive(), GroupLaw::multiplicative()}) {
    const DeRhamTable table = f_de_rham(law, kMax);
    const bool additive = law.kind() == LawKind::Additive;
    const std::string name = "de-rham-" + to_string(law.kind());
    std::string bad;
    std::string lhs;
    std::string rhs;
    for (int n = -kMax; n <= kMax; ++n) {
      const std::string ns = std::to_string(n);
      const LaurentPoly want = LaurentPoly::parse({table.param}, additive ? ns + "*h" : "q^" + ns + " - 1");
      const LaurentPoly& got = table.weights.at(n);
      if (!(got - want).is_zero()) {
        bad = "n=" + ns;
        lhs = got.to_string();
        rhs = want.to_string();
        break;
      }
    }
    const std::string relation = additive ? "x^n dx -> n*h x^n dx, |n| <= 10" : "x^n dx -> (q^n - 1) x^n dx, |n| <= 10";
    r.checks.push_back(check(name, relation, bad.empty() && !table.truncation_lost, bad.empty() ? "21 weights" : bad + ": " + lhs,
                             bad.empty() ? "21 weights" : rhs));
    r.checks.push_back(check(name, "weight of x^(n+m) = weight of x^n +_F weight of x^m", table.homomorphic,
                             table.homomorphic ? "holds" : "fails", "holds"));
  }
  return r;
}

// ---- 9: Mellin -------------------------------------------------------------

ShiftElement random_operator(Rng& rng, const std::shared_ptr<const ShiftContext>& ctx) {
  ShiftElement e(ctx);
  const int terms = uniform(rng, 1, 3);
  for (int k = 0; k < terms; ++k) {
    LaurentPoly g(ctx->vars());
    const int monomials = uniform(rng, 1, 3);
    for (int i = 0; i < monomials; ++i) {
      const int dx = uniform(rng, 0, 6);
      const int dp = uniform(rng, 0, 6 - dx);
      g += LaurentPoly::monomial(ctx->vars(), {dx, dp}, uniform(rng, -4, 4));
    }
    e += ShiftElement::monomial(ctx, {uniform(rng, -3, 3)}, RatFunc(g));
  }
  return e;
}

MellinModule random_module(Rng& rng, const ShiftContext& ctx) {
  MellinModule m(1);
  const int terms = uniform(rng, 1, 3);
  for (int k = 0; k < terms; ++k) {
    LaurentPoly c = LaurentPoly::constant(ctx.vars(), uniform(rng, -3, 3)) +
                    LaurentPoly::variable(ctx.vars(), ctx.param()) * Rational(uniform(rng, -2, 2));
    m.add_term({uniform(rng, -3, 3)}, RatFunc(c));
  }
  return m;
}

std::string module_text(const MellinModule& m) {
  std::string out;
  for (const auto& [nu, c] : m.terms()) out += (out.empty() ? "" : " + ") + ("x^" + std::to_string(nu[0])) + "*(" + c.to_string() + ")";
  return out.empty() ? "0" : out;
}

CriterionReport mellin(const VerifyOptions& options) {
  CriterionReport r{9, "Mellin representation is a homomorphism", {}};
  Rng rng = rng_for(options, 9);
  const int pairs = trials_or(options, 100);
  for (const GroupLaw& law : {GroupLaw::additive(), GroupLaw::multiplicative()}) {
    auto ctx = std::make_shared<const ShiftContext>(law, VarList{"x"}, law.kind() == LawKind::Additive ? "h" : "q");
    std::string bad;
    std::string lhs;
    std::string rhs;
    for (int k = 0; k < pairs; ++k) {
      const ShiftElement a = random_operator(rng, ctx);
      const ShiftElement b = random_operator(rng, ctx);
      const MellinModule m = random_module(rng, *ctx);
      const MellinModule left = mellin_act(a * b, m);
      const MellinModule right = mellin_act(a, mellin_act(b, m));
      if (!(left == right) && bad.empty()) {
        bad = "pair " + std::to_string(k);
        lhs = module_text(left);
        rhs = module_text(right);
      }
    }
    const std::string runs = std::to_string(pairs) + " pairs";
    r.checks.push_back(check("mellin-" + to_string(law.kind()), "(a*b).m = a.(b.m), degree <= 6", bad.empty(),
                             bad.empty() ? runs : bad + ": " + lhs, bad.empty() ? runs : rhs));
  }
  return r;
}

// ---- 10: Witt --------------------------------------------------------------

std::string join(const std::vector<LaurentPoly>& v) {
  std::string out;
  for (const auto& p : v) out += (out.empty() ? "(" : ", ") + p.to_string();
  return out + ")";
}

CriterionReport witt(const VerifyOptions& options) {
  CriterionReport r{10, "Witt vectors and Newton power sums", {}};
  const std::vector<std::string> displayed{
      "x1", "x1^2 - 2*x2", "x1^3 - 3*x1*x2 + 3*x3", "x1^4 + 2*x2^2 - 4*x4 - 4*x2*x1^2 + 4*x1*x3",
      "x1^5 - 5*x1^3*x2 + 5*x1^2*x3 - 5*x1*(x4 - x2^2) - 5*x2*x3 + 5*x5"};
  const auto ghost = witt_ghost_symbolic(6);
  for (std::size_t k = 0; k < displayed.size(); ++k) {
    const LaurentPoly want = RatFunc::parse(ghost[k].vars(), displayed[k]).to_laurent();
    r.checks.push_back(check("witt-n6", "p" + std::to_string(k + 1) + " = -k [t^k] log(sum_j x_j (-t)^j) = " + displayed[k],
                             (ghost[k] - want).is_zero(), ghost[k].to_string(), want.to_string()));
  }

  Rng rng = rng_for(options, 10);
  const int pairs = trials_or(options, 50);
  auto random_vector = [&](int length) {
    std::vector<LaurentPoly> v;
    for (int i = 0; i < length; ++i) v.push_back(LaurentPoly::scalar(Rational(uniform(rng, -6, 6)) / Rational(uniform(rng, 1, 3))));
    return v;
  };
  std::string hom_bad;
  std::string inv_bad;
  for (int k = 0; k < pairs; ++k) {
    const int n = 2 + k % 7;
    const auto x = random_vector(n - 1);
    const auto y = random_vector(n - 1);
    const auto gx = witt_ghost(n, x);
    const auto gy = witt_ghost(n, y);
    const auto gxy = witt_ghost(n, witt_multiply(x, y));
    for (int i = 0; i < n - 1 && hom_bad.empty(); ++i) {
      if (!(gxy[static_cast<std::size_t>(i)] - gx[static_cast<std::size_t>(i)] - gy[static_cast<std::size_t>(i)]).is_zero()) {
        hom_bad = "n=" + std::to_string(n) + ", x=" + join(x) + ", y=" + join(y);
      }
    }
    const auto back = witt_from_ghost(n, gx);
    for (int i = 0; i < n - 1 && inv_bad.empty(); ++i) {
      if (!(back[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(i)]).is_zero()) inv_bad = "n=" + std::to_string(n) + ", x=" + join(x);
    }
  }
  const std::string runs = std::to_string(pairs) + " pairs, n <= 8";
  r.checks.push_back(check("witt-homomorphism", "ghost(x*y) = ghost(x) + ghost(y)", hom_bad.empty(),
                           hom_bad.empty() ? runs : hom_bad, runs));
  r.checks.push_back(check("witt-homomorphism", "from_ghost(ghost(x)) = x", inv_bad.empty(), inv_bad.empty() ? runs : inv_bad, runs));
  return r;
}

// ---- 11: nil-Hecke ---------------------------------------------------------

CriterionReport nil_hecke() {
  CriterionReport r{11, "Nil-Hecke relations on the degree <= 4 spanning set", {}};
  for (const char* family : {"SL2", "A2"}) {
    const RootDatum datum = std::string(family) == "A2" ? RootDatum::build("A", 2) : RootDatum::build(family, 1);
    for (const GroupLaw& law : {GroupLaw::additive(), GroupLaw::multiplicative()}) {
      const std::string name = std::string("nil-hecke-") + family + "-" + to_string(law.kind());
      const auto first = nil_hecke_relations_check(datum, law, 4);
      const auto second = nil_hecke_relations_check(datum, law, 4);
      for (std::size_t i = 0; i < first.size(); ++i) {
        const RelationReport& rep = first[i];
        const std::string verdict = rep.holds ? "holds" : "fails: " + rep.witness;
        r.checks.push_back(check(name, rep.relation, rep.holds, verdict, "holds"));
      }
      bool stable = first.size() == second.size();
      for (std::size_t i = 0; stable && i < first.size(); ++i) {
        stable = first[i].relation == second[i].relation && first[i].holds == second[i].holds && first[i].witness == second[i].witness;
      }
      r.checks.push_back(check(name, "verdicts identical on a second run", stable, stable ? "identical" : "differ", "identical"));
    }
  }
  return r;
}

// ---- 12: the suite itself --------------------------------------------------

CriterionReport determinism(const VerifyOptions& options) {
  CriterionReport r{12, "verify-all is deterministic and passes", {}};
  const auto first = verify_all(options);
  const auto second = verify_all(options);
  const std::string a = render_text(first) + to_json(first, options).dump(2);
  const std::string b = render_text(second) + to_json(second, options).dump(2);
  r.checks.push_back(check("verify-all", "two runs with the same seed give byte-identical reports", a == b,
                           std::to_string(a.size()) + " bytes", std::to_string(b.size()) + " bytes"));
  std::string failing;
  for (const auto& c : first) {
    if (!c.passed()) failing += (failing.empty() ? "" : ",") + std::to_string(c.id);
  }
  r.checks.push_back(check("verify-all", "exit code 0", failing.empty(),
                           failing.empty() ? "0" : "1 (criteria " + failing + " report mismatches)", "0"));
  return r;
}

}  // namespace

CriterionReport verify_criterion(int id, const VerifyOptions& options) {
  switch (id) {
    case 1: return coulomb_3d_relations();
    case 2: return coulomb_4d_relations();
    case 3: return coulomb_3d_classical();
    case 4: return kostant();
    case 5: return gkm(options);
    case 6: return blowups();
    case 7: return n_series(options);
    case 8: return de_rham();
    case 9: return mellin(options);
    case 10: return witt(options);
    case 11: return nil_hecke();
    case 12: return determinism(options);
    default: throw std::out_of_range("no acceptance criterion " + std::to_string(id));
  }
}

std::vector<CriterionReport> verify_all(const VerifyOptions& options) {
  std::vector<CriterionReport> out;
  for (int id = 1; id < kCriterionCount; ++id) out.push_back(verify_criterion(id, options));
  return out;
}

std::string render_text(const std::vector<CriterionReport>& reports) {
  std::ostringstream out;
  out << " id  status  checks  criterion\n";
  int passed = 0;
  for (const auto& c : reports) {
    const auto ok = std::count_if(c.checks.begin(), c.checks.end(), [](const CheckResult& x) { return x.verified; });
    out << std::setw(3) << c.id << "  " << (c.passed() ? "PASS  " : "FAIL  ") << std::setw(6)
        << (std::to_string(ok) + "/" + std::to_string(c.checks.size())) << "  " << c.title << "\n";
    passed += c.passed() ? 1 : 0;
  }
  bool header = false;
  for (const auto& c : reports) {
    for (const auto& x : c.checks) {
      if (x.verified) continue;
      if (!header) out << "\nmismatches:\n";
      header = true;
      out << "[" << c.id << "] " << x.case_name << ": " << x.relation << "\n"
          << "    lhs: " << x.lhs << "\n"
          << "    rhs: " << x.rhs << "\n";
    }
  }
  out << "\n" << passed << "/" << reports.size() << " criteria pass\n";
  return out.str();
}

Json to_json(const std::vector<CriterionReport>& reports, const VerifyOptions& options) {
  Json j = {{"schema", kSchemaVersion}, {"kind", "verify_report"}, {"seed", options.seed}, {"trials", options.trials}};
  Json criteria = Json::array();
  for (const auto& c : reports) {
    Json checks = Json::array();
    for (const auto& x : c.checks) checks.push_back(to_json(x));
    criteria.push_back({{"id", c.id}, {"title", c.title}, {"status", c.passed() ? "verified" : "mismatch"}, {"checks", checks}});
  }
  j["criteria"] = criteria;
  return j;
}

}  // namespace eqwb
