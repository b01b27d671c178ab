#include "eqwb/workbench.hpp"

#include <Eigen/Core>
#include <array>
#include <optional>
#include <stdexcept>

namespace Eigen {
template <>
struct NumTraits<eqwb::RatFunc> : GenericNumTraits<eqwb::RatFunc> {
  using Real = eqwb::RatFunc;
  using NonInteger = eqwb::RatFunc;
  using Nested = eqwb::RatFunc;
  using Literal = eqwb::RatFunc;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 1, AddCost = 3, MulCost = 3 };
};
}  // namespace Eigen

namespace eqwb {

namespace {

using Matrix2 = Eigen::Matrix<RatFunc, 2, 2>;

const VarList kKostantVars{"a", "b", "x"};

RatFunc kr(const std::string& text) { return RatFunc::parse(kKostantVars, text); }

Matrix2 matrix(const std::string& m00, const std::string& m01, const std::string& m10, const std::string& m11) {
  Matrix2 m;
  m(0, 0) = kr(m00);
  m(0, 1) = kr(m01);
  m(1, 0) = kr(m10);
  m(1, 1) = kr(m11);
  return m;
}

Matrix2 inverse(const Matrix2& m) {
  RatFunc det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (det.is_zero()) throw std::domain_error("singular matrix");
  Matrix2 adj;
  adj(0, 0) = m(1, 1);
  adj(0, 1) = -m(0, 1);
  adj(1, 0) = -m(1, 0);
  adj(1, 1) = m(0, 0);
  RatFunc inv = det.inverse();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) adj(i, j) = adj(i, j) * inv;
  }
  return adj;
}

Matrix2 multiply(const Matrix2& l, const Matrix2& r) {
  Matrix2 m;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) m(i, j) = l(i, 0) * r(0, j) + l(i, 1) * r(1, j);
  }
  return m;
}

Matrix2 substitute_b(const Matrix2& m, const RatFunc& value) {
  Matrix2 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r(i, j) = m(i, j).substitute("b", value.with_vars(kKostantVars));
  }
  return r;
}

}  // namespace

CentralizerSolution kostant_centralizer_solve(const std::string& group, LawKind law) {
  Matrix2 slice;
  Matrix2 borel;
  if (group == "SL2") {
    borel = matrix("a", "0", "b", "a^-1");
    slice = law == LawKind::Additive ? matrix("x", "0", "1", "-x") : matrix("x", "0", "x^-1", "x^-1");
  } else if (group == "PGL2") {
    borel = matrix("a", "0", "b", "1");
    slice = law == LawKind::Additive ? matrix("x", "0", "1", "0") : matrix("x", "0", "1", "1");
  } else {
    throw std::invalid_argument("Kostant solver supports SL2 and PGL2");
  }
  if (law == LawKind::Formal) throw std::invalid_argument("Kostant solver needs an additive or multiplicative law");

  const Matrix2 defect = multiply(multiply(borel, slice), inverse(borel)) - slice;
  const Matrix2 e0 = substitute_b(defect, kr("0"));
  const Matrix2 e1 = substitute_b(defect, kr("1"));
  const Matrix2 e2 = substitute_b(defect, kr("2"));
  std::optional<RatFunc> b;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (e2(i, j) != e1(i, j) * kr("2") - e0(i, j)) throw std::domain_error("defect is not affine in b");
      RatFunc slope = e1(i, j) - e0(i, j);
      if (slope.is_zero()) {
        if (!e0(i, j).is_zero()) throw std::domain_error("no centralizing Borel element");
        continue;
      }
      if (!b) b = -e0(i, j) / slope;
    }
  }
  if (!b) throw std::domain_error("b is unconstrained");
  const Matrix2 check = substitute_b(defect, *b);
  bool zero = true;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) zero = zero && check(i, j).is_zero();
  }
  return {group, law, {"a", "x"}, b->with_vars({"a", "x"}), zero};
}

bool operator==(const CoulombPresentation& a, const CoulombPresentation& b) {
  if (a.name != b.name || !(*a.context == *b.context) || a.generator_names != b.generator_names ||
      a.relations != b.relations || a.involution != b.involution || a.atoms.size() != b.atoms.size()) {
    return false;
  }
  for (const auto& [k, v] : a.atoms) {
    auto it = b.atoms.find(k);
    if (it == b.atoms.end() || it->second != v) return false;
  }
  return true;
}

namespace {

CoulombPresentation make_presentation(const std::string& name, GroupLaw law, const std::string& param,
                                      const std::vector<std::pair<std::string, std::string>>& generators,
                                      std::vector<std::pair<std::string, std::string>> relations,
                                      std::string involution) {
  auto ctx = std::make_shared<const ShiftContext>(std::move(law), VarList{"x"}, param);
  CoulombPresentation p{name, ctx, {}, {}, std::move(relations), std::move(involution)};
  p.atoms.emplace("x", ShiftElement::scalar(ctx, ctx->coefficient("x")));
  p.atoms.emplace("t", ShiftElement::shift(ctx, 1));
  for (const auto& [gen, text] : generators) {
    p.generator_names.push_back(gen);
    p.atoms.emplace(gen, evaluate_expression(ctx, p.atoms, text));
  }
  return p;
}

}  // namespace

CoulombPresentation coulomb_3d() {
  return make_presentation("3d", GroupLaw::additive(), "h",
                           {{"Phi", "x^2"}, {"U", "t + t^-1"}, {"V", "x^-1*(t - t^-1)"}},
                           {{"[Phi,V]", "2*h*U - h^2*V"},
                            {"[Phi,U]", "2*h*Phi*V - h^2*U"},
                            {"[U,V]", "h*V^2"},
                            {"(U+2)*(U-2)", "Phi*V^2 - h*U*V"}},
                           "x -> -x");
}

std::vector<std::pair<std::string, std::string>> coulomb_3d_commutation_relations() {
  return {{"[x,t]", "h*t"}, {"[x,t^-1]", "-h*t^-1"}, {"[x^2,t]", "h^2*t + 2*h*t*x"}, {"[x^2,t^-1]", "h^2*t^-1 - 2*h*t^-1*x"}};
}

CoulombPresentation coulomb_4d() {
  return make_presentation(
      "4d", GroupLaw::multiplicative(), "q",
      {{"Psi", "x + x^-1"}, {"W", "t + t^-1"}, {"Z", "(x - x^-1)^-1*(t - t^-1)"}},
      {{"[Psi,W]", "(q-1)*(Psi^2-4)*Z - (q-1)^2/(2*q)*((Psi^2-4)*Z + Psi*W)"},
       {"[Psi,Z]", "(q-1)*W - (q-1)^2/(2*q)*(Psi*Z + W)"},
       {"[Z,W]", "(q-1)*Psi*Z^2 - (q-1)^2/(2*q)*(Psi*Z + W)*Z"},
       {"(W+2)*(W-2)", "(Psi+2)*(Psi-2)*Z^2 - (q-1)^2/(2*q)*(Psi^2-4)*Z^2 + (q^2-1)/(2*q)*Psi*W*Z"}},
      "x -> x^-1");
}

std::vector<std::pair<std::string, std::string>> coulomb_4d_corrected_relations() {
  return {{"[W,Z]", "(q-1)*Psi*Z^2 - (q-1)^2/(2*q)*(Psi*Z + W)*Z"},
          {"(W+2)*(W-2)", "(1 + (q-1)^2/(2*q))*(Psi^2-4)*Z^2 - (q^2-1)/(2*q)*Psi*W*Z"}};
}

std::vector<CheckResult> verify_relations(const CoulombPresentation& p,
                                          const std::vector<std::pair<std::string, std::string>>& relations,
                                          const std::string& case_name) {
  std::vector<CheckResult> out;
  for (const auto& [lhs, rhs] : relations) {
    ShiftElement l = evaluate_expression(p.context, p.atoms, lhs);
    ShiftElement r = evaluate_expression(p.context, p.atoms, rhs);
    out.push_back({case_name, lhs + " = " + rhs, l == r, l.to_string(), r.to_string()});
  }
  return out;
}

std::vector<CheckResult> check_involution(const CoulombPresentation& p) {
  Substitution s = Substitution::parse(p.context->vars(), p.involution);
  IntMatrix flip = -IntMatrix::Identity(p.context->rank(), p.context->rank());
  std::vector<CheckResult> out;
  for (const auto& name : p.generator_names) {
    const ShiftElement& g = p.atoms.at(name);
    ShiftElement image = g.involute(flip, s);
    out.push_back({"coulomb-" + p.name + "-involution", name + " fixed by t -> t^-1, " + p.involution, image == g,
                   image.to_string(), g.to_string()});
  }
  return out;
}

namespace {

LaurentPoly derivative(const LaurentPoly& f, std::size_t var) {
  LaurentPoly::TermMap terms;
  for (const auto& [e, c] : f.terms()) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    terms.emplace(d, c * e[var]);
  }
  return {f.vars(), terms};
}

}  // namespace

LaurentPoly poisson_bracket(const LaurentPoly& f, const LaurentPoly& g,
                            const std::map<std::pair<std::string, std::string>, LaurentPoly>& table) {
  const VarList& vars = f.vars();
  LaurentPoly out(vars);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    LaurentPoly df = derivative(f, i);
    if (df.is_zero()) continue;
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if (i == j) continue;
      LaurentPoly dg = derivative(g.with_vars(vars), j);
      if (dg.is_zero()) continue;
      auto it = table.find({vars[i], vars[j]});
      if (it != table.end()) {
        out += df * dg * it->second;
        continue;
      }
      it = table.find({vars[j], vars[i]});
      if (it != table.end()) out -= df * dg * it->second;
    }
  }
  return out;
}

ClassicalLimit classical_limit(const CoulombPresentation& p) {
  const ShiftContext& ctx = *p.context;
  const bool additive = ctx.law().kind() == LawKind::Additive;
  const std::string point = ctx.param() + (additive ? " -> 0" : " -> 1");
  Substitution degenerate = Substitution::parse(ctx.vars(), point);
  auto classical = [&](const std::string& text) {
    return evaluate_expression(p.context, p.atoms, text).map_coefficients(degenerate);
  };
  ClassicalLimit out;
  std::vector<std::pair<std::string, std::string>> relations;
  if (p.name == "3d") {
    relations = {{"(U+2)*(U-2)", "Phi*V^2"}, {"U^2 - Phi*V^2", "4"}};
  } else {
    relations = {{"(W+2)*(W-2)", "(Psi+2)*(Psi-2)*Z^2"}, {"W^2 - (Psi^2-4)*Z^2", "4"}};
  }
  for (const auto& [lhs, rhs] : relations) {
    ShiftElement l = classical(lhs);
    ShiftElement r = classical(rhs);
    out.relations.push_back({"coulomb-" + p.name + "-classical", lhs + " = " + rhs + " at " + point, l == r,
                             l.to_string(), r.to_string()});
  }
  if (p.name != "3d") return out;

  const std::vector<std::array<std::string, 3>> brackets{{"Phi", "V", "2*U"}, {"Phi", "U", "2*Phi*V"}, {"U", "V", "V^2"}};
  RatFunc first_order = RatFunc(LaurentPoly::variable(ctx.vars(), ctx.param())).inverse();
  bool all = true;
  for (const auto& [a, b, expected] : brackets) {
    ShiftElement c = commutator(p.atoms.at(a), p.atoms.at(b));
    ShiftElement derived = (c * ShiftElement::scalar(p.context, first_order)).map_coefficients(degenerate);
    ShiftElement want = classical(expected);
    out.brackets.push_back({a, b, derived.to_string(), want.to_string(), derived == want});
    all = all && derived == want;
  }
  VarList gens{"Phi", "U", "V"};
  auto gp = [&](const std::string& text) { return LaurentPoly::parse(gens, text); };
  std::map<std::pair<std::string, std::string>, LaurentPoly> table{
      {{"Phi", "V"}, gp("2*U")}, {{"Phi", "U"}, gp("2*Phi*V")}, {{"U", "V"}, gp("V^2")}};
  LaurentPoly phi = gp("Phi");
  LaurentPoly u = gp("U");
  LaurentPoly v = gp("V");
  LaurentPoly jacobi = poisson_bracket(phi, poisson_bracket(u, v, table), table) +
                       poisson_bracket(u, poisson_bracket(v, phi, table), table) +
                       poisson_bracket(v, poisson_bracket(phi, u, table), table);
  out.jacobi = all && jacobi.is_zero();
  return out;
}

namespace {

using Series = std::vector<LaurentPoly>;

Series series_mul(const Series& a, const Series& b, std::size_t n) {
  Series r(n, LaurentPoly::scalar(0));
  for (std::size_t i = 0; i < n && i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

std::vector<LaurentPoly> witt_ghost(int n, const std::vector<LaurentPoly>& components) {
  if (n < 2) throw std::invalid_argument("Witt length needs n >= 2");
  const auto len = static_cast<std::size_t>(n);
  if (components.size() != len - 1) throw std::invalid_argument("expected n - 1 Witt components");
  Series u(len, LaurentPoly::scalar(0));
  for (std::size_t j = 1; j < len; ++j) u[j] = components[j - 1] * Rational(j % 2 == 0 ? 1 : -1);
  Series log(len, LaurentPoly::scalar(0));
  Series power = u;
  for (std::size_t m = 1; m < len; ++m) {
    Rational c = Rational(m % 2 == 1 ? 1 : -1) / Rational(static_cast<long>(m));
    for (std::size_t k = 0; k < len; ++k) log[k] += power[k] * c;
    power = series_mul(power, u, len);
  }
  std::vector<LaurentPoly> ghost;
  for (std::size_t k = 1; k < len; ++k) ghost.push_back(log[k] * Rational(-static_cast<long>(k)));
  return ghost;
}

std::vector<LaurentPoly> witt_ghost_symbolic(int n) {
  VarList vars;
  for (int i = 1; i < n; ++i) vars.push_back("x" + std::to_string(i));
  std::vector<LaurentPoly> x;
  for (const auto& v : vars) x.push_back(LaurentPoly::variable(vars, v));
  auto ghost = witt_ghost(n, x);
  for (auto& g : ghost) g = g.with_vars(vars);
  return ghost;
}

std::vector<LaurentPoly> witt_from_ghost(int n, const std::vector<LaurentPoly>& ghost) {
  if (n < 2) throw std::invalid_argument("Witt length needs n >= 2");
  const auto len = static_cast<std::size_t>(n);
  if (ghost.size() != len - 1) throw std::invalid_argument("expected n - 1 ghost components");
  Series log(len, LaurentPoly::scalar(0));
  for (std::size_t k = 1; k < len; ++k) log[k] = ghost[k - 1] * (Rational(-1) / Rational(static_cast<long>(k)));
  Series exp(len, LaurentPoly::scalar(0));
  exp[0] = LaurentPoly::scalar(1);
  Series power = exp;
  Rational factorial = 1;
  for (std::size_t m = 1; m < len; ++m) {
    power = series_mul(power, log, len);
    factorial *= static_cast<long>(m);
    for (std::size_t k = 0; k < len; ++k) exp[k] += power[k] * (Rational(1) / factorial);
  }
  std::vector<LaurentPoly> x;
  for (std::size_t j = 1; j < len; ++j) x.push_back(exp[j] * Rational(j % 2 == 0 ? 1 : -1));
  return x;
}

std::vector<LaurentPoly> witt_multiply(const std::vector<LaurentPoly>& x, const std::vector<LaurentPoly>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("Witt vectors of different lengths");
  std::vector<LaurentPoly> z;
  for (std::size_t k = 1; k <= x.size(); ++k) {
    LaurentPoly s = x[k - 1] + y[k - 1];
    for (std::size_t i = 1; i < k; ++i) s += x[i - 1] * y[k - i - 1];
    z.push_back(s);
  }
  return z;
}

std::vector<CheckResult> blowup_identity_check(const RootDatum& datum, const GroupLaw& law, int n_max) {
  if (datum.rank() != 1) throw std::invalid_argument("blowup identity check needs a rank-1 datum");
  if (law.kind() == LawKind::Formal) throw std::invalid_argument("blowup identity check needs an exact law");
  VarList vars = torus_coordinates(datum.dim());
  vars.push_back("y");
  const RatFunc c(euler_class(law, vars, datum.simple_roots()[0]));
  const RatFunc y(LaurentPoly::variable(vars, "y"));
  const RatFunc one(LaurentPoly::constant(vars, 1));
  const std::string case_name = "blowup-identity-" + datum.family() + "-" + to_string(law.kind());
  std::vector<CheckResult> out;
  for (int n = 2; n <= n_max; ++n) {
    RatFunc lhs = (y.pow(n) - one) / c;
    RatFunc first = (y - one) / c;
    RatFunc rest = (y.pow(n - 1) - one) / c;
    RatFunc rhs = first + rest + c * first * rest;
    out.push_back({case_name, "(y^" + std::to_string(n) + " - 1)/c decomposition, c = " + c.to_string(), lhs == rhs,
                   lhs.to_string(), rhs.to_string()});
  }
  return out;
}

std::vector<BlowupPresentation> blowup_presentations() {
  return {{"Omega S^3 additive", "SL2", LawKind::Additive, 1, "(y - 1)/x", "y - 1"},
          {"Omega SO(3) additive", "PGL2", LawKind::Additive, 2, "(y^2 - 1)/(2*x)", "y^2 - 1"},
          {"Omega S^3 multiplicative", "SL2", LawKind::Multiplicative, 1, "(y - 1)/(x - 1)", "y - 1"},
          {"Omega SO(3) multiplicative", "PGL2", LawKind::Multiplicative, 2, "(y^2 - 1)/(x^2 - 1)", "y^2 - 1"}};
}

std::vector<CheckResult> check_blowup_presentation(const BlowupPresentation& p) {
  const GroupLaw law = p.law == LawKind::Additive ? GroupLaw::additive() : GroupLaw::multiplicative();
  const RootDatum datum = RootDatum::build(p.group, 1);
  const VarList vars{"x", "y", "g"};
  const LaurentPoly c = euler_class(law, vars, datum.simple_roots()[0]);
  const LaurentPoly y = LaurentPoly::variable(vars, "y");
  const LaurentPoly one = LaurentPoly::constant(vars, 1);
  const LaurentPoly numerator = y.pow(p.lattice_index) - one;
  const std::string case_name = "blowup-" + p.name;
  std::vector<CheckResult> out;

  RatFunc generator(numerator, c);
  RatFunc expected = RatFunc::parse(vars, p.generator);
  out.push_back({case_name, "generator = " + p.generator, generator == expected, generator.to_string(), expected.to_string()});

  // c*g - (y^k - 1) with c at its degeneration point: g drops out and y^k = 1 remains.
  const std::string point = p.law == LawKind::Additive ? "0" : "1";
  LaurentPoly relation = c * LaurentPoly::variable(vars, "g") - numerator;
  LaurentPoly degenerate = relation.substitute("x", LaurentPoly::constant(vars, Rational(point)));
  LaurentPoly want = -LaurentPoly::parse(vars, p.degenerate_relation);
  out.push_back({case_name, "x -> " + point + ": c*g = y^" + std::to_string(p.lattice_index) + " - 1 becomes " +
                                p.degenerate_relation + " = 0 with g free",
                 degenerate == want && degenerate.degree_in(2) == 0, degenerate.to_string(), want.to_string()});
  return out;
}

}  // namespace eqwb
