#include "eqwb/group_law.hpp"

#include <stdexcept>

namespace eqwb {

std::string to_string(LawKind k) {
  switch (k) {
    case LawKind::Additive: return "additive";
    case LawKind::Multiplicative: return "multiplicative";
    case LawKind::Formal: return "formal";
  }
  return "?";
}

LawKind parse_law_kind(const std::string& s) {
  if (s == "additive") return LawKind::Additive;
  if (s == "multiplicative") return LawKind::Multiplicative;
  if (s == "formal") return LawKind::Formal;
  throw std::invalid_argument("unknown group law: " + s);
}

namespace {

LaurentPoly mul_trunc(const LaurentPoly& a, const LaurentPoly& b, int order, bool& lost) {
  LaurentPoly full = a * b;
  LaurentPoly kept = full.truncated(order);
  if (kept.size() != full.size()) lost = true;
  return kept;
}

// sum a_ij u^i v^j, truncated.
LaurentPoly correction(const GroupLaw::Coefficients& coeffs, const LaurentPoly& u, const LaurentPoly& v, int order,
                       bool& lost) {
  std::vector<LaurentPoly> up{LaurentPoly::constant(u.vars(), 1)};
  std::vector<LaurentPoly> vp{LaurentPoly::constant(v.vars(), 1)};
  LaurentPoly sum(u.nvars() ? u.vars() : v.vars());
  for (const auto& [ij, c] : coeffs) {
    auto [i, j] = ij;
    while (static_cast<int>(up.size()) <= i) up.push_back(mul_trunc(up.back(), u, order, lost));
    while (static_cast<int>(vp.size()) <= j) vp.push_back(mul_trunc(vp.back(), v, order, lost));
    sum += mul_trunc(up[static_cast<std::size_t>(i)], vp[static_cast<std::size_t>(j)], order, lost) * c;
  }
  return sum;
}

}  // namespace

GroupLaw GroupLaw::additive() {
  GroupLaw g;
  g.kind_ = LawKind::Additive;
  return g;
}

GroupLaw GroupLaw::multiplicative() {
  GroupLaw g;
  g.kind_ = LawKind::Multiplicative;
  g.coeffs_[{1, 1}] = 1;
  return g;
}

GroupLaw GroupLaw::formal(Coefficients coefficients, int order) {
  if (order < 1) throw std::invalid_argument("truncation order must be positive");
  GroupLaw g;
  g.kind_ = LawKind::Formal;
  g.order_ = order;
  for (const auto& [ij, c] : coefficients) {
    auto [i, j] = ij;
    if (i < 1 || j < 1) throw std::invalid_argument("formal group law coefficients need i, j >= 1");
    if (i + j > order || c == 0) continue;
    g.coeffs_[ij] = c;
  }
  for (const auto& [ij, c] : g.coeffs_) {
    auto it = g.coeffs_.find({ij.second, ij.first});
    if (it == g.coeffs_.end() || it->second != c) throw std::invalid_argument("formal group law is not commutative");
  }
  VarList uvw{"u", "v", "w"};
  LaurentPoly u = LaurentPoly::variable(uvw, "u");
  LaurentPoly v = LaurentPoly::variable(uvw, "v");
  LaurentPoly w = LaurentPoly::variable(uvw, "w");
  if (g.add(g.add(u, v), w) != g.add(u, g.add(v, w))) {
    throw std::invalid_argument("formal group law is not associative");
  }
  return g;
}

GroupLaw GroupLaw::from_exponential(const std::vector<Rational>& higher_coeffs, int order) {
  // exp(s) = s + sum_k a_k s^k, log its compositional inverse.
  VarList sv{"s"};
  LaurentPoly s = LaurentPoly::variable(sv, "s");
  auto exp_of = [&](const LaurentPoly& arg) {
    bool lost = false;
    LaurentPoly result = arg;
    LaurentPoly power = arg;
    for (std::size_t k = 0; k < higher_coeffs.size() && static_cast<int>(k) + 2 <= order; ++k) {
      power = mul_trunc(power, arg, order, lost);
      result += power * higher_coeffs[k];
    }
    return result.truncated(order);
  };
  LaurentPoly log = s;
  for (int iter = 0; iter < order; ++iter) log = (s - (exp_of(log) - log)).truncated(order);
  VarList uv{"u", "v"};
  LaurentPoly sum = log.substitute({LaurentPoly::variable(uv, "u")}) + log.substitute({LaurentPoly::variable(uv, "v")});
  LaurentPoly f = exp_of(sum);
  Coefficients coeffs;
  for (const auto& [e, c] : f.terms()) {
    if (e[0] >= 1 && e[1] >= 1) coeffs[{e[0], e[1]}] = c;
    else if (e[0] + e[1] != 1) throw std::logic_error("conjugated law has a pure higher term");
  }
  return formal(std::move(coeffs), order);
}

GroupLaw GroupLaw::random_formal(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> a;
  for (int k = 2; k <= order; ++k) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    a.push_back(c);
  }
  return from_exponential(a, order);
}

Truncated GroupLaw::add_checked(const LaurentPoly& u, const LaurentPoly& v) const {
  switch (kind_) {
    case LawKind::Additive: return {u + v, false};
    case LawKind::Multiplicative: return {u + v + u * v, false};
    case LawKind::Formal: break;
  }
  if (u.constant_term() != 0 || v.constant_term() != 0) throw std::invalid_argument("nonzero constant term");
  if (!u.is_polynomial() || !v.is_polynomial()) throw std::invalid_argument("formal sum needs power series inputs");
  bool lost = false;
  LaurentPoly r = (u + v).truncated(order_);
  r += correction(coeffs_, u, v, order_, lost);
  return {r, lost};
}

LaurentPoly GroupLaw::add(const LaurentPoly& u, const LaurentPoly& v) const { return add_checked(u, v).value; }

LaurentPoly GroupLaw::inverse_series(const std::string& var) const {
  VarList tv{var};
  LaurentPoly t = LaurentPoly::variable(tv, var);
  if (kind_ == LawKind::Additive) return -t;
  if (kind_ == LawKind::Multiplicative) throw std::domain_error("multiplicative inverse is not polynomial");
  LaurentPoly inv = -t;
  for (int iter = 0; iter < order_; ++iter) {
    bool lost = false;
    inv = (-t - correction(coeffs_, t, inv, order_, lost)).truncated(order_);
  }
  return inv;
}

LaurentPoly GroupLaw::n_series_at(int n, const LaurentPoly& u) const {
  if (kind_ == LawKind::Additive) return u * Rational(n);
  if (kind_ == LawKind::Multiplicative) {
    LaurentPoly one = LaurentPoly::constant(u.vars(), 1);
    return (one + u).pow(n) - one;
  }
  if (n == 0) return LaurentPoly(u.vars());
  LaurentPoly step = u;
  if (n < 0) {
    LaurentPoly inv = inverse_series("t");
    step = inv.substitute({u}).truncated(order_);
  }
  LaurentPoly acc = step;
  for (int k = 1; k < std::abs(n); ++k) acc = add(acc, step);
  return acc;
}

Truncated GroupLaw::n_series_checked(int n, const std::string& var) const {
  VarList tv{var};
  LaurentPoly t = LaurentPoly::variable(tv, var);
  if (kind_ != LawKind::Formal) {
    RatFunc r = n_series(n, var);
    if (!r.is_laurent() || !r.to_laurent().is_polynomial()) throw std::domain_error("n-series is not a polynomial");
    return {r.to_laurent(), false};
  }
  if (n == 0) return {LaurentPoly(tv), false};
  LaurentPoly step = n > 0 ? t : inverse_series(var);
  bool lost = n < 0;  // the formal inverse is an infinite series
  LaurentPoly acc = step;
  for (int k = 1; k < std::abs(n); ++k) {
    Truncated s = add_checked(acc, step);
    lost = lost || s.lost;
    acc = s.value;
  }
  return {acc, lost};
}

RatFunc GroupLaw::n_series(int n, const std::string& var) const {
  VarList tv{var};
  LaurentPoly t = LaurentPoly::variable(tv, var);
  if (kind_ == LawKind::Additive) return RatFunc(t * Rational(n));
  if (kind_ == LawKind::Multiplicative) {
    RatFunc base(LaurentPoly::constant(tv, 1) + t);
    return base.pow(n) - RatFunc(LaurentPoly::constant(tv, 1));
  }
  return RatFunc(n_series_checked(n, var).value);
}

VarList torus_coordinates(int dim) {
  if (dim == 1) return {"x"};
  VarList v;
  for (int i = 1; i <= dim; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

LaurentPoly euler_class(const GroupLaw& law, const VarList& coords, const IntVector& lambda) {
  if (static_cast<std::size_t>(lambda.size()) > coords.size()) throw std::invalid_argument("character outside the lattice");
  LaurentPoly c(coords);
  if (law.kind() == LawKind::Multiplicative) {
    Exponent e(coords.size(), 0);
    for (int i = 0; i < lambda.size(); ++i) e[static_cast<std::size_t>(i)] = lambda(i);
    return LaurentPoly::monomial(coords, e) - LaurentPoly::constant(coords, 1);
  }
  for (int i = 0; i < lambda.size(); ++i) {
    if (lambda(i) == 0) continue;
    LaurentPoly xi = LaurentPoly::variable(coords, coords[static_cast<std::size_t>(i)]);
    c = law.add(c, law.n_series_at(lambda(i), xi));
  }
  return c;
}

LaurentPoly euler_class(const GroupLaw& law, const RootDatum& datum, const IntVector& lambda) {
  if (lambda.size() != datum.dim()) throw std::invalid_argument("character outside the lattice");
  return euler_class(law, torus_coordinates(datum.dim()), lambda);
}

}  // namespace eqwb
