#include "eqwb/laurent.hpp"

#include <algorithm>
#include <stdexcept>

#include "eqwb/ratfunc.hpp"

namespace eqwb {

namespace {

Exponent add_exp(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool divides(const Exponent& small, const Exponent& big) {
  for (std::size_t i = 0; i < small.size(); ++i) {
    if (small[i] > big[i]) return false;
  }
  return true;
}

void add_term(LaurentPoly::TermMap& m, const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = m.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

// Bring both operands to one variable list; scalars adopt the other's list.
LaurentPoly promote(const LaurentPoly& p, const VarList& vars) {
  if (p.vars() == vars) return p;
  if (p.nvars() == 0) return LaurentPoly::constant(vars, p.constant_term());
  throw std::invalid_argument("variable mismatch");
}

}  // namespace

LaurentPoly::LaurentPoly(VarList vars) : vars_(std::move(vars)) {}

LaurentPoly::LaurentPoly(VarList vars, TermMap terms) : vars_(std::move(vars)) {
  for (auto& [e, c] : terms) {
    if (e.size() != vars_.size()) throw std::invalid_argument("exponent length mismatch");
    if (c != 0) terms_.emplace(e, c);
  }
}

LaurentPoly LaurentPoly::constant(VarList vars, const Rational& c) {
  LaurentPoly p(std::move(vars));
  if (c != 0) p.terms_.emplace(Exponent(p.vars_.size(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(VarList vars, Exponent exp, const Rational& c) {
  if (exp.size() != vars.size()) throw std::invalid_argument("exponent length mismatch");
  LaurentPoly p(std::move(vars));
  if (c != 0) p.terms_.emplace(std::move(exp), c);
  return p;
}

LaurentPoly LaurentPoly::variable(VarList vars, std::string_view name, int power) {
  LaurentPoly p(std::move(vars));
  int i = p.var_index(name);
  if (i < 0) throw std::invalid_argument("unknown variable: " + std::string(name));
  Exponent e(p.vars_.size(), 0);
  e[static_cast<std::size_t>(i)] = power;
  p.terms_.emplace(std::move(e), 1);
  return p;
}

int LaurentPoly::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

bool LaurentPoly::is_polynomial() const {
  for (const auto& [e, c] : terms_) {
    if (std::any_of(e.begin(), e.end(), [](int k) { return k < 0; })) return false;
  }
  return true;
}

Rational LaurentPoly::constant_term() const { return coeff(Exponent(vars_.size(), 0)); }

Rational LaurentPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::degree_in(std::size_t var) const {
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[var] > d) d = e[var];
    first = false;
  }
  return d;
}

int LaurentPoly::min_degree_in(std::size_t var) const {
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[var] < d) d = e[var];
    first = false;
  }
  return d;
}

int LaurentPoly::total_degree() const {
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    if (first || s > d) d = s;
    first = false;
  }
  return d;
}

Exponent LaurentPoly::min_exponents() const {
  Exponent m(vars_.size(), 0);
  for (std::size_t i = 0; i < vars_.size(); ++i) m[i] = min_degree_in(i);
  return m;
}

void LaurentPoly::adopt_vars(const LaurentPoly& o) {
  if (vars_ == o.vars_ || o.nvars() == 0) return;
  *this = promote(*this, o.vars_);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  adopt_vars(o);
  const LaurentPoly& rhs = o.vars_ == vars_ ? o : promote(o, vars_);
  for (const auto& [e, c] : rhs.terms_) add_term(terms_, e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  adopt_vars(o);
  const LaurentPoly& rhs = o.vars_ == vars_ ? o : promote(o, vars_);
  for (const auto& [e, c] : rhs.terms_) add_term(terms_, e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() == 0 && a.vars() != b.vars()) return promote(a, b.vars()) * b;
  if (b.nvars() == 0 && a.vars() != b.vars()) return a * promote(b, a.vars());
  if (a.vars() != b.vars()) throw std::invalid_argument("variable mismatch");
  LaurentPoly r(a.vars());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) add_term(r.terms_, add_exp(ea, eb), ca * cb);
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars() == b.vars()) return a.terms() == b.terms();
  if (a.nvars() == 0) return promote(a, b.vars()).terms() == b.terms();
  if (b.nvars() == 0) return a.terms() == promote(b, a.vars()).terms();
  return false;
}

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) {
    if (!is_monomial()) throw std::domain_error("negative power of a non-monomial");
    const auto& [e, c] = *terms_.begin();
    Exponent inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
    return monomial(vars_, inv, 1 / c).pow(-n);
  }
  LaurentPoly result = constant(vars_, 1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift) const {
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(add_exp(e, shift), c);
  return r;
}

LaurentPoly LaurentPoly::substitute(const std::vector<LaurentPoly>& images) const {
  if (images.size() != vars_.size()) throw std::invalid_argument("substitution arity mismatch");
  VarList target;
  for (const auto& im : images) {
    if (im.nvars() > 0) {
      if (target.empty()) target = im.vars();
      else if (target != im.vars()) throw std::invalid_argument("substitution images disagree on variables");
    }
  }
  std::map<std::pair<std::size_t, int>, LaurentPoly> cache;
  auto power = [&](std::size_t i, int k) -> const LaurentPoly& {
    auto key = std::make_pair(i, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, promote(images[i], target).pow(k)).first->second;
  };
  LaurentPoly r(target);
  for (const auto& [e, c] : terms_) {
    LaurentPoly t = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) t *= power(i, e[i]);
    }
    r += t;
  }
  return r;
}

LaurentPoly LaurentPoly::substitute(std::string_view var, const LaurentPoly& image) const {
  int k = var_index(var);
  if (k < 0) throw std::invalid_argument("unknown variable: " + std::string(var));
  std::vector<LaurentPoly> images;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    images.push_back(static_cast<int>(i) == k ? promote(image, vars_) : variable(vars_, vars_[i]));
  }
  return substitute(images);
}

LaurentPoly LaurentPoly::with_vars(const VarList& vars) const {
  if (vars == vars_) return *this;
  std::vector<int> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    where[i] = it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
  }
  LaurentPoly r(vars);
  for (const auto& [e, c] : terms_) {
    Exponent ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (where[i] < 0) throw std::invalid_argument("variable " + vars_[i] + " missing from target list");
      ne[static_cast<std::size_t>(where[i])] = e[i];
    }
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

LaurentPoly LaurentPoly::truncated(int order) const {
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    if (s <= order) r.terms_.emplace(e, c);
  }
  return r;
}

LaurentPoly LaurentPoly::coeff_in(std::size_t var, int k) const {
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != k) continue;
    Exponent ne = e;
    ne[var] = 0;
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

std::string format_monomial(const VarList& vars, const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += vars[i];
    if (e[i] != 1) s += '^' + std::to_string(e[i]);
  }
  return s;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono = format_monomial(vars_, e);
    Rational a = abs(c);
    std::string body;
    if (mono.empty()) body = eqwb::to_string(a);
    else if (a == 1) body = mono;
    else body = eqwb::to_string(a) + "*" + mono;
    if (out.empty()) out = (c < 0 ? "-" : "") + body;
    else out += (c < 0 ? " - " : " + ") + body;
  }
  return out;
}

LaurentPoly LaurentPoly::parse(const VarList& vars, std::string_view text) {
  RatFunc r = RatFunc::parse(vars, text);
  if (!r.is_laurent()) throw std::invalid_argument("not a Laurent polynomial: " + std::string(text));
  return r.to_laurent().with_vars(vars);
}

VarList merge_vars(const VarList& a, const VarList& b) {
  VarList r = a;
  for (const auto& v : b) {
    if (std::find(r.begin(), r.end(), v) == r.end()) r.push_back(v);
  }
  return r;
}

namespace {

// Division of honest polynomials (no negative exponents).
std::pair<LaurentPoly, LaurentPoly> divmod_poly(const LaurentPoly& a, const LaurentPoly& b) {
  const Exponent& lb = b.leading_exponent();
  const Rational& cb = b.leading_coeff();
  LaurentPoly::TermMap p = a.terms();
  LaurentPoly::TermMap q;
  LaurentPoly::TermMap r;
  while (!p.empty()) {
    auto it = p.begin();
    if (divides(lb, it->first)) {
      Exponent m(lb.size());
      for (std::size_t i = 0; i < lb.size(); ++i) m[i] = it->first[i] - lb[i];
      Rational c = it->second / cb;
      q.emplace(m, c);
      for (const auto& [e, v] : b.terms()) add_term(p, add_exp(e, m), -c * v);
    } else {
      r.emplace(it->first, it->second);
      p.erase(it);
    }
  }
  return {LaurentPoly(a.vars(), std::move(q)), LaurentPoly(a.vars(), std::move(r))};
}

Exponent negated(const Exponent& e) {
  Exponent r(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) r[i] = -e[i];
  return r;
}

LaurentPoly strip_monomial(const LaurentPoly& p) { return p.shifted(negated(p.min_exponents())); }

LaurentPoly monic(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  return p * (1 / p.leading_coeff());
}

int top_var(const LaurentPoly& a, const LaurentPoly& b) {
  for (int v = static_cast<int>(a.nvars()) - 1; v >= 0; --v) {
    auto i = static_cast<std::size_t>(v);
    if ((!a.is_zero() && a.degree_in(i) > 0) || (!b.is_zero() && b.degree_in(i) > 0)) return v;
  }
  return -1;
}

LaurentPoly gcd_rec(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly content_in(const LaurentPoly& p, std::size_t v) {
  LaurentPoly g(p.vars());
  for (int k = p.degree_in(v); k >= 0; --k) {
    LaurentPoly c = p.coeff_in(v, k);
    if (c.is_zero()) continue;
    g = gcd_rec(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

LaurentPoly primitive_in(const LaurentPoly& p, std::size_t v) {
  LaurentPoly c = content_in(p, v);
  return *exact_div(p, c);
}

LaurentPoly gcd_rec(const LaurentPoly& a0, const LaurentPoly& b0) {
  if (a0.is_zero()) return monic(strip_monomial(b0));
  if (b0.is_zero()) return monic(strip_monomial(a0));
  LaurentPoly a = strip_monomial(a0);
  LaurentPoly b = strip_monomial(b0);
  int top = top_var(a, b);
  if (top < 0) return LaurentPoly::constant(a.vars(), 1);
  auto v = static_cast<std::size_t>(top);
  if (a.degree_in(v) == 0) return gcd_rec(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd_rec(content_in(a, v), b);
  LaurentPoly ca = content_in(a, v);
  LaurentPoly cb = content_in(b, v);
  LaurentPoly c = gcd_rec(ca, cb);
  LaurentPoly pa = *exact_div(a, ca);
  LaurentPoly pb = *exact_div(b, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    if (pb.degree_in(v) == 0) {
      pa = LaurentPoly::constant(a.vars(), 1);
      break;
    }
    // pseudo-remainder of pa by pb in v
    int db = pb.degree_in(v);
    LaurentPoly lcb = pb.coeff_in(v, db);
    LaurentPoly r = pa;
    while (!r.is_zero() && r.degree_in(v) >= db) {
      int dr = r.degree_in(v);
      LaurentPoly lcr = r.coeff_in(v, dr);
      Exponent sh(a.nvars(), 0);
      sh[v] = dr - db;
      r = lcb * r - lcr * pb.shifted(sh);
    }
    pa = pb;
    pb = r.is_zero() ? r : monic(primitive_in(strip_monomial(r), v));
  }
  return monic(strip_monomial(primitive_in(pa, v) * c));
}

}  // namespace

std::pair<LaurentPoly, LaurentPoly> divmod_lex(const LaurentPoly& a0, const LaurentPoly& b0) {
  if (b0.is_zero()) throw std::domain_error("division by zero polynomial");
  VarList vars = a0.nvars() >= b0.nvars() ? a0.vars() : b0.vars();
  LaurentPoly a = promote(a0, vars);
  LaurentPoly b = promote(b0, vars);
  Exponent ma = a.min_exponents();
  Exponent mb = b.min_exponents();
  auto [q, r] = divmod_poly(a.shifted(negated(ma)), b.shifted(negated(mb)));
  Exponent qs(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) qs[i] = ma[i] - mb[i];
  return {q.shifted(qs), r.shifted(ma)};
}

std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  auto [q, r] = divmod_lex(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars() != b.vars()) {
    VarList vars = a.nvars() >= b.nvars() ? a.vars() : b.vars();
    return gcd_rec(promote(a, vars), promote(b, vars));
  }
  return gcd_rec(a, b);
}

}  // namespace eqwb
