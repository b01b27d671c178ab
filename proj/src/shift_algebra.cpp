#include "eqwb/shift_algebra.hpp"

#include <cctype>
#include <stdexcept>

namespace eqwb {

ShiftContext::ShiftContext(GroupLaw law, VarList base, std::string param)
    : law_(std::move(law)), base_(std::move(base)), param_(std::move(param)) {
  vars_ = base_;
  vars_.push_back(param_);
  for (std::size_t i = 0; i + 1 < vars_.size(); ++i) {
    for (std::size_t j = i + 1; j < vars_.size(); ++j) {
      if (vars_[i] == vars_[j]) throw std::invalid_argument("repeated coordinate name: " + vars_[i]);
    }
  }
}

RatFunc ShiftContext::twist(const std::vector<int>& lambda, const RatFunc& g) const {
  if (static_cast<int>(lambda.size()) != rank()) throw std::invalid_argument("coweight of wrong rank");
  LaurentPoly p = LaurentPoly::variable(vars_, param_);
  std::vector<RatFunc> images;
  for (int i = 0; i < rank(); ++i) {
    LaurentPoly y = LaurentPoly::variable(vars_, base_[static_cast<std::size_t>(i)]);
    const int n = lambda[static_cast<std::size_t>(i)];
    switch (law_.kind()) {
      case LawKind::Additive: images.emplace_back(y + p * Rational(n)); break;
      case LawKind::Multiplicative: images.emplace_back(y * p.pow(n)); break;
      case LawKind::Formal: images.emplace_back(law_.add(y, law_.n_series_at(n, p))); break;
    }
  }
  images.emplace_back(p);
  return g.with_vars(vars_).substitute(images);
}

RatFunc ShiftContext::at_identity(const RatFunc& g) const {
  std::vector<RatFunc> images;
  const Rational unit = law_.kind() == LawKind::Multiplicative ? 1 : 0;
  for (int i = 0; i < rank(); ++i) images.emplace_back(LaurentPoly::constant(vars_, unit));
  images.emplace_back(LaurentPoly::variable(vars_, param_));
  return g.with_vars(vars_).substitute(images);
}

ShiftElement::ShiftElement(std::shared_ptr<const ShiftContext> ctx) : ctx_(std::move(ctx)) {}

ShiftElement::ShiftElement(std::shared_ptr<const ShiftContext> ctx, TermMap terms) : ctx_(std::move(ctx)) {
  for (const auto& [k, g] : terms) add_term(k, g);
}

ShiftElement ShiftElement::scalar(std::shared_ptr<const ShiftContext> ctx, const RatFunc& g) {
  Key zero(static_cast<std::size_t>(ctx->rank()), 0);
  return monomial(std::move(ctx), zero, g);
}

ShiftElement ShiftElement::monomial(std::shared_ptr<const ShiftContext> ctx, const Key& lambda, const RatFunc& g) {
  if (static_cast<int>(lambda.size()) != ctx->rank()) throw std::invalid_argument("coweight of wrong rank");
  ShiftElement e(std::move(ctx));
  e.add_term(lambda, g);
  return e;
}

ShiftElement ShiftElement::shift(std::shared_ptr<const ShiftContext> ctx, int n) {
  if (ctx->rank() != 1) throw std::invalid_argument("shift(n) needs a rank-1 context");
  RatFunc one(LaurentPoly::constant(ctx->vars(), 1));
  return monomial(std::move(ctx), {n}, one);
}

void ShiftElement::add_term(const Key& k, const RatFunc& g) {
  RatFunc c = g.with_vars(ctx_->vars());
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(k, std::move(c));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool ShiftElement::is_central_scalar() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& [k, g] = *terms_.begin();
  for (int v : k) {
    if (v != 0) return false;
  }
  for (const LaurentPoly* p : {&g.num(), &g.den()}) {
    LaurentPoly q = p->with_vars(ctx_->vars());
    for (const auto& [e, c] : q.terms()) {
      for (int i = 0; i < ctx_->rank(); ++i) {
        if (e[static_cast<std::size_t>(i)] != 0) return false;
      }
    }
  }
  return true;
}

ShiftElement ShiftElement::operator-() const {
  ShiftElement r(ctx_);
  for (const auto& [k, g] : terms_) r.terms_.emplace(k, -g);
  return r;
}

ShiftElement& ShiftElement::operator+=(const ShiftElement& o) {
  for (const auto& [k, g] : o.terms_) add_term(k, g);
  return *this;
}

ShiftElement& ShiftElement::operator-=(const ShiftElement& o) {
  for (const auto& [k, g] : o.terms_) add_term(k, -g);
  return *this;
}

ShiftElement operator*(const ShiftElement& a, const ShiftElement& b) {
  ShiftElement r(a.ctx_);
  for (const auto& [ka, ga] : a.terms_) {
    for (const auto& [kb, gb] : b.terms_) {
      ShiftElement::Key k = ka;
      for (std::size_t i = 0; i < k.size(); ++i) k[i] += kb[i];
      r.add_term(k, a.ctx_->twist(kb, ga) * gb);
    }
  }
  return r;
}

bool operator==(const ShiftElement& a, const ShiftElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ib = b.terms_.begin();
  for (const auto& [k, g] : a.terms_) {
    if (ib->first != k || ib->second != g) return false;
    ++ib;
  }
  return true;
}

ShiftElement ShiftElement::pow(int n) const {
  ShiftElement base = *this;
  if (n < 0) {
    if (terms_.size() != 1) throw std::domain_error("only single-term elements are invertible");
    const auto& [k, g] = *terms_.begin();
    Key neg = k;
    for (int& v : neg) v = -v;
    base = monomial(ctx_, neg, ctx_->twist(neg, g.inverse()));
    n = -n;
  }
  ShiftElement result = scalar(ctx_, RatFunc(LaurentPoly::constant(ctx_->vars(), 1)));
  for (int i = 0; i < n; ++i) result = result * base;
  return result;
}

ShiftElement ShiftElement::map_coefficients(const Substitution& s) const {
  ShiftElement r(ctx_);
  for (const auto& [k, g] : terms_) r.add_term(k, s.apply(g));
  return r;
}

ShiftElement ShiftElement::involute(const IntMatrix& lattice_map, const Substitution& s) const {
  ShiftElement r(ctx_);
  for (const auto& [k, g] : terms_) {
    IntVector v = Eigen::Map<const IntVector>(k.data(), static_cast<Eigen::Index>(k.size()));
    IntVector image = lattice_map * v;
    r.add_term(Key(image.data(), image.data() + image.size()), s.apply(g));
  }
  return r;
}

std::string ShiftElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, g] = *it;
    std::string mono;
    bool trivial = true;
    for (int v : k) trivial = trivial && v == 0;
    if (!trivial) {
      if (k.size() == 1) {
        mono = k[0] == 1 ? "t" : "t^" + std::to_string(k[0]);
      } else {
        mono = "t^(";
        for (std::size_t i = 0; i < k.size(); ++i) mono += (i ? "," : "") + std::to_string(k[i]);
        mono += ")";
      }
    }
    std::string coeff = "(" + g.to_string() + ")";
    if (!out.empty()) out += " + ";
    out += mono.empty() ? coeff : mono + "*" + coeff;
  }
  return out;
}

ShiftElement commutator(const ShiftElement& a, const ShiftElement& b) { return a * b - b * a; }

MellinModule mellin_act(const ShiftElement& a, const MellinModule& m) {
  const ShiftContext& ctx = *a.context();
  MellinModule r(ctx.rank());
  for (const auto& [lambda, g] : a.terms()) {
    for (const auto& [nu, c] : m.terms()) {
      std::vector<int> key = lambda;
      for (std::size_t i = 0; i < key.size(); ++i) key[i] += nu[i];
      r.add_term(key, ctx.at_identity(ctx.twist(nu, g)) * c);
    }
  }
  return r;
}

MellinModule symmetrize_module(const std::vector<IntMatrix>& symmetries, const MellinModule& m) {
  if (symmetries.empty()) throw std::invalid_argument("empty symmetry group");
  MellinModule r(m.rank());
  const RatFunc weight = RatFunc::scalar(Rational(1) / Rational(static_cast<long>(symmetries.size())));
  for (const IntMatrix& g : symmetries) {
    for (const auto& [nu, c] : m.terms()) {
      IntVector v = g * Eigen::Map<const IntVector>(nu.data(), static_cast<Eigen::Index>(nu.size()));
      r.add_term(std::vector<int>(v.data(), v.data() + v.size()), c * weight);
    }
  }
  return r;
}

MellinModule spherical_act(const std::vector<ShiftElement>& factors, const std::vector<IntMatrix>& symmetries,
                           const MellinModule& m) {
  MellinModule r = symmetrize_module(symmetries, m);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) r = symmetrize_module(symmetries, mellin_act(*it, r));
  return r;
}

namespace {

class ExpressionParser {
 public:
  ExpressionParser(const std::shared_ptr<const ShiftContext>& ctx, const std::map<std::string, ShiftElement>& atoms,
                   const std::string& text)
      : ctx_(ctx), atoms_(atoms), text_(text) {}

  ShiftElement parse() {
    ShiftElement e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("expression error at " + std::to_string(pos_) + ": " + msg + " in \"" + text_ + "\"");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  ShiftElement scalar(const RatFunc& g) const { return ShiftElement::scalar(ctx_, g); }

  ShiftElement expr() {
    ShiftElement e = term();
    while (true) {
      if (accept('+')) e += term();
      else if (accept('-')) e -= term();
      else return e;
    }
  }
  ShiftElement term() {
    ShiftElement e = unary();
    while (true) {
      if (accept('*')) {
        e = e * unary();
      } else if (accept('/')) {
        ShiftElement d = unary();
        if (!d.is_central_scalar() || d.is_zero()) fail("division by a non-central or zero element");
        e = e * scalar(d.terms().begin()->second.inverse());
      } else {
        return e;
      }
    }
  }
  ShiftElement unary() {
    if (accept('-')) return -unary();
    return power();
  }
  ShiftElement power() {
    ShiftElement base = primary();
    if (!accept('^')) return base;
    bool negative = accept('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    int n = std::stoi(text_.substr(start, pos_ - start));
    return base.pow(negative ? -n : n);
  }
  ShiftElement primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (accept('(')) {
      ShiftElement e = expr();
      expect(')');
      return e;
    }
    if (accept('[')) {
      ShiftElement a = expr();
      expect(',');
      ShiftElement b = expr();
      expect(']');
      return commutator(a, b);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return scalar(RatFunc(LaurentPoly::constant(ctx_->vars(), Rational(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      if (auto it = atoms_.find(name); it != atoms_.end()) return it->second;
      for (const auto& v : ctx_->vars()) {
        if (v == name) return scalar(RatFunc(LaurentPoly::variable(ctx_->vars(), name)));
      }
      fail("unknown symbol " + name);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::shared_ptr<const ShiftContext> ctx_;
  const std::map<std::string, ShiftElement>& atoms_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

ShiftElement evaluate_expression(const std::shared_ptr<const ShiftContext>& ctx,
                                 const std::map<std::string, ShiftElement>& atoms, const std::string& text) {
  return ExpressionParser(ctx, atoms, text).parse();
}

DeRhamTable f_de_rham(const GroupLaw& law, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  DeRhamTable table{law, "", {}, false, true};
  switch (law.kind()) {
    case LawKind::Additive: table.param = "h"; break;
    case LawKind::Multiplicative: table.param = "q"; break;
    case LawKind::Formal: table.param = "t"; break;
  }
  VarList vars{table.param};
  LaurentPoly coordinate = LaurentPoly::variable(vars, table.param);
  if (law.kind() == LawKind::Multiplicative) coordinate -= LaurentPoly::constant(vars, 1);
  for (int n = -n_max; n <= n_max; ++n) {
    if (law.kind() == LawKind::Formal) {
      Truncated s = law.n_series_checked(n, table.param);
      table.truncation_lost = table.truncation_lost || s.lost;
      table.weights.emplace(n, s.value);
    } else {
      table.weights.emplace(n, law.n_series_at(n, coordinate).with_vars(vars));
    }
  }
  for (int n = -n_max; n <= n_max; ++n) {
    for (int m = -n_max; m <= n_max; ++m) {
      if (std::abs(n + m) > n_max) continue;
      LaurentPoly sum = law.add(table.weights.at(n), table.weights.at(m));
      if (sum.with_vars(vars) != table.weights.at(n + m)) table.homomorphic = false;
    }
  }
  return table;
}

}  // namespace eqwb
