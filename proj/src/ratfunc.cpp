#include "eqwb/ratfunc.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace eqwb {

namespace {

Exponent negated(const Exponent& e) {
  Exponent r(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) r[i] = -e[i];
  return r;
}

Exponent difference(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

VarList common_vars(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars() == b.vars() || b.nvars() == 0) return a.vars();
  if (a.nvars() == 0) return b.vars();
  throw std::invalid_argument("variable mismatch");
}

}  // namespace

RatFunc::RatFunc(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::constant(num_.vars(), 1)) {}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void RatFunc::normalize() {
  if (den_.is_zero()) throw std::domain_error("division by zero polynomial");
  VarList vars = common_vars(num_, den_);
  if (num_.vars() != vars) num_ = LaurentPoly::constant(vars, 0) + num_;
  if (den_.vars() != vars) den_ = LaurentPoly::constant(vars, 0) + den_;
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(vars, 1);
    return;
  }
  Exponent mn = num_.min_exponents();
  Exponent md = den_.min_exponents();
  LaurentPoly n = num_.shifted(negated(mn));
  LaurentPoly d = den_.shifted(negated(md));
  if (!d.is_constant()) {
    LaurentPoly g = poly_gcd(n, d);
    if (!g.is_constant()) {
      n = *exact_div(n, g);
      d = *exact_div(d, g);
    }
  }
  Rational lc = d.leading_coeff();
  n *= 1 / lc;
  d *= 1 / lc;
  num_ = n.shifted(difference(mn, md));
  den_ = d;
}

bool RatFunc::is_laurent() const { return den_.is_constant(); }

LaurentPoly RatFunc::to_laurent() const {
  if (!is_laurent()) throw std::domain_error("not a Laurent polynomial: " + to_string());
  return num_;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_laurent() && o.is_laurent()) {
    num_ = num_ * o.num_ * (1 / (den_.constant_term() * o.den_.constant_term()));
    den_ = LaurentPoly::constant(num_.vars(), 1);
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero polynomial");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RatFunc r(LaurentPoly::constant(vars(), 1));
  RatFunc base = *this;
  while (n > 0) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return r;
}

RatFunc evaluate(const LaurentPoly& p, const std::vector<RatFunc>& images) {
  if (images.size() != p.nvars()) throw std::invalid_argument("substitution arity mismatch");
  VarList target;
  for (const auto& im : images) {
    if (im.vars().empty()) continue;
    if (target.empty()) target = im.vars();
    else if (target != im.vars()) throw std::invalid_argument("substitution images disagree on variables");
  }
  auto lift = [&](const LaurentPoly& q) { return q.nvars() == 0 ? LaurentPoly::constant(target, q.constant_term()) : q; };
  const std::size_t n = images.size();
  // Clear denominators: multiply through by prod d_i^{P_i} n_i^{N_i}.
  std::vector<int> maxpos(n, 0);
  std::vector<int> maxneg(n, 0);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      maxpos[i] = std::max(maxpos[i], e[i]);
      maxneg[i] = std::max(maxneg[i], -e[i]);
    }
  }
  std::vector<LaurentPoly> nums(n);
  std::vector<LaurentPoly> dens(n);
  std::vector<bool> unit_num(n);
  for (std::size_t i = 0; i < n; ++i) {
    nums[i] = lift(images[i].num());
    dens[i] = lift(images[i].den());
    unit_num[i] = nums[i].is_monomial();
    if (maxneg[i] > 0 && nums[i].is_zero()) throw std::domain_error("division by zero polynomial");
  }
  std::map<std::pair<std::size_t, int>, LaurentPoly> ncache;
  std::map<std::pair<std::size_t, int>, LaurentPoly> dcache;
  auto npow = [&](std::size_t i, int k) -> const LaurentPoly& {
    auto key = std::make_pair(i, k);
    auto it = ncache.find(key);
    if (it != ncache.end()) return it->second;
    return ncache.emplace(key, nums[i].pow(k)).first->second;
  };
  auto dpow = [&](std::size_t i, int k) -> const LaurentPoly& {
    auto key = std::make_pair(i, k);
    auto it = dcache.find(key);
    if (it != dcache.end()) return it->second;
    return dcache.emplace(key, dens[i].pow(k)).first->second;
  };
  LaurentPoly num = LaurentPoly::constant(target, 0);
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly t = LaurentPoly::constant(target, c);
    for (std::size_t i = 0; i < n; ++i) {
      // monomial numerators are units and may carry negative powers directly
      int nk = unit_num[i] ? e[i] : e[i] + maxneg[i];
      if (nk != 0) t *= npow(i, nk);
      int dk = maxpos[i] - e[i];
      if (dk != 0) t *= dpow(i, dk);
    }
    num += t;
  }
  LaurentPoly den = LaurentPoly::constant(target, 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (maxpos[i] > 0) den *= dpow(i, maxpos[i]);
    if (!unit_num[i] && maxneg[i] > 0) den *= npow(i, maxneg[i]);
  }
  return RatFunc(num, den);
}

RatFunc RatFunc::substitute(const std::vector<RatFunc>& images) const {
  return evaluate(num_, images) / evaluate(den_, images);
}

RatFunc RatFunc::substitute(std::string_view var, const RatFunc& image) const {
  int k = num_.var_index(var);
  if (k < 0) throw std::invalid_argument("unknown variable: " + std::string(var));
  std::vector<RatFunc> images;
  for (std::size_t i = 0; i < vars().size(); ++i) {
    if (static_cast<int>(i) == k) {
      images.push_back(image.vars().empty() ? RatFunc(LaurentPoly::constant(vars(), image.num().constant_term() /
                                                                                        image.den().constant_term()))
                                            : image);
    } else {
      images.emplace_back(LaurentPoly::variable(vars(), vars()[i]));
    }
  }
  return substitute(images);
}

RatFunc RatFunc::with_vars(const VarList& vars) const {
  RatFunc r;
  r.num_ = num_.with_vars(vars);
  r.den_ = den_.with_vars(vars);
  return r;
}

std::string RatFunc::to_string() const {
  if (is_laurent()) return (num_ * (1 / den_.constant_term())).to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

class Parser {
 public:
  Parser(const VarList& vars, std::string_view text) : vars_(vars), text_(text) {}

  RatFunc run() {
    RatFunc r = expr();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error (" + what + ") at " + std::to_string(pos_) + " in '" +
                                std::string(text_) + "'");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  RatFunc constant(const Rational& c) const { return RatFunc(LaurentPoly::constant(vars_, c)); }

  RatFunc expr() {
    RatFunc r = term();
    for (;;) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else return r;
    }
  }
  RatFunc term() {
    RatFunc r = unary();
    for (;;) {
      if (eat('*')) r *= unary();
      else if (eat('/')) {
        RatFunc d = unary();
        if (d.is_zero()) fail("division by zero");
        r /= d;
      } else return r;
    }
  }
  RatFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  RatFunc power() {
    RatFunc base = atom();
    if (eat('^')) {
      skip();
      bool neg = false;
      if (eat('-')) neg = true;
      else eat('+');
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      int k = std::stoi(std::string(text_.substr(start, pos_ - start)));
      if (neg) k = -k;
      if (k < 0 && base.is_zero()) fail("negative power of zero");
      return base.pow(k);
    }
    return base;
  }
  RatFunc atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return constant(Rational(std::string(text_.substr(start, pos_ - start)), 10));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      for (const auto& v : vars_) {
        if (v == name) return RatFunc(LaurentPoly::variable(vars_, name));
      }
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const VarList& vars_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc RatFunc::parse(const VarList& vars, std::string_view text) { return Parser(vars, text).run(); }

}  // namespace eqwb
