#include "eqwb/action.hpp"

#include <stdexcept>

namespace eqwb {

Substitution::Substitution(VarList vars, std::vector<RatFunc> images) : vars_(std::move(vars)) {
  if (images.size() != vars_.size()) throw std::invalid_argument("substitution needs one image per variable");
  for (auto& img : images) images_.push_back(img.with_vars(vars_));
}

Substitution Substitution::identity(const VarList& vars) {
  std::vector<RatFunc> images;
  for (const auto& v : vars) images.emplace_back(LaurentPoly::variable(vars, v));
  return {vars, std::move(images)};
}

Substitution Substitution::parse(const VarList& vars, const std::string& text) {
  Substitution s = identity(vars);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? text.size() : comma + 1;
    std::size_t arrow = item.find("->");
    if (arrow == std::string::npos) throw std::invalid_argument("expected 'var -> image' in substitution");
    std::string name = item.substr(0, arrow);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    int idx = LaurentPoly(vars).var_index(name);
    if (idx < 0) throw std::invalid_argument("undefined substitution variable: " + name);
    s.images_[static_cast<std::size_t>(idx)] = RatFunc::parse(vars, item.substr(arrow + 2));
  }
  return s;
}

RatFunc Substitution::apply(const RatFunc& p) const {
  RatFunc q = p.with_vars(vars_);
  return q.substitute(images_);
}

LaurentPoly Substitution::apply(const LaurentPoly& p) const {
  RatFunc r = evaluate(p.with_vars(vars_), images_);
  if (!r.is_laurent()) throw std::domain_error("substitution leaves the Laurent ring");
  return r.to_laurent().with_vars(vars_);
}

Substitution Substitution::after(const Substitution& inner) const {
  std::vector<RatFunc> images;
  for (const auto& img : inner.images_) images.push_back(apply(img));
  return {vars_, std::move(images)};
}

GroupAction::GroupAction(VarList vars, std::vector<Substitution> generators, std::size_t max_order)
    : vars_(std::move(vars)), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.vars() != vars_) throw std::invalid_argument("generator acts on different variables");
  }
  elements_.push_back(Substitution::identity(vars_));
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (const auto& g : generators_) {
      Substitution h = g.after(elements_[i]);
      bool known = false;
      for (const auto& e : elements_) {
        if (e == h) {
          known = true;
          break;
        }
      }
      if (known) continue;
      elements_.push_back(std::move(h));
      if (elements_.size() > max_order) throw std::invalid_argument("group generated by the action is too large");
    }
  }
}

RatFunc GroupAction::symmetrize(const RatFunc& p) const {
  RatFunc sum = RatFunc(LaurentPoly(vars_));
  for (const auto& g : elements_) sum += g.apply(p);
  return sum * RatFunc::scalar(Rational(1) / Rational(static_cast<long>(elements_.size())));
}

bool GroupAction::is_invariant(const RatFunc& p) const {
  for (const auto& g : generators_) {
    if (g.apply(p) != p) return false;
  }
  return true;
}

}  // namespace eqwb
