#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "eqwb/action.hpp"
#include "eqwb/group_law.hpp"

namespace eqwb {

/// Coordinates and twist rule shared by the elements of one shift algebra.
///
/// Base coordinates y_1..y_r are functions on the torus; `param` is the
/// deformation coordinate (h for additive, q for multiplicative, t for a
/// formal law). The twist of a coweight lambda sends y_i to
/// y_i +_F [lambda_i]_F(param): y + n*h additively and y * q^n multiplicatively.
class ShiftContext {
 public:
  ShiftContext(GroupLaw law, VarList base, std::string param);

  const GroupLaw& law() const { return law_; }
  const VarList& base() const { return base_; }
  const std::string& param() const { return param_; }
  /// base followed by param.
  const VarList& vars() const { return vars_; }
  int rank() const { return static_cast<int>(base_.size()); }

  RatFunc twist(const std::vector<int>& lambda, const RatFunc& g) const;
  /// Value of g at the identity of the torus (y = 0 or Y = 1).
  RatFunc at_identity(const RatFunc& g) const;
  RatFunc coefficient(const std::string& text) const { return RatFunc::parse(vars_, text); }

  friend bool operator==(const ShiftContext& a, const ShiftContext& b) {
    return a.law_ == b.law_ && a.base_ == b.base_ && a.param_ == b.param_;
  }

 private:
  GroupLaw law_;
  VarList base_;
  std::string param_;
  VarList vars_;
};

/// Element sum_lambda x_lambda * g_lambda in normal form (lattice monomial
/// on the left), with g * x_mu = x_mu * mu^*(g).
class ShiftElement {
 public:
  using Key = std::vector<int>;
  using TermMap = std::map<Key, RatFunc>;

  explicit ShiftElement(std::shared_ptr<const ShiftContext> ctx);
  ShiftElement(std::shared_ptr<const ShiftContext> ctx, TermMap terms);

  static ShiftElement scalar(std::shared_ptr<const ShiftContext> ctx, const RatFunc& g);
  static ShiftElement monomial(std::shared_ptr<const ShiftContext> ctx, const Key& lambda, const RatFunc& g);
  /// Rank-1 shorthand for x_n.
  static ShiftElement shift(std::shared_ptr<const ShiftContext> ctx, int n);

  const std::shared_ptr<const ShiftContext>& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Only the zero coweight appears and its coefficient involves no base variable.
  bool is_central_scalar() const;

  ShiftElement operator-() const;
  ShiftElement& operator+=(const ShiftElement& o);
  ShiftElement& operator-=(const ShiftElement& o);
  friend ShiftElement operator+(ShiftElement a, const ShiftElement& b) { return a += b; }
  friend ShiftElement operator-(ShiftElement a, const ShiftElement& b) { return a -= b; }
  friend ShiftElement operator*(const ShiftElement& a, const ShiftElement& b);
  friend bool operator==(const ShiftElement& a, const ShiftElement& b);
  friend bool operator!=(const ShiftElement& a, const ShiftElement& b) { return !(a == b); }

  ShiftElement pow(int n) const;
  /// Apply a ring map to every coefficient (e.g. h -> 0); the result may
  /// live in a degenerate, commutative algebra.
  ShiftElement map_coefficients(const Substitution& s) const;
  /// x_lambda -> x_{M lambda}, g -> s(g).
  ShiftElement involute(const IntMatrix& lattice_map, const Substitution& s) const;

  /// "t^2*(x + h) - t^-1*(1/2)" style, with t the rank-1 shift symbol.
  std::string to_string() const;

 private:
  void add_term(const Key& k, const RatFunc& g);
  std::shared_ptr<const ShiftContext> ctx_;
  TermMap terms_;
};

ShiftElement commutator(const ShiftElement& a, const ShiftElement& b);

/// Module of the Mellin representation: lattice group ring with
/// coefficients in the deformation parameter.
using MellinModule = GroupRing<RatFunc>;

/// (x_lambda g) . (x^nu c) = x^{lambda+nu} (nu^* g)(identity) c.
MellinModule mellin_act(const ShiftElement& a, const MellinModule& m);

/// e a_1 e a_2 ... e a_k e applied to m, where e averages over the finite
/// group of lattice automorphisms `symmetries` (the group itself).
MellinModule spherical_act(const std::vector<ShiftElement>& factors, const std::vector<IntMatrix>& symmetries,
                           const MellinModule& m);
MellinModule symmetrize_module(const std::vector<IntMatrix>& symmetries, const MellinModule& m);

/// Evaluates expressions such as "[Phi,V] - 2*h*U + h^2*V" over named
/// elements. Supports + - * / (by central scalars), integer powers,
/// commutators [A,B], parentheses, rational numbers and the context's
/// coordinates.
ShiftElement evaluate_expression(const std::shared_ptr<const ShiftContext>& ctx,
                                 const std::map<std::string, ShiftElement>& atoms, const std::string& text);

struct DeRhamTable {
  GroupLaw law;
  std::string param;
  std::map<int, LaurentPoly> weights;  // n -> [n]_F(param)
  bool truncation_lost = false;
  bool homomorphic = false;  // [n+m] = [n] +_F [m] throughout the table
};

/// x^n dx -> [n]_F x^n dx for |n| <= n_max, specialised at h (additive),
/// q - 1 (multiplicative) or t (formal).
DeRhamTable f_de_rham(const GroupLaw& law, int n_max);

}  // namespace eqwb
