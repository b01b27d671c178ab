#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eqwb/rational.hpp"

namespace eqwb {

using Exponent = std::vector<int>;
using VarList = std::vector<std::string>;

/// Multivariate Laurent polynomial over the rationals.
///
/// Terms are kept in descending lexicographic order of exponent vectors
/// (with respect to the variable list), so begin() is the lex-leading term.
/// A polynomial with an empty variable list is a scalar and combines with
/// any other polynomial.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Rational, std::greater<Exponent>>;

  LaurentPoly() = default;
  explicit LaurentPoly(VarList vars);
  LaurentPoly(VarList vars, TermMap terms);

  static LaurentPoly constant(VarList vars, const Rational& c);
  static LaurentPoly scalar(const Rational& c) { return constant({}, c); }
  static LaurentPoly monomial(VarList vars, Exponent exp, const Rational& c = 1);
  static LaurentPoly variable(VarList vars, std::string_view name, int power = 1);

  const VarList& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t nvars() const { return vars_.size(); }
  std::size_t size() const { return terms_.size(); }
  int var_index(std::string_view name) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// True when no exponent is negative.
  bool is_polynomial() const;
  Rational constant_term() const;
  Rational coeff(const Exponent& e) const;

  /// Lex-leading exponent and coefficient; undefined on zero.
  const Exponent& leading_exponent() const { return terms_.begin()->first; }
  const Rational& leading_coeff() const { return terms_.begin()->second; }

  int degree_in(std::size_t var) const;
  int min_degree_in(std::size_t var) const;
  int total_degree() const;
  /// Componentwise minimum of exponents (zero vector for zero).
  Exponent min_exponents() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Negative powers are allowed only for monomials.
  LaurentPoly pow(int n) const;
  /// Multiply by the monomial x^shift.
  LaurentPoly shifted(const Exponent& shift) const;

  /// Ring map sending variable i to images[i]; all images share a variable
  /// list. Negative exponents require monomial images.
  LaurentPoly substitute(const std::vector<LaurentPoly>& images) const;
  /// Replace one variable by a polynomial (keeps the variable list).
  LaurentPoly substitute(std::string_view var, const LaurentPoly& image) const;
  /// Re-express in a larger (or permuted) variable list containing all used variables.
  LaurentPoly with_vars(const VarList& vars) const;
  /// Keep only terms of total degree <= order (nonnegative exponents assumed).
  LaurentPoly truncated(int order) const;
  /// Coefficient of var^k viewed as a polynomial in the remaining variables.
  LaurentPoly coeff_in(std::size_t var, int k) const;

  std::string to_string() const;
  static LaurentPoly parse(const VarList& vars, std::string_view text);

 private:
  void adopt_vars(const LaurentPoly& o);
  VarList vars_;
  TermMap terms_;
};

/// Quotient and remainder of lexicographic division of `a` by `b`.
/// Laurent inputs are first shifted to honest polynomials; the identity
/// a = quotient * b + remainder holds exactly.
std::pair<LaurentPoly, LaurentPoly> divmod_lex(const LaurentPoly& a, const LaurentPoly& b);

/// a / b when b divides a in the Laurent ring, otherwise nullopt.
std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// Monic (lex-leading coefficient 1) gcd of two polynomials, computed by
/// recursive content extraction and primitive pseudo-remainder sequences.
/// Monomial factors are ignored: the result has no variable as a factor.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Union of two variable lists, preserving the order of the first.
VarList merge_vars(const VarList& a, const VarList& b);

std::string format_monomial(const VarList& vars, const Exponent& e);

}  // namespace eqwb
