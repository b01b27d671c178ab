#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eqwb/laurent.hpp"

namespace eqwb {

/// Quotient of Laurent polynomials kept in lowest terms.
///
/// Normal form: the denominator is a polynomial with no monomial factor
/// and lex-leading coefficient 1; any monomial unit lives in the numerator.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(LaurentPoly num);  // NOLINT(google-explicit-constructor)
  RatFunc(LaurentPoly num, LaurentPoly den);

  static RatFunc scalar(const Rational& c) { return RatFunc(LaurentPoly::scalar(c)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  const VarList& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  /// Denominator is 1, i.e. the value is a Laurent polynomial.
  bool is_laurent() const;
  /// Value as a Laurent polynomial; throws if not is_laurent().
  LaurentPoly to_laurent() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  /// Cross-multiplication test.
  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc inverse() const;
  RatFunc pow(int n) const;

  /// Ring map sending variable i of vars() to images[i].
  RatFunc substitute(const std::vector<RatFunc>& images) const;
  RatFunc substitute(std::string_view var, const RatFunc& image) const;
  RatFunc with_vars(const VarList& vars) const;

  /// "p" when the denominator is 1, otherwise "(p)/(q)".
  std::string to_string() const;
  /// Arithmetic expression over +, -, *, /, ^ (integer exponents) and parentheses.
  static RatFunc parse(const VarList& vars, std::string_view text);

 private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly::scalar(1);
};

/// Evaluate a Laurent polynomial at rational-function images of its variables.
RatFunc evaluate(const LaurentPoly& p, const std::vector<RatFunc>& images);

}  // namespace eqwb
