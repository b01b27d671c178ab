#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "eqwb/ratfunc.hpp"
#include "eqwb/root_system.hpp"

namespace eqwb {

enum class LawKind { Additive, Multiplicative, Formal };

std::string to_string(LawKind k);
LawKind parse_law_kind(const std::string& s);

/// Result of a computation that may have dropped terms past the truncation order.
struct Truncated {
  LaurentPoly value;
  bool lost = false;  // true when nonzero terms above the order were discarded
};

/// One-dimensional group law F(u, v) = u + v + sum a_ij u^i v^j.
///
/// Additive and Multiplicative laws are exact. A Formal law is a bivariate
/// series truncated at total degree order().
class GroupLaw {
 public:
  using Coefficients = std::map<std::pair<int, int>, Rational>;

  static GroupLaw additive();
  static GroupLaw multiplicative();
  /// Throws unless the coefficients define a commutative, associative law mod truncation.
  static GroupLaw formal(Coefficients coefficients, int order);
  /// exp(log u + log v) for exp(t) = t + a_2 t^2 + ... + a_N t^N; always a valid law.
  static GroupLaw from_exponential(const std::vector<Rational>& higher_coeffs, int order);
  static GroupLaw random_formal(std::mt19937_64& rng, int order);

  LawKind kind() const { return kind_; }
  int order() const { return order_; }
  const Coefficients& coefficients() const { return coeffs_; }
  bool exact() const { return kind_ != LawKind::Formal; }

  /// F(u, v); for Formal laws both inputs need zero constant term and the
  /// result is truncated at total degree order() in their variables.
  LaurentPoly add(const LaurentPoly& u, const LaurentPoly& v) const;
  Truncated add_checked(const LaurentPoly& u, const LaurentPoly& v) const;

  /// [n]_F(t) as a function of the named variable; exact for Additive and
  /// Multiplicative (a rational function for negative n), truncated for Formal.
  RatFunc n_series(int n, const std::string& var = "t") const;
  Truncated n_series_checked(int n, const std::string& var = "t") const;
  /// [n]_F(u) for an element u with zero constant term.
  LaurentPoly n_series_at(int n, const LaurentPoly& u) const;
  /// Formal inverse i(t) with F(t, i(t)) = 0 (truncated for Formal laws).
  LaurentPoly inverse_series(const std::string& var = "t") const;

  friend bool operator==(const GroupLaw& a, const GroupLaw& b) {
    return a.kind_ == b.kind_ && a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  LawKind kind_ = LawKind::Additive;
  int order_ = 8;
  Coefficients coeffs_;
};

/// Coordinate names for a torus of dimension dim: "x" or x1..xdim.
VarList torus_coordinates(int dim);

/// c_lambda in cocharacter-basis coordinates: sum_F [lambda_i]_F(x_i).
/// Additive: linear form; Multiplicative: x^lambda - 1, the coordinates being the characters x_i;
/// Formal: truncated series.
LaurentPoly euler_class(const GroupLaw& law, const RootDatum& datum, const IntVector& lambda);
LaurentPoly euler_class(const GroupLaw& law, const VarList& coords, const IntVector& lambda);

}  // namespace eqwb
