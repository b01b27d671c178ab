#pragma once

#include <string>
#include <vector>

#include "eqwb/group_law.hpp"

namespace eqwb {

/// Divided-difference operators T_i = (s_i - 1) / c_{alpha_i} on functions
/// of the torus: polynomials in x_1..x_d (additive) or Laurent
/// polynomials in X_1..X_d, X^lambda = e^lambda (multiplicative).
class NilHecke {
 public:
  NilHecke(RootDatum datum, GroupLaw law);

  const RootDatum& datum() const { return datum_; }
  const GroupLaw& law() const { return law_; }
  const VarList& coords() const { return coords_; }

  /// s_alpha acting on functions (alpha given by its index in roots()).
  LaurentPoly reflect(int root, const LaurentPoly& p) const;
  LaurentPoly euler(int root) const;
  /// (s_alpha p - p) / c_alpha; throws std::domain_error if the division is inexact.
  LaurentPoly apply(int root, const LaurentPoly& p) const;
  /// T_{i_1} ... T_{i_k} p with simple letters 1..rank (rightmost acts first).
  LaurentPoly apply_word(const std::vector<int>& letters, const LaurentPoly& p) const;
  /// e^lambda in the multiplicative coordinates.
  LaurentPoly character(const IntVector& lambda) const;

  /// Monomials spanning the test space: x^a with |a| <= degree, or e^lambda with sum |lambda_i| <= degree.
  std::vector<LaurentPoly> spanning_set(int degree) const;

 private:
  RootDatum datum_;
  GroupLaw law_;
  VarList coords_;
};

struct RelationReport {
  std::string relation;
  bool holds = false;
  std::string witness;  // first spanning element with a nonzero discrepancy, and that discrepancy
  int degree_bound = 0;
};

/// Quadratic relation, Leibniz rule, eigenvalue formula on characters
/// (multiplicative) and, for rank 2, both braid forms.
std::vector<RelationReport> nil_hecke_relations_check(const RootDatum& datum, const GroupLaw& law, int degree = 4);

}  // namespace eqwb
