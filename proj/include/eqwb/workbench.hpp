#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "eqwb/shift_algebra.hpp"

namespace eqwb {

/// One verified (or refuted) identity with both sides in normal form.
struct CheckResult {
  std::string case_name;
  std::string relation;
  bool verified = false;
  std::string lhs;
  std::string rhs;
};

// ---- Kostant slice -------------------------------------------------------

struct CentralizerSolution {
  std::string group;  // "SL2" or "PGL2"
  LawKind law = LawKind::Additive;
  VarList free_params;     // a, x
  RatFunc constraint;      // value of the Borel parameter b
  bool annihilates = false;  // Ad_g(M) - M vanishes after substitution
};

/// Solves Ad_g(M) = M for the lower-left Borel entry b of g = [[a,0],[b,*]],
/// where M is x + f (additive) or x*f (multiplicative) for the principal nilpotent f.
CentralizerSolution kostant_centralizer_solve(const std::string& group, LawKind law);

// ---- Coulomb branches ----------------------------------------------------

struct CoulombPresentation {
  std::string name;  // "3d" or "4d"
  std::shared_ptr<const ShiftContext> context;
  std::vector<std::string> generator_names;
  std::map<std::string, ShiftElement> atoms;  // generators plus auxiliary symbols
  std::vector<std::pair<std::string, std::string>> relations;
  /// Z/2 involution: x_n -> x_{-n} and this substitution on coefficients.
  std::string involution;
};

bool operator==(const CoulombPresentation& a, const CoulombPresentation& b);

/// Phi = x^2, U = t + t^-1, V = x^-1 (t - t^-1) with g(x) t^n = t^n g(x + n h).
CoulombPresentation coulomb_3d();
/// Psi = x + x^-1, W = t + t^-1, Z = (x - x^-1)^-1 (t - t^-1) with g(x) t^n = t^n g(q^n x).
CoulombPresentation coulomb_4d();
/// Commutation rules of x and t behind the 3d relations.
std::vector<std::pair<std::string, std::string>> coulomb_3d_commutation_relations();
/// Relations of the 4d presentation as they hold in the model.
std::vector<std::pair<std::string, std::string>> coulomb_4d_corrected_relations();

std::vector<CheckResult> verify_relations(const CoulombPresentation& p,
                                          const std::vector<std::pair<std::string, std::string>>& relations,
                                          const std::string& case_name);
/// Each generator is fixed by the involution.
std::vector<CheckResult> check_involution(const CoulombPresentation& p);

struct PoissonBracket {
  std::string left;
  std::string right;
  std::string derived;   // first-order coefficient of the commutator at the classical point
  std::string expected;
  bool verified = false;
};

struct ClassicalLimit {
  std::vector<CheckResult> relations;  // commutative relations at the classical point
  std::vector<PoissonBracket> brackets;
  bool jacobi = false;
};

/// h -> 0 (3d) or q -> 1 (4d). Brackets are extracted for 3d only.
ClassicalLimit classical_limit(const CoulombPresentation& p);

/// {f, g} on Q[vars] from brackets of the variables (antisymmetric table).
LaurentPoly poisson_bracket(const LaurentPoly& f, const LaurentPoly& g,
                            const std::map<std::pair<std::string, std::string>, LaurentPoly>& table);

// ---- Witt vectors --------------------------------------------------------

/// Components x_1..x_{n-1} -> ghost components p_k = -k [t^k] log(sum_j x_j (-t)^j),
/// the Newton power sums.
std::vector<LaurentPoly> witt_ghost(int n, const std::vector<LaurentPoly>& components);
/// Ghost components in the generic variables x1..x_{n-1}.
std::vector<LaurentPoly> witt_ghost_symbolic(int n);
std::vector<LaurentPoly> witt_from_ghost(int n, const std::vector<LaurentPoly>& ghost);
/// (x y)_k = sum_{i+j=k} x_i y_j with x_0 = y_0 = 1.
std::vector<LaurentPoly> witt_multiply(const std::vector<LaurentPoly>& x, const std::vector<LaurentPoly>& y);

// ---- Affine blowups ------------------------------------------------------

/// (y^n - 1)/c = (y - 1)/c + (y^{n-1} - 1)/c + c (y - 1)/c (y^{n-1} - 1)/c for n = 2..n_max,
/// with c the Euler class of the simple root of a rank-1 datum.
std::vector<CheckResult> blowup_identity_check(const RootDatum& datum, const GroupLaw& law, int n_max = 8);

struct BlowupPresentation {
  std::string name;   // e.g. "Omega S^3 additive"
  std::string group;  // SL2 or PGL2
  LawKind law;
  int lattice_index;  // y^k - 1 in the generator
  std::string generator;  // expected fraction g = (y^k - 1)/c
  std::string degenerate_relation;  // what c*g = y^k - 1 becomes once c vanishes
};

std::vector<BlowupPresentation> blowup_presentations();
std::vector<CheckResult> check_blowup_presentation(const BlowupPresentation& p);

}  // namespace eqwb
