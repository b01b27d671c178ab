#include <doctest.h>

#include "eqwb/workbench.hpp"
#include "generators.hpp"

using namespace eqwb;
using eqwb::testing::Rng;

namespace {

bool all_verified(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.verified) return false;
  }
  return !results.empty();
}

const CheckResult& find(const std::vector<CheckResult>& results, const std::string& prefix) {
  for (const auto& r : results) {
    if (r.relation.rfind(prefix, 0) == 0) return r;
  }
  throw std::out_of_range(prefix);
}

}  // namespace

TEST_CASE("Kostant centralizer: all four Borel entries") {
  struct Case {
    const char* group;
    LawKind law;
    const char* b;
  };
  for (const auto& c : {Case{"SL2", LawKind::Additive, "(a - a^-1)/(2*x)"}, Case{"PGL2", LawKind::Additive, "(a - 1)/x"},
                        Case{"SL2", LawKind::Multiplicative, "(a - a^-1)/(x^2 - 1)"},
                        Case{"PGL2", LawKind::Multiplicative, "(a - 1)/(x - 1)"}}) {
    const CentralizerSolution s = kostant_centralizer_solve(c.group, c.law);
    CHECK(s.annihilates);
    CHECK(s.constraint == RatFunc::parse(s.free_params, c.b));
  }
  CHECK_THROWS(kostant_centralizer_solve("SL3", LawKind::Additive));
}

TEST_CASE("3d Coulomb branch") {
  const CoulombPresentation p = coulomb_3d();
  CHECK(all_verified(verify_relations(p, p.relations, "3d")));
  CHECK(all_verified(verify_relations(p, coulomb_3d_commutation_relations(), "3d")));
  CHECK(all_verified(check_involution(p)));
  // A deliberately wrong relation is refuted.
  CHECK_FALSE(all_verified(verify_relations(p, {{"[U,V]", "-h*V^2"}}, "3d")));
  // V normal form: t (x+h)^-1 - t^-1 (x-h)^-1.
  CHECK(p.atoms.at("V") == evaluate_expression(p.context, p.atoms, "t*(x+h)^-1 - t^-1*(x-h)^-1"));

  const ClassicalLimit limit = classical_limit(p);
  CHECK(all_verified(limit.relations));
  REQUIRE(limit.brackets.size() == 3);
  for (const auto& b : limit.brackets) CHECK(b.verified);
  CHECK(limit.jacobi);
}

TEST_CASE("4d Coulomb branch: commutators with Psi hold, printed [Z,W] has the opposite sign") {
  const CoulombPresentation p = coulomb_4d();
  const auto printed = verify_relations(p, p.relations, "4d");
  CHECK(find(printed, "[Psi,W]").verified);
  CHECK(find(printed, "[Psi,Z]").verified);
  CHECK_FALSE(find(printed, "[Z,W]").verified);
  CHECK_FALSE(find(printed, "(W+2)").verified);
  // [Z,W] computed equals minus the displayed right-hand side.
  const ShiftElement zw = evaluate_expression(p.context, p.atoms, "[Z,W]");
  const ShiftElement rhs = evaluate_expression(p.context, p.atoms, p.relations[2].second);
  CHECK(zw == -rhs);
  CHECK(all_verified(verify_relations(p, coulomb_4d_corrected_relations(), "4d")));
  CHECK(all_verified(check_involution(p)));
  CHECK(all_verified(classical_limit(p).relations));
}

TEST_CASE("Poisson bracket on polynomials") {
  const VarList v{"a", "b"};
  std::map<std::pair<std::string, std::string>, LaurentPoly> table{{{"a", "b"}, LaurentPoly::constant(v, 1)}};
  const LaurentPoly a = LaurentPoly::variable(v, "a");
  const LaurentPoly b = LaurentPoly::variable(v, "b");
  CHECK(poisson_bracket(a, b, table) == LaurentPoly::constant(v, 1));
  CHECK(poisson_bracket(b, a, table) == LaurentPoly::constant(v, -1));
  CHECK(poisson_bracket(a * a, b * b, table) == LaurentPoly::parse(v, "4*a*b"));
}

TEST_CASE("Witt components and ghost coordinates") {
  const auto g2 = witt_ghost_symbolic(2);
  REQUIRE(g2.size() == 1);
  CHECK(g2[0] == LaurentPoly::parse(g2[0].vars(), "x1"));
  const auto g6 = witt_ghost_symbolic(6);
  REQUIRE(g6.size() == 5);
  CHECK(g6[4] == RatFunc::parse(g6[4].vars(), "x1^5 - 5*x1^3*x2 + 5*x1^2*x3 - 5*x1*(x4 - x2^2) - 5*x2*x3 + 5*x5").to_laurent());
  CHECK(witt_from_ghost(6, g6) == [&] {
    std::vector<LaurentPoly> x;
    for (const auto& name : g6[0].vars()) x.push_back(LaurentPoly::variable(g6[0].vars(), name));
    return x;
  }());

  Rng rng(41);
  for (int k = 0; k < 30; ++k) {
    const int n = 2 + k % 7;
    std::vector<LaurentPoly> x;
    std::vector<LaurentPoly> y;
    for (int i = 1; i < n; ++i) {
      x.push_back(LaurentPoly::scalar(eqwb::testing::random_rational(rng)));
      y.push_back(LaurentPoly::scalar(eqwb::testing::random_rational(rng)));
    }
    const auto gx = witt_ghost(n, x);
    const auto gy = witt_ghost(n, y);
    const auto gxy = witt_ghost(n, witt_multiply(x, y));
    for (std::size_t i = 0; i < gx.size(); ++i) CHECK((gxy[i] - gx[i] - gy[i]).is_zero());
  }
  CHECK_THROWS(witt_ghost(1, {}));
}

TEST_CASE("blowup identity and rank-1 presentations") {
  for (const char* family : {"SL2", "PGL2"}) {
    for (const GroupLaw& law : {GroupLaw::additive(), GroupLaw::multiplicative()}) {
      const auto r = blowup_identity_check(RootDatum::build(family, 1), law, 8);
      CHECK(r.size() == 7);
      CHECK(all_verified(r));
    }
  }
  const auto presentations = blowup_presentations();
  CHECK(presentations.size() == 4);
  for (const auto& p : presentations) CHECK(all_verified(check_blowup_presentation(p)));
  CHECK_THROWS(blowup_identity_check(RootDatum::build("A", 2), GroupLaw::additive(), 3));
}
