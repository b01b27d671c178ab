#include <doctest.h>

#include "eqwb/gkm.hpp"
#include "generators.hpp"

using namespace eqwb;
using eqwb::testing::Rng;

namespace {

const VarList tv{"t"};

LaurentPoly T(const char* text) { return LaurentPoly::parse(tv, text); }

IntVector vec(std::initializer_list<int> v) {
  IntVector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (int x : v) out(i++) = x;
  return out;
}

std::shared_ptr<const MomentGraph> graph(const char* family, int rank, const GroupLaw& law, GraphOptions o) {
  return std::make_shared<const MomentGraph>(RootDatum::build(family, rank), law, std::move(o));
}

Rational binomial(int n, int k) {
  Rational r = 1;
  for (int i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
  return r;
}

}  // namespace

TEST_CASE("n-series of the exact laws") {
  const GroupLaw add = GroupLaw::additive();
  const GroupLaw mult = GroupLaw::multiplicative();
  for (int n = 0; n <= 9; ++n) {
    CHECK(add.n_series(n) == RatFunc(T("t") * Rational(n)));
    LaurentPoly want(tv);
    for (int k = 1; k <= n; ++k) want += LaurentPoly::monomial(tv, {k}, binomial(n, k));
    CHECK(mult.n_series(n) == RatFunc(want));
  }
  CHECK(mult.n_series(3).to_laurent() == T("3*t + 3*t^2 + t^3"));
  CHECK(mult.n_series(-1) == RatFunc::parse(tv, "-t/(1+t)"));
  CHECK(mult.n_series(0).is_zero());
  const VarList uv{"u", "v"};
  const LaurentPoly u = LaurentPoly::variable(uv, "u");
  CHECK(mult.add(u, u) == LaurentPoly::parse(uv, "2*u + u^2"));
  CHECK(mult.add(u, LaurentPoly(uv)) == u);
}

TEST_CASE("random formal group laws satisfy the axioms and n-series additivity") {
  Rng rng(21);
  const VarList uvw{"u", "v", "w"};
  const LaurentPoly u = LaurentPoly::variable(uvw, "u");
  const LaurentPoly v = LaurentPoly::variable(uvw, "v");
  const LaurentPoly w = LaurentPoly::variable(uvw, "w");
  for (int k = 0; k < 5; ++k) {
    const GroupLaw f = GroupLaw::random_formal(rng, 6);
    CHECK(f.add(u, v) == f.add(v, u));
    CHECK(f.add(f.add(u, v), w) == f.add(u, f.add(v, w)));
    CHECK(f.add(u, LaurentPoly(uvw)) == u);
    CHECK(f.add(T("t"), f.inverse_series()).is_zero());
    for (int n = -4; n <= 4; ++n) {
      for (int m = -4; m <= 4; ++m) {
        CHECK(f.n_series(n + m).to_laurent() == f.add(f.n_series(n).to_laurent(), f.n_series(m).to_laurent()));
      }
    }
    CHECK(GroupLaw::formal(f.coefficients(), f.order()) == f);
  }
  GroupLaw::Coefficients bad{{{2, 1}, Rational(1)}};
  CHECK_THROWS(GroupLaw::formal(bad, 4));
}

TEST_CASE("Euler classes") {
  const GroupLaw add = GroupLaw::additive();
  const GroupLaw mult = GroupLaw::multiplicative();
  const RootDatum sl2 = RootDatum::build("SL2", 1);
  const RootDatum pgl2 = RootDatum::build("PGL2", 1);
  const VarList x{"x"};
  CHECK(euler_class(add, sl2, sl2.simple_roots()[0]) == LaurentPoly::parse(x, "x"));
  CHECK(euler_class(add, pgl2, pgl2.simple_roots()[0]) == LaurentPoly::parse(x, "2*x"));
  CHECK(euler_class(mult, pgl2, pgl2.simple_roots()[0]) == LaurentPoly::parse(x, "x^2 - 1"));
  CHECK(euler_class(add, sl2, vec({0})).is_zero());
  CHECK_THROWS(euler_class(add, sl2, vec({1, 1})));

  const RootDatum a2 = RootDatum::build("A", 2);
  Rng rng(22);
  const GroupLaw formal = GroupLaw::random_formal(rng, 5);
  for (const GroupLaw& law : {add, mult, formal}) {
    for (int a = -2; a <= 2; ++a) {
      for (int b = -2; b <= 2; ++b) {
        const IntVector l = vec({a, b});
        const IntVector m = vec({b, 1});
        LaurentPoly lhs = euler_class(law, a2, IntVector(l + m));
        LaurentPoly rhs = law.add(euler_class(law, a2, l), euler_class(law, a2, m));
        if (!law.exact()) {
          lhs = lhs.truncated(law.order());
          rhs = rhs.truncated(law.order());
        }
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("moment graph shapes") {
  const GroupLaw add = GroupLaw::additive();
  auto gr = graph("SL2", 1, add, {false, {1}, 2, false});
  REQUIRE(gr->size() == 3);
  CHECK(gr->grassmannian());
  for (const IntVector& c : {vec({0}), vec({2}), vec({-2})}) CHECK(gr->vertex_of_coweight(c) >= 0);
  for (const auto& e : gr->edges()) CHECK(e.label == LaurentPoly::parse(gr->coords(), "x"));

  auto fl = graph("SL2", 1, add, {false, {}, 1, false});
  CHECK(fl->size() == 3);
  CHECK(fl->edges().size() == 2);

  auto torus = graph("T", 1, add, {true, {}, 2, false});
  CHECK(torus->size() == 1);
  CHECK(torus->edges().empty());

  Rng rng(1);
  CHECK_THROWS(MomentGraph(RootDatum::build("SL2", 1), GroupLaw::random_formal(rng, 4), {true, {}, 1, false}));
}

TEST_CASE("GKM congruences") {
  const GroupLaw add = GroupLaw::additive();
  auto fin = graph("SL2", 1, add, {true, {}, 1, false});
  CHECK_FALSE(check_gkm(GkmFunction::constant(fin, fin->one())).has_value());
  GkmFunction step = GkmFunction::constant(fin, fin->zero());
  step.values[1] = fin->one();
  CHECK(check_gkm(step) == std::optional<std::size_t>(0));

  // Restrictions of characters: f(w) = w(e^mu).
  for (const GroupLaw& law : {GroupLaw::multiplicative(), add}) {
    auto a2 = graph("A", 2, law, {true, {}, 3, false});
    const LaurentPoly mu = law.kind() == LawKind::Multiplicative ? LaurentPoly::parse(a2->coords(), "x1^2*x2^-1")
                                                                 : LaurentPoly::parse(a2->coords(), "x1^2*x2 - 3*x2");
    GkmFunction f = GkmFunction::constant(a2, a2->zero());
    for (std::size_t v = 0; v < a2->size(); ++v) f.values[v] = a2->act(a2->vertices()[v].element, mu);
    CHECK_FALSE(check_gkm(f).has_value());
  }
}

TEST_CASE("psi basis: defining properties on several graphs") {
  for (const GroupLaw& law : {GroupLaw::additive(), GroupLaw::multiplicative()}) {
    std::vector<std::shared_ptr<const MomentGraph>> graphs{
        graph("SL2", 1, law, {false, {1}, 4, false}), graph("SL2", 1, law, {false, {}, 4, false}),
        graph("PGL2", 1, law, {false, {1}, 4, false}), graph("A", 2, law, {true, {}, 3, false}),
        graph("SL2", 1, law, {false, {1}, 3, true}), graph("SL2", 1, law, {false, {}, 3, true}),
        graph("A", 2, law, {false, {1, 2}, 2, false})};
    for (const auto& g : graphs) {
      const PsiBasis basis(g);
      CHECK(basis[0] == GkmFunction::constant(g, g->one()));
      for (std::size_t w = 0; w < g->size(); ++w) {
        const GkmFunction& psi = basis[static_cast<int>(w)];
        CHECK_FALSE(check_gkm(psi).has_value());
        LaurentPoly diagonal = g->one();
        for (const auto& beta : g->group().inversion_set(g->vertices()[w].element)) diagonal *= g->label(beta);
        CHECK(psi.values[w] == diagonal);
        for (std::size_t v = 0; v < g->size(); ++v) {
          if (!g->leq(static_cast<int>(w), static_cast<int>(v))) CHECK(psi.values[v].is_zero());
        }
      }
    }
  }
  auto fin = graph("SL2", 1, GroupLaw::additive(), {true, {}, 1, false});
  const GkmFunction psi_s = psi_basis(fin, 1);
  CHECK(psi_s.values[0].is_zero());
  CHECK(psi_s.values[1] == LaurentPoly::parse(fin->coords(), "x"));
}

TEST_CASE("length-2 Grassmannian vertex: diagonal value is divisible along incident edges") {
  auto g = graph("SL2", 1, GroupLaw::additive(), {false, {1}, 2, false});
  const PsiBasis basis(g);
  int v2 = -1;
  for (std::size_t v = 0; v < g->size(); ++v) {
    if (g->length(static_cast<int>(v)) == 2) v2 = static_cast<int>(v);
  }
  REQUIRE(v2 >= 0);
  CHECK(basis.diagonal(v2) == LaurentPoly::parse(g->coords(), "x^2"));
  for (const auto& e : g->edges()) {
    if (e.target == v2 || e.source == v2) CHECK(exact_div(basis.diagonal(v2), e.label).has_value());
  }
}

TEST_CASE("loop rotation degenerates to the plain graph") {
  for (const GroupLaw& law : {GroupLaw::additive(), GroupLaw::multiplicative()}) {
    auto rot = graph("SL2", 1, law, {false, {}, 3, true});
    auto plain = graph("SL2", 1, law, {false, {}, 3, false});
    const std::string param = rot->coords().back();
    const LaurentPoly point = LaurentPoly::constant(rot->coords(), law.kind() == LawKind::Additive ? 0 : 1);
    for (const auto& e : rot->edges()) {
      const LaurentPoly degenerate = e.label.substitute(param, point);
      // Equal up to a unit: the rotated label of a negative finite root degenerates to c of that root.
      const LaurentPoly expected = plain->label(e.root).with_vars(rot->coords());
      CHECK(exact_div(degenerate, expected).has_value());
      CHECK(exact_div(expected, degenerate).has_value());
    }
    // A plain GKM function pulled back stays GKM with rotation.
    const PsiBasis plain_basis(plain);
    for (std::size_t w = 0; w < plain->size(); ++w) {
      GkmFunction pulled = GkmFunction::constant(rot, rot->zero());
      for (std::size_t v = 0; v < plain->size(); ++v) {
        const int rv = rot->vertex_of(plain->vertices()[v].element);
        REQUIRE(rv >= 0);
        pulled.values[static_cast<std::size_t>(rv)] = plain_basis[static_cast<int>(w)].values[v].with_vars(rot->coords());
      }
      // Plain psi functions only satisfy the coarser congruences; the check must agree with direct divisibility.
      const auto failing = check_gkm(pulled);
      bool direct = true;
      for (const auto& e : rot->edges()) {
        const LaurentPoly diff = pulled.values[static_cast<std::size_t>(e.target)] - pulled.values[static_cast<std::size_t>(e.source)];
        const auto q = exact_div(diff, e.label);
        direct = direct && q.has_value() && (law.kind() == LawKind::Multiplicative || q->is_polynomial());
      }
      CHECK(failing.has_value() == !direct);
    }
  }
}

TEST_CASE("decompose and recombine") {
  Rng rng(23);
  for (const GroupLaw& law : {GroupLaw::additive(), GroupLaw::multiplicative()}) {
    auto g = graph("SL2", 1, law, {false, {}, 4, false});
    const PsiBasis basis(g);
    for (std::size_t w = 0; w < g->size(); ++w) {
      const auto c = decompose(basis[static_cast<int>(w)], basis);
      REQUIRE(c.size() == 1);
      CHECK(c.begin()->first == static_cast<int>(w));
      CHECK(c.begin()->second == g->one());
    }
    const LaurentPoly k = LaurentPoly::parse(g->coords(), "3*x - 1");
    const auto constant = decompose(GkmFunction::constant(g, k), basis);
    REQUIRE(constant.size() == 1);
    CHECK(constant.at(0) == k);

    // Structure constants of products of length-1 classes.
    for (std::size_t v = 0; v < g->size(); ++v) {
      for (std::size_t w = 0; w < g->size(); ++w) {
        if (g->length(static_cast<int>(v)) != 1 || g->length(static_cast<int>(w)) != 1) continue;
        const GkmFunction product = basis[static_cast<int>(v)] * basis[static_cast<int>(w)];
        CHECK(recombine(decompose(product, basis), basis) == product);
      }
    }
    for (int trial = 0; trial < 20; ++trial) {
      std::map<int, LaurentPoly> coefficients;
      for (int k2 = eqwb::testing::uniform(rng, 1, 5); k2 > 0; --k2) {
        LaurentPoly c = eqwb::testing::random_nonzero_poly(rng, g->coords(), 2, 0, 2);
        coefficients[eqwb::testing::uniform(rng, 0, static_cast<int>(g->size()) - 1)] = c;
      }
      auto back = decompose(recombine(coefficients, basis), basis);
      for (auto it = back.begin(); it != back.end();) it = it->second.is_zero() ? back.erase(it) : std::next(it);
      CHECK(back == coefficients);
    }
  }
}

TEST_CASE("homology pairing and integrality") {
  auto g = graph("SL2", 1, GroupLaw::additive(), {false, {1}, 3, false});
  const PsiBasis basis(g);
  const RatFunc inv_c = RatFunc(LaurentPoly::parse(g->coords(), "x")).inverse();
  const HomologyElement unit{{vec({0}), RatFunc(g->one())}};
  CHECK(pair_homology(unit, basis[0]) == RatFunc(g->one()));
  const HomologyElement blowup{{vec({2}), inv_c}, {vec({0}), -inv_c}};
  CHECK(homology_integral(blowup, basis));
  const HomologyElement too_deep{{vec({2}), inv_c * inv_c}};
  CHECK_FALSE(homology_integral(too_deep, basis));
  CHECK_THROWS(pair_homology(HomologyElement{{vec({40}), inv_c}}, basis[0]));

  auto gm = graph("SL2", 1, GroupLaw::multiplicative(), {false, {1}, 3, false});
  const PsiBasis mult_basis(gm);
  const RatFunc inv_cm = RatFunc(LaurentPoly::parse(gm->coords(), "x - 1")).inverse();
  CHECK(homology_integral(HomologyElement{{vec({2}), inv_cm}, {vec({0}), -inv_cm}}, mult_basis));
}
