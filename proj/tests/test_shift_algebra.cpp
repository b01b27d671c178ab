#include <doctest.h>

#include "eqwb/nil_hecke.hpp"
#include "eqwb/shift_algebra.hpp"
#include "generators.hpp"

using namespace eqwb;
using eqwb::testing::Rng;
using eqwb::testing::uniform;

namespace {

std::shared_ptr<const ShiftContext> context(LawKind kind) {
  return kind == LawKind::Additive ? std::make_shared<const ShiftContext>(GroupLaw::additive(), VarList{"x"}, "h")
                                   : std::make_shared<const ShiftContext>(GroupLaw::multiplicative(), VarList{"x"}, "q");
}

ShiftElement random_element(Rng& rng, const std::shared_ptr<const ShiftContext>& ctx, bool fractions) {
  ShiftElement e(ctx);
  for (int k = uniform(rng, 1, 3); k > 0; --k) {
    LaurentPoly g = eqwb::testing::random_poly(rng, ctx->vars(), 3, 0, 3);
    RatFunc coeff(g);
    if (fractions) coeff = coeff / RatFunc(LaurentPoly::parse(ctx->vars(), "x") + LaurentPoly::constant(ctx->vars(), uniform(rng, 1, 3)));
    e += ShiftElement::monomial(ctx, {uniform(rng, -2, 2)}, coeff);
  }
  return e;
}

MellinModule monomial_module(const std::vector<int>& nu, const RatFunc& c) { return MellinModule::monomial(nu, c); }

}  // namespace

TEST_CASE("commutation of functions past lattice monomials") {
  for (LawKind kind : {LawKind::Additive, LawKind::Multiplicative}) {
    auto ctx = context(kind);
    const ShiftElement t = ShiftElement::shift(ctx, 1);
    const ShiftElement y = ShiftElement::scalar(ctx, ctx->coefficient("x"));
    const ShiftElement expected = kind == LawKind::Additive
                                      ? ShiftElement::monomial(ctx, {1}, ctx->coefficient("x + h"))
                                      : ShiftElement::monomial(ctx, {1}, ctx->coefficient("q*x"));
    CHECK(y * t == expected);
    CHECK(t * ShiftElement::shift(ctx, 2) == ShiftElement::shift(ctx, 3));
    CHECK(t * t.pow(-1) == ShiftElement::scalar(ctx, RatFunc::scalar(1)));
  }
}

TEST_CASE("shift product is associative and distributive") {
  Rng rng(31);
  for (LawKind kind : {LawKind::Additive, LawKind::Multiplicative}) {
    auto ctx = context(kind);
    for (int k = 0; k < 40; ++k) {
      const ShiftElement a = random_element(rng, ctx, k % 2 == 0);
      const ShiftElement b = random_element(rng, ctx, false);
      const ShiftElement c = random_element(rng, ctx, k % 3 == 0);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(commutator(a, b) == -commutator(b, a));
    }
  }
}

TEST_CASE("expression evaluator") {
  auto ctx = context(LawKind::Additive);
  std::map<std::string, ShiftElement> atoms{{"t", ShiftElement::shift(ctx, 1)}};
  CHECK(evaluate_expression(ctx, atoms, "[x,t]") == evaluate_expression(ctx, atoms, "h*t"));
  CHECK(evaluate_expression(ctx, atoms, "[x^2,t^-1]") == evaluate_expression(ctx, atoms, "h^2*t^-1 - 2*h*t^-1*x"));
  CHECK(evaluate_expression(ctx, atoms, "(t + t^-1)/2") == evaluate_expression(ctx, atoms, "1/2*t + 1/2*t^-1"));
  CHECK(evaluate_expression(ctx, atoms, "x^-1*x") == ShiftElement::scalar(ctx, RatFunc::scalar(1)));
  CHECK_THROWS(evaluate_expression(ctx, atoms, "t/(t+1)"));
  CHECK_THROWS(evaluate_expression(ctx, atoms, "unknown + 1"));
  CHECK_THROWS(evaluate_expression(ctx, atoms, "(t"));
}

TEST_CASE("Mellin action") {
  for (LawKind kind : {LawKind::Additive, LawKind::Multiplicative}) {
    auto ctx = context(kind);
    const ShiftElement y = ShiftElement::scalar(ctx, ctx->coefficient("x"));
    const RatFunc one = RatFunc::scalar(1);
    for (int n = -3; n <= 3; ++n) {
      const MellinModule got = mellin_act(y, monomial_module({n}, one));
      const RatFunc weight = kind == LawKind::Additive ? ctx->coefficient(std::to_string(n) + "*h")
                                                       : ctx->coefficient("q^" + std::to_string(n));
      CHECK(got == monomial_module({n}, weight));
    }
    const MellinModule p = monomial_module({2}, ctx->coefficient("3 + " + ctx->param()));
    CHECK(mellin_act(ShiftElement::scalar(ctx, one), p) == p);
    CHECK(mellin_act(ShiftElement::shift(ctx, -1), p) == monomial_module({1}, ctx->coefficient("3 + " + ctx->param())));
  }
  Rng rng(32);
  for (LawKind kind : {LawKind::Additive, LawKind::Multiplicative}) {
    auto ctx = context(kind);
    for (int k = 0; k < 30; ++k) {
      const ShiftElement a = random_element(rng, ctx, false);
      const ShiftElement b = random_element(rng, ctx, false);
      MellinModule m(1);
      m.add_term({uniform(rng, -2, 2)}, RatFunc(eqwb::testing::random_nonzero_poly(rng, ctx->vars(), 2, 0, 2).substitute("x", LaurentPoly::constant(ctx->vars(), 1))));
      CHECK(mellin_act(a * b, m) == mellin_act(a, mellin_act(b, m)));
      CHECK(mellin_act(a + b, m) == mellin_act(a, m) + mellin_act(b, m));
    }
  }
}

TEST_CASE("spherical products") {
  auto ctx = context(LawKind::Multiplicative);
  const std::vector<IntMatrix> z2{IntMatrix::Identity(1, 1), -IntMatrix::Identity(1, 1)};
  const RatFunc one = RatFunc::scalar(1);
  const RatFunc half = RatFunc::scalar(Rational(1, 2));
  MellinModule sym(1);
  sym.add_term({1}, one);
  sym.add_term({-1}, one);
  CHECK(symmetrize_module(z2, sym) == sym);
  CHECK(spherical_act({ShiftElement::scalar(ctx, one)}, z2, monomial_module({3}, one)) == symmetrize_module(z2, monomial_module({3}, one)));
  const ShiftElement t = ShiftElement::shift(ctx, 1);
  const ShiftElement u = t + t.pow(-1);
  const ShiftElement avg = ShiftElement::scalar(ctx, half) * u;
  CHECK(spherical_act({t}, z2, sym) == mellin_act(avg, sym));
  CHECK(spherical_act({u}, z2, sym) == mellin_act(u, sym));
}

TEST_CASE("F-de Rham table") {
  const DeRhamTable add = f_de_rham(GroupLaw::additive(), 5);
  CHECK(add.homomorphic);
  CHECK(add.weights.at(0).is_zero());
  CHECK(add.weights.at(-3) == LaurentPoly::parse({"h"}, "-3*h"));
  const DeRhamTable mult = f_de_rham(GroupLaw::multiplicative(), 5);
  CHECK(mult.homomorphic);
  CHECK(mult.weights.at(4) == LaurentPoly::parse({"q"}, "q^4 - 1"));
  Rng rng(33);
  const DeRhamTable formal = f_de_rham(GroupLaw::random_formal(rng, 6), 4);
  CHECK(formal.homomorphic);
}

TEST_CASE("nil-Hecke operators") {
  const RootDatum sl2 = RootDatum::build("SL2", 1);
  const RootDatum a2 = RootDatum::build("A", 2);
  for (const GroupLaw& law : {GroupLaw::additive(), GroupLaw::multiplicative()}) {
    const NilHecke nh(a2, law);
    const int r = a2.simple_index(1);
    CHECK(nh.apply(r, LaurentPoly::constant(nh.coords(), 1)).is_zero());
  }

  // Additive: T_alpha(c_mu) = -<mu, alpha^vee>, by direct substitution.
  const NilHecke add(a2, GroupLaw::additive());
  for (int i = 1; i <= 2; ++i) {
    const int r = a2.simple_index(i);
    for (int a = -2; a <= 2; ++a) {
      for (int b = -2; b <= 2; ++b) {
        IntVector mu(2);
        mu << a, b;
        const LaurentPoly c = euler_class(GroupLaw::additive(), a2, mu);
        const int pairing = RootDatum::pairing(mu, a2.roots()[static_cast<std::size_t>(r)].coroot);
        CHECK(add.apply(r, c) == LaurentPoly::constant(add.coords(), -pairing));
      }
    }
  }

  // Multiplicative: T_alpha(e^lambda) = [-<alpha^vee, lambda>]_{e^alpha} e^lambda for SL2.
  const NilHecke mult(sl2, GroupLaw::multiplicative());
  const int r = sl2.simple_index(1);
  const VarList x{"x"};
  CHECK(mult.apply(r, LaurentPoly::parse(x, "x")) == LaurentPoly::parse(x, "-1 - x^-1"));
  CHECK(mult.apply(r, LaurentPoly::parse(x, "x^-1")) == LaurentPoly::parse(x, "1 + x^-1"));

  // No division failure on random combinations of monomials.
  Rng rng(34);
  for (const GroupLaw& law : {GroupLaw::additive(), GroupLaw::multiplicative()}) {
    const NilHecke nh(a2, law);
    const int lo = law.kind() == LawKind::Multiplicative ? -3 : 0;
    for (int k = 0; k < 500; ++k) {
      const LaurentPoly p = eqwb::testing::random_poly(rng, nh.coords(), 4, lo, 3);
      const int root = uniform(rng, 0, static_cast<int>(a2.roots().size()) - 1);
      CHECK_NOTHROW(nh.apply(root, p));
    }
  }
}

TEST_CASE("nil-Hecke relation reports") {
  const auto add = nil_hecke_relations_check(RootDatum::build("SL2", 1), GroupLaw::additive(), 4);
  REQUIRE(!add.empty());
  CHECK(add[0].relation == "T1^2 = 0");
  for (const auto& r : add) CHECK(r.holds);
  const auto mult = nil_hecke_relations_check(RootDatum::build("SL2", 1), GroupLaw::multiplicative(), 4);
  CHECK(mult[0].relation == "T1^2 = T1");
  CHECK(mult[0].holds);
  const auto a2 = nil_hecke_relations_check(RootDatum::build("A", 2), GroupLaw::multiplicative(), 3);
  int braids = 0;
  for (const auto& r : a2) {
    CHECK(r.holds);
    if (r.relation.find("T2*T1") != std::string::npos) ++braids;
  }
  CHECK(braids == 2);
}
