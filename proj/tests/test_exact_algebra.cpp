#include <doctest.h>

#include "eqwb/action.hpp"
#include "generators.hpp"

using namespace eqwb;
using eqwb::testing::evaluate_at;
using eqwb::testing::random_nonzero_poly;
using eqwb::testing::random_poly;
using eqwb::testing::Rng;

namespace {

const VarList xy{"x", "y"};

LaurentPoly P(const VarList& vars, const char* text) { return LaurentPoly::parse(vars, text); }

}  // namespace

TEST_CASE("rationals print and parse in lowest terms") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-0/7")) == "0");
  CHECK(parse_rational("-12") == Rational(-12));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("Laurent polynomial basics") {
  const LaurentPoly p = P(xy, "x^2*y - 3*x + y^-1");
  CHECK(p.size() == 3);
  CHECK(p.leading_exponent() == Exponent{2, 1});
  CHECK(p.degree_in(1) == 1);
  CHECK(p.min_degree_in(1) == -1);
  CHECK_FALSE(p.is_polynomial());
  CHECK(P(xy, "(x+y)^2") == P(xy, "x^2 + 2*x*y + y^2"));
  CHECK(P(xy, "x^-1").pow(-2) == P(xy, "x^2"));
  CHECK_THROWS(P(xy, "x + 1").pow(-1));
  CHECK(P(xy, "x - y").substitute("y", P(xy, "x")).is_zero());
}

TEST_CASE("Laurent text form round-trips") {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const LaurentPoly p = random_poly(rng, xy, 5, -3, 3);
    CHECK(LaurentPoly::parse(xy, p.to_string()) == p);
  }
}

TEST_CASE("ring axioms hold and agree with pointwise evaluation") {
  Rng rng(12);
  const std::vector<Rational> point{Rational(3, 2), Rational(-5, 7)};
  for (int k = 0; k < 200; ++k) {
    const LaurentPoly a = random_poly(rng, xy, 4, -2, 3);
    const LaurentPoly b = random_poly(rng, xy, 4, -2, 3);
    const LaurentPoly c = random_poly(rng, xy, 4, -2, 3);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(evaluate_at(a * b, point) == evaluate_at(a, point) * evaluate_at(b, point));
    CHECK(evaluate_at(a + b, point) == evaluate_at(a, point) + evaluate_at(b, point));
  }
}

TEST_CASE("lex division and exact division") {
  Rng rng(13);
  for (int k = 0; k < 150; ++k) {
    const LaurentPoly a = random_poly(rng, xy, 5, 0, 4);
    const LaurentPoly b = random_nonzero_poly(rng, xy);
    const auto [q, r] = divmod_lex(a, b);
    CHECK(q * b + r == a);
    const auto exact = exact_div(a * b, b);
    REQUIRE(exact.has_value());
    CHECK(*exact == a);
  }
  CHECK_FALSE(exact_div(P(xy, "x + 1"), P(xy, "x - 1")).has_value());
  CHECK(exact_div(P(xy, "x^3 - y^3"), P(xy, "x - y")) == P(xy, "x^2 + x*y + y^2"));
}

TEST_CASE("gcd divides both inputs and recovers a planted common factor") {
  Rng rng(14);
  for (int k = 0; k < 80; ++k) {
    const LaurentPoly g = random_nonzero_poly(rng, xy, 3, 0, 2);
    const LaurentPoly a = g * random_nonzero_poly(rng, xy, 3, 0, 2);
    const LaurentPoly b = g * random_nonzero_poly(rng, xy, 3, 0, 2);
    const LaurentPoly d = poly_gcd(a, b);
    CHECK(exact_div(a, d).has_value());
    CHECK(exact_div(b, d).has_value());
    if (!g.is_constant()) {
      // g's non-monomial part divides the gcd
      const LaurentPoly unit_free = poly_gcd(g, g);
      CHECK(exact_div(d, unit_free).has_value());
    }
  }
}

TEST_CASE("rational functions reduce to a canonical form") {
  const RatFunc f = RatFunc::parse(xy, "(x^2 - 1)/(x - 1)");
  CHECK(f.is_laurent());
  CHECK(f.to_laurent() == P(xy, "x + 1"));
  const RatFunc g = RatFunc::parse(xy, "(2*x)/(4*x^3 - 4*x*y)");
  CHECK(g.to_string() == RatFunc::parse(xy, "1/(2*x^2 - 2*y)").to_string());
  CHECK(g.den().leading_coeff() == 1);
  CHECK(g.den().min_exponents() == Exponent{0, 0});
  CHECK_THROWS(RatFunc::parse(xy, "1/(x - x)"));
}

TEST_CASE("rational function field axioms") {
  Rng rng(15);
  for (int k = 0; k < 100; ++k) {
    const RatFunc a(random_poly(rng, xy, 3, -1, 2), random_nonzero_poly(rng, xy));
    const RatFunc b(random_poly(rng, xy, 3, -1, 2), random_nonzero_poly(rng, xy));
    const RatFunc c(random_nonzero_poly(rng, xy), random_nonzero_poly(rng, xy));
    CHECK((a + b) - b == a);
    CHECK((a * c) / c == a);
    CHECK(c * c.inverse() == RatFunc::scalar(1));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(RatFunc::parse(xy, a.to_string()) == a);
    CHECK(RatFunc::parse(xy, a.to_string()).to_string() == a.to_string());
  }
}

TEST_CASE("substitution is a ring map") {
  Rng rng(16);
  const Substitution s = Substitution::parse(xy, "x -> y + 1, y -> x^-1");
  for (int k = 0; k < 60; ++k) {
    const RatFunc a(random_poly(rng, xy, 3, -1, 2), random_nonzero_poly(rng, xy));
    const RatFunc b(random_poly(rng, xy, 3, -1, 2), random_nonzero_poly(rng, xy));
    CHECK(s.apply(a * b) == s.apply(a) * s.apply(b));
    CHECK(s.apply(a + b) == s.apply(a) + s.apply(b));
  }
  const Substitution flip = Substitution::parse(xy, "x -> -x");
  CHECK(flip.after(flip) == Substitution::identity(xy));
}

TEST_CASE("finite group actions: closure, symmetrization, invariants") {
  const VarList x1x2{"x1", "x2"};
  const Substitution swap = Substitution::parse(x1x2, "x1 -> x2, x2 -> x1");
  const Substitution neg = Substitution::parse(x1x2, "x1 -> -x1");
  const GroupAction s2(x1x2, {swap});
  const GroupAction b2(x1x2, {swap, neg});
  CHECK(s2.order() == 2);
  CHECK(b2.order() == 8);
  Rng rng(17);
  for (int k = 0; k < 50; ++k) {
    const RatFunc f(random_poly(rng, x1x2, 4, 0, 3));
    const RatFunc e = b2.symmetrize(f);
    CHECK(b2.is_invariant(e));
    CHECK(b2.symmetrize(e) == e);
  }
  CHECK(s2.symmetrize(RatFunc::parse(x1x2, "x1")) == RatFunc::parse(x1x2, "(x1 + x2)/2"));
  CHECK_THROWS(GroupAction(VarList{"x"}, {Substitution::parse(VarList{"x"}, "x -> 2*x")}, 16));
}

TEST_CASE("group ring of a lattice") {
  Rng rng(18);
  auto random_element = [&]() {
    GroupRing<Rational> g(2);
    for (int k = eqwb::testing::uniform(rng, 0, 3); k > 0; --k) {
      g.add_term({eqwb::testing::uniform(rng, -2, 2), eqwb::testing::uniform(rng, -2, 2)}, eqwb::testing::random_rational(rng));
    }
    return g;
  };
  const auto one = GroupRing<Rational>::unit(2, Rational(1));
  for (int k = 0; k < 100; ++k) {
    const auto a = random_element();
    const auto b = random_element();
    const auto c = random_element();
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * one == a);
  }
  GroupRing<Rational> z(2);
  z.add_term({1, 0}, Rational(1));
  z.add_term({1, 0}, Rational(-1));
  CHECK(z.is_zero());
}
