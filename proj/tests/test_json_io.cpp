#include <doctest.h>

#include "eqwb/json_io.hpp"
#include "generators.hpp"

using namespace eqwb;
using eqwb::testing::Rng;

TEST_CASE("polynomials round-trip through both formats") {
  const VarList xy{"x", "y"};
  Rng rng(51);
  for (int k = 0; k < 100; ++k) {
    const LaurentPoly p = eqwb::testing::random_poly(rng, xy, 5, -3, 3);
    for (Format f : {Format::Json, Format::Text}) CHECK(parse_laurent(serialize(p, f), f) == p);
    const RatFunc r(p, eqwb::testing::random_nonzero_poly(rng, xy));
    for (Format f : {Format::Json, Format::Text}) CHECK(parse_ratfunc(serialize(r, f), f) == r);
  }
  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("text") == Format::Text);
  CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
  CHECK_THROWS(parse_laurent("{\"schema\":\"other/9\"}", Format::Json));
}

TEST_CASE("root data and group laws round-trip") {
  const RootDatum a2 = RootDatum::build("A", 2);
  CHECK(root_datum_from_json(to_json(a2)) == a2);
  const RootDatum pgl2 = RootDatum::build("PGL2", 1);
  CHECK(root_datum_from_json(to_json(pgl2)) == pgl2);
  Json broken = to_json(a2);
  broken["cartan_matrix"][0][1] = 5;
  CHECK_THROWS(root_datum_from_json(broken));

  Rng rng(52);
  for (const GroupLaw& law : {GroupLaw::additive(), GroupLaw::multiplicative(), GroupLaw::random_formal(rng, 6)}) {
    CHECK(group_law_from_json(to_json(law)) == law);
  }
}

TEST_CASE("moment graphs and GKM functions round-trip") {
  for (const GroupLaw& law : {GroupLaw::additive(), GroupLaw::multiplicative()}) {
    for (const GraphOptions& o : {GraphOptions{false, {1}, 3, false}, GraphOptions{false, {}, 2, true}, GraphOptions{true, {}, 3, false}}) {
      const auto g = std::make_shared<const MomentGraph>(RootDatum::build(o.finite ? "A" : "SL2", o.finite ? 2 : 1), law, o);
      const std::string text = serialize(*g, Format::Json);
      const MomentGraph back = parse_moment_graph(text, Format::Json);
      CHECK(back.size() == g->size());
      CHECK(back.edges().size() == g->edges().size());
      CHECK(serialize(back, Format::Json) == text);

      const PsiBasis psi(g);
      for (std::size_t w = 0; w < psi.size(); ++w) {
        CHECK(gkm_function_from_json(g, to_json(psi[static_cast<int>(w)])) == psi[static_cast<int>(w)]);
      }
    }
  }
  const MomentGraph g(RootDatum::build("SL2", 1), GroupLaw::additive(), {false, {1}, 2, false});
  Json tampered = to_json(g);
  tampered["edges"][0]["dst"] = 0;
  CHECK_THROWS(moment_graph_from_json(tampered));
  CHECK_THROWS(parse_moment_graph(serialize(g, Format::Text), Format::Text));
}

TEST_CASE("shift operators and presentations round-trip") {
  for (const CoulombPresentation& p : {coulomb_3d(), coulomb_4d()}) {
    for (const auto& [name, e] : p.atoms) CHECK(shift_element_from_json(to_json(e)) == e);
    const CoulombPresentation back = parse_coulomb_presentation(serialize(p, Format::Json), Format::Json);
    CHECK(back == p);
    CHECK(serialize(back, Format::Json) == serialize(p, Format::Json));
  }
  const Json doc = to_json(coulomb_3d());
  CHECK(doc.at("schema") == kSchemaVersion);
}
