#include "eqwb/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace eqwb {

namespace {

Json int_vector(const IntVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

IntVector int_vector_from(const Json& j) {
  IntVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = j[i].get<int>();
  return v;
}

Json int_matrix(const IntMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(row);
  }
  return out;
}

void expect_kind(const Json& j, const char* kind) {
  if (!j.is_object() || j.value("kind", std::string()) != kind) {
    throw std::invalid_argument(std::string("expected a JSON object of kind ") + kind);
  }
}

Json document(const char* kind) {
  Json j = Json::object();
  j["schema"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

void require_json(Format format, const char* what) {
  if (format != Format::Json) throw std::invalid_argument(std::string(what) + " has no parseable text form; use json");
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "text") return Format::Text;
  throw std::invalid_argument("unknown format: " + name);
}

Json to_json(const LaurentPoly& p) {
  Json j = document("laurent_poly");
  j["vars"] = p.vars();
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"exp", e}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  j["terms"] = terms;
  return j;
}

LaurentPoly laurent_from_json(const Json& j) {
  expect_kind(j, "laurent_poly");
  VarList vars = j.at("vars").get<VarList>();
  LaurentPoly::TermMap terms;
  for (const auto& t : j.at("terms")) {
    Exponent e = t.at("exp").get<Exponent>();
    if (e.size() != vars.size()) throw std::invalid_argument("exponent length does not match the variable list");
    Rational c(mpz_class(t.at("num").get<std::string>()), mpz_class(t.at("den").get<std::string>()));
    c.canonicalize();
    if (c == 0) throw std::invalid_argument("zero coefficient stored in a polynomial");
    if (!terms.emplace(std::move(e), c).second) throw std::invalid_argument("repeated exponent");
  }
  return LaurentPoly(std::move(vars), std::move(terms));
}

Json to_json(const RatFunc& f) {
  Json j = document("rat_func");
  j["num"] = to_json(f.num());
  j["den"] = to_json(f.den());
  return j;
}

RatFunc ratfunc_from_json(const Json& j) {
  expect_kind(j, "rat_func");
  return RatFunc(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

Json to_json(const RootDatum& datum) {
  Json j = document("root_datum");
  j["family"] = datum.family();
  j["rank"] = datum.rank();
  j["cartan_matrix"] = int_matrix(datum.cartan_matrix());
  Json basis = Json::object();
  basis["dim"] = datum.dim();
  basis["simple_roots"] = Json::array();
  basis["simple_coroots"] = Json::array();
  for (const auto& r : datum.simple_roots()) basis["simple_roots"].push_back(int_vector(r));
  for (const auto& r : datum.simple_coroots()) basis["simple_coroots"].push_back(int_vector(r));
  j["lattice_basis"] = basis;
  return j;
}

RootDatum root_datum_from_json(const Json& j) {
  expect_kind(j, "root_datum");
  const Json& basis = j.at("lattice_basis");
  std::vector<IntVector> roots;
  std::vector<IntVector> coroots;
  for (const auto& r : basis.at("simple_roots")) roots.push_back(int_vector_from(r));
  for (const auto& r : basis.at("simple_coroots")) coroots.push_back(int_vector_from(r));
  RootDatum datum = RootDatum::from_simple(j.at("family").get<std::string>(), roots, coroots, basis.at("dim").get<int>());
  if (datum.rank() != j.at("rank").get<int>() || int_matrix(datum.cartan_matrix()) != j.at("cartan_matrix")) {
    throw std::invalid_argument("root datum: stored Cartan matrix disagrees with the lattice basis");
  }
  return datum;
}

Json to_json(const GroupLaw& law) {
  // "kind" names the law here, so no document kind is stamped.
  Json j = {{"schema", kSchemaVersion}, {"kind", to_string(law.kind())}};
  j["order"] = law.order();
  Json coeffs = Json::array();
  for (const auto& [ij, c] : law.coefficients()) {
    coeffs.push_back({{"i", ij.first}, {"j", ij.second}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  j["coefficients"] = coeffs;
  return j;
}

GroupLaw group_law_from_json(const Json& j) {
  if (!j.is_object() || j.value("schema", std::string()) != kSchemaVersion || !j.contains("order")) {
    throw std::invalid_argument("expected a group_law document");
  }
  const LawKind kind = parse_law_kind(j.at("kind").get<std::string>());
  GroupLaw::Coefficients coeffs;
  for (const auto& c : j.at("coefficients")) {
    Rational q(mpz_class(c.at("num").get<std::string>()), mpz_class(c.at("den").get<std::string>()));
    q.canonicalize();
    coeffs[{c.at("i").get<int>(), c.at("j").get<int>()}] = q;
  }
  GroupLaw law = kind == LawKind::Additive         ? GroupLaw::additive()
                 : kind == LawKind::Multiplicative ? GroupLaw::multiplicative()
                                                   : GroupLaw::formal(coeffs, j.at("order").get<int>());
  if (law.coefficients() != coeffs || law.order() != j.at("order").get<int>()) {
    throw std::invalid_argument("group law: coefficients do not match the declared kind");
  }
  return law;
}

Json to_json(const MomentGraph& graph) {
  Json j = document("moment_graph");
  j["datum"] = to_json(graph.datum());
  j["law"] = to_json(graph.law());
  const GraphOptions& o = graph.options();
  j["params"] = {{"finite", o.finite}, {"parabolic", o.parabolic}, {"bound", o.bound}, {"loop_rotation", o.loop_rotation}};
  j["coords"] = graph.coords();
  Json vertices = Json::array();
  for (std::size_t v = 0; v < graph.size(); ++v) {
    const AffineWeylElement& w = graph.vertices()[v].element;
    Json vj = {{"id", v}, {"word", w.word}};
    if (graph.grassmannian()) vj["coweight"] = int_vector(w.translation);
    vertices.push_back(vj);
  }
  j["vertices"] = vertices;
  Json edges = Json::array();
  for (const auto& e : graph.edges()) {
    const Root& r = graph.datum().roots()[static_cast<std::size_t>(e.root.root)];
    edges.push_back({{"src", e.source},
                     {"dst", e.target},
                     {"root", {{"index", e.root.root}, {"character", int_vector(r.character)}, {"shift", e.root.shift}}},
                     {"generator", e.label.to_string()}});
  }
  j["edges"] = edges;
  return j;
}

MomentGraph moment_graph_from_json(const Json& j) {
  expect_kind(j, "moment_graph");
  GraphOptions o;
  const Json& p = j.at("params");
  o.finite = p.at("finite").get<bool>();
  o.parabolic = p.at("parabolic").get<std::vector<int>>();
  o.bound = p.at("bound").get<int>();
  o.loop_rotation = p.at("loop_rotation").get<bool>();
  MomentGraph graph(root_datum_from_json(j.at("datum")), group_law_from_json(j.at("law")), o);
  const Json rebuilt = to_json(graph);
  for (const char* key : {"coords", "vertices", "edges"}) {
    if (rebuilt.at(key) != j.at(key)) {
      throw std::invalid_argument(std::string("moment graph: stored ") + key + " differ from the rebuilt graph");
    }
  }
  return graph;
}

Json to_json(const GkmFunction& f) {
  Json j = document("gkm_function");
  j["coords"] = f.graph->coords();
  Json values = Json::array();
  for (std::size_t v = 0; v < f.values.size(); ++v) values.push_back({{"id", v}, {"value", f.values[v].to_string()}});
  j["values"] = values;
  return j;
}

GkmFunction gkm_function_from_json(std::shared_ptr<const MomentGraph> graph, const Json& j) {
  expect_kind(j, "gkm_function");
  if (j.at("coords").get<VarList>() != graph->coords()) throw std::invalid_argument("GKM function: coordinate mismatch");
  GkmFunction f = GkmFunction::constant(graph, graph->zero());
  for (const auto& v : j.at("values")) {
    const auto id = v.at("id").get<std::size_t>();
    if (id >= f.values.size()) throw std::invalid_argument("GKM function: vertex id out of range");
    f.values[id] = LaurentPoly::parse(graph->coords(), v.at("value").get<std::string>());
  }
  return f;
}

Json to_json(const ShiftContext& ctx) {
  Json j = document("shift_context");
  j["law"] = to_json(ctx.law());
  j["base"] = ctx.base();
  j["param"] = ctx.param();
  return j;
}

std::shared_ptr<const ShiftContext> shift_context_from_json(const Json& j) {
  expect_kind(j, "shift_context");
  return std::make_shared<const ShiftContext>(group_law_from_json(j.at("law")), j.at("base").get<VarList>(),
                                              j.at("param").get<std::string>());
}

Json to_json(const ShiftElement& e) {
  Json j = document("operator");
  const ShiftContext& ctx = *e.context();
  j["law"] = to_json(ctx.law());
  j["base"] = ctx.base();
  j["param"] = ctx.param();
  Json terms = Json::array();
  for (const auto& [k, g] : e.terms()) terms.push_back({{"coweight", k}, {"coeff", to_json(g)}});
  j["terms"] = terms;
  return j;
}

ShiftElement shift_element_from_json(std::shared_ptr<const ShiftContext> ctx, const Json& j) {
  expect_kind(j, "operator");
  if (j.at("base").get<VarList>() != ctx->base() || j.at("param").get<std::string>() != ctx->param() ||
      !(group_law_from_json(j.at("law")) == ctx->law())) {
    throw std::invalid_argument("operator: context mismatch");
  }
  ShiftElement::TermMap terms;
  for (const auto& t : j.at("terms")) {
    auto k = t.at("coweight").get<ShiftElement::Key>();
    if (static_cast<int>(k.size()) != ctx->rank()) throw std::invalid_argument("operator: coweight has the wrong rank");
    terms.emplace(std::move(k), ratfunc_from_json(t.at("coeff")).with_vars(ctx->vars()));
  }
  return ShiftElement(std::move(ctx), std::move(terms));
}

ShiftElement shift_element_from_json(const Json& j) {
  expect_kind(j, "operator");
  auto ctx = std::make_shared<const ShiftContext>(group_law_from_json(j.at("law")), j.at("base").get<VarList>(),
                                                  j.at("param").get<std::string>());
  return shift_element_from_json(std::move(ctx), j);
}

Json to_json(const CoulombPresentation& p) {
  Json j = document("coulomb_presentation");
  j["name"] = p.name;
  j["context"] = to_json(*p.context);
  j["generators"] = p.generator_names;
  Json atoms = Json::object();
  for (const auto& [name, e] : p.atoms) atoms[name] = to_json(e);
  j["atoms"] = atoms;
  Json relations = Json::array();
  for (const auto& [lhs, rhs] : p.relations) relations.push_back({{"lhs", lhs}, {"rhs", rhs}});
  j["relations"] = relations;
  j["involution"] = p.involution;
  return j;
}

CoulombPresentation coulomb_presentation_from_json(const Json& j) {
  expect_kind(j, "coulomb_presentation");
  CoulombPresentation p;
  p.name = j.at("name").get<std::string>();
  p.context = shift_context_from_json(j.at("context"));
  p.generator_names = j.at("generators").get<std::vector<std::string>>();
  for (const auto& [name, e] : j.at("atoms").items()) p.atoms.emplace(name, shift_element_from_json(p.context, e));
  for (const auto& r : j.at("relations")) p.relations.emplace_back(r.at("lhs").get<std::string>(), r.at("rhs").get<std::string>());
  p.involution = j.at("involution").get<std::string>();
  for (const auto& g : p.generator_names) {
    if (!p.atoms.count(g)) throw std::invalid_argument("coulomb presentation: generator " + g + " has no element");
  }
  return p;
}

Json to_json(const CheckResult& r) {
  return {{"case", r.case_name},
          {"relation", r.relation},
          {"status", r.verified ? "verified" : "mismatch"},
          {"lhs_normal_form", r.lhs},
          {"rhs_normal_form", r.rhs}};
}

Json to_json(const RelationReport& r) {
  return {{"relation", r.relation},
          {"status", r.holds ? "verified" : "mismatch"},
          {"witness", r.witness},
          {"degree_bound", r.degree_bound}};
}

Json to_json(const CentralizerSolution& s) {
  return {{"group", s.group},
          {"law", to_string(s.law)},
          {"free_params", s.free_params},
          {"b", s.constraint.to_string()},
          {"annihilates", s.annihilates}};
}

std::string serialize(const LaurentPoly& p, Format format) {
  if (format == Format::Json) return to_json(p).dump(2) + "\n";
  std::string vars;
  for (std::size_t i = 0; i < p.vars().size(); ++i) vars += (i ? "," : "") + p.vars()[i];
  return "vars: " + vars + "\n" + p.to_string() + "\n";
}

namespace {

std::pair<VarList, std::string> split_text(const std::string& bytes) {
  std::istringstream in(bytes);
  std::string header;
  std::string body;
  std::getline(in, header);
  std::getline(in, body);
  if (header.rfind("vars:", 0) != 0) throw std::invalid_argument("text form must start with 'vars:'");
  VarList vars;
  std::istringstream list(header.substr(5));
  for (std::string v; std::getline(list, v, ',');) {
    const auto b = v.find_first_not_of(' ');
    if (b != std::string::npos) vars.push_back(v.substr(b));
  }
  return {vars, body};
}

}  // namespace

LaurentPoly parse_laurent(const std::string& bytes, Format format) {
  if (format == Format::Json) return laurent_from_json(Json::parse(bytes));
  auto [vars, body] = split_text(bytes);
  return LaurentPoly::parse(vars, body);
}

std::string serialize(const RatFunc& f, Format format) {
  if (format == Format::Json) return to_json(f).dump(2) + "\n";
  std::string vars;
  for (std::size_t i = 0; i < f.vars().size(); ++i) vars += (i ? "," : "") + f.vars()[i];
  return "vars: " + vars + "\n" + f.to_string() + "\n";
}

RatFunc parse_ratfunc(const std::string& bytes, Format format) {
  if (format == Format::Json) return ratfunc_from_json(Json::parse(bytes));
  auto [vars, body] = split_text(bytes);
  return RatFunc::parse(vars, body);
}

std::string serialize(const MomentGraph& g, Format format) {
  if (format == Format::Json) return to_json(g).dump(2) + "\n";
  std::ostringstream out;
  out << g.datum().family() << " rank " << g.datum().rank() << ", " << to_string(g.law().kind()) << " law, "
      << (g.options().finite ? "finite" : g.grassmannian() ? "affine Grassmannian" : "affine flag") << " graph, bound "
      << g.options().bound << "\n";
  out << g.size() << " vertices, " << g.edges().size() << " edges\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    out << "  v" << v << " word";
    for (int l : g.vertices()[v].element.word) out << ' ' << l;
    out << "\n";
  }
  for (const auto& e : g.edges()) out << "  v" << e.source << " -- v" << e.target << "  " << e.label.to_string() << "\n";
  return out.str();
}

MomentGraph parse_moment_graph(const std::string& bytes, Format format) {
  require_json(format, "moment graph");
  return moment_graph_from_json(Json::parse(bytes));
}

std::string serialize(const CoulombPresentation& p, Format format) {
  if (format == Format::Json) return to_json(p).dump(2) + "\n";
  std::ostringstream out;
  out << p.name << " Coulomb branch, " << to_string(p.context->law().kind()) << " law, parameter "
      << p.context->param() << "\n";
  for (const auto& g : p.generator_names) out << "  " << g << " = " << p.atoms.at(g).to_string() << "\n";
  for (const auto& [lhs, rhs] : p.relations) out << "  " << lhs << " = " << rhs << "\n";
  out << "  involution: " << p.involution << "\n";
  return out.str();
}

CoulombPresentation parse_coulomb_presentation(const std::string& bytes, Format format) {
  require_json(format, "Coulomb presentation");
  return coulomb_presentation_from_json(Json::parse(bytes));
}

}  // namespace eqwb
