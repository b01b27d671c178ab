// eqwb: command-line front end for the equivariant workbench.

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "eqwb/json_io.hpp"
#include "eqwb/verify.hpp"

namespace {

using namespace eqwb;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string group = "sl2-affine";
  std::string law = "additive";
  int bound = 3;
  std::uint64_t seed = VerifyOptions{}.seed;
  int trials = 0;
  std::string out;
  std::string format = "text";
};

struct GroupSpec {
  RootDatum datum;
  bool affine;
};

// "sl2", "pgl2", "gl2", "a<n>", each optionally suffixed "-affine".
GroupSpec parse_group(std::string name) {
  for (auto& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  bool affine = false;
  if (const auto dash = name.find("-affine"); dash != std::string::npos && dash + 7 == name.size()) {
    affine = true;
    name.resize(dash);
  }
  try {
    if (name == "sl2") return {RootDatum::build("SL2", 1), affine};
    if (name == "pgl2") return {RootDatum::build("PGL2", 1), affine};
    if (name == "gl2") return {RootDatum::build("GL2", 1), affine};
    if (name.size() > 1 && name[0] == 'a') return {RootDatum::build("A", std::stoi(name.substr(1))), affine};
  } catch (const std::exception&) {
  }
  throw UsageError("unknown group: " + name);
}

GroupLaw parse_law(const std::string& name, std::uint64_t seed, int order) {
  if (name == "additive") return GroupLaw::additive();
  if (name == "multiplicative") return GroupLaw::multiplicative();
  if (name == "formal") {
    std::mt19937_64 rng(seed);
    return GroupLaw::random_formal(rng, order);
  }
  throw UsageError("unknown law: " + name + " (additive, multiplicative, formal)");
}

Format format_of(const Common& c) {
  try {
    return parse_format(c.format);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void emit(const Common& c, const std::string& bytes) {
  if (c.out.empty() || c.out == "-") {
    std::cout << bytes;
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw UsageError("cannot write " + c.out);
  file << bytes;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// "e", "0 1 0", "0,1,0" or "s0s1s0".
std::vector<int> parse_word(const std::string& text) {
  std::vector<int> word;
  if (text == "e" || text.empty()) return word;
  std::string digits;
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits += ch;
      continue;
    }
    if (!digits.empty()) word.push_back(std::stoi(digits));
    digits.clear();
    if (ch != 's' && ch != ',' && ch != ' ') throw UsageError("bad word: " + text);
  }
  if (!digits.empty()) word.push_back(std::stoi(digits));
  return word;
}

std::shared_ptr<const MomentGraph> make_graph(const Common& c, bool flag, bool rotation) {
  GroupSpec g = parse_group(c.group);
  GraphOptions o;
  o.finite = !g.affine;
  o.bound = c.bound;
  o.loop_rotation = rotation;
  if (g.affine && !flag) {
    for (int i = 1; i <= g.datum.rank(); ++i) o.parabolic.push_back(i);
  }
  if (c.law == "formal") throw UsageError("moment graphs need an additive or multiplicative law");
  return std::make_shared<const MomentGraph>(g.datum, parse_law(c.law, c.seed, 8), o);
}

std::string word_text(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string out;
  for (int l : word) out += "s" + std::to_string(l);
  return out;
}

std::string function_text(const GkmFunction& f) {
  std::ostringstream out;
  for (std::size_t v = 0; v < f.values.size(); ++v) {
    out << "v" << v << " " << word_text(f.graph->vertices()[v].element.word) << ": " << f.values[v].to_string() << "\n";
  }
  return out.str();
}

std::string superscript(int n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out = n < 0 ? "⁻" : "";
  for (char ch : std::to_string(std::abs(n))) out += digits[ch - '0'];
  return out;
}

// Ascending powers, e.g. 3t+3t²+t³.
std::string pretty_series(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  const std::string var = p.vars().empty() ? "" : p.vars()[0];
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const int e = it->first.empty() ? 0 : it->first[0];
    const Rational& c = it->second;
    std::string coeff = to_string(abs(c));
    if (e != 0 && abs(c) == 1) coeff.clear();
    std::string mono = e == 0 ? "" : var + (e == 1 ? "" : superscript(e));
    out += (c < 0 ? "-" : out.empty() ? "" : "+") + coeff + mono;
  }
  return out;
}

int report_checks(const Common& c, const std::vector<CheckResult>& checks, const std::string& title) {
  bool ok = true;
  for (const auto& r : checks) ok = ok && r.verified;
  if (format_of(c) == Format::Json) {
    Json j = {{"schema", kSchemaVersion}, {"kind", "check_report"}, {"title", title}, {"results", Json::array()}};
    for (const auto& r : checks) j["results"].push_back(to_json(r));
    emit(c, dump(j));
  } else {
    std::ostringstream out;
    out << title << "\n";
    for (const auto& r : checks) {
      out << (r.verified ? "  verified  " : "  mismatch  ") << r.case_name << ": " << r.relation << "\n";
      if (!r.verified) out << "      lhs: " << r.lhs << "\n      rhs: " << r.rhs << "\n";
    }
    emit(c, out.str());
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant workbench: moment graphs, shift algebras and verification"};
  app.require_subcommand(1);
  Common c;
  auto common = [&](CLI::App* sub, bool group, bool law, bool bound) {
    if (group) sub->add_option("--group", c.group, "sl2, pgl2, gl2, aN, optionally with -affine");
    if (law) sub->add_option("--law", c.law, "additive, multiplicative or formal");
    if (bound) sub->add_option("--bound", c.bound, "length bound");
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--trials", c.trials, "randomized trial count override");
    sub->add_option("--out", c.out, "output path (default stdout)");
    sub->add_option("--format", c.format, "json or text");
  };

  bool flag = false;
  bool rotation = false;
  auto* gkm = app.add_subcommand("gkm", "Build a truncated moment graph");
  common(gkm, true, true, true);
  gkm->add_flag("--flag", flag, "affine flag variety instead of the Grassmannian");
  gkm->add_flag("--loop-rotation", rotation, "add the rotation coordinate");

  std::string word = "e";
  auto* psi = app.add_subcommand("psi", "Basis function psi_w on a moment graph");
  common(psi, true, true, true);
  psi->add_option("--w", word, "word: e, s0s1 or 0,1");
  psi->add_flag("--flag", flag, "affine flag variety instead of the Grassmannian");
  psi->add_flag("--loop-rotation", rotation, "add the rotation coordinate");

  std::string values;
  std::string input;
  auto* dec = app.add_subcommand("decompose", "Expand a GKM function in the psi basis");
  common(dec, true, true, true);
  dec->add_option("--values", values, "vertex values separated by ';'");
  dec->add_option("--in", input, "gkm_function JSON file");
  dec->add_flag("--flag", flag, "affine flag variety instead of the Grassmannian");
  dec->add_flag("--loop-rotation", rotation, "add the rotation coordinate");

  std::string expr;
  auto* diffop = app.add_subcommand("diffop", "Rank-1 shift algebra: normal forms and the F-de Rham table");
  common(diffop, false, true, true);
  diffop->add_option("--expr", expr, "expression in x, t and the parameter, e.g. \"[x^2,t]\"");

  int degree = 4;
  auto* nil = app.add_subcommand("nilhecke", "Nil-Hecke relation checks");
  common(nil, true, true, false);
  nil->add_option("--degree", degree, "degree of the monomial spanning set");

  int n = 2;
  int order = 8;
  auto* fgl = app.add_subcommand("fgl", "n-series of a group law");
  common(fgl, false, true, false);
  fgl->add_option("--n", n, "multiplier");
  fgl->add_option("--order", order, "truncation order of a formal law");

  auto* kostant = app.add_subcommand("kostant", "Solve for the Borel entry of the Kostant centralizer");
  common(kostant, true, true, false);

  int dim = 3;
  auto* coulomb = app.add_subcommand("coulomb", "Verify a Coulomb branch presentation");
  common(coulomb, false, false, false);
  coulomb->add_option("--dim", dim, "3 or 4");

  int witt_n = 6;
  auto* witt = app.add_subcommand("witt", "Ghost components of Witt coordinates");
  common(witt, false, false, false);
  witt->add_option("--n", witt_n, "length n (components x1..x(n-1))");

  auto* verify = app.add_subcommand("verify-all", "Run every acceptance check");
  common(verify, false, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Format format = format_of(c);
    if (gkm->parsed()) {
      emit(c, serialize(*make_graph(c, flag, rotation), format));
      return 0;
    }
    if (psi->parsed()) {
      auto graph = make_graph(c, flag, rotation);
      const int v = graph->vertex_of(graph->group().from_word(parse_word(word)));
      if (v < 0) throw UsageError("w = " + word + " is not a vertex within bound " + std::to_string(c.bound));
      const GkmFunction f = psi_basis(graph, v);
      if (format == Format::Json) {
        Json j = to_json(f);
        j["w"] = word_text(graph->vertices()[static_cast<std::size_t>(v)].element.word);
        emit(c, dump(j));
      } else {
        emit(c, "psi_" + word_text(graph->vertices()[static_cast<std::size_t>(v)].element.word) + "\n" + function_text(f));
      }
      return check_gkm(f) ? 1 : 0;
    }
    if (dec->parsed()) {
      auto graph = make_graph(c, flag, rotation);
      GkmFunction f = GkmFunction::constant(graph, graph->zero());
      if (!input.empty()) {
        std::ifstream in(input);
        if (!in) throw UsageError("cannot read " + input);
        f = gkm_function_from_json(graph, Json::parse(in));
      } else {
        std::istringstream list(values);
        std::size_t v = 0;
        for (std::string item; std::getline(list, item, ';'); ++v) {
          if (v >= f.values.size()) throw UsageError("more values than vertices");
          f.values[v] = LaurentPoly::parse(graph->coords(), item);
        }
        if (v != f.values.size()) throw UsageError("expected " + std::to_string(f.values.size()) + " values");
      }
      if (auto e = check_gkm(f)) {
        std::cerr << "not a GKM function: congruence fails on edge " << *e << "\n";
        return 1;
      }
      const PsiBasis basis(graph);
      const auto coefficients = decompose(f, basis);
      if (format == Format::Json) {
        Json j = {{"schema", kSchemaVersion}, {"kind", "psi_expansion"}, {"coords", graph->coords()}, {"terms", Json::array()}};
        for (const auto& [w, p] : coefficients) {
          j["terms"].push_back({{"id", w}, {"w", word_text(graph->vertices()[static_cast<std::size_t>(w)].element.word)},
                                {"coefficient", p.to_string()}});
        }
        emit(c, dump(j));
      } else {
        std::string out;
        for (const auto& [w, p] : coefficients) {
          out += "(" + p.to_string() + ") * psi_" + word_text(graph->vertices()[static_cast<std::size_t>(w)].element.word) + "\n";
        }
        emit(c, out.empty() ? "0\n" : out);
      }
      return 0;
    }
    if (diffop->parsed()) {
      const GroupLaw law = parse_law(c.law, c.seed, 8);
      const std::string param = law.kind() == LawKind::Additive ? "h" : law.kind() == LawKind::Multiplicative ? "q" : "t";
      if (expr.empty()) {
        const DeRhamTable table = f_de_rham(law, c.bound);
        if (format == Format::Json) {
          Json j = {{"schema", kSchemaVersion}, {"kind", "de_rham_table"}, {"law", to_json(law)}, {"param", param},
                    {"weights", Json::array()}, {"homomorphic", table.homomorphic}};
          for (const auto& [k, w] : table.weights) j["weights"].push_back({{"n", k}, {"weight", w.to_string()}});
          emit(c, dump(j));
        } else {
          std::string out;
          for (const auto& [k, w] : table.weights) out += "x^" + std::to_string(k) + " dx -> (" + w.to_string() + ") x^" + std::to_string(k) + " dx\n";
          emit(c, out);
        }
        return table.homomorphic ? 0 : 1;
      }
      auto ctx = std::make_shared<const ShiftContext>(law, VarList{"x"}, param);
      std::map<std::string, ShiftElement> atoms{{"t", ShiftElement::shift(ctx, 1)}};
      const ShiftElement e = evaluate_expression(ctx, atoms, expr);
      emit(c, format == Format::Json ? dump(to_json(e)) : e.to_string() + "\n");
      return 0;
    }
    if (nil->parsed()) {
      GroupSpec g = parse_group(c.group);
      const auto reports = nil_hecke_relations_check(g.datum, parse_law(c.law, c.seed, 8), degree);
      bool ok = true;
      for (const auto& r : reports) ok = ok && r.holds;
      if (format == Format::Json) {
        Json j = {{"schema", kSchemaVersion}, {"kind", "nil_hecke_report"}, {"results", Json::array()}};
        for (const auto& r : reports) j["results"].push_back(to_json(r));
        emit(c, dump(j));
      } else {
        std::string out;
        for (const auto& r : reports) out += (r.holds ? "verified  " : "mismatch  ") + r.relation + (r.holds ? "" : "  [" + r.witness + "]") + "\n";
        emit(c, out);
      }
      return ok ? 0 : 1;
    }
    if (fgl->parsed()) {
      const GroupLaw law = parse_law(c.law, c.seed, order);
      const Truncated series = law.n_series_checked(n);
      const RatFunc exact = law.n_series(n);
      const std::string text = exact.is_laurent() ? pretty_series(exact.to_laurent()) : exact.to_string();
      if (format == Format::Json) {
        emit(c, dump({{"schema", kSchemaVersion}, {"kind", "n_series"}, {"law", to_json(law)}, {"n", n},
                      {"series", exact.to_string()}, {"truncation_lost", series.lost}}));
      } else {
        emit(c, text + "\n");
      }
      return 0;
    }
    if (kostant->parsed()) {
      GroupSpec g = parse_group(c.group);
      const CentralizerSolution s = kostant_centralizer_solve(g.datum.family(), parse_law(c.law, c.seed, 8).kind());
      emit(c, format == Format::Json ? dump(to_json(s)) : "b = " + s.constraint.to_string() + "\n");
      return s.annihilates ? 0 : 1;
    }
    if (coulomb->parsed()) {
      if (dim != 3 && dim != 4) throw UsageError("--dim must be 3 or 4");
      const CoulombPresentation p = dim == 3 ? coulomb_3d() : coulomb_4d();
      auto checks = verify_relations(p, p.relations, "coulomb-" + p.name);
      if (dim == 4) {
        const auto corrected = verify_relations(p, coulomb_4d_corrected_relations(), "coulomb-4d-corrected");
        checks.insert(checks.end(), corrected.begin(), corrected.end());
      }
      const auto inv = check_involution(p);
      checks.insert(checks.end(), inv.begin(), inv.end());
      return report_checks(c, checks, p.name + " Coulomb branch");
    }
    if (witt->parsed()) {
      if (witt_n < 2) throw UsageError("--n must be at least 2");
      const auto ghost = witt_ghost_symbolic(witt_n);
      if (format == Format::Json) {
        Json j = {{"schema", kSchemaVersion}, {"kind", "witt_ghost"}, {"n", witt_n}, {"ghost", Json::array()}};
        for (const auto& p : ghost) j["ghost"].push_back(p.to_string());
        emit(c, dump(j));
      } else {
        std::string out;
        for (std::size_t k = 0; k < ghost.size(); ++k) out += "p" + std::to_string(k + 1) + " = " + ghost[k].to_string() + "\n";
        emit(c, out);
      }
      return 0;
    }
    if (verify->parsed()) {
      VerifyOptions options{c.seed, c.trials};
      const auto reports = verify_all(options);
      emit(c, format == Format::Json ? dump(to_json(reports, options)) : render_text(reports));
      for (const auto& r : reports) {
        if (!r.passed()) return 1;
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
