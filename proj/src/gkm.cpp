#include "eqwb/gkm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace eqwb {

MomentGraph::MomentGraph(RootDatum datum, GroupLaw law, GraphOptions options)
    : group_(std::move(datum), options.finite), law_(std::move(law)), options_(std::move(options)) {
  if (law_.kind() == LawKind::Formal) throw std::invalid_argument("moment graphs need an additive or multiplicative law");
  if (options_.finite && options_.loop_rotation) throw std::invalid_argument("loop rotation needs the affine group");
  if (options_.bound < 0) throw std::invalid_argument("length bound must be nonnegative");
  for (int j : options_.parabolic) {
    if (j < 1 || j > group_.datum().rank()) throw std::invalid_argument("parabolic letters must be finite simple reflections");
  }
  std::sort(options_.parabolic.begin(), options_.parabolic.end());
  options_.parabolic.erase(std::unique(options_.parabolic.begin(), options_.parabolic.end()), options_.parabolic.end());

  coords_ = torus_coordinates(group_.datum().dim());
  if (options_.loop_rotation) coords_.push_back(law_.kind() == LawKind::Additive ? "h" : "q");

  for (auto& rep : group_.coset_representatives(options_.bound, options_.parabolic)) {
    index_[rep.key()] = static_cast<int>(vertices_.size());
    vertices_.push_back({std::move(rep)});
  }
  const std::size_t n = vertices_.size();
  below_.assign(n, std::vector<char>(n, 0));
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u = 0; u < n; ++u) {
      below_[v][u] = group_.bruhat_leq(vertices_[u].element, vertices_[v].element) ? 1 : 0;
    }
  }

  const RootDatum& d = group_.datum();
  const int max_shift = options_.finite ? 0 : 2 * options_.bound + 4;
  std::set<std::tuple<int, int, int, int>> seen;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t r = 0; r < d.roots().size(); ++r) {
      for (int shift = 0; shift <= max_shift; ++shift) {
        AffineRoot beta{static_cast<int>(r), shift};
        if (!group_.is_positive(beta)) continue;
        int t = vertex_of(group_.multiply(group_.reflection(beta), vertices_[u].element));
        if (t < 0 || t == static_cast<int>(u)) continue;
        int lo = std::min(static_cast<int>(u), t);
        int hi = std::max(static_cast<int>(u), t);
        if (vertices_[static_cast<std::size_t>(lo)].element.length() > vertices_[static_cast<std::size_t>(hi)].element.length()) {
          std::swap(lo, hi);
        }
        AffineRoot key_root = beta;
        if (!options_.loop_rotation) {
          key_root = {beta.root, 0};
          if (!d.roots()[r].positive()) key_root.root = d.negative_of(beta.root);
        }
        if (!seen.insert({lo, hi, key_root.root, key_root.shift}).second) continue;
        edges_.push_back({lo, hi, beta, label(beta)});
      }
    }
  }
}

bool MomentGraph::grassmannian() const {
  return !options_.finite && group_.datum().rank() > 0 &&
         static_cast<int>(options_.parabolic.size()) == group_.datum().rank();
}

int MomentGraph::vertex_of(const AffineWeylElement& a) const {
  AffineWeylElement rep = group_.reduce_to_coset(a, options_.parabolic);
  auto it = index_.find(rep.key());
  return it == index_.end() ? -1 : it->second;
}

int MomentGraph::vertex_of_coweight(const IntVector& coweight) const {
  if (!grassmannian()) throw std::invalid_argument("coweight vertices exist only on Grassmannian graphs");
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].element.translation == coweight) return static_cast<int>(v);
  }
  return -1;
}

int MomentGraph::left_multiply(int letter, int v) const {
  return vertex_of(group_.multiply(group_.simple(letter), vertices_[static_cast<std::size_t>(v)].element));
}

LaurentPoly MomentGraph::euler_class(const AffineRoot& beta) const {
  const IntVector& character = group_.datum().roots().at(static_cast<std::size_t>(beta.root)).character;
  LaurentPoly c = eqwb::euler_class(law_, coords_, character);
  if (!options_.loop_rotation || beta.shift == 0) return c;
  LaurentPoly rot = LaurentPoly::variable(coords_, coords_.back());
  if (law_.kind() == LawKind::Multiplicative) rot -= one();
  return law_.add(c, law_.n_series_at(beta.shift, rot));
}

LaurentPoly MomentGraph::label(const AffineRoot& beta) const {
  const RootDatum& d = group_.datum();
  if (!options_.loop_rotation) {
    int r = d.roots().at(static_cast<std::size_t>(beta.root)).positive() ? beta.root : d.negative_of(beta.root);
    return euler_class({r, 0});
  }
  if (group_.is_positive(beta)) return euler_class(beta);
  return euler_class({d.negative_of(beta.root), -beta.shift});
}

LaurentPoly MomentGraph::reflect(const AffineRoot& beta, const LaurentPoly& p) const {
  const RootDatum& d = group_.datum();
  const Root& r = d.roots().at(static_cast<std::size_t>(beta.root));
  IntMatrix s = d.reflection_on_characters(beta.root);
  const int dim = d.dim();
  const int shift = options_.loop_rotation ? beta.shift : 0;
  std::vector<LaurentPoly> images;
  for (int i = 0; i < dim; ++i) {
    int rot_power = -shift * r.coroot(i);
    if (law_.kind() == LawKind::Additive) {
      LaurentPoly img(coords_);
      for (int j = 0; j < dim; ++j) {
        if (s(j, i) != 0) img += LaurentPoly::variable(coords_, coords_[static_cast<std::size_t>(j)]) * Rational(s(j, i));
      }
      if (rot_power != 0) img += LaurentPoly::variable(coords_, coords_.back()) * Rational(rot_power);
      images.push_back(img);
    } else {
      Exponent e(coords_.size(), 0);
      for (int j = 0; j < dim; ++j) e[static_cast<std::size_t>(j)] = s(j, i);
      if (options_.loop_rotation) e.back() = rot_power;
      images.push_back(LaurentPoly::monomial(coords_, e));
    }
  }
  if (options_.loop_rotation) images.push_back(LaurentPoly::variable(coords_, coords_.back()));
  return p.with_vars(coords_).substitute(images);
}

LaurentPoly MomentGraph::act(const AffineWeylElement& a, const LaurentPoly& p) const {
  LaurentPoly result = p;
  for (auto it = a.word.rbegin(); it != a.word.rend(); ++it) result = reflect(group_.simple_root(*it), result);
  return result;
}

MomentGraph build_moment_graph(const RootDatum& datum, const GroupLaw& law, const GraphOptions& options) {
  return MomentGraph(datum, law, options);
}

GkmFunction GkmFunction::constant(std::shared_ptr<const MomentGraph> g, const LaurentPoly& c) {
  std::vector<LaurentPoly> values(g->size(), c.with_vars(g->coords()));
  return {std::move(g), std::move(values)};
}

GkmFunction& GkmFunction::operator+=(const GkmFunction& o) {
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
  return *this;
}

GkmFunction& GkmFunction::operator-=(const GkmFunction& o) {
  for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
  return *this;
}

GkmFunction operator*(const GkmFunction& a, const GkmFunction& b) {
  GkmFunction r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] *= b.values[i];
  return r;
}

GkmFunction operator*(const LaurentPoly& c, const GkmFunction& f) {
  GkmFunction r = f;
  for (auto& v : r.values) v = c * v;
  return r;
}

bool GkmFunction::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

namespace {

// Quotient in the coefficient ring: polynomials for the additive law,
// Laurent polynomials for the multiplicative one.
std::optional<LaurentPoly> divide_in_ring(const MomentGraph& g, const LaurentPoly& a, const LaurentPoly& b) {
  auto q = exact_div(a, b);
  if (q && g.law().kind() == LawKind::Additive && !q->is_polynomial()) return std::nullopt;
  return q;
}

}  // namespace

std::optional<std::size_t> check_gkm(const GkmFunction& f) {
  const auto& edges = f.graph->edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const GkmEdge& e = edges[i];
    LaurentPoly diff = f.values[static_cast<std::size_t>(e.target)] - f.values[static_cast<std::size_t>(e.source)];
    if (!divide_in_ring(*f.graph, diff, e.label)) return i;
  }
  return std::nullopt;
}

namespace {

using PartialFunction = std::map<int, LaurentPoly>;

LaurentPoly inversion_product(const MomentGraph& g, const AffineWeylElement& w, const AffineWeylElement* twist) {
  LaurentPoly prod = g.one();
  for (const AffineRoot& beta : g.group().inversion_set(w)) {
    prod *= g.label(twist ? g.group().act(*twist, beta) : beta);
  }
  return prod;
}

// Value at w making psi (given on the vertices strictly below w) congruent
// along every edge from w into the interval.
LaurentPoly extend(const MomentGraph& g, const PartialFunction& psi, int w) {
  if (g.length(w) == 0) return g.zero();
  int letter = -1;
  int w1 = -1;
  for (int l : g.group().generators()) {
    int u = g.left_multiply(l, w);
    if (u >= 0 && g.length(u) < g.length(w)) {
      letter = l;
      w1 = u;
      break;
    }
  }
  if (letter < 0) throw std::logic_error("vertex of positive length without a left descent");

  const AffineRoot alpha = g.group().simple_root(letter);
  const AffineRoot minus_alpha{g.datum().negative_of(alpha.root), -alpha.shift};
  const LaurentPoly c_alpha = g.euler_class(alpha);

  PartialFunction twisted;
  for (const auto& [v, value] : psi) {
    if (v == w1 || !g.leq(v, w1)) continue;
    auto it = psi.find(g.left_multiply(letter, v));
    if (it == psi.end()) throw std::domain_error("graph too small to extend the basis function");
    twisted[v] = g.reflect(alpha, it->second);
  }
  twisted[w1] = extend(g, twisted, w1);

  PartialFunction quotient;
  for (const auto& [v, value] : twisted) {
    if (v != w1) quotient[v] = divmod_lex(psi.at(v) - value, c_alpha).first;
  }
  quotient[w1] = extend(g, quotient, w1);

  LaurentPoly defect = g.reflect(alpha, psi.at(w1) - twisted[w1]) -
                       g.euler_class(minus_alpha) * g.reflect(alpha, quotient[w1]);
  AffineWeylElement s_alpha = g.group().simple(letter);
  LaurentPoly prod = inversion_product(g, g.vertices()[static_cast<std::size_t>(w1)].element, &s_alpha);
  LaurentPoly correction = divmod_lex(defect, prod).first;
  return g.reflect(alpha, twisted[w1]) + correction * prod;
}

}  // namespace

GkmFunction psi_basis(std::shared_ptr<const MomentGraph> graph, int w) {
  const MomentGraph& g = *graph;
  if (w < 0 || w >= static_cast<int>(g.size())) throw std::out_of_range("vertex out of range");
  std::vector<int> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.length(a) < g.length(b); });
  std::vector<LaurentPoly> values(g.size(), g.zero());
  for (int v : order) {
    if (!g.leq(w, v)) continue;
    if (v == w) {
      values[static_cast<std::size_t>(v)] = inversion_product(g, g.vertices()[static_cast<std::size_t>(w)].element, nullptr);
      continue;
    }
    PartialFunction lower;
    for (std::size_t u = 0; u < g.size(); ++u) {
      if (static_cast<int>(u) != v && g.leq(static_cast<int>(u), v)) lower[static_cast<int>(u)] = values[u];
    }
    values[static_cast<std::size_t>(v)] = extend(g, lower, v);
  }
  return {std::move(graph), std::move(values)};
}

PsiBasis::PsiBasis(std::shared_ptr<const MomentGraph> graph) : graph_(std::move(graph)) {
  for (std::size_t w = 0; w < graph_->size(); ++w) basis_.push_back(psi_basis(graph_, static_cast<int>(w)));
}

LaurentPoly PsiBasis::diagonal(int w) const { return basis_[static_cast<std::size_t>(w)].values[static_cast<std::size_t>(w)]; }

std::map<int, LaurentPoly> decompose(const GkmFunction& f, const PsiBasis& basis) {
  const MomentGraph& g = basis.graph();
  GkmFunction rest = f;
  std::map<int, LaurentPoly> coefficients;
  while (true) {
    int pick = -1;
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (rest.values[v].is_zero()) continue;
      if (pick < 0 || g.length(static_cast<int>(v)) < g.length(pick)) pick = static_cast<int>(v);
    }
    if (pick < 0) break;
    auto c = divide_in_ring(g, rest.values[static_cast<std::size_t>(pick)], basis.diagonal(pick));
    if (!c) throw std::domain_error("exact division failed while decomposing; input is not a GKM function");
    rest -= *c * basis[pick];
    coefficients.emplace(pick, *c);
  }
  return coefficients;
}

GkmFunction recombine(const std::map<int, LaurentPoly>& coefficients, const PsiBasis& basis) {
  const MomentGraph& g = basis.graph();
  GkmFunction sum = GkmFunction::constant(basis[0].graph, g.zero());
  for (const auto& [w, c] : coefficients) sum += c * basis[w];
  return sum;
}

RatFunc pair_homology(const HomologyElement& h, const GkmFunction& f) {
  const MomentGraph& g = *f.graph;
  RatFunc total(g.zero());
  for (const auto& [coweight, fraction] : h) {
    int v = g.vertex_of_coweight(coweight);
    if (v < 0) throw std::out_of_range("homology support outside the coweight ball");
    total += fraction * RatFunc(f.values[static_cast<std::size_t>(v)]);
  }
  return total;
}

bool homology_integral(const HomologyElement& h, const PsiBasis& basis) {
  for (std::size_t w = 0; w < basis.size(); ++w) {
    const RatFunc value = pair_homology(h, basis[static_cast<int>(w)]);
    if (!value.is_laurent()) return false;
    if (basis.graph().law().kind() == LawKind::Additive && !value.to_laurent().is_polynomial()) return false;
  }
  return true;
}

}  // namespace eqwb
