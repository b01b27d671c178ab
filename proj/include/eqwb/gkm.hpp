#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "eqwb/group_law.hpp"
#include "eqwb/weyl.hpp"

namespace eqwb {

struct GraphOptions {
  bool finite = false;          // finite Weyl group instead of the affine one
  std::vector<int> parabolic;   // finite letters generating W_P
  int bound = 0;                // length bound on coset representatives
  bool loop_rotation = false;   // extra rotation coordinate "h" or "q"
};

struct GkmVertex {
  AffineWeylElement element;  // minimal coset representative
};

struct GkmEdge {
  int source = 0;  // shorter endpoint
  int target = 0;
  AffineRoot root;  // positive affine root with target = s_root * source
  LaurentPoly label;
};

/// Truncated moment graph of G/P (finite), Fl or Gr (affine).
class MomentGraph {
 public:
  MomentGraph(RootDatum datum, GroupLaw law, GraphOptions options);

  const WeylGroup& group() const { return group_; }
  const RootDatum& datum() const { return group_.datum(); }
  const GroupLaw& law() const { return law_; }
  const GraphOptions& options() const { return options_; }
  /// Torus coordinates, followed by the rotation variable when present.
  const VarList& coords() const { return coords_; }
  /// True when the parabolic contains every finite letter of an affine group.
  bool grassmannian() const;

  const std::vector<GkmVertex>& vertices() const { return vertices_; }
  const std::vector<GkmEdge>& edges() const { return edges_; }
  std::size_t size() const { return vertices_.size(); }
  int length(int v) const { return vertices_[static_cast<std::size_t>(v)].element.length(); }
  /// Vertex of the coset of an element, or -1 if outside the truncation.
  int vertex_of(const AffineWeylElement& a) const;
  int vertex_of_coweight(const IntVector& coweight) const;
  bool leq(int u, int v) const { return below_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] != 0; }
  /// Vertex of s_letter * v.
  int left_multiply(int letter, int v) const;

  /// c of an affine root without sign normalization.
  LaurentPoly euler_class(const AffineRoot& beta) const;
  /// Edge generator of a reflection: c of the positive representative
  /// (finite part only when there is no rotation coordinate).
  LaurentPoly label(const AffineRoot& beta) const;
  /// Action of the reflection s_beta on the coefficient ring.
  LaurentPoly reflect(const AffineRoot& beta, const LaurentPoly& p) const;
  /// Action of a group element (through a reduced word).
  LaurentPoly act(const AffineWeylElement& a, const LaurentPoly& p) const;

  LaurentPoly zero() const { return LaurentPoly(coords_); }
  LaurentPoly one() const { return LaurentPoly::constant(coords_, 1); }

 private:
  WeylGroup group_;
  GroupLaw law_;
  GraphOptions options_;
  VarList coords_;
  std::vector<GkmVertex> vertices_;
  std::vector<GkmEdge> edges_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<char>> below_;
};

MomentGraph build_moment_graph(const RootDatum& datum, const GroupLaw& law, const GraphOptions& options);

/// Vertex-indexed function on a moment graph.
struct GkmFunction {
  std::shared_ptr<const MomentGraph> graph;
  std::vector<LaurentPoly> values;

  static GkmFunction constant(std::shared_ptr<const MomentGraph> g, const LaurentPoly& c);
  GkmFunction& operator+=(const GkmFunction& o);
  GkmFunction& operator-=(const GkmFunction& o);
  friend GkmFunction operator+(GkmFunction a, const GkmFunction& b) { return a += b; }
  friend GkmFunction operator-(GkmFunction a, const GkmFunction& b) { return a -= b; }
  friend GkmFunction operator*(const GkmFunction& a, const GkmFunction& b);
  friend GkmFunction operator*(const LaurentPoly& c, const GkmFunction& f);
  friend bool operator==(const GkmFunction& a, const GkmFunction& b) { return a.values == b.values; }
  bool is_zero() const;
};

/// Index of the first edge whose congruence fails, or nullopt.
std::optional<std::size_t> check_gkm(const GkmFunction& f);

/// psi_w for every vertex w, in vertex order.
class PsiBasis {
 public:
  explicit PsiBasis(std::shared_ptr<const MomentGraph> graph);
  const MomentGraph& graph() const { return *graph_; }
  const GkmFunction& operator[](int w) const { return basis_[static_cast<std::size_t>(w)]; }
  std::size_t size() const { return basis_.size(); }
  /// Product of edge generators over the inversion set of w.
  LaurentPoly diagonal(int w) const;

 private:
  std::shared_ptr<const MomentGraph> graph_;
  std::vector<GkmFunction> basis_;
};

GkmFunction psi_basis(std::shared_ptr<const MomentGraph> graph, int w);

/// Coefficients c_w with f = sum c_w psi_w; throws std::domain_error when
/// an exact division fails.
std::map<int, LaurentPoly> decompose(const GkmFunction& f, const PsiBasis& basis);
GkmFunction recombine(const std::map<int, LaurentPoly>& coefficients, const PsiBasis& basis);

/// Homology class of Gr as a finite sum of x_coweight * fraction.
using HomologyElement = std::vector<std::pair<IntVector, RatFunc>>;

/// sum_lambda g_lambda * f(lambda); throws if a coweight is not a vertex.
RatFunc pair_homology(const HomologyElement& h, const GkmFunction& f);
/// Pairing with every psi_w is a Laurent polynomial.
bool homology_integral(const HomologyElement& h, const PsiBasis& basis);

}  // namespace eqwb
