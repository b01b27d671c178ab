#include "eqwb/root_system.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace eqwb {

namespace {

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

}  // namespace

RootDatum RootDatum::build(const std::string& family, int rank) {
  if (family == "A") {
    if (rank < 1) throw std::invalid_argument("type A needs rank >= 1");
    std::vector<IntVector> roots;
    std::vector<IntVector> coroots;
    for (int i = 0; i < rank; ++i) {
      roots.push_back(IntVector::Unit(rank, i));
      IntVector c = IntVector::Zero(rank);
      c(i) = 2;
      if (i > 0) c(i - 1) = -1;
      if (i + 1 < rank) c(i + 1) = -1;
      coroots.push_back(c);
    }
    return from_simple("A", roots, coroots, rank);
  }
  if (family == "SL2" || family == "PGL2") {
    if (rank != 1) throw std::invalid_argument(family + " has rank 1");
    IntVector a(1);
    IntVector c(1);
    a << (family == "SL2" ? 1 : 2);
    c << (family == "SL2" ? 2 : 1);
    return from_simple(family, {a}, {c}, 1);
  }
  if (family == "GL2") {
    if (rank != 1) throw std::invalid_argument("GL2 has semisimple rank 1");
    IntVector a(2);
    a << 1, -1;
    return from_simple("GL2", {a}, {a}, 2);
  }
  if (family == "T") {
    if (rank < 0) throw std::invalid_argument("torus rank must be nonnegative");
    return from_simple("T", {}, {}, rank);
  }
  throw std::invalid_argument("unsupported root datum family: " + family);
}

RootDatum RootDatum::from_simple(std::string family, std::vector<IntVector> simple_roots,
                                 std::vector<IntVector> simple_coroots, int dim) {
  if (simple_roots.size() != simple_coroots.size()) throw std::invalid_argument("root/coroot count mismatch");
  RootDatum d;
  d.family_ = std::move(family);
  d.dim_ = dim;
  d.simple_roots_ = std::move(simple_roots);
  d.simple_coroots_ = std::move(simple_coroots);
  const int r = d.rank();
  d.cartan_ = IntMatrix::Zero(r, r);
  for (int i = 0; i < r; ++i) {
    if (d.simple_roots_[static_cast<std::size_t>(i)].size() != dim ||
        d.simple_coroots_[static_cast<std::size_t>(i)].size() != dim) {
      throw std::invalid_argument("lattice vector of wrong length");
    }
    for (int j = 0; j < r; ++j) {
      d.cartan_(i, j) = pairing(d.simple_roots_[static_cast<std::size_t>(i)], d.simple_coroots_[static_cast<std::size_t>(j)]);
    }
  }
  for (int i = 0; i < r; ++i) {
    if (d.cartan_(i, i) != 2) throw std::invalid_argument("simple root does not pair to 2 with its coroot");
    for (int j = 0; j < r; ++j) {
      if (i != j && (d.cartan_(i, j) > 0 || ((d.cartan_(i, j) == 0) != (d.cartan_(j, i) == 0)))) {
        throw std::invalid_argument("not a generalized Cartan matrix");
      }
    }
  }
  d.close_roots();
  return d;
}

void RootDatum::close_roots() {
  const int r = rank();
  std::vector<Root> found;
  std::deque<Root> queue;
  for (int i = 0; i < r; ++i) {
    auto k = static_cast<std::size_t>(i);
    queue.push_back({simple_roots_[k], simple_coroots_[k], IntVector::Unit(r, i)});
  }
  while (!queue.empty()) {
    Root b = queue.front();
    queue.pop_front();
    bool seen = std::any_of(found.begin(), found.end(), [&](const Root& x) { return x.character == b.character; });
    if (seen) continue;
    found.push_back(b);
    if (found.size() > 10000) throw std::invalid_argument("root system is not finite");
    for (int i = 0; i < r; ++i) {
      auto k = static_cast<std::size_t>(i);
      int m = pairing(b.character, simple_coroots_[k]);
      int mc = pairing(simple_roots_[k], b.coroot);
      Root nb{b.character - m * simple_roots_[k], b.coroot - mc * simple_coroots_[k], b.simple_coeffs};
      nb.simple_coeffs(i) -= m;
      queue.push_back(nb);
    }
  }
  std::sort(found.begin(), found.end(), [](const Root& a, const Root& b) {
    if (a.positive() != b.positive()) return a.positive();
    int ha = std::abs(a.height());
    int hb = std::abs(b.height());
    if (ha != hb) return ha < hb;
    return lex_less(b.simple_coeffs, a.simple_coeffs);
  });
  roots_ = std::move(found);
  num_positive_ = static_cast<int>(std::count_if(roots_.begin(), roots_.end(), [](const Root& x) { return x.positive(); }));
  highest_ = -1;
  for (int i = 0; i < num_positive_; ++i) {
    if (highest_ < 0 || roots_[static_cast<std::size_t>(i)].height() > roots_[static_cast<std::size_t>(highest_)].height()) highest_ = i;
  }
}

int RootDatum::root_index(const IntVector& character) const {
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (roots_[i].character.size() == character.size() && roots_[i].character == character) return static_cast<int>(i);
  }
  return -1;
}

int RootDatum::negative_of(int root) const { return root_index(-roots_.at(static_cast<std::size_t>(root)).character); }

int RootDatum::simple_index(int i) const { return root_index(simple_roots_.at(static_cast<std::size_t>(i - 1))); }

IntMatrix RootDatum::reflection_on_characters(int root) const {
  const Root& b = roots_.at(static_cast<std::size_t>(root));
  return IntMatrix::Identity(dim_, dim_) - b.character * b.coroot.transpose();
}

IntMatrix RootDatum::reflection_on_cocharacters(int root) const {
  const Root& b = roots_.at(static_cast<std::size_t>(root));
  return IntMatrix::Identity(dim_, dim_) - b.coroot * b.character.transpose();
}

bool operator==(const RootDatum& a, const RootDatum& b) {
  return a.family_ == b.family_ && a.dim_ == b.dim_ && a.simple_roots_ == b.simple_roots_ &&
         a.simple_coroots_ == b.simple_coroots_;
}

IntVector affine_reflect(const RootDatum& datum, const IntVector& alpha, int n, const IntVector& x) {
  int idx = datum.root_index(alpha);
  if (idx < 0) throw std::invalid_argument("not a root");
  const Root& b = datum.roots()[static_cast<std::size_t>(idx)];
  return x - (RootDatum::pairing(alpha, x) + n) * b.coroot;
}

}  // namespace eqwb
