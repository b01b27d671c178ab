#include <doctest.h>

#include <deque>
#include <map>
#include <set>

#include "eqwb/weyl.hpp"
#include "generators.hpp"

using namespace eqwb;

namespace {

IntVector vec(std::initializer_list<int> v) {
  IntVector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (int x : v) out(i++) = x;
  return out;
}

// Breadth-first search over generators: distance from the identity is the length.
std::map<std::vector<int>, std::pair<AffineWeylElement, int>> bfs_ball(const WeylGroup& g, int radius) {
  std::map<std::vector<int>, std::pair<AffineWeylElement, int>> seen;
  std::deque<AffineWeylElement> queue{g.identity()};
  seen.emplace(g.identity().key(), std::make_pair(g.identity(), 0));
  while (!queue.empty()) {
    AffineWeylElement a = queue.front();
    queue.pop_front();
    const int d = seen.at(a.key()).second;
    if (d == radius) continue;
    for (int s : g.generators()) {
      AffineWeylElement b = g.multiply(g.simple(s), a);
      if (seen.emplace(b.key(), std::make_pair(b, d + 1)).second) queue.push_back(b);
    }
  }
  return seen;
}

// Bruhat order from its definition: transitive closure of u < t u with t a
// reflection and length(t u) > length(u).
std::set<std::pair<std::vector<int>, std::vector<int>>> bruhat_oracle(const WeylGroup& g,
                                                                     const std::vector<AffineWeylElement>& elements,
                                                                     int max_shift) {
  std::vector<AffineWeylElement> reflections;
  const RootDatum& d = g.datum();
  for (int r = 0; r < d.num_positive(); ++r) {
    for (int n = g.finite() ? 0 : -max_shift; n <= (g.finite() ? 0 : max_shift); ++n) reflections.push_back(g.reflection({r, n}));
  }
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i].key()] = static_cast<int>(i);
  const std::size_t n = elements.size();
  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    le[i][i] = 1;
    for (const auto& t : reflections) {
      auto it = index.find(g.multiply(t, elements[i]).key());
      if (it != index.end() && g.length(elements[static_cast<std::size_t>(it->second)]) > g.length(elements[i])) {
        le[i][static_cast<std::size_t>(it->second)] = 1;
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (le[i][k] && le[k][j]) le[i][j] = 1;
      }
    }
  }
  std::set<std::pair<std::vector<int>, std::vector<int>>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (le[i][j]) out.emplace(elements[i].key(), elements[j].key());
    }
  }
  return out;
}

}  // namespace

TEST_CASE("root data of the supported families") {
  const RootDatum sl2 = RootDatum::build("SL2", 1);
  CHECK(sl2.roots().size() == 2);
  CHECK(RootDatum::pairing(sl2.roots()[0].character, sl2.roots()[0].coroot) == 2);
  const RootDatum pgl2 = RootDatum::build("PGL2", 1);
  CHECK(pgl2.simple_roots()[0] == vec({2}));
  CHECK(pgl2.simple_coroots()[0] == vec({1}));
  const RootDatum a2 = RootDatum::build("A", 2);
  CHECK(a2.roots().size() == 6);
  CHECK(a2.num_positive() == 3);
  CHECK(RootDatum::build("A", 3).roots().size() == 12);
  CHECK(a2.roots()[static_cast<std::size_t>(a2.highest_root())].height() == 2);
  for (int i = 0; i < a2.rank(); ++i) {
    for (int j = 0; j < a2.rank(); ++j) {
      CHECK(a2.cartan_matrix()(i, j) == RootDatum::pairing(a2.simple_roots()[static_cast<std::size_t>(i)],
                                                           a2.simple_coroots()[static_cast<std::size_t>(j)]));
    }
  }
  CHECK(RootDatum::build("T", 2).roots().empty());
  CHECK_THROWS(RootDatum::build("E", 8));
}

TEST_CASE("affine reflection formula") {
  const RootDatum sl2 = RootDatum::build("SL2", 1);
  const IntVector alpha = vec({1});
  const IntVector coroot = vec({2});
  CHECK(affine_reflect(sl2, alpha, 0, coroot) == vec({-2}));
  CHECK(affine_reflect(sl2, alpha, 1, vec({0})) == vec({-2}));
  CHECK(affine_reflect(sl2, alpha, 1, vec({1})) == vec({-3}));
  CHECK_THROWS(affine_reflect(sl2, vec({3}), 0, coroot));

  const RootDatum a2 = RootDatum::build("A", 2);
  for (int r = 0; r < static_cast<int>(a2.roots().size()); ++r) {
    const IntMatrix s = a2.reflection_on_cocharacters(r);
    for (int a = -3; a <= 3; ++a) {
      for (int b = -3; b <= 3; ++b) {
        const IntVector x = vec({a, b});
        CHECK(affine_reflect(a2, a2.roots()[static_cast<std::size_t>(r)].character, 0, x) == IntVector(s * x));
      }
    }
  }
}

TEST_CASE("lengths, reduced words and inversion sets against breadth-first search") {
  for (const auto& [family, rank, finite, radius] :
       {std::tuple{"SL2", 1, false, 6}, std::tuple{"A", 2, true, 3}, std::tuple{"A", 2, false, 4}, std::tuple{"PGL2", 1, false, 5}}) {
    const WeylGroup g(RootDatum::build(family, rank), finite);
    const auto ball = bfs_ball(g, radius);
    for (const auto& [key, entry] : ball) {
      const auto& [a, dist] = entry;
      CHECK(g.length(a) == dist);
      const auto word = g.reduced_word(a);
      CHECK(static_cast<int>(word.size()) == dist);
      CHECK(g.from_word(word) == a);
      CHECK(static_cast<int>(g.inversion_set(a).size()) == dist);
      CHECK(g.multiply(a, g.inverse(a)) == g.identity());
    }
    CHECK(g.elements_up_to(radius).size() == ball.size());
  }
  const WeylGroup a2(RootDatum::build("A", 2), true);
  CHECK(a2.elements_up_to(10).size() == 6);
  CHECK(a2.inversion_set(a2.identity()).empty());
  CHECK(a2.inversion_set(a2.from_word({1, 2, 1})).size() == 3);
  const auto s1 = a2.inversion_set(a2.simple(1));
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].root == a2.datum().simple_index(1));
}

TEST_CASE("Bruhat order agrees with the reflection-closure oracle") {
  {
    const WeylGroup g(RootDatum::build("A", 2), true);
    const auto elements = g.elements_up_to(3);
    const auto oracle = bruhat_oracle(g, elements, 0);
    for (const auto& v : elements) {
      for (const auto& w : elements) CHECK(g.bruhat_leq(v, w) == (oracle.count({v.key(), w.key()}) == 1));
    }
    CHECK(g.bruhat_leq(g.simple(1), g.from_word({2, 1, 2})));
    CHECK_FALSE(g.bruhat_leq(g.from_word({1, 2}), g.simple(2)));
  }
  {
    const WeylGroup g(RootDatum::build("SL2", 1), false);
    const auto elements = g.elements_up_to(5);
    const auto oracle = bruhat_oracle(g, elements, 7);
    for (const auto& v : elements) {
      for (const auto& w : elements) CHECK(g.bruhat_leq(v, w) == (oracle.count({v.key(), w.key()}) == 1));
      CHECK(g.bruhat_leq(g.identity(), v));
    }
  }
}

TEST_CASE("minimal coset representatives") {
  const WeylGroup g(RootDatum::build("SL2", 1), false);
  CHECK(g.coset_representatives(0, {1}).size() == 1);
  const auto reps = g.coset_representatives(3, {1});
  REQUIRE(reps.size() == 4);
  std::set<int> coweights;
  for (const auto& w : reps) coweights.insert(w.translation(0));
  CHECK(coweights == std::set<int>{-2, 0, 2, 4});
  CHECK(g.coset_representatives(2, {}).size() == g.elements_up_to(2).size());

  // Each representative is the unique shortest element of its coset among all elements up to the bound.
  const auto all = g.elements_up_to(6);
  for (const auto& w : reps) {
    for (const auto& u : all) {
      if (g.reduce_to_coset(u, {1}) == w) CHECK(g.length(u) >= g.length(w));
    }
  }
  const WeylGroup a2(RootDatum::build("A", 2), false);
  const auto a2_reps = a2.coset_representatives(3, {1, 2});
  for (std::size_t i = 0; i < a2_reps.size(); ++i) {
    for (std::size_t j = i + 1; j < a2_reps.size(); ++j) CHECK_FALSE(a2_reps[i] == a2_reps[j]);
    CHECK(a2.reduce_to_coset(a2_reps[i], {1, 2}) == a2_reps[i]);
  }
}
