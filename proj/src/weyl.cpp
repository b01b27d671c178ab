#include "eqwb/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace eqwb {

std::vector<int> AffineWeylElement::key() const {
  std::vector<int> k(translation.data(), translation.data() + translation.size());
  k.insert(k.end(), linear.data(), linear.data() + linear.size());
  return k;
}

WeylGroup::WeylGroup(RootDatum datum, bool finite) : datum_(std::move(datum)), finite_(finite) {}

std::vector<int> WeylGroup::generators() const {
  std::vector<int> g;
  if (!finite_ && datum_.rank() > 0) g.push_back(0);
  for (int i = 1; i <= datum_.rank(); ++i) g.push_back(i);
  return g;
}

AffineWeylElement WeylGroup::identity() const {
  const int d = datum_.dim();
  return {IntVector::Zero(d), IntMatrix::Identity(d, d), IntMatrix::Identity(d, d), {}};
}

AffineRoot WeylGroup::simple_root(int letter) const {
  if (letter < 0 || letter > datum_.rank()) throw std::invalid_argument("bad simple reflection letter");
  if (letter == 0) {
    if (finite_) throw std::invalid_argument("affine letter in a finite Weyl group");
    return {datum_.negative_of(datum_.highest_root()), 1};
  }
  return {datum_.simple_index(letter), 0};
}

AffineWeylElement WeylGroup::reflection(const AffineRoot& beta) const {
  const Root& r = datum_.roots().at(static_cast<std::size_t>(beta.root));
  AffineWeylElement e{-beta.shift * r.coroot, datum_.reflection_on_cocharacters(beta.root),
                      datum_.reflection_on_characters(beta.root), {}};
  e.word = reduced_word(e);
  return e;
}

AffineWeylElement WeylGroup::raw_simple(int letter) const {
  AffineRoot b = simple_root(letter);
  const Root& r = datum_.roots()[static_cast<std::size_t>(b.root)];
  return {-b.shift * r.coroot, datum_.reflection_on_cocharacters(b.root), datum_.reflection_on_characters(b.root), {letter}};
}

AffineWeylElement WeylGroup::simple(int letter) const { return raw_simple(letter); }

AffineWeylElement WeylGroup::compose(const AffineWeylElement& a, const AffineWeylElement& b) const {
  return {a.translation + a.linear * b.translation, a.linear * b.linear, a.dual * b.dual, {}};
}

AffineWeylElement WeylGroup::multiply(const AffineWeylElement& a, const AffineWeylElement& b) const {
  AffineWeylElement e = compose(a, b);
  e.word = reduced_word(e);
  return e;
}

AffineWeylElement WeylGroup::inverse(const AffineWeylElement& a) const {
  IntMatrix linv = a.dual.transpose();
  AffineWeylElement e{-(linv * a.translation), linv, a.linear.transpose(), {}};
  e.word = reduced_word(e);
  return e;
}

AffineWeylElement WeylGroup::from_word(const std::vector<int>& word) const {
  AffineWeylElement e = identity();
  for (int letter : word) e = compose(e, raw_simple(letter));
  e.word = reduced_word(e);
  return e;
}

int WeylGroup::length(const AffineWeylElement& a) const {
  int total = 0;
  const auto& roots = datum_.roots();
  for (int i = 0; i < datum_.num_positive(); ++i) {
    const Root& r = roots[static_cast<std::size_t>(i)];
    IntVector pre = a.linear.transpose() * r.character;  // w^{-1} alpha
    int idx = datum_.root_index(pre);
    if (idx < 0) throw std::logic_error("Weyl element does not permute roots");
    int m = RootDatum::pairing(r.character, a.translation);
    total += roots[static_cast<std::size_t>(idx)].positive() ? std::abs(m) : std::abs(m - 1);
  }
  return total;
}

std::vector<int> WeylGroup::reduced_word(const AffineWeylElement& a) const {
  std::vector<int> rev;
  AffineWeylElement cur = a;
  int len = length(cur);
  while (len > 0) {
    bool stepped = false;
    for (int letter : generators()) {
      AffineWeylElement next = compose(cur, raw_simple(letter));
      int nl = length(next);
      if (nl < len) {
        rev.push_back(letter);
        cur = std::move(next);
        len = nl;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw std::logic_error("element has no descent but positive length");
  }
  return {rev.rbegin(), rev.rend()};
}

IntVector WeylGroup::act(const AffineWeylElement& a, const IntVector& cocharacter) const {
  return a.linear * cocharacter + a.translation;
}

AffineRoot WeylGroup::act(const AffineWeylElement& a, const AffineRoot& beta) const {
  IntVector image = a.dual * datum_.roots().at(static_cast<std::size_t>(beta.root)).character;
  int idx = datum_.root_index(image);
  if (idx < 0) throw std::logic_error("Weyl element does not permute roots");
  return {idx, beta.shift - RootDatum::pairing(image, a.translation)};
}

bool WeylGroup::is_positive(const AffineRoot& beta) const {
  return beta.shift > 0 || (beta.shift == 0 && datum_.roots().at(static_cast<std::size_t>(beta.root)).positive());
}

std::vector<AffineRoot> WeylGroup::inversion_set(const AffineWeylElement& a) const {
  std::vector<AffineRoot> out;
  const auto& roots = datum_.roots();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const Root& r = roots[i];
    int m = RootDatum::pairing(r.character, a.translation);
    int pre = datum_.root_index(a.linear.transpose() * r.character);
    bool pre_negative = !roots[static_cast<std::size_t>(pre)].positive();
    for (int n = 0; n <= std::max(0, -m); ++n) {
      AffineRoot beta{static_cast<int>(i), n};
      if (!is_positive(beta)) continue;
      if (n + m < 0 || (n + m == 0 && pre_negative)) out.push_back(beta);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool WeylGroup::bruhat_leq(const AffineWeylElement& v, const AffineWeylElement& w) const {
  std::vector<int> word = reduced_word(w);
  if (length(v) > static_cast<int>(word.size())) return false;
  std::set<std::vector<int>> seen{identity().key()};
  std::vector<AffineWeylElement> products{identity()};
  for (int letter : word) {
    AffineWeylElement s = raw_simple(letter);
    std::size_t n = products.size();
    for (std::size_t i = 0; i < n; ++i) {
      AffineWeylElement p = compose(products[i], s);
      if (seen.insert(p.key()).second) products.push_back(std::move(p));
    }
  }
  return seen.count(v.key()) > 0;
}

std::vector<AffineWeylElement> WeylGroup::elements_up_to(int bound) const {
  if (bound < 0) throw std::invalid_argument("length bound must be nonnegative");
  std::vector<AffineWeylElement> all{identity()};
  std::set<std::vector<int>> seen{identity().key()};
  std::vector<AffineWeylElement> layer{identity()};
  for (int len = 1; len <= bound && !layer.empty(); ++len) {
    std::vector<AffineWeylElement> next;
    for (const auto& x : layer) {
      for (int letter : generators()) {
        AffineWeylElement y = compose(x, raw_simple(letter));
        if (length(y) != len || !seen.insert(y.key()).second) continue;
        y.word = x.word;
        y.word.push_back(letter);
        next.push_back(y);
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return all;
}

std::vector<AffineWeylElement> WeylGroup::coset_representatives(int bound, const std::vector<int>& parabolic) const {
  std::vector<AffineWeylElement> reps;
  for (auto& x : elements_up_to(bound)) {
    bool minimal = std::all_of(parabolic.begin(), parabolic.end(), [&](int j) {
      return length(compose(x, raw_simple(j))) > x.length();
    });
    if (minimal) reps.push_back(std::move(x));
  }
  return reps;
}

AffineWeylElement WeylGroup::reduce_to_coset(const AffineWeylElement& a, const std::vector<int>& parabolic) const {
  AffineWeylElement cur = a;
  int len = length(cur);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j : parabolic) {
      AffineWeylElement next = compose(cur, raw_simple(j));
      int nl = length(next);
      if (nl < len) {
        cur = std::move(next);
        len = nl;
        changed = true;
      }
    }
  }
  cur.word = reduced_word(cur);
  return cur;
}

}  // namespace eqwb
