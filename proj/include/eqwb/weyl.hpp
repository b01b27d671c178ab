#pragma once

#include <map>
#include <vector>

#include "eqwb/root_system.hpp"

namespace eqwb {

/// Element of the finite Weyl group, acting on cocharacters.
struct WeylElement {
  IntMatrix action;
  std::vector<int> word;  // reduced, letters 1..rank
  int length() const { return static_cast<int>(word.size()); }
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.action == b.action; }
};

/// x -> finite(x) + translation on the cocharacter lattice.
///
/// Words use letter 0 for the affine simple reflection and 1..rank for the
/// finite ones. Equality ignores the word.
struct AffineWeylElement {
  IntVector translation;
  IntMatrix linear;     // action on cocharacters
  IntMatrix dual;       // action on characters, inverse transpose of `linear`
  std::vector<int> word;
  int length() const { return static_cast<int>(word.size()); }
  /// Hashable identity of the element.
  std::vector<int> key() const;
  friend bool operator==(const AffineWeylElement& a, const AffineWeylElement& b) {
    return a.translation == b.translation && a.linear == b.linear;
  }
};

/// The affine Weyl group Q^vee x| W (translations by the coroot lattice),
/// generated by s_0, ..., s_r. With `finite` set only s_1..s_r are used.
class WeylGroup {
 public:
  explicit WeylGroup(RootDatum datum, bool finite = false);

  const RootDatum& datum() const { return datum_; }
  bool finite() const { return finite_; }
  /// Letters that generate the group.
  std::vector<int> generators() const;

  AffineWeylElement identity() const;
  AffineWeylElement simple(int letter) const;
  /// Simple affine root of a letter (letter 0 is -theta + delta).
  AffineRoot simple_root(int letter) const;
  AffineWeylElement reflection(const AffineRoot& beta) const;
  AffineWeylElement multiply(const AffineWeylElement& a, const AffineWeylElement& b) const;
  AffineWeylElement inverse(const AffineWeylElement& a) const;
  AffineWeylElement from_word(const std::vector<int>& word) const;

  /// Number of affine hyperplanes separating the fundamental alcove from its image.
  int length(const AffineWeylElement& a) const;
  std::vector<int> reduced_word(const AffineWeylElement& a) const;

  IntVector act(const AffineWeylElement& a, const IntVector& cocharacter) const;
  AffineRoot act(const AffineWeylElement& a, const AffineRoot& beta) const;
  bool is_positive(const AffineRoot& beta) const;

  /// Positive affine roots beta with a^{-1} beta negative; size equals length(a).
  std::vector<AffineRoot> inversion_set(const AffineWeylElement& a) const;
  /// Subword criterion on a reduced word of w.
  bool bruhat_leq(const AffineWeylElement& v, const AffineWeylElement& w) const;

  /// All elements of length <= bound, by increasing length.
  std::vector<AffineWeylElement> elements_up_to(int bound) const;
  /// Minimal-length representatives of W / W_J of length <= bound; J lists finite letters.
  std::vector<AffineWeylElement> coset_representatives(int bound, const std::vector<int>& parabolic) const;
  /// Minimal representative of a W_J coset.
  AffineWeylElement reduce_to_coset(const AffineWeylElement& a, const std::vector<int>& parabolic) const;

 private:
  AffineWeylElement compose(const AffineWeylElement& a, const AffineWeylElement& b) const;
  AffineWeylElement raw_simple(int letter) const;
  RootDatum datum_;
  bool finite_;
};

}  // namespace eqwb
