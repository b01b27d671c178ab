#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

namespace eqwb {

using IntVector = Eigen::VectorXi;
using IntMatrix = Eigen::MatrixXi;

/// A root with its coroot and its expansion in simple roots.
struct Root {
  IntVector character;
  IntVector coroot;
  IntVector simple_coeffs;
  bool positive() const { return simple_coeffs.sum() > 0; }
  int height() const { return simple_coeffs.sum(); }
};

/// Affine root alpha + n*delta, alpha given by its index in RootDatum::roots().
struct AffineRoot {
  int root = 0;
  int shift = 0;
  friend bool operator==(const AffineRoot& a, const AffineRoot& b) { return a.root == b.root && a.shift == b.shift; }
  friend bool operator<(const AffineRoot& a, const AffineRoot& b) {
    return a.root != b.root ? a.root < b.root : a.shift < b.shift;
  }
};

/// Root datum in a fixed lattice basis.
///
/// Characters and cocharacters are integer vectors of length dim(); the
/// pairing is the dot product. Supported families: "A" (rank n, simple
/// roots form the character basis), "SL2" (alpha = 1, coroot = 2),
/// "PGL2" (alpha = 2, coroot = 1), "GL2" and "T" (a torus of the given rank).
class RootDatum {
 public:
  static RootDatum build(const std::string& family, int rank);
  /// Rebuild from explicit data (used by deserialization).
  static RootDatum from_simple(std::string family, std::vector<IntVector> simple_roots,
                               std::vector<IntVector> simple_coroots, int dim);

  const std::string& family() const { return family_; }
  int rank() const { return static_cast<int>(simple_roots_.size()); }
  int dim() const { return dim_; }
  const IntMatrix& cartan_matrix() const { return cartan_; }
  const std::vector<IntVector>& simple_roots() const { return simple_roots_; }
  const std::vector<IntVector>& simple_coroots() const { return simple_coroots_; }
  /// All roots: positive roots first, ordered by height then lexicographically.
  const std::vector<Root>& roots() const { return roots_; }
  int num_positive() const { return num_positive_; }
  /// Index of the root with the given character, or -1.
  int root_index(const IntVector& character) const;
  int negative_of(int root) const;
  /// Index of the highest root (-1 for a torus).
  int highest_root() const { return highest_; }
  /// Index of simple root i (1-based) inside roots().
  int simple_index(int i) const;

  static int pairing(const IntVector& character, const IntVector& cocharacter) { return character.dot(cocharacter); }

  /// s_alpha on characters and on cocharacters, as matrices.
  IntMatrix reflection_on_characters(int root) const;
  IntMatrix reflection_on_cocharacters(int root) const;

  friend bool operator==(const RootDatum& a, const RootDatum& b);

 private:
  void close_roots();
  std::string family_;
  int dim_ = 0;
  IntMatrix cartan_;
  std::vector<IntVector> simple_roots_;
  std::vector<IntVector> simple_coroots_;
  std::vector<Root> roots_;
  int num_positive_ = 0;
  int highest_ = -1;
};

/// s_{alpha + n alpha_0}(x) = x - (<x, alpha> + n) alpha^vee on the cocharacter lattice.
IntVector affine_reflect(const RootDatum& datum, const IntVector& alpha, int n, const IntVector& x);

}  // namespace eqwb
