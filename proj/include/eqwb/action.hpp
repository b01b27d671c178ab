#pragma once

#include <map>
#include <string>
#include <vector>

#include "eqwb/ratfunc.hpp"

namespace eqwb {

/// Ring endomorphism fixed by the images of the variables.
class Substitution {
 public:
  Substitution() = default;
  Substitution(VarList vars, std::vector<RatFunc> images);
  static Substitution identity(const VarList& vars);
  /// Parse "x -> -x, t -> t^-1"; unmentioned variables are fixed.
  static Substitution parse(const VarList& vars, const std::string& text);

  const VarList& vars() const { return vars_; }
  const std::vector<RatFunc>& images() const { return images_; }

  RatFunc apply(const RatFunc& p) const;
  /// Throws std::domain_error if the image is not a Laurent polynomial.
  LaurentPoly apply(const LaurentPoly& p) const;
  /// (this o inner)(p) = this(inner(p)).
  Substitution after(const Substitution& inner) const;

  friend bool operator==(const Substitution& a, const Substitution& b) {
    return a.vars_ == b.vars_ && a.images_ == b.images_;
  }

 private:
  VarList vars_;
  std::vector<RatFunc> images_;
};

/// Finite group acting on a coefficient ring by substitutions.
class GroupAction {
 public:
  /// Enumerates the group generated by the substitutions; throws if the
  /// closure exceeds max_order.
  GroupAction(VarList vars, std::vector<Substitution> generators, std::size_t max_order = 1024);

  const VarList& vars() const { return vars_; }
  const std::vector<Substitution>& generators() const { return generators_; }
  const std::vector<Substitution>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  /// (1/|G|) sum_g g.p
  RatFunc symmetrize(const RatFunc& p) const;
  bool is_invariant(const RatFunc& p) const;

 private:
  VarList vars_;
  std::vector<Substitution> generators_;
  std::vector<Substitution> elements_;
};

inline bool is_zero_coeff(const Rational& c) { return c == 0; }
inline bool is_zero_coeff(const LaurentPoly& c) { return c.is_zero(); }
inline bool is_zero_coeff(const RatFunc& c) { return c.is_zero(); }

/// Group ring k[L] of a lattice L = Z^rank: finitely supported maps
/// lambda -> coefficient, with x_lambda * x_mu = x_{lambda+mu}.
template <class Coeff>
class GroupRing {
 public:
  using Key = std::vector<int>;
  using TermMap = std::map<Key, Coeff>;

  explicit GroupRing(int rank = 0) : rank_(rank) {}
  static GroupRing unit(int rank, const Coeff& one) {
    GroupRing r(rank);
    r.add_term(Key(static_cast<std::size_t>(rank), 0), one);
    return r;
  }
  static GroupRing monomial(const Key& lambda, const Coeff& c) {
    GroupRing r(static_cast<int>(lambda.size()));
    r.add_term(lambda, c);
    return r;
  }

  int rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& lambda, const Coeff& c) {
    auto it = terms_.find(lambda);
    if (it == terms_.end()) {
      if (!is_zero_coeff(c)) terms_.emplace(lambda, c);
      return;
    }
    it->second = it->second + c;
    if (is_zero_coeff(it->second)) terms_.erase(it);
  }

  GroupRing& operator+=(const GroupRing& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  friend GroupRing operator+(GroupRing a, const GroupRing& b) { return a += b; }
  friend GroupRing operator*(const GroupRing& a, const GroupRing& b) {
    GroupRing r(a.rank_);
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        Key k = ka;
        for (std::size_t i = 0; i < k.size(); ++i) k[i] += kb[i];
        r.add_term(k, ca * cb);
      }
    }
    return r;
  }
  friend bool operator==(const GroupRing& a, const GroupRing& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (const auto& [k, c] : a.terms_) {
      if (ib->first != k || !(ib->second == c)) return false;
      ++ib;
    }
    return true;
  }

 private:
  int rank_;
  TermMap terms_;
};

}  // namespace eqwb
