#include "eqwb/nil_hecke.hpp"

#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace eqwb {

NilHecke::NilHecke(RootDatum datum, GroupLaw law) : datum_(std::move(datum)), law_(std::move(law)) {
  if (law_.kind() == LawKind::Formal) throw std::invalid_argument("nil-Hecke operators need an additive or multiplicative law");
  coords_ = torus_coordinates(datum_.dim());
}

LaurentPoly NilHecke::reflect(int root, const LaurentPoly& p) const {
  IntMatrix s = datum_.reflection_on_characters(root);
  std::vector<LaurentPoly> images;
  for (int i = 0; i < datum_.dim(); ++i) {
    IntVector column = s.col(i);
    if (law_.kind() == LawKind::Multiplicative) {
      images.push_back(character(column));
    } else {
      images.push_back(euler_class(law_, coords_, column));
    }
  }
  return p.with_vars(coords_).substitute(images);
}

LaurentPoly NilHecke::euler(int root) const {
  return euler_class(law_, coords_, datum_.roots().at(static_cast<std::size_t>(root)).character);
}

LaurentPoly NilHecke::apply(int root, const LaurentPoly& p) const {
  auto q = exact_div(reflect(root, p) - p.with_vars(coords_), euler(root));
  if (!q) throw std::domain_error("divided difference is not exact on " + p.to_string());
  return q->with_vars(coords_);
}

LaurentPoly NilHecke::apply_word(const std::vector<int>& letters, const LaurentPoly& p) const {
  LaurentPoly r = p;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) r = apply(datum_.simple_index(*it), r);
  return r;
}

LaurentPoly NilHecke::character(const IntVector& lambda) const {
  Exponent e(lambda.data(), lambda.data() + lambda.size());
  return LaurentPoly::monomial(coords_, e);
}

std::vector<LaurentPoly> NilHecke::spanning_set(int degree) const {
  std::vector<LaurentPoly> out;
  const int dim = datum_.dim();
  Exponent e(static_cast<std::size_t>(dim), 0);
  const int low = law_.kind() == LawKind::Multiplicative ? -degree : 0;
  std::function<void(int, int)> rec = [&](int i, int budget) {
    if (i == dim) {
      out.push_back(LaurentPoly::monomial(coords_, e));
      return;
    }
    for (int a = low; a <= degree; ++a) {
      if (std::abs(a) > budget) continue;
      e[static_cast<std::size_t>(i)] = a;
      rec(i + 1, budget - std::abs(a));
    }
    e[static_cast<std::size_t>(i)] = 0;
  };
  rec(0, degree);
  return out;
}

namespace {

RelationReport compare(const std::string& name, int degree, const std::vector<LaurentPoly>& span,
                       const std::function<LaurentPoly(const LaurentPoly&)>& lhs,
                       const std::function<LaurentPoly(const LaurentPoly&)>& rhs) {
  RelationReport r{name, true, "", degree};
  for (const auto& f : span) {
    LaurentPoly diff = lhs(f) - rhs(f);
    if (!diff.is_zero()) {
      r.holds = false;
      r.witness = "at " + f.to_string() + ": lhs - rhs = " + diff.to_string();
      break;
    }
  }
  return r;
}

int braid_order(const IntMatrix& cartan) {
  switch (cartan(0, 1) * cartan(1, 0)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw std::invalid_argument("Cartan entries have no finite braid order");
  }
}

}  // namespace

std::vector<RelationReport> nil_hecke_relations_check(const RootDatum& datum, const GroupLaw& law, int degree) {
  NilHecke nh(datum, law);
  const bool mult = law.kind() == LawKind::Multiplicative;
  const auto span = nh.spanning_set(degree);
  std::vector<RelationReport> reports;
  for (int i = 1; i <= datum.rank(); ++i) {
    const int root = datum.simple_index(i);
    const std::string ti = "T" + std::to_string(i);
    auto t = [&, root](const LaurentPoly& f) { return nh.apply(root, f); };
    auto tt = [&, root](const LaurentPoly& f) { return nh.apply(root, nh.apply(root, f)); };
    if (mult) {
      reports.push_back(compare(ti + "^2 = " + ti, degree, span, tt, t));
    } else {
      reports.push_back(compare(ti + "^2 = 0", degree, span, tt, [&](const LaurentPoly&) { return LaurentPoly(nh.coords()); }));
    }

    std::vector<LaurentPoly> multipliers;
    for (const auto& v : nh.coords()) {
      multipliers.push_back(LaurentPoly::variable(nh.coords(), v));
      if (mult) multipliers.push_back(LaurentPoly::variable(nh.coords(), v, -1));
    }
    RelationReport leibniz{"x*" + ti + " = " + ti + "*s" + std::to_string(i) + "(x) + " + ti + "(x)", true, "", degree};
    for (const auto& x : multipliers) {
      RelationReport r = compare(leibniz.relation, degree, span,
                                 [&](const LaurentPoly& f) { return x * t(f); },
                                 [&](const LaurentPoly& f) { return t(nh.reflect(root, x) * f) + t(x) * f; });
      if (!r.holds) {
        leibniz = r;
        leibniz.witness = "x = " + x.to_string() + ", " + r.witness;
        break;
      }
    }
    reports.push_back(leibniz);

    if (mult) {
      const Root& alpha = datum.roots()[static_cast<std::size_t>(root)];
      const LaurentPoly y = nh.character(alpha.character);
      const LaurentPoly one = LaurentPoly::constant(nh.coords(), 1);
      auto quantum_integer = [&](int m) { return *exact_div(y.pow(m) - one, y - one); };
      auto eigen = [&](const LaurentPoly& f) {
        Exponent e = f.leading_exponent();
        IntVector lambda = Eigen::Map<const IntVector>(e.data(), static_cast<Eigen::Index>(e.size()));
        return quantum_integer(-RootDatum::pairing(lambda, alpha.coroot)) * f;
      };
      reports.push_back(compare(ti + "(e^lambda) = [-<alpha" + std::to_string(i) + "^vee,lambda>]_{e^alpha" +
                                    std::to_string(i) + "} e^lambda",
                                degree, span, t, eigen));
    }
  }
  if (datum.rank() == 2) {
    const int m = braid_order(datum.cartan_matrix());
    std::vector<int> left;
    std::vector<int> right;
    for (int k = 0; k < m; ++k) {
      left.push_back(k % 2 == 0 ? 1 : 2);
      right.push_back(k % 2 == 0 ? 2 : 1);
    }
    std::vector<int> left_sq;
    std::vector<int> right_sq;
    for (int k = 0; k < m; ++k) {
      left_sq.insert(left_sq.end(), {1, 2});
      right_sq.insert(right_sq.end(), {2, 1});
    }
    const std::string ms = std::to_string(m);
    reports.push_back(compare("(T1*T2)^" + ms + " = (T2*T1)^" + ms, degree, span,
                              [&](const LaurentPoly& f) { return nh.apply_word(left_sq, f); },
                              [&](const LaurentPoly& f) { return nh.apply_word(right_sq, f); }));
    reports.push_back(compare("T1*T2*... = T2*T1*... (" + ms + " factors)", degree, span,
                              [&](const LaurentPoly& f) { return nh.apply_word(left, f); },
                              [&](const LaurentPoly& f) { return nh.apply_word(right, f); }));
  }
  return reports;
}

}  // namespace eqwb
