#pragma once

/*
  Relation checks for the presented algebras mapped onto the diagram
  algebras: the type-B quotient TLb acting through the blob algebra, and
  the affine-C quotient acting through the left-right blob algebra.
  Each listed relation is verified as an identity of algebra elements.
*/

#include <functional>

#include "sympblob/families.hpp"
#include "sympblob/fold.hpp"

namespace sympblob {

struct RelationResult {
  std::string name;
  bool holds = false;
};

struct PresentationReport {
  std::string family;
  int n = 0;
  std::vector<RelationResult> relations;

  bool all_hold() const {
    for (const auto& r : relations)
      if (!r.holds) return false;
    return true;
  }
};

enum class Presentation { TLb, AffineC };

namespace detail {

template <typename Mul>
PresentationReport check_relations(const std::string& family, int n, Mul mul,
                                   const DiagramElement& e, const DiagramElement& f,
                                   const std::vector<DiagramElement>& u, bool with_f) {
  const Laurent delta = Laurent::param(Param::d);
  const Laurent deltaL = Laurent::param(Param::dL);
  const Laurent deltaR = Laurent::param(Param::dR);
  const Laurent kappaL = Laurent::param(Param::kL);
  const Laurent kappaR = Laurent::param(Param::kR);

  PresentationReport rep;
  rep.family = family;
  rep.n = n;
  auto add = [&](const std::string& name, const DiagramElement& lhs, const DiagramElement& rhs) {
    rep.relations.push_back({name, lhs == rhs});
  };
  auto idx = [&](int i) { return u[i - 1]; };

  for (int i = 1; i < n; ++i)
    add("U" + std::to_string(i) + " U" + std::to_string(i) + " = d U" + std::to_string(i),
        mul(idx(i), idx(i)), idx(i).scaled(delta));
  for (int i = 1; i < n; ++i)
    for (int j : {i - 1, i + 1}) {
      if (j < 1 || j >= n) continue;
      add("U" + std::to_string(i) + " U" + std::to_string(j) + " U" + std::to_string(i) + " = U" +
              std::to_string(i),
          mul(mul(idx(i), idx(j)), idx(i)), idx(i));
    }
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      add("U" + std::to_string(i) + " U" + std::to_string(j) + " commute", mul(idx(i), idx(j)),
          mul(idx(j), idx(i)));

  add("e e = " + std::string(with_f ? "dL" : "dL") + " e", mul(e, e), e.scaled(deltaL));
  if (n >= 2)
    add("U1 e U1 = " + std::string(with_f ? "kL" : "kL (gamma)") + " U1", mul(mul(idx(1), e), idx(1)),
        idx(1).scaled(kappaL));
  for (int i = 2; i < n; ++i)
    add("U" + std::to_string(i) + " e commute", mul(idx(i), e), mul(e, idx(i)));

  if (with_f) {
    add("f f = dR f", mul(f, f), f.scaled(deltaR));
    if (n >= 2)
      add("U" + std::to_string(n - 1) + " f U" + std::to_string(n - 1) + " = kR U" +
              std::to_string(n - 1),
          mul(mul(idx(n - 1), f), idx(n - 1)), idx(n - 1).scaled(kappaR));
    for (int i = 1; i + 1 < n; ++i)
      add("U" + std::to_string(i) + " f commute", mul(idx(i), f), mul(f, idx(i)));
    if (n >= 2) add("e f commute", mul(e, f), mul(f, e));
  }
  return rep;
}

}  // namespace detail

// TLb relations hold in the blob algebra under delta = d,
// delta_e = dL, gamma = kL; the affine-C relations add the mirrored
// right-blob generator f with delta_R = dR, kappa_R = kR.
inline PresentationReport verify_presentation(Presentation which, int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  std::vector<DiagramElement> u;
  for (int i = 1; i < n; ++i) u.emplace_back(Diagram::cup_cap(n, i));
  DiagramElement e(Diagram::decorated_identity(n, 1, "L"));

  if (which == Presentation::TLb) {
    auto mul = [](const DiagramElement& a, const DiagramElement& b) {
      return blob_mul(a, b, BlobParams{});
    };
    return detail::check_relations("TLb", n, mul, e, DiagramElement{}, u, false);
  }
  DiagramElement f(Diagram::decorated_identity(n, n, "R"));
  auto mul = [](const DiagramElement& a, const DiagramElement& b) { return compose_x(a, b); };
  return detail::check_relations("affineC", n, mul, e, f, u, true);
}

}  // namespace sympblob
