#pragma once

/*
  The classical diagram algebra families built on the pair-partition
  calculus: Temperley-Lieb, blob, and contour algebras.  Enumeration of
  their diagram bases, their products, and the generation check for
  contour algebras.
*/

#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sympblob/diagram.hpp"

namespace sympblob {

struct UnsupportedFamily : std::runtime_error {
  explicit UnsupportedFamily(const std::string& f)
      : std::runtime_error("unsupported diagram family '" + f + "'") {}
};

// Formal sum of basis diagrams with Laurent coefficients.
template <typename D>
class Element {
 public:
  std::map<D, Laurent> terms;

  Element() = default;
  explicit Element(const D& d, Laurent c = Laurent::one()) { add(d, c); }

  void add(const D& d, const Laurent& c) {
    if (c.is_zero()) return;
    auto it = terms.find(d);
    if (it == terms.end()) {
      terms.emplace(d, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  Element& operator+=(const Element& o) {
    for (const auto& [d, c] : o.terms) add(d, c);
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }

  Element& operator-=(const Element& o) {
    for (const auto& [d, c] : o.terms) add(d, -c);
    return *this;
  }
  friend Element operator-(Element a, const Element& b) { return a -= b; }

  Element scaled(const Laurent& k) const {
    Element r;
    for (const auto& [d, c] : terms) r.add(d, c * k);
    return r;
  }

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const Element&, const Element&) = default;
};

using DiagramElement = Element<Diagram>;

// --- basis enumeration --------------------------------------------------------

namespace detail {

// All noncrossing perfect matchings of the given boundary positions.
inline std::vector<std::vector<std::pair<int, int>>> noncrossing_matchings(
    const std::vector<int>& pos) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (pos.empty()) {
    out.emplace_back();
    return out;
  }
  for (size_t k = 1; k < pos.size(); k += 2) {
    std::vector<int> inside(pos.begin() + 1, pos.begin() + k);
    std::vector<int> outside(pos.begin() + k + 1, pos.end());
    for (const auto& l : noncrossing_matchings(inside))
      for (const auto& r : noncrossing_matchings(outside)) {
        std::vector<std::pair<int, int>> m;
        m.emplace_back(pos[0], pos[k]);
        m.insert(m.end(), l.begin(), l.end());
        m.insert(m.end(), r.begin(), r.end());
        out.push_back(std::move(m));
      }
  }
  return out;
}

inline End end_of_position(int pos, int n, int m) {
  return pos < n ? End::north(pos + 1) : End::southern(n + m - pos);
}

// Enumerations are returned in lexicographic order of the serialised form.
inline void sort_by_text(std::vector<Diagram>& v) {
  std::sort(v.begin(), v.end(),
            [](const Diagram& a, const Diagram& b) { return a.to_text() < b.to_text(); });
}

}  // namespace detail

// Beadless planar (n,n) diagrams, i.e. ordinary TL diagrams.
inline std::vector<Diagram> enumerate_tl(int n) {
  std::vector<Diagram> out;
  if (n == 0) {
    out.push_back(Diagram(0, 0, {}));
    return out;
  }
  std::vector<int> positions(2 * n);
  for (int i = 0; i < 2 * n; ++i) positions[i] = i;
  std::set<Diagram> seen;
  for (const auto& mt : detail::noncrossing_matchings(positions)) {
    std::vector<DPair> ps;
    for (auto [x, y] : mt)
      ps.emplace_back(detail::end_of_position(x, n, n), detail::end_of_position(y, n, n));
    Diagram d(n, n, std::move(ps));
    seen.insert(d);
  }
  out.assign(seen.begin(), seen.end());
  detail::sort_by_text(out);
  return out;
}

// Blob diagrams B_n: TL shapes with at most one 'L' bead on each western
// exposed line.
inline std::vector<Diagram> enumerate_blob(int n) {
  std::set<Diagram> out;
  for (const Diagram& shape : enumerate_tl(n)) {
    std::vector<int> levels = exposure_levels(shape);
    std::vector<int> exposed;
    for (size_t i = 0; i < levels.size(); ++i)
      if (levels[i] == 0) exposed.push_back(static_cast<int>(i));
    for (unsigned subset = 0; subset < (1u << exposed.size()); ++subset) {
      Diagram d = shape;
      for (size_t k = 0; k < exposed.size(); ++k)
        if (subset & (1u << k)) d.pairs[exposed[k]].word = "L";
      d.normalise();
      out.insert(d);
    }
  }
  std::vector<Diagram> list(out.begin(), out.end());
  detail::sort_by_text(list);
  return list;
}

// Contour diagrams D^{z,l}_{n,period}: planar, lines of exposure <= level
// may carry up to period-1 'L' beads.
inline std::vector<Diagram> enumerate_contour(int n, int period, int level) {
  if (period < 2) throw std::invalid_argument("contour period must be at least 2");
  if (level < 0) throw std::invalid_argument("contour exposure bound must be nonnegative");
  std::set<Diagram> out;
  for (const Diagram& shape : enumerate_tl(n)) {
    std::vector<int> levels = exposure_levels(shape);
    std::vector<int> decorable;
    for (size_t i = 0; i < levels.size(); ++i)
      if (levels[i] <= level) decorable.push_back(static_cast<int>(i));
    std::vector<int> counts(decorable.size(), 0);
    while (true) {
      Diagram d = shape;
      for (size_t k = 0; k < decorable.size(); ++k)
        d.pairs[decorable[k]].word = Word(counts[k], 'L');
      d.normalise();
      out.insert(d);
      size_t k = 0;
      for (; k < counts.size(); ++k) {
        if (++counts[k] < period) break;
        counts[k] = 0;
      }
      if (k == counts.size()) break;
    }
  }
  std::vector<Diagram> list(out.begin(), out.end());
  detail::sort_by_text(list);
  return list;
}

enum class Family { TL, Blob, Contour };

inline std::vector<Diagram> enumerate_basis(Family f, int rank, int period = 2, int level = 0) {
  if (rank < 0) throw std::invalid_argument("rank must be nonnegative");
  switch (f) {
    case Family::TL: return enumerate_tl(rank);
    case Family::Blob: return enumerate_blob(rank);
    case Family::Contour: return enumerate_contour(rank, period, level);
  }
  throw UnsupportedFamily("?");
}

// --- blob algebra product -----------------------------------------------------

struct BlobParams {
  Laurent delta = Laurent::param(Param::d);
  Laurent delta_e = Laurent::param(Param::dL);
  Laurent gamma = Laurent::param(Param::kL);
};

// Reduces a concatenation of blob diagrams: L^k on a line -> delta_e^{k-1} L,
// undecorated loops -> delta, loops with k blobs -> delta_e^{k-1} gamma.
inline std::pair<Laurent, Diagram> blob_reduce(const Diagram& raw, const BlobParams& P) {
  Laurent k = Laurent::one();
  Diagram d = raw;
  for (auto& p : d.pairs) {
    int beads = static_cast<int>(p.word.size());
    if (beads > 1) {
      k *= P.delta_e.pow(beads - 1);
      p.word = "L";
    }
  }
  for (const auto& [w, mult] : d.loops) {
    int beads = static_cast<int>(w.size());
    Laurent factor = beads == 0 ? P.delta : P.delta_e.pow(beads - 1) * P.gamma;
    k *= factor.pow(mult);
  }
  d.loops.clear();
  d.normalise();
  return {k, d};
}

inline DiagramElement blob_mul(const DiagramElement& a, const DiagramElement& b,
                               const BlobParams& P = {}) {
  DiagramElement out;
  for (const auto& [da, ca] : a.terms)
    for (const auto& [db, cb] : b.terms) {
      auto [k, d] = blob_reduce(abacus_concat(da, db), P);
      out.add(d, ca * cb * k);
    }
  return out;
}

// --- contour algebras -----------------------------------------------------------

// Shape-level contour product: concatenate, cancel beads mod the period on
// lines, and drop loops.  Used for generation checks, where scalars are
// unit multiples.
inline Diagram contour_shape_product(const Diagram& a, const Diagram& b, int period) {
  if (period < 2) throw std::invalid_argument("contour period must be at least 2");
  Diagram d = abacus_concat(a, b);
  for (auto& p : d.pairs) {
    size_t beads = p.word.size() % static_cast<size_t>(period);
    p.word = Word(beads, 'L');
  }
  d.loops.clear();
  d.normalise();
  return d;
}

struct GenerationReport {
  bool generated = false;
  size_t closure_size = 0;
  size_t basis_size = 0;
};

// Multiplicative closure of {Id, L_1..L_{level+1}, U_1..U_{n-1}} inside
// C_{n,period}(level), compared against the enumerated basis.
inline GenerationReport check_generation(int n, int period, int level) {
  std::vector<Diagram> gens;
  gens.push_back(Diagram::identity(n));
  for (int i = 1; i <= level + 1 && i <= n; ++i)
    gens.push_back(Diagram::decorated_identity(n, i, "L"));
  for (int i = 1; i < n; ++i) gens.push_back(Diagram::cup_cap(n, i));

  std::set<Diagram> closure(gens.begin(), gens.end());
  std::vector<Diagram> frontier(gens.begin(), gens.end());
  while (!frontier.empty()) {
    std::vector<Diagram> next;
    for (const Diagram& x : frontier)
      for (const Diagram& g : gens) {
        Diagram p = contour_shape_product(x, g, period);
        if (closure.insert(p).second) next.push_back(p);
        Diagram q = contour_shape_product(g, x, period);
        if (closure.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }

  std::vector<Diagram> basis = enumerate_contour(n, period, level);
  GenerationReport r;
  r.closure_size = closure.size();
  r.basis_size = basis.size();
  r.generated = closure == std::set<Diagram>(basis.begin(), basis.end());
  return r;
}

}  // namespace sympblob
