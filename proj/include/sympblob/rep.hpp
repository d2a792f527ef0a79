#pragma once

/*
  Standard modules of the affine symmetric TL algebra: turn-string bases,
  dimension formulas, Gram matrices and determinants, the ideal
  filtration, globalisation of module bases, restriction to the blob
  algebra, cellularity checks, and evaluation scans over parameter
  points.

  A turn string records the upper right quarter of a diagram, one letter
  per strip vertex read from the 1-wall side towards the 0-wall side:
  'o' marks a propagating line, matched R..L pairs are nested cups that
  never span an 'o', an unmatched R crosses the 0-wall and an unmatched
  L crosses the 1-wall.  The weight of a string with x > 0 propagating
  lines is +x when the number of unmatched R's is odd and -x otherwise;
  every string over {L,R} is valid when x = 0.
*/

#include <numeric>

#include "sympblob/fold.hpp"
#include "sympblob/kpoly.hpp"

namespace sympblob {

struct WeightOutOfRange : std::runtime_error {
  WeightOutOfRange(int m, int l)
      : std::runtime_error("weight " + std::to_string(l) + " is out of range at m = " +
                           std::to_string(m)) {}
};

struct ZeroParameter : std::runtime_error {
  ZeroParameter() : std::runtime_error("scan point must have all six parameters nonzero") {}
};

inline std::vector<int> weight_range(int m) {
  if (m == 0) return {0};
  std::vector<int> out;
  for (int l = -m; l <= m - 1; ++l) out.push_back(l);
  return out;
}

inline void require_weight(int m, int l) {
  if (m == 0 ? l != 0 : (l < -m || l > m - 1)) throw WeightOutOfRange(m, l);
}

// --- turn strings ----------------------------------------------------------------

struct TurnInfo {
  bool valid = false;
  int x = 0;    // propagating lines
  int ur = 0;   // unmatched R's (0-wall crossings)
  int ur0 = 0;  // unmatched L's (1-wall crossings)
};

inline TurnInfo turn_info(const std::string& s) {
  TurnInfo t;
  int stack = 0;
  bool seen_o = false;
  for (char c : s) {
    switch (c) {
      case 'R': ++stack; break;
      case 'L':
        if (stack > 0) {
          --stack;
        } else {
          if (seen_o) return t;  // unmatched L with an o on its left
          ++t.ur0;
        }
        break;
      case 'o':
        if (stack > 0) return t;  // pending R would be spanned or o'd on its right
        seen_o = true;
        ++t.x;
        break;
      default: return t;
    }
  }
  t.ur = stack;
  t.valid = true;
  return t;
}

inline bool is_valid_turnstring(const std::string& s) { return turn_info(s).valid; }

inline int weight_of_turnstring(const std::string& s) {
  TurnInfo t = turn_info(s);
  if (!t.valid) throw std::invalid_argument("invalid turn string '" + s + "'");
  if (t.x == 0) return 0;
  return t.ur % 2 == 1 ? t.x : -t.x;
}

// All valid turn strings of the given weight, in lexicographic order.
inline std::vector<std::string> standard_basis(int m, int l) {
  require_weight(m, l);
  std::vector<std::string> out;
  std::string cur(m, 'L');
  const char letters[3] = {'L', 'R', 'o'};
  std::vector<int> digits(m, 0);
  while (true) {
    for (int i = 0; i < m; ++i) cur[i] = letters[digits[i]];
    TurnInfo t = turn_info(cur);
    if (t.valid) {
      int w = t.x == 0 ? 0 : (t.ur % 2 == 1 ? t.x : -t.x);
      if (w == l) out.push_back(cur);
    }
    int i = m - 1;
    for (; i >= 0; --i) {
      if (++digits[i] < 3) break;
      digits[i] = 0;
    }
    if (i < 0) break;
  }
  if (m == 0 && l == 0) out.push_back("");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Closed-form dimension of the standard module S_l(2m).
inline long dimension(int m, int l) {
  require_weight(m, l);
  if (l == 0) return 1L << m;
  int x = l > 0 ? l : -l;
  int eps;
  if ((m - x) % 2 == 1)
    eps = 1;
  else
    eps = l > 0 ? 2 : 0;
  int k = (m - (x + eps)) / 2;
  long dim = 0;
  for (int i = 0; i <= k; ++i) dim += binomial(m, i);
  return dim;
}

// --- kets from turn strings --------------------------------------------------------

// Turn-string position i describes strip vertex m+1-i.  Matched R..L
// pairs become northern arcs, unmatched R's arcs through the 0-wall
// (westernmost vertex highest), unmatched L's arcs through the 1-wall
// (easternmost vertex highest), o's cut stubs numbered west to east.
inline Ket ket_from_turnstring(const std::string& s) {
  const int m = static_cast<int>(s.size());
  auto vertex = [&](int pos) { return m - pos; };  // pos is 0-based
  std::vector<StripPiece> ps;
  std::vector<int> open;  // positions of pending R's
  std::vector<int> wall0, wall1, stubs;
  for (int i = 0; i < m; ++i) {
    switch (s[i]) {
      case 'R': open.push_back(i); break;
      case 'L':
        if (!open.empty()) {
          int j = open.back();
          open.pop_back();
          ps.emplace_back(sN(vertex(i)), sN(vertex(j)));
        } else {
          wall1.push_back(vertex(i));
        }
        break;
      case 'o': stubs.push_back(vertex(i)); break;
      default: throw std::invalid_argument("invalid turn string letter");
    }
  }
  for (int pos : open) wall0.push_back(vertex(pos));
  std::sort(wall0.begin(), wall0.end());
  std::sort(wall1.rbegin(), wall1.rend());
  std::sort(stubs.begin(), stubs.end());
  for (size_t h = 0; h < wall0.size(); ++h)
    ps.emplace_back(sN(wall0[h]), sW(static_cast<int>(h) + 1));
  for (size_t h = 0; h < wall1.size(); ++h)
    ps.emplace_back(sN(wall1[h]), sE(static_cast<int>(h) + 1));
  for (size_t j = 0; j < stubs.size(); ++j)
    ps.emplace_back(sN(stubs[j]), sC(static_cast<int>(j) + 1));
  return Ket(m, std::move(ps));
}

inline std::string turnstring_from_ket(const Ket& k) {
  std::string s(k.m, '?');
  auto set_at = [&](int vertex, char c) { s[k.m - vertex] = c; };
  for (const auto& p : k.pieces) {
    if (p.is(StripEnd::Kind::N, StripEnd::Kind::N)) {
      int u = std::min(p.a.idx, p.b.idx), v = std::max(p.a.idx, p.b.idx);
      set_at(u, 'L');
      set_at(v, 'R');
    } else if (p.is(StripEnd::Kind::N, StripEnd::Kind::W)) {
      set_at(p.a.kind == StripEnd::Kind::N ? p.a.idx : p.b.idx, 'R');
    } else if (p.is(StripEnd::Kind::N, StripEnd::Kind::E)) {
      set_at(p.a.kind == StripEnd::Kind::N ? p.a.idx : p.b.idx, 'L');
    } else if (p.is(StripEnd::Kind::N, StripEnd::Kind::C)) {
      set_at(p.a.kind == StripEnd::Kind::N ? p.a.idx : p.b.idx, 'o');
    }
  }
  return s;
}

inline std::vector<Ket> weight_kets(int m, int l) {
  std::vector<Ket> out;
  for (const auto& s : standard_basis(m, l)) out.push_back(ket_from_turnstring(s));
  return out;
}

// --- basis enumeration --------------------------------------------------------------

// The diagram basis of the affine symmetric TL algebra of period 2m:
// all recombinations of an upper and a lower half of equal weight.
inline std::vector<Strip> enumerate_Bphi(int m) {
  std::vector<Strip> out;
  for (int l : weight_range(m)) {
    auto kets = weight_kets(m, l);
    for (const Ket& a : kets)
      for (const Ket& b : kets) out.push_back(recombine(a, b));
  }
  std::sort(out.begin(), out.end(),
            [](const Strip& x, const Strip& y) { return x.to_text() < y.to_text(); });
  return out;
}

// The left-right blob diagram basis, as folded rectangles.
inline std::vector<Diagram> enumerate_Bx(int m) {
  std::vector<Diagram> out;
  for (const Strip& s : enumerate_Bphi(m)) out.push_back(fold_nu(s));
  std::sort(out.begin(), out.end(),
            [](const Diagram& x, const Diagram& y) { return x.to_text() < y.to_text(); });
  return out;
}

// --- determinants -------------------------------------------------------------------

// Fraction-free Gaussian elimination (Bareiss); all divisions are exact
// in the Laurent ring.
inline Laurent laurent_det(std::vector<std::vector<Laurent>> a) {
  const size_t n = a.size();
  if (n == 0) return Laurent::one();
  int sign = 1;
  Laurent prev = Laurent::one();
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return Laurent::zero();
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Laurent num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        auto q = divide_exact(num, prev);
        if (!q) throw std::logic_error("Bareiss division failed");
        a[i][j] = *q;
      }
    prev = a[k][k];
  }
  Laurent det = a[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

// --- Gram matrices ------------------------------------------------------------------

struct GramReport {
  int m = 0;
  int l = 0;
  long dim = 0;
  std::vector<std::string> basis;                 // turn strings
  std::vector<std::vector<Laurent>> matrix;
  Laurent determinant;
  Factorisation factorisation;
};

namespace detail {

// <a|b> against a fixed base bra: the scalar of D_a* . D_b, zero when the
// propagating number drops.
inline Laurent gram_entry(const Ket& a, const Ket& b, const Ket& base) {
  Strip da = recombine(a, base);
  Strip db = recombine(b, base);
  auto [k, prod] = compose_phi(da.flipped(), db);
  if (prod.propagating_pairs() != a.stubs()) return Laurent::zero();
  return k;
}

inline std::vector<std::vector<Laurent>> gram_matrix_for_base(const std::vector<Ket>& kets,
                                                              const Ket& base) {
  const size_t n = kets.size();
  std::vector<std::vector<Laurent>> g(n, std::vector<Laurent>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) g[i][j] = gram_entry(kets[i], kets[j], base);
  return g;
}

inline int klr_valuation(const Laurent& p) {
  return p.is_zero() ? 0 : p.content()[static_cast<int>(Param::kLR)];
}

}  // namespace detail

// The Gram matrix of S_l(2m).  For l = 0 the base diagram is only
// defined up to an overall power of kLR; both colour classes of base are
// tried and the lower kLR-power normalisation kept.
inline GramReport gram_matrix(int m, int l) {
  require_weight(m, l);
  GramReport r;
  r.m = m;
  r.l = l;
  r.basis = standard_basis(m, l);
  r.dim = static_cast<long>(r.basis.size());
  auto kets = weight_kets(m, l);

  if (l != 0) {
    r.matrix = detail::gram_matrix_for_base(kets, kets.front());
    r.determinant = laurent_det(r.matrix);
  } else {
    const Ket* base_even = nullptr;
    const Ket* base_odd = nullptr;
    for (const Ket& k : kets) {
      if (k.ur() % 2 == 0 && !base_even) base_even = &k;
      if (k.ur() % 2 == 1 && !base_odd) base_odd = &k;
    }
    std::vector<std::vector<Laurent>> best_matrix;
    Laurent best_det;
    bool have = false;
    for (const Ket* base : {base_even, base_odd}) {
      if (!base) continue;
      auto g = detail::gram_matrix_for_base(kets, *base);
      Laurent det = laurent_det(g);
      if (!have || detail::klr_valuation(det) < detail::klr_valuation(best_det)) {
        best_matrix = std::move(g);
        best_det = det;
        have = true;
      }
    }
    r.matrix = std::move(best_matrix);
    r.determinant = best_det;
  }
  r.factorisation = factor_against_klist(r.determinant);
  return r;
}

// --- evaluation / rank --------------------------------------------------------------

inline std::vector<std::vector<Rational>> evaluate_matrix(
    const std::vector<std::vector<Laurent>>& g, const RationalPoint& pt) {
  std::vector<std::vector<Rational>> out(g.size());
  for (size_t i = 0; i < g.size(); ++i)
    for (const auto& p : g[i]) out[i].push_back(p.evaluate(pt));
  return out;
}

inline int rational_rank(std::vector<std::vector<Rational>> a) {
  const size_t rows = a.size();
  if (rows == 0) return 0;
  const size_t cols = a[0].size();
  int rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pivot = row;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[row], a[pivot]);
    for (size_t i = row + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      Rational f = a[i][col] / a[row][col];
      for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

// --- weight / filtration -------------------------------------------------------------

// Ordered heredity chain S_0 <= S_1 <= T_1 <= ... <= T_{m-1} <= S_m; each
// entry carries the weights it contains and its diagram basis.
struct FiltrationLayer {
  std::string name;
  std::vector<int> weights;
  std::vector<Strip> basis;
};

inline std::vector<Strip> weight_subset(const std::vector<Strip>& all, int l) {
  std::vector<Strip> out;
  for (const Strip& s : all)
    if (weight_of(s) == l) out.push_back(s);
  return out;
}

inline std::vector<FiltrationLayer> filtration_ideals(int m) {
  auto all = enumerate_Bphi(m);
  auto collect = [&](const std::vector<int>& ws) {
    std::vector<Strip> out;
    for (int l : ws) {
      auto part = weight_subset(all, l);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  };
  std::vector<FiltrationLayer> chain;
  std::vector<int> acc{0};
  chain.push_back({"S_0", acc, collect(acc)});
  for (int i = 1; i <= m; ++i) {
    acc.push_back(-i);
    chain.push_back({"S_" + std::to_string(i), acc, collect(acc)});
    if (i < m) {
      acc.push_back(i);
      chain.push_back({"T_" + std::to_string(i), acc, collect(acc)});
    }
  }
  return chain;
}

// --- globalisation of module bases ----------------------------------------------------

inline Ket globalise_ket(const Ket& k) {
  std::vector<StripPiece> ps;
  for (const auto& piece : k.pieces) {
    StripPiece q = piece;
    for (StripEnd* e : {&q.a, &q.b}) {
      if (e->kind == StripEnd::Kind::N) e->idx += 1;
      if (e->kind == StripEnd::Kind::W) e->idx += 1;
    }
    ps.emplace_back(q.a, q.b);
  }
  ps.emplace_back(sN(1), sW(1));
  return Ket(k.m + 1, std::move(ps));
}

inline Ket globalise_ket_right(const Ket& k) {
  std::vector<StripPiece> ps;
  for (const auto& piece : k.pieces) {
    StripPiece q = piece;
    for (StripEnd* e : {&q.a, &q.b})
      if (e->kind == StripEnd::Kind::E) e->idx += 1;
    ps.emplace_back(q.a, q.b);
  }
  ps.emplace_back(sN(k.m + 1), sE(1));
  return Ket(k.m + 1, std::move(ps));
}

struct GlobalisationReport {
  int source_m = 0, source_l = 0;
  int target_l = 0;
  size_t seed_size = 0;
  size_t closure_size = 0;
  bool matches_standard_basis = false;
  std::vector<std::string> closure;  // turn strings of the generated basis
};

// Pushes the standard basis of S_{l}(2m-2) through the globalisation
// functor (G for the 0-wall blob, G' for the 1-wall blob) and closes the
// seed under the algebra action inside the target weight space.
inline GlobalisationReport globalise_module(int m, int l, bool right_blob = false) {
  require_weight(m - 1, l);
  GlobalisationReport rep;
  rep.source_m = m - 1;
  rep.source_l = l;
  rep.target_l = right_blob ? l : -l;

  std::set<Ket> closure;
  for (const Ket& k : weight_kets(m - 1, l))
    closure.insert(right_blob ? globalise_ket_right(k) : globalise_ket(k));
  rep.seed_size = closure.size();

  auto target_kets = weight_kets(m, rep.target_l);
  if (target_kets.empty()) return rep;
  const Ket base = target_kets.front();
  const int x = base.stubs();
  auto algebra = enumerate_Bphi(m);

  std::vector<Ket> frontier(closure.begin(), closure.end());
  while (!frontier.empty()) {
    std::vector<Ket> next;
    for (const Ket& k : frontier) {
      Strip full = recombine(k, base);
      for (const Strip& g : algebra) {
        auto [c, prod] = compose_phi(g, full);
        (void)c;
        if (prod.propagating_pairs() != x) continue;
        Ket nk = ket_of(prod);
        if (nk.weight() != rep.target_l) continue;
        if (closure.insert(nk).second) next.push_back(nk);
      }
    }
    frontier = std::move(next);
  }
  rep.closure_size = closure.size();
  std::set<Ket> expected(target_kets.begin(), target_kets.end());
  rep.matches_standard_basis = closure == expected;
  for (const Ket& k : closure) rep.closure.push_back(turnstring_from_ket(k));
  std::sort(rep.closure.begin(), rep.closure.end());
  return rep;
}

// --- restriction to the blob algebra ---------------------------------------------------

struct RestrictionSection {
  int ur = 0;
  int blob_weight = 0;
  long dim = 0;
};

// Sections of the restriction of S_l(2m) to the achiral/blob subalgebra,
// graded by the number of unmatched R's; listed in submodule order
// (ur ascending).  A section with ur = r restricts to the blob standard
// of weight +-(x+r) or +-(x+r+1); the extra crossing is present, and the
// sign negative, exactly when the count of 1-wall crossings is odd.
inline std::vector<RestrictionSection> restrict_to_blob(int m, int l) {
  require_weight(m, l);
  std::map<int, long> by_ur;
  for (const auto& s : standard_basis(m, l)) {
    TurnInfo t = turn_info(s);
    by_ur[t.ur] += 1;
  }
  int x = l > 0 ? l : -l;
  std::vector<RestrictionSection> out;
  for (const auto& [r, count] : by_ur) {
    RestrictionSection sec;
    sec.ur = r;
    sec.dim = count;
    bool blobbed = (m - x - r) % 2 != 0;  // parity of the 1-wall crossings
    int c = x + r + (blobbed ? 1 : 0);
    sec.blob_weight = blobbed ? -c : c;
    out.push_back(sec);
  }
  return out;
}

// --- cellularity -------------------------------------------------------------------------

struct CellularityReport {
  bool involution_antiautomorphism = true;
  bool involution_involutive = true;
  bool cut_recombine_bijective = true;
  bool lower_terms_axiom = true;
  size_t pairs_checked = 0;
};

inline CellularityReport check_cellularity(int m) {
  CellularityReport rep;
  auto basis = enumerate_Bphi(m);
  for (const Strip& a : basis) {
    if (a.flipped().flipped() != a) rep.involution_involutive = false;
    if (recombine(ket_of(a), bra_ket_of(a)) != a) rep.cut_recombine_bijective = false;
  }
  for (const Strip& a : basis)
    for (const Strip& b : basis) {
      auto [k1, c1] = compose_phi(a, b);
      auto [k2, c2] = compose_phi(b.flipped(), a.flipped());
      if (k1 != k2 || c2 != c1.flipped()) rep.involution_antiautomorphism = false;
      ++rep.pairs_checked;
    }
  // lower terms: when a . |k><b| keeps the weight, the result is
  // k' . |k~><b| with k' and k~ independent of the bra b.  At weight
  // zero the scalar sees the bra only through the belt insertion, so it
  // is constant on each parity class of the bra and the two class
  // values differ by at most a power of kLR.
  const Laurent klr = Laurent::param(Param::kLR);
  for (int l : weight_range(m)) {
    auto kets = weight_kets(m, l);
    const int x = std::abs(l);
    for (const Strip& a : basis) {
      for (const Ket& k : kets) {
        std::map<int, std::pair<Laurent, bool>> class_scalar;  // parity -> (scalar, drop)
        bool have_image = false;
        Ket image_ref;
        for (const Ket& b : kets) {
          Strip d = recombine(k, b);
          auto [c, prod] = compose_phi(a, d);
          bool drop = prod.propagating_pairs() != x;
          int parity = b.ur() % 2;
          auto it = class_scalar.find(parity);
          if (it == class_scalar.end()) {
            class_scalar[parity] = {c, drop};
          } else if (it->second.second != drop || (!drop && it->second.first != c)) {
            rep.lower_terms_axiom = false;
          }
          if (drop) continue;
          if (!have_image) {
            image_ref = ket_of(prod);
            have_image = true;
          } else if (ket_of(prod) != image_ref) {
            rep.lower_terms_axiom = false;
          }
          if (bra_ket_of(prod) != bra_ket_of(d)) rep.lower_terms_axiom = false;
        }
        if (class_scalar.size() == 2) {
          const auto& [c0, drop0] = class_scalar[0];
          const auto& [c1, drop1] = class_scalar[1];
          if (drop0 == drop1 && !drop0 && c0 != c1) {
            bool klr_shift = (c0 == c1 * klr) || (c1 == c0 * klr);
            if (!klr_shift) rep.lower_terms_axiom = false;
          }
        }
      }
    }
  }
  return rep;
}

// --- semisimplicity scan -------------------------------------------------------------------

struct ScanEntry {
  int l = 0;
  long dim = 0;
  Rational det_value;
  int rank = 0;
};

struct ScanCondition {
  std::string name;
  bool vanishes = false;
  bool applicable = false;  // per the rank-6 non-semisimplicity table
};

struct ScanReport {
  int m = 0;
  std::vector<ScanEntry> entries;
  std::vector<ScanCondition> conditions;
  bool any_gram_vanishes = false;
};

inline ScanReport semisimplicity_scan(int m, const RationalPoint& pt) {
  for (const auto& v : pt)
    if (v == 0) throw ZeroParameter();
  ScanReport rep;
  rep.m = m;
  for (int l : weight_range(m)) {
    GramReport g = gram_matrix(m, l);
    ScanEntry e;
    e.l = l;
    e.dim = g.dim;
    e.det_value = g.determinant.evaluate(pt);
    e.rank = rational_rank(evaluate_matrix(g.matrix, pt));
    rep.any_gram_vanishes |= (e.det_value == 0);
    rep.entries.push_back(e);
  }
  const std::vector<std::pair<std::string, Laurent>> base = {{"K3", K3()}, {"K13", K13()}};
  const std::vector<std::pair<std::string, SwapOp>> ops = {
      {"", SwapOp::id}, {"Phi", SwapOp::Phi}, {"Psi", SwapOp::Psi}, {"PhiPsi", SwapOp::PhiPsi}};
  for (const auto& [bn, bv] : base)
    for (const auto& [on, op] : ops) {
      ScanCondition c;
      c.name = on.empty() ? bn : on + "(" + bn + ")";
      c.vanishes = apply_swap(op, bv).evaluate(pt) == 0;
      bool unswapped = op == SwapOp::id || op == SwapOp::PhiPsi;
      c.applicable = unswapped ? (m % 2 == 1 && m >= (op == SwapOp::id ? 3 : 5))
                               : (m % 2 == 0 && m >= 4);
      rep.conditions.push_back(c);
    }
  return rep;
}

}  // namespace sympblob
