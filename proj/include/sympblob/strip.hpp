#pragma once

/*
  Left-right symmetric periodic (affine symmetric TL) diagrams of period
  2m, represented by their fundamental strip: the half of the period
  between the two reflection walls.

  A strip holds the pieces of string lying between the walls.  Piece
  endpoints are northern vertices N1..Nm, southern vertices S1..Sm, or
  points on the 0-wall (W, the western edge of the strip) and the 1-wall
  (E, the eastern edge), ordered from north to south along each wall.
  The full cylinder picture is the strip together with its mirror image;
  a piece ending on a wall continues there as its own reflection.  Hence

      N-S piece   <->  mirror pair of propagating lines
      N-W piece   <->  arc astride the 0-wall (one crossing)
      W-W piece   <->  contractible loop astride the 0-wall ("lens")
      W-E piece   <->  noncontractible loop ("belt")

  and so on; closed chains formed inside the strip stand for mirror
  pairs of off-wall loops and are kept as a count.

  Colour bookkeeping: the region at the northern edge astride the 0-wall
  is white, and the colour along a wall flips at every crossing point.
  A lens whose top endpoint has even height-index is therefore bounded
  by the same colour as the relevant northern interval, which is exactly
  the delta-type feature of the six-parameter reduction; odd index gives
  the kappa-type feature.
*/

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sympblob/families.hpp"

namespace sympblob {

struct NotCC : std::runtime_error {
  NotCC() : std::runtime_error("pseudodiagram is not colouring-composable") {}
};

struct NotInIdempotentSubalgebra : std::runtime_error {
  NotInIdempotentSubalgebra()
      : std::runtime_error("basis diagram lacks the cup/cap astride the 0-wall") {}
};

struct StripEnd {
  enum class Kind : int { N = 0, S = 1, W = 2, E = 3, C = 4 } kind;
  int idx = 0;  // vertex index, wall height, or cut-stub rank; 1-based

  friend bool operator==(const StripEnd&, const StripEnd&) = default;
  friend auto operator<=>(const StripEnd& a, const StripEnd& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
    return a.idx <=> b.idx;
  }

  std::string to_string() const {
    static const char* tag[] = {"N", "S", "W", "E", "C"};
    return std::string(tag[static_cast<int>(kind)]) + std::to_string(idx);
  }
};

inline StripEnd sN(int i) { return {StripEnd::Kind::N, i}; }
inline StripEnd sS(int i) { return {StripEnd::Kind::S, i}; }
inline StripEnd sW(int h) { return {StripEnd::Kind::W, h}; }
inline StripEnd sE(int h) { return {StripEnd::Kind::E, h}; }
inline StripEnd sC(int j) { return {StripEnd::Kind::C, j}; }

struct StripPiece {
  StripEnd a, b;

  StripPiece() = default;
  StripPiece(StripEnd x, StripEnd y) : a(x), b(y) {
    if (b < a) std::swap(a, b);
  }

  bool touches(StripEnd::Kind k) const { return a.kind == k || b.kind == k; }
  bool is(StripEnd::Kind k1, StripEnd::Kind k2) const {
    return (a.kind == k1 && b.kind == k2) || (a.kind == k2 && b.kind == k1);
  }

  friend bool operator==(const StripPiece&, const StripPiece&) = default;
  friend auto operator<=>(const StripPiece&, const StripPiece&) = default;
};

// Multiplicities of the six reducible features of a periodic symmetric
// pseudodiagram, indexed by the parameter each one is worth.
struct FeatureCount {
  int d = 0;    // mirror pairs of off-wall loops
  int dL = 0;   // lenses astride the 0-wall, even top index
  int kL = 0;   // lenses astride the 0-wall, odd top index
  int dR = 0;   // lenses astride the 1-wall, even top index
  int kR = 0;   // lenses astride the 1-wall, odd top index
  int kLR = 0;  // pairs of belts

  friend bool operator==(const FeatureCount&, const FeatureCount&) = default;

  Laurent monomial() const {
    Exponents e{d, dL, dR, kL, kR, kLR};
    return Laurent::monomial(1, e);
  }

  bool all_geq(const FeatureCount& o) const {
    return d >= o.d && dL >= o.dL && dR >= o.dR && kL >= o.kL && kR >= o.kR && kLR >= o.kLR;
  }
};

class Strip {
 public:
  int m = 0;
  std::vector<StripPiece> pieces;  // sorted
  int loops = 0;                   // free symmetric loop pairs (pseudodiagrams only)

  Strip() = default;
  Strip(int m_, std::vector<StripPiece> ps, int loops_ = 0)
      : m(m_), pieces(std::move(ps)), loops(loops_) {
    normalise();
  }

  static Strip identity(int m_) {
    std::vector<StripPiece> ps;
    for (int i = 1; i <= m_; ++i) ps.emplace_back(sN(i), sS(i));
    return Strip(m_, std::move(ps));
  }

  // e: cup and cap astride the 0-wall on the westernmost string.
  static Strip e_gen(int m_) {
    Strip s = identity(m_);
    s.replace_string(1, StripEnd::Kind::W);
    return s;
  }

  // f: cup and cap astride the 1-wall on the easternmost string.
  static Strip f_gen(int m_) {
    Strip s = identity(m_);
    s.replace_string(m_, StripEnd::Kind::E);
    return s;
  }

  // U_i: cup {i,i+1} over cap {i,i+1}.
  static Strip u_gen(int m_, int i) {
    std::vector<StripPiece> ps;
    for (int j = 1; j <= m_; ++j) {
      if (j == i) {
        ps.emplace_back(sN(i), sN(i + 1));
        ps.emplace_back(sS(i), sS(i + 1));
      } else if (j != i + 1) {
        ps.emplace_back(sN(j), sS(j));
      }
    }
    return Strip(m_, std::move(ps));
  }

  void normalise() { std::sort(pieces.begin(), pieces.end()); }

  int wall_points(StripEnd::Kind k) const {
    int c = 0;
    for (const auto& p : pieces) {
      c += (p.a.kind == k) ? 1 : 0;
      c += (p.b.kind == k) ? 1 : 0;
    }
    return c;
  }

  int belt_count() const {
    int c = 0;
    for (const auto& p : pieces) c += p.is(StripEnd::Kind::W, StripEnd::Kind::E) ? 1 : 0;
    return c;
  }

  int propagating_pairs() const {
    int c = 0;
    for (const auto& p : pieces) c += p.is(StripEnd::Kind::N, StripEnd::Kind::S) ? 1 : 0;
    return c;
  }

  bool is_cc() const {
    return wall_points(StripEnd::Kind::W) % 2 == 0 && wall_points(StripEnd::Kind::E) % 2 == 0;
  }

  bool is_basis() const {
    if (loops != 0) return false;
    int belts = 0;
    for (const auto& p : pieces) {
      if (p.is(StripEnd::Kind::W, StripEnd::Kind::W)) return false;
      if (p.is(StripEnd::Kind::E, StripEnd::Kind::E)) return false;
      if (p.is(StripEnd::Kind::W, StripEnd::Kind::E)) ++belts;
    }
    return belts <= 1;
  }

  // Position on the boundary cycle N1..Nm, E (north to south), Sm..S1,
  // W (south to north); stubs C sit on the cut just north of the
  // southern edge, read east to west.
  int boundary_position(const StripEnd& e, int p, int q, int x) const {
    switch (e.kind) {
      case StripEnd::Kind::N: return e.idx - 1;
      case StripEnd::Kind::E: return m + e.idx - 1;
      case StripEnd::Kind::C: return m + q + (x - e.idx);
      case StripEnd::Kind::S: return m + q + x + (m - e.idx);
      case StripEnd::Kind::W: return 2 * m + q + x + (p - e.idx);
    }
    return -1;
  }

  bool is_noncrossing() const {
    int p = wall_points(StripEnd::Kind::W), q = wall_points(StripEnd::Kind::E);
    int x = wall_points(StripEnd::Kind::C);
    const size_t np = pieces.size();
    for (size_t i = 0; i < np; ++i) {
      int a1 = boundary_position(pieces[i].a, p, q, x);
      int b1 = boundary_position(pieces[i].b, p, q, x);
      if (a1 > b1) std::swap(a1, b1);
      for (size_t j = i + 1; j < np; ++j) {
        int a2 = boundary_position(pieces[j].a, p, q, x);
        int b2 = boundary_position(pieces[j].b, p, q, x);
        if (a2 > b2) std::swap(a2, b2);
        bool in1 = a1 < a2 && a2 < b1;
        bool in2 = a1 < b2 && b2 < b1;
        if (in1 != in2) return false;
      }
    }
    return true;
  }

  // Upside-down flip: the involutive antiautomorphism *.
  Strip flipped() const {
    int p = wall_points(StripEnd::Kind::W), q = wall_points(StripEnd::Kind::E);
    Strip out;
    out.m = m;
    out.loops = loops;
    for (const auto& piece : pieces) {
      auto fl = [&](StripEnd e) -> StripEnd {
        switch (e.kind) {
          case StripEnd::Kind::N: return sS(e.idx);
          case StripEnd::Kind::S: return sN(e.idx);
          case StripEnd::Kind::W: return sW(p + 1 - e.idx);
          case StripEnd::Kind::E: return sE(q + 1 - e.idx);
          case StripEnd::Kind::C: return e;
        }
        return e;
      };
      out.pieces.emplace_back(fl(piece.a), fl(piece.b));
    }
    out.normalise();
    return out;
  }

  std::string to_text() const {
    std::string out = std::to_string(m) + "|";
    for (const auto& p : pieces) out += " " + p.a.to_string() + "-" + p.b.to_string();
    if (loops) out += " O*" + std::to_string(loops);
    return out;
  }

  friend bool operator==(const Strip&, const Strip&) = default;
  friend auto operator<=>(const Strip&, const Strip&) = default;

 private:
  // Turns propagating string i into a wall cup/cap pair (for e and f).
  void replace_string(int i, StripEnd::Kind wall) {
    std::vector<StripPiece> out;
    for (const auto& p : pieces) {
      if (p == StripPiece(sN(i), sS(i))) {
        StripEnd w1 = wall == StripEnd::Kind::W ? sW(1) : sE(1);
        StripEnd w2 = wall == StripEnd::Kind::W ? sW(2) : sE(2);
        out.emplace_back(sN(i), w1);
        out.emplace_back(sS(i), w2);
      } else {
        out.push_back(p);
      }
    }
    pieces = std::move(out);
    normalise();
  }
};

using StripElement = Element<Strip>;

// --- concatenation -------------------------------------------------------------

// Stacks a on top of b and traces the chains.  No feature is stripped;
// closed chains formed away from the walls increment `loops`.
inline Strip strip_concat(const Strip& a, const Strip& b) {
  if (a.m != b.m) throw RankMismatch();
  const int pa = a.wall_points(StripEnd::Kind::W), qa = a.wall_points(StripEnd::Kind::E);

  // Composite ends: reindex b's wall heights below a's.
  auto map_a = [&](StripEnd e) { return e; };
  auto map_b = [&](StripEnd e) -> StripEnd {
    switch (e.kind) {
      case StripEnd::Kind::W: return sW(pa + e.idx);
      case StripEnd::Kind::E: return sE(qa + e.idx);
      default: return e;
    }
  };

  // Junction: a.S(i) <-> b.N(i).  Walk chains from every non-junction end.
  struct Ref {
    int dia;  // 0 = a, 1 = b
    int piece;
    bool at_a;  // currently at .a end of that piece
  };
  auto build_lookup = [](const Strip& s) {
    std::map<StripEnd, std::pair<int, bool>> lk;
    for (size_t i = 0; i < s.pieces.size(); ++i) {
      lk[s.pieces[i].a] = {static_cast<int>(i), true};
      lk[s.pieces[i].b] = {static_cast<int>(i), false};
    }
    return lk;
  };
  auto lka = build_lookup(a), lkb = build_lookup(b);
  std::vector<bool> useda(a.pieces.size(), false), usedb(b.pieces.size(), false);

  std::vector<StripPiece> out;
  int out_loops = a.loops + b.loops;

  auto walk = [&](int dia, StripEnd start) -> std::optional<StripEnd> {
    // returns the composite far end, or nullopt if the chain closed
    int cur_dia = dia;
    StripEnd cur = start;
    while (true) {
      auto& lk = cur_dia == 0 ? lka : lkb;
      auto& used = cur_dia == 0 ? useda : usedb;
      const Strip& s = cur_dia == 0 ? a : b;
      auto it = lk.find(cur);
      if (it == lk.end()) throw std::logic_error("dangling strip end " + cur.to_string());
      auto [pi, at_a] = it->second;
      if (used[pi]) return std::nullopt;  // closed chain
      used[pi] = true;
      StripEnd far = at_a ? s.pieces[pi].b : s.pieces[pi].a;
      // cross the junction if possible
      if (cur_dia == 0 && far.kind == StripEnd::Kind::S) {
        cur_dia = 1;
        cur = sN(far.idx);
        continue;
      }
      if (cur_dia == 1 && far.kind == StripEnd::Kind::N) {
        cur_dia = 0;
        cur = sS(far.idx);
        continue;
      }
      return cur_dia == 0 ? map_a(far) : map_b(far);
    }
  };

  // boundary starts: a's N/W/E ends and b's S/W/E ends
  for (size_t i = 0; i < a.pieces.size(); ++i) {
    for (StripEnd e : {a.pieces[i].a, a.pieces[i].b}) {
      if (e.kind == StripEnd::Kind::S) continue;
      auto [pi, at_a] = lka[e];
      (void)at_a;
      if (useda[pi]) continue;
      auto far = walk(0, e);
      if (far) out.emplace_back(map_a(e), *far);
    }
  }
  for (size_t i = 0; i < b.pieces.size(); ++i) {
    for (StripEnd e : {b.pieces[i].a, b.pieces[i].b}) {
      if (e.kind == StripEnd::Kind::N) continue;
      auto [pi, at_a] = lkb[e];
      (void)at_a;
      if (usedb[pi]) continue;
      auto far = walk(1, e);
      if (far) out.emplace_back(map_b(e), *far);
    }
  }
  // remaining chains are closed: each is a mirror pair of off-wall loops
  for (size_t i = 0; i < a.pieces.size(); ++i) {
    if (useda[i]) continue;
    auto far = walk(0, a.pieces[i].a);
    if (far) throw std::logic_error("expected closed chain");
    ++out_loops;
  }
  for (size_t i = 0; i < b.pieces.size(); ++i) {
    if (usedb[i]) continue;
    auto far = walk(1, b.pieces[i].a);
    if (far) throw std::logic_error("expected closed chain");
    ++out_loops;
  }

  return Strip(a.m, std::move(out), out_loops);
}

// --- feature detection and reduction --------------------------------------------

inline FeatureCount detect_features(const Strip& s) {
  FeatureCount f;
  f.d = s.loops;
  int belts = 0;
  for (const auto& p : s.pieces) {
    if (p.is(StripEnd::Kind::W, StripEnd::Kind::W)) {
      int top = std::min(p.a.idx, p.b.idx);
      (top % 2 == 0 ? f.dL : f.kL) += 1;
    } else if (p.is(StripEnd::Kind::E, StripEnd::Kind::E)) {
      int top = std::min(p.a.idx, p.b.idx);
      (top % 2 == 0 ? f.dR : f.kR) += 1;
    } else if (p.is(StripEnd::Kind::W, StripEnd::Kind::E)) {
      ++belts;
    }
  }
  f.kLR = belts / 2;
  return f;
}

// Strips every feature and returns the scalar monomial next to the
// surviving basis diagram.
inline std::pair<Laurent, Strip> strip_reduce(const Strip& s) {
  FeatureCount f = detect_features(s);
  Laurent k = f.monomial();

  // keep: non-lens pieces; of the belts, only the last survives if the
  // count is odd.
  int belts_seen = 0;
  const int belts_total = s.belt_count();
  std::vector<StripPiece> kept;
  for (const auto& p : s.pieces) {
    if (p.is(StripEnd::Kind::W, StripEnd::Kind::W) || p.is(StripEnd::Kind::E, StripEnd::Kind::E))
      continue;
    if (p.is(StripEnd::Kind::W, StripEnd::Kind::E)) {
      ++belts_seen;
      if (!(belts_total % 2 == 1 && belts_seen == belts_total)) continue;
    }
    kept.push_back(p);
  }

  // order-preserving height reindexing
  std::vector<int> wh, eh;
  for (const auto& p : kept)
    for (StripEnd e : {p.a, p.b}) {
      if (e.kind == StripEnd::Kind::W) wh.push_back(e.idx);
      if (e.kind == StripEnd::Kind::E) eh.push_back(e.idx);
    }
  std::sort(wh.begin(), wh.end());
  std::sort(eh.begin(), eh.end());
  auto reindex = [](const std::vector<int>& order, int h) {
    return static_cast<int>(std::lower_bound(order.begin(), order.end(), h) - order.begin()) + 1;
  };
  for (auto& p : kept)
    for (StripEnd* e : {&p.a, &p.b}) {
      if (e->kind == StripEnd::Kind::W) e->idx = reindex(wh, e->idx);
      if (e->kind == StripEnd::Kind::E) e->idx = reindex(eh, e->idx);
    }

  return {k, Strip(s.m, std::move(kept), 0)};
}

// Product in the affine symmetric TL algebra: concatenate, then strip
// the six features.  The result is a monomial times a basis diagram.
inline std::pair<Laurent, Strip> compose_phi(const Strip& a, const Strip& b) {
  return strip_reduce(strip_concat(a, b));
}

inline StripElement compose_phi(const StripElement& a, const StripElement& b) {
  StripElement out;
  for (const auto& [da, ca] : a.terms)
    for (const auto& [db, cb] : b.terms) {
      auto [k, d] = compose_phi(da, db);
      out.add(d, ca * cb * k);
    }
  return out;
}

// --- weights --------------------------------------------------------------------

// Number of propagating pairs with the sign fixed by the anchors
// 1 -> -m, f -> -(m-1), e -> m-1: positive exactly when the number of
// northern arcs astride the 0-wall is odd.
inline int weight_of(const Strip& s) {
  int l = s.propagating_pairs();
  if (l == 0) return 0;
  int nw = 0;
  for (const auto& p : s.pieces) nw += p.is(StripEnd::Kind::N, StripEnd::Kind::W) ? 1 : 0;
  return nw % 2 == 1 ? l : -l;
}

// --- half diagrams ---------------------------------------------------------------

// A ket: the upper half of a basis diagram, cut through its propagating
// lines.  Stubs C1..Cx are read west to east; any belt is dropped.
struct Ket {
  int m = 0;
  std::vector<StripPiece> pieces;

  Ket() = default;
  Ket(int m_, std::vector<StripPiece> ps) : m(m_), pieces(std::move(ps)) {
    std::sort(pieces.begin(), pieces.end());
  }

  int stubs() const {
    int c = 0;
    for (const auto& p : pieces) c += p.touches(StripEnd::Kind::C) ? 1 : 0;
    return c;
  }
  // number of arcs astride the 0-wall; its parity is the colour datum
  int ur() const {
    int c = 0;
    for (const auto& p : pieces) c += p.is(StripEnd::Kind::N, StripEnd::Kind::W) ? 1 : 0;
    return c;
  }
  int ur0() const {
    int c = 0;
    for (const auto& p : pieces) c += p.is(StripEnd::Kind::N, StripEnd::Kind::E) ? 1 : 0;
    return c;
  }
  int weight() const {
    int x = stubs();
    if (x == 0) return 0;
    return ur() % 2 == 1 ? x : -x;
  }

  friend bool operator==(const Ket&, const Ket&) = default;
  friend auto operator<=>(const Ket&, const Ket&) = default;

  std::string to_text() const {
    std::string out = std::to_string(m) + "k|";
    for (const auto& p : pieces) out += " " + p.a.to_string() + "-" + p.b.to_string();
    return out;
  }
};

inline Ket ket_of(const Strip& s) {
  std::vector<StripPiece> ps;
  std::vector<int> prop;  // N indices of propagating pieces
  for (const auto& p : s.pieces)
    if (p.is(StripEnd::Kind::N, StripEnd::Kind::S))
      prop.push_back(p.a.kind == StripEnd::Kind::N ? p.a.idx : p.b.idx);
  std::sort(prop.begin(), prop.end());
  std::vector<int> wh, eh;
  for (const auto& p : s.pieces) {
    bool northern = !p.touches(StripEnd::Kind::S);
    if (!northern) continue;
    if (p.is(StripEnd::Kind::W, StripEnd::Kind::E)) continue;  // belt dropped
    for (StripEnd e : {p.a, p.b}) {
      if (e.kind == StripEnd::Kind::W) wh.push_back(e.idx);
      if (e.kind == StripEnd::Kind::E) eh.push_back(e.idx);
    }
  }
  std::sort(wh.begin(), wh.end());
  std::sort(eh.begin(), eh.end());
  auto reindex = [](const std::vector<int>& order, int h) {
    return static_cast<int>(std::lower_bound(order.begin(), order.end(), h) - order.begin()) + 1;
  };
  for (const auto& p : s.pieces) {
    if (p.touches(StripEnd::Kind::S) || p.is(StripEnd::Kind::W, StripEnd::Kind::E)) continue;
    if (p.is(StripEnd::Kind::N, StripEnd::Kind::S)) continue;
    StripPiece q = p;
    for (StripEnd* e : {&q.a, &q.b}) {
      if (e->kind == StripEnd::Kind::W) e->idx = reindex(wh, e->idx);
      if (e->kind == StripEnd::Kind::E) e->idx = reindex(eh, e->idx);
    }
    ps.push_back(q);
  }
  for (size_t j = 0; j < prop.size(); ++j)
    ps.emplace_back(sN(prop[j]), sC(static_cast<int>(j) + 1));
  return Ket(s.m, std::move(ps));
}

inline Ket bra_ket_of(const Strip& s) { return ket_of(s.flipped()); }

// Joins ket `top` to the flip of ket `bottom`: the unique recombination
// of two half diagrams, inserting a belt exactly when the colouring
// demands one.  Halves must have equal stub counts, and for nonzero
// weight matching colour.
inline Strip recombine(const Ket& top, const Ket& bottom) {
  if (top.m != bottom.m) throw RankMismatch();
  const int x = top.stubs();
  if (x != bottom.stubs()) throw RankMismatch();
  const bool belt = (top.ur() + bottom.ur()) % 2 == 1;
  if (x > 0 && belt) throw NotCC();

  const int pt = top.ur(), qt = top.ur0();
  const int pb = bottom.ur(), qb = bottom.ur0();
  std::vector<StripPiece> ps;
  std::map<int, int> top_stub_vertex, bottom_stub_vertex;
  for (const auto& p : top.pieces) {
    if (p.touches(StripEnd::Kind::C)) {
      int stub = p.a.kind == StripEnd::Kind::C ? p.a.idx : p.b.idx;
      int v = p.a.kind == StripEnd::Kind::N ? p.a.idx : p.b.idx;
      top_stub_vertex[stub] = v;
      continue;
    }
    ps.push_back(p);
  }
  for (const auto& p : bottom.pieces) {
    StripPiece q = p;
    bool has_stub = false;
    int stub = 0, v = 0;
    for (StripEnd* e : {&q.a, &q.b}) {
      switch (e->kind) {
        case StripEnd::Kind::N: e->kind = StripEnd::Kind::S; break;
        case StripEnd::Kind::W: e->idx = pt + (belt ? 1 : 0) + (pb + 1 - e->idx); break;
        case StripEnd::Kind::E: e->idx = qt + (belt ? 1 : 0) + (qb + 1 - e->idx); break;
        case StripEnd::Kind::C:
          has_stub = true;
          stub = e->idx;
          break;
        default: break;
      }
    }
    if (has_stub) {
      v = q.a.kind == StripEnd::Kind::S ? q.a.idx : q.b.idx;
      bottom_stub_vertex[stub] = v;
      continue;
    }
    ps.emplace_back(q.a, q.b);
  }
  for (const auto& [stub, v] : top_stub_vertex)
    ps.emplace_back(sN(v), sS(bottom_stub_vertex.at(stub)));
  if (belt) ps.emplace_back(sW(pt + 1), sE(qt + 1));
  return Strip(top.m, std::move(ps));
}

// --- localisation / globalisation ------------------------------------------------

inline bool has_zero_wall_cupcap(const Strip& s) {
  bool cup = false, cap = false;
  for (const auto& p : s.pieces) {
    if (p == StripPiece(sN(1), sW(1))) cup = true;
    if (p.is(StripEnd::Kind::S, StripEnd::Kind::W) &&
        (p.a.kind == StripEnd::Kind::S ? p.a.idx : p.b.idx) == 1)
      cap = true;
  }
  return cup && cap;
}

// Cup/cap removal on a single basis diagram (no scalar bookkeeping).
inline Strip localise_diagram(const Strip& s) {
  if (!has_zero_wall_cupcap(s)) throw NotInIdempotentSubalgebra();
  const int p = s.wall_points(StripEnd::Kind::W);
  std::vector<StripPiece> ps;
  for (const auto& piece : s.pieces) {
    if (piece == StripPiece(sN(1), sW(1))) continue;
    if (piece.is(StripEnd::Kind::S, StripEnd::Kind::W)) {
      int sv = piece.a.kind == StripEnd::Kind::S ? piece.a.idx : piece.b.idx;
      int wh = piece.a.kind == StripEnd::Kind::W ? piece.a.idx : piece.b.idx;
      if (sv == 1) {
        if (wh != p) throw std::logic_error("cap not at the bottom of the 0-wall");
        continue;
      }
    }
    StripPiece q = piece;
    for (StripEnd* e : {&q.a, &q.b}) {
      if (e->kind == StripEnd::Kind::N || e->kind == StripEnd::Kind::S) e->idx -= 1;
      if (e->kind == StripEnd::Kind::W) e->idx -= 1;  // top point was removed
    }
    ps.emplace_back(q.a, q.b);
  }
  return Strip(s.m - 1, std::move(ps));
}

// Inserts a cup and cap astride the 0-wall (the basis transport of the
// globalisation functor G).
inline Strip globalise_insert(const Strip& s) {
  const int p = s.wall_points(StripEnd::Kind::W);
  std::vector<StripPiece> ps;
  for (const auto& piece : s.pieces) {
    StripPiece q = piece;
    for (StripEnd* e : {&q.a, &q.b}) {
      if (e->kind == StripEnd::Kind::N || e->kind == StripEnd::Kind::S) e->idx += 1;
      if (e->kind == StripEnd::Kind::W) e->idx += 1;
    }
    ps.emplace_back(q.a, q.b);
  }
  ps.emplace_back(sN(1), sW(1));
  ps.emplace_back(sS(1), sW(p + 2));
  return Strip(s.m + 1, std::move(ps));
}

// Right-blob version: cup and cap astride the 1-wall (for G').
inline Strip globalise_insert_right(const Strip& s) {
  const int q = s.wall_points(StripEnd::Kind::E);
  std::vector<StripPiece> ps;
  for (const auto& piece : s.pieces) {
    StripPiece qq = piece;
    for (StripEnd* e : {&qq.a, &qq.b})
      if (e->kind == StripEnd::Kind::E) e->idx += 1;
    ps.emplace_back(qq.a, qq.b);
  }
  ps.emplace_back(sN(s.m + 1), sE(1));
  ps.emplace_back(sS(s.m + 1), sE(q + 2));
  Strip out;
  out.m = s.m + 1;
  out.pieces = std::move(ps);
  out.normalise();
  return out;
}

// The localisation isomorphism rho on elements of e' A e'.  Input
// coefficients are read against the normalised basis {d / dL}; the
// coefficient map interchanges dL and kL, which is what makes rho an
// algebra homomorphism onto the standard product at rank m-1.
inline StripElement localise(const StripElement& x) {
  StripElement out;
  for (const auto& [d, c] : x.terms)
    out.add(localise_diagram(d), c.swap_params(Param::dL, Param::kL));
  return out;
}

}  // namespace sympblob
