#pragma once

/*
  Beaded pair-partition diagrams on the vertex set
  V^n_m = {1..n, 1'..m'} in their serial realisation: a perfect matching
  whose pairs carry bead words, plus a multiset of closed loops recorded
  by loop-class representative words.  This is the universal calculus the
  TL, blob, contour and left-right blob algebras are built on.

  Conventions:
    * a pair is stored with its lesser end first (north 1..n, then south
      1'..m'), the word read from that end;
    * a loop word is stored as the lexicographically least word among all
      rotations of itself and of its reverse;
    * the boundary cycle for planarity runs N1..Nn then Sm'..S1'.
*/

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sympblob/laurent.hpp"

namespace sympblob {

struct RankMismatch : std::runtime_error {
  RankMismatch() : std::runtime_error("diagram ranks do not match for composition") {}
};

struct NotPlanar : std::runtime_error {
  NotPlanar() : std::runtime_error("diagram is not planar") {}
};

struct UnknownLoopClass : std::runtime_error {
  explicit UnknownLoopClass(const std::string& w)
      : std::runtime_error("no reduction rule for loop class '" + w + "'") {}
};

struct End {
  bool south = false;
  int idx = 0;  // 1-based

  friend bool operator==(const End& a, const End& b) = default;
  friend auto operator<=>(const End& a, const End& b) {
    if (a.south != b.south) return a.south <=> b.south;
    return a.idx <=> b.idx;
  }

  std::string to_string() const { return std::to_string(idx) + (south ? "p" : ""); }

  static End north(int i) { return End{false, i}; }
  static End southern(int i) { return End{true, i}; }

  static std::optional<End> parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    bool p = s.back() == 'p' || s.back() == '\'';
    if (p) s.remove_suffix(1);
    if (s.empty()) return std::nullopt;
    int v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') return std::nullopt;
      v = v * 10 + (c - '0');
    }
    if (v <= 0) return std::nullopt;
    return End{p, v};
  }
};

using Word = std::string;

inline Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

// Lexicographically least representative of the loop-equivalence class
// (all rotations of the word and of its reverse).
inline Word canonical_loop_word(const Word& w) {
  if (w.empty()) return w;
  Word best = w;
  Word rev = reversed(w);
  for (const Word* base : std::initializer_list<const Word*>{&w, &rev}) {
    Word rot = *base;
    for (size_t i = 0; i < rot.size(); ++i) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
  }
  return best;
}

struct DPair {
  End a, b;
  Word word;

  DPair() = default;
  DPair(End x, End y, Word w = {}) : a(x), b(y), word(std::move(w)) {
    if (b < a) {
      std::swap(a, b);
      word = reversed(word);
    }
  }

  friend bool operator==(const DPair&, const DPair&) = default;
  friend auto operator<=>(const DPair& x, const DPair& y) {
    if (auto c = x.a <=> y.a; c != 0) return c;
    if (auto c = x.b <=> y.b; c != 0) return c;
    return x.word <=> y.word;
  }
};

class Diagram {
 public:
  int n = 0, m = 0;
  std::vector<DPair> pairs;     // sorted by lesser end
  std::map<Word, int> loops;    // canonical loop word -> multiplicity

  Diagram() = default;
  Diagram(int n_, int m_, std::vector<DPair> ps, std::map<Word, int> ls = {})
      : n(n_), m(m_), pairs(std::move(ps)), loops(std::move(ls)) {
    normalise();
  }

  static Diagram identity(int n_) {
    std::vector<DPair> ps;
    for (int i = 1; i <= n_; ++i) ps.emplace_back(End::north(i), End::southern(i));
    return Diagram(n_, n_, std::move(ps));
  }

  // U_i: as the identity but with pairs {i,i+1}, {i',(i+1)'}.
  static Diagram cup_cap(int n_, int i) {
    std::vector<DPair> ps;
    for (int j = 1; j <= n_; ++j) {
      if (j == i) {
        ps.emplace_back(End::north(i), End::north(i + 1));
        ps.emplace_back(End::southern(i), End::southern(i + 1));
      } else if (j != i + 1) {
        ps.emplace_back(End::north(j), End::southern(j));
      }
    }
    return Diagram(n_, n_, std::move(ps));
  }

  // L_i-style generator: identity with `word` on the i-th string.
  static Diagram decorated_identity(int n_, int i, Word word) {
    Diagram d = identity(n_);
    for (auto& p : d.pairs)
      if (p.a == End::north(i)) p.word = std::move(word);
    d.normalise();
    return d;
  }

  void normalise() {
    for (auto& p : pairs) {
      DPair q(p.a, p.b, p.word);
      p = q;
    }
    std::sort(pairs.begin(), pairs.end());
  }

  bool is_pseudo() const { return !loops.empty(); }

  // Underlying diagram c_d: loops dropped.
  Diagram underlying() const {
    Diagram d = *this;
    d.loops.clear();
    return d;
  }

  // Loop complement: just the loops.
  std::map<Word, int> loop_complement() const { return loops; }

  int total_beads() const {
    int t = 0;
    for (const auto& p : pairs) t += static_cast<int>(p.word.size());
    for (const auto& [w, k] : loops) t += static_cast<int>(w.size()) * k;
    return t;
  }

  const DPair* pair_at(End e) const {
    for (const auto& p : pairs)
      if (p.a == e || p.b == e) return &p;
    return nullptr;
  }

  // Number of propagating lines (north-to-south pairs).
  int propagating() const {
    int t = 0;
    for (const auto& p : pairs) t += (p.a.south != p.b.south) ? 1 : 0;
    return t;
  }

  // Position on the boundary cycle N1..Nn, Sm'..S1'.
  int boundary_position(End e) const { return e.south ? n + (m - e.idx) : e.idx - 1; }

  std::string to_text() const {
    std::string out = std::to_string(n) + ":" + std::to_string(m);
    for (const auto& p : pairs) {
      out += " {" + p.a.to_string() + "," + p.b.to_string() + "}";
      if (!p.word.empty()) out += p.word;
    }
    for (const auto& [w, k] : loops)
      for (int i = 0; i < k; ++i) out += " O" + (w.empty() ? std::string("-") : w);
    return out;
  }

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram& x, const Diagram& y) {
    if (auto c = x.n <=> y.n; c != 0) return c;
    if (auto c = x.m <=> y.m; c != 0) return c;
    if (auto c = x.pairs <=> y.pairs; c != 0) return c;
    return x.loops <=> y.loops;
  }
};

// --- abacus product ----------------------------------------------------------

// Concatenation of pseudodiagrams: d1 on top of d2, chains traced through
// the junction row, bead words accumulated along each chain, closed chains
// collected as loop classes.  No scalar reduction happens here.
inline Diagram abacus_concat(const Diagram& d1, const Diagram& d2) {
  if (d1.m != d2.n) throw RankMismatch();

  struct Slot {
    int pair = -1;
    bool from_a = false;  // reached via the pair's `a` end
  };
  // End lookup per diagram.
  auto index_of = [](const Diagram& d, End e) { return (e.south ? d.n : 0) + e.idx - 1; };
  auto build = [&](const Diagram& d) {
    std::vector<Slot> lookup(d.n + d.m);
    for (size_t i = 0; i < d.pairs.size(); ++i) {
      lookup[index_of(d, d.pairs[i].a)] = {static_cast<int>(i), true};
      lookup[index_of(d, d.pairs[i].b)] = {static_cast<int>(i), false};
    }
    return lookup;
  };
  std::vector<Slot> lk1 = build(d1), lk2 = build(d2);
  std::vector<bool> used1(d1.pairs.size(), false), used2(d2.pairs.size(), false);

  // Walks one chain starting at a boundary end; returns the far end and
  // accumulates the word.
  struct Cursor {
    int dia;  // 1 or 2
    End at;
  };
  auto step = [&](Cursor cur, Word& acc, bool& closed) -> Cursor {
    const Diagram& d = cur.dia == 1 ? d1 : d2;
    auto& lk = cur.dia == 1 ? lk1 : lk2;
    auto& used = cur.dia == 1 ? used1 : used2;
    Slot s = lk[index_of(d, cur.at)];
    if (used[s.pair]) {
      closed = true;
      return cur;
    }
    used[s.pair] = true;
    const DPair& p = d.pairs[s.pair];
    if (s.from_a) {
      acc += p.word;
      return {cur.dia, p.b};
    }
    acc += reversed(p.word);
    return {cur.dia, p.a};
  };
  // Crosses the junction if possible; otherwise we are at a boundary end.
  auto cross = [&](Cursor cur) -> std::optional<Cursor> {
    if (cur.dia == 1 && cur.at.south) return Cursor{2, End::north(cur.at.idx)};
    if (cur.dia == 2 && !cur.at.south) return Cursor{1, End::southern(cur.at.idx)};
    return std::nullopt;
  };

  std::vector<DPair> out_pairs;
  std::map<Word, int> out_loops;
  for (const auto& [w, k] : d1.loops) out_loops[w] += k;
  for (const auto& [w, k] : d2.loops) out_loops[w] += k;

  auto trace_from = [&](Cursor start, End as_end) {
    Word acc;
    bool closed = false;
    Cursor cur = step(start, acc, closed);
    while (true) {
      auto nxt = cross(cur);
      if (!nxt) break;
      cur = step(*nxt, acc, closed);
    }
    End far = cur.dia == 1 ? cur.at : End::southern(cur.at.idx);
    // Normalise: word currently reads from `as_end` to `far`.
    out_pairs.emplace_back(as_end, far, acc);
  };

  for (int i = 1; i <= d1.n; ++i) {
    if (!used1[lk1[index_of(d1, End::north(i))].pair]) trace_from({1, End::north(i)}, End::north(i));
  }
  for (int j = 1; j <= d2.m; ++j) {
    Slot s = lk2[index_of(d2, End::southern(j))];
    if (!used2[s.pair]) trace_from({2, End::southern(j)}, End::southern(j));
  }
  // Remaining pairs form closed chains through the junction.
  for (size_t i = 0; i < d1.pairs.size(); ++i) {
    if (used1[i]) continue;
    Word acc;
    bool closed = false;
    Cursor cur{1, d1.pairs[i].a};
    while (!closed) {
      cur = step(cur, acc, closed);
      if (closed) break;
      auto nxt = cross(cur);
      if (!nxt) throw std::logic_error("open chain found during loop tracing");
      cur = *nxt;
    }
    out_loops[canonical_loop_word(acc)] += 1;
  }

  return Diagram(d1.n, d2.m, std::move(out_pairs), std::move(out_loops));
}

// k_d and c_d: one scalar factor per closed loop, by loop class.
inline std::pair<Laurent, Diagram> scalar_reduce(const Diagram& d,
                                                 const std::map<Word, Laurent>& rules) {
  Laurent k = Laurent::one();
  for (const auto& [w, mult] : d.loops) {
    auto it = rules.find(canonical_loop_word(w));
    if (it == rules.end()) throw UnknownLoopClass(w);
    k *= it->second.pow(mult);
  }
  return {k, d.underlying()};
}

// --- planarity and exposure ---------------------------------------------------

inline bool is_planar(const Diagram& d) {
  const size_t np = d.pairs.size();
  for (size_t i = 0; i < np; ++i) {
    int a1 = d.boundary_position(d.pairs[i].a);
    int b1 = d.boundary_position(d.pairs[i].b);
    if (a1 > b1) std::swap(a1, b1);
    for (size_t j = i + 1; j < np; ++j) {
      int a2 = d.boundary_position(d.pairs[j].a);
      int b2 = d.boundary_position(d.pairs[j].b);
      if (a2 > b2) std::swap(a2, b2);
      bool i2_in = a1 < a2 && a2 < b1;
      bool j2_in = a1 < b2 && b2 < b1;
      if (i2_in != j2_in) return false;
    }
  }
  return true;
}

// Exposure level of each line: 0 for lines deformable to the western
// frame edge, else one more than the innermost line covering them.  The
// western edge sits between S1' and N1 on the boundary cycle, i.e. after
// every boundary position.  A line is covered by every chord whose span
// strictly encloses it, and those chords form a nested chain, so the
// level equals the number of enclosing chords.
inline std::vector<int> exposure_levels(const Diagram& d) {
  if (!is_planar(d)) throw NotPlanar();
  const size_t np = d.pairs.size();
  std::vector<int> level(np, 0);
  for (size_t i = 0; i < np; ++i) {
    int a1 = d.boundary_position(d.pairs[i].a);
    int b1 = d.boundary_position(d.pairs[i].b);
    if (a1 > b1) std::swap(a1, b1);
    for (size_t j = 0; j < np; ++j) {
      if (j == i) continue;
      int a2 = d.boundary_position(d.pairs[j].a);
      int b2 = d.boundary_position(d.pairs[j].b);
      if (a2 > b2) std::swap(a2, b2);
      if (a2 < a1 && b1 < b2) ++level[i];
    }
  }
  return level;
}

}  // namespace sympblob
