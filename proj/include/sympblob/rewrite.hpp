#pragma once

/*
  Rectangular reduction of left-right blob pseudodiagrams to normal
  form, used as an independent oracle against the periodic-side
  composition.

  Rewrites on a pseudodiagram:
    on a line:  LL -> dL . L     RR -> dR . R
                LRL -> kLR . L   RLR -> kLR . R
    on a loop:  cyclic LL -> dL, cyclic RR -> dR, then the loop classes
                {} -> d, L -> kL, R -> kR, LR -> kLR
  and, once no such redex remains, the topological identification of a
  pair of winding lines: unfold, remove belt pairs at kLR each, and fold
  back.  Every maximal chain of rewrites ends in the same reduced
  diagram; the redex chosen at each step is configurable so the tests
  can randomise the order.
*/

#include <random>

#include "sympblob/fold.hpp"

namespace sympblob {

namespace detail {

struct Redex {
  enum class Kind { Word, LoopShrink, LoopFinal } kind;
  int pair_index = -1;      // Word
  size_t word_pos = 0;      // Word: offset of the pattern
  int pattern_len = 0;      // Word: 2 or 3
  Word loop_word;           // LoopShrink / LoopFinal
  size_t loop_pos = 0;      // LoopShrink: offset of the doubled letter
  Param factor = Param::d;

  friend bool operator<(const Redex& x, const Redex& y) {
    return std::tie(x.kind, x.pair_index, x.word_pos, x.pattern_len, x.loop_word, x.loop_pos) <
           std::tie(y.kind, y.pair_index, y.word_pos, y.pattern_len, y.loop_word, y.loop_pos);
  }
};

inline std::vector<Redex> find_redexes(const Diagram& d) {
  std::vector<Redex> out;
  for (size_t i = 0; i < d.pairs.size(); ++i) {
    const Word& w = d.pairs[i].word;
    for (size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p] == w[p + 1]) {
        out.push_back({Redex::Kind::Word, static_cast<int>(i), p, 2, {}, 0,
                       w[p] == 'L' ? Param::dL : Param::dR});
      }
    }
    for (size_t p = 0; p + 2 < w.size(); ++p) {
      if (w[p] != w[p + 1] && w[p] == w[p + 2]) {
        out.push_back({Redex::Kind::Word, static_cast<int>(i), p, 3, {}, 0, Param::kLR});
      }
    }
  }
  for (const auto& [w, mult] : d.loops) {
    (void)mult;
    bool shrunk = false;
    const size_t n = w.size();
    for (size_t p = 0; p < n && n >= 2; ++p) {
      if (w[p] == w[(p + 1) % n]) {
        out.push_back({Redex::Kind::LoopShrink, -1, 0, 0, w, p,
                       w[p] == 'L' ? Param::dL : Param::dR});
        shrunk = true;
      }
    }
    if (shrunk) continue;
    Param factor;
    if (w.empty())
      factor = Param::d;
    else if (w == "L")
      factor = Param::kL;
    else if (w == "R")
      factor = Param::kR;
    else if (canonical_loop_word(w) == "LR")
      factor = Param::kLR;
    else
      throw std::logic_error("irreducible loop class '" + w + "'");
    out.push_back({Redex::Kind::LoopFinal, -1, 0, 0, w, 0, factor});
  }
  return out;
}

inline void apply_redex(Diagram& d, const Redex& r) {
  switch (r.kind) {
    case Redex::Kind::Word: {
      Word& w = d.pairs[r.pair_index].word;
      // keep the first letter of the pattern, drop the rest
      w.erase(r.word_pos + 1, r.pattern_len - 1);
      break;
    }
    case Redex::Kind::LoopShrink: {
      auto it = d.loops.find(r.loop_word);
      if (--(it->second) == 0) d.loops.erase(it);
      Word w = r.loop_word;
      w.erase((r.loop_pos + 1) % w.size(), 1);
      d.loops[canonical_loop_word(w)] += 1;
      break;
    }
    case Redex::Kind::LoopFinal: {
      auto it = d.loops.find(r.loop_word);
      if (--(it->second) == 0) d.loops.erase(it);
      break;
    }
  }
  d.normalise();
}

}  // namespace detail

// Reduces a pseudodiagram to the normal form of the topological
// quotient.  `pick` selects which redex to fire among the available
// ones (0 = always the first, in a fixed order).
inline std::pair<Laurent, Diagram> rect_reduce(Diagram d,
                                               const std::function<size_t(size_t)>& pick = {}) {
  Laurent k = Laurent::one();
  while (true) {
    auto redexes = detail::find_redexes(d);
    if (redexes.empty()) break;
    std::sort(redexes.begin(), redexes.end());
    size_t choice = pick ? pick(redexes.size()) % redexes.size() : 0;
    const auto& r = redexes[choice];
    k *= Laurent::param(r.factor);
    detail::apply_redex(d, r);
  }
  // topological step: winding line pairs become belt pairs upstairs
  Strip s = unfold_mux(d);
  int belts = s.belt_count();
  if (belts >= 2) {
    k *= Laurent::param(Param::kLR, belts / 2);
    int seen = 0;
    std::vector<StripPiece> keep;
    for (const auto& piece : s.pieces) {
      if (piece.is(StripEnd::Kind::W, StripEnd::Kind::E)) {
        ++seen;
        if (!(belts % 2 == 1 && seen == belts)) continue;
      }
      keep.push_back(piece);
    }
    // reindex the surviving wall points
    std::vector<int> wh, eh;
    for (const auto& piece : keep)
      for (StripEnd e : {piece.a, piece.b}) {
        if (e.kind == StripEnd::Kind::W) wh.push_back(e.idx);
        if (e.kind == StripEnd::Kind::E) eh.push_back(e.idx);
      }
    std::sort(wh.begin(), wh.end());
    std::sort(eh.begin(), eh.end());
    for (auto& piece : keep)
      for (StripEnd* e : {&piece.a, &piece.b}) {
        if (e->kind == StripEnd::Kind::W)
          e->idx = static_cast<int>(std::lower_bound(wh.begin(), wh.end(), e->idx) - wh.begin()) + 1;
        if (e->kind == StripEnd::Kind::E)
          e->idx = static_cast<int>(std::lower_bound(eh.begin(), eh.end(), e->idx) - eh.begin()) + 1;
      }
    d = fold_nu(Strip(s.m, std::move(keep)));
  }
  return {k, d};
}

// Oracle product: concatenate in the rectangle and reduce there.
inline std::pair<Laurent, Diagram> rect_mul(const Diagram& a, const Diagram& b,
                                            const std::function<size_t(size_t)>& pick = {}) {
  return rect_reduce(abacus_concat(a, b), pick);
}

}  // namespace sympblob
