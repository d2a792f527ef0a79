#pragma once

/*
  Folding and unfolding between the rectangular left-right blob picture
  and the periodic symmetric strip picture.

  unfold_mux cuts every decorated line at its blobs and reattaches the
  cut ends to the matching reflection wall: an L becomes a pair of
  consecutive points on the 0-wall, an R a pair on the 1-wall.  The
  vertical order of the blob pairs along a wall is the order in which
  their lines border that wall's face, read off by a boundary walk; the
  piece on the walk-entry side of a blob takes the upper point.

  fold_nu reverses this: wall points are joined in consecutive pairs
  (1,2), (3,4), ... by a small blobbed arc, which rebuilds the rectangle
  lines together with their words.
*/

#include <optional>

#include "sympblob/strip.hpp"

namespace sympblob {

namespace detail {

// Chords bordering the western face, north to south, each with the end
// at which the walk meets it.
inline std::vector<std::pair<int, End>> west_face_walk(const Diagram& d) {
  std::vector<std::pair<int, End>> out;
  const int total = d.n + d.m;
  std::vector<int> pair_of(total, -1);
  std::vector<End> end_of(total);
  for (size_t i = 0; i < d.pairs.size(); ++i) {
    for (End e : {d.pairs[i].a, d.pairs[i].b}) {
      pair_of[d.boundary_position(e)] = static_cast<int>(i);
      end_of[d.boundary_position(e)] = e;
    }
  }
  int pos = 0;
  while (pos < total) {
    int pi = pair_of[pos];
    if (pi < 0) {
      ++pos;
      continue;
    }
    out.emplace_back(pi, end_of[pos]);
    int pa = d.boundary_position(d.pairs[pi].a);
    int pb = d.boundary_position(d.pairs[pi].b);
    pos = std::max(pa, pb) + 1;
  }
  return out;
}

// Same walk along the eastern face, using the reversed boundary order
// Nn..N1, S1'..Sm'.
inline std::vector<std::pair<int, End>> east_face_walk(const Diagram& d) {
  std::vector<std::pair<int, End>> out;
  const int total = d.n + d.m;
  auto position = [&](End e) { return e.south ? d.n - 1 + e.idx : d.n - e.idx; };
  std::vector<int> pair_of(total, -1);
  std::vector<End> end_of(total);
  for (size_t i = 0; i < d.pairs.size(); ++i) {
    for (End e : {d.pairs[i].a, d.pairs[i].b}) {
      pair_of[position(e)] = static_cast<int>(i);
      end_of[position(e)] = e;
    }
  }
  int pos = 0;
  while (pos < total) {
    int pi = pair_of[pos];
    if (pi < 0) {
      ++pos;
      continue;
    }
    out.emplace_back(pi, end_of[pos]);
    int pa = position(d.pairs[pi].a);
    int pb = position(d.pairs[pi].b);
    pos = std::max(pa, pb) + 1;
  }
  return out;
}

inline StripEnd strip_end_of(End e) { return e.south ? sS(e.idx) : sN(e.idx); }

}  // namespace detail

// Unfolds a decorated loop-free diagram with line words among
// {"", "L", "R", "LR", "RL"} into a strip, or nothing when the blobs
// cannot be deformed to their walls simultaneously.
inline std::optional<Strip> try_unfold(const Diagram& d) {
  if (d.n != d.m || !d.loops.empty()) return std::nullopt;
  for (const auto& p : d.pairs) {
    const Word& w = p.word;
    if (!(w.empty() || w == "L" || w == "R" || w == "LR" || w == "RL")) return std::nullopt;
  }
  if (!is_planar(d)) return std::nullopt;

  // walk-entry end and wall block per decorated line
  std::map<int, End> west_entry, east_entry;
  std::map<int, int> west_block, east_block;
  {
    int block = 0;
    for (const auto& [pi, entry] : detail::west_face_walk(d)) {
      if (d.pairs[pi].word.find('L') == Word::npos) continue;
      west_entry[pi] = entry;
      west_block[pi] = block++;
    }
    block = 0;
    for (const auto& [pi, entry] : detail::east_face_walk(d)) {
      if (d.pairs[pi].word.find('R') == Word::npos) continue;
      east_entry[pi] = entry;
      east_block[pi] = block++;
    }
  }
  // every decorated line must border its wall's face
  for (size_t i = 0; i < d.pairs.size(); ++i) {
    const Word& w = d.pairs[i].word;
    if (w.find('L') != Word::npos && !west_block.count(static_cast<int>(i))) return std::nullopt;
    if (w.find('R') != Word::npos && !east_block.count(static_cast<int>(i))) return std::nullopt;
  }

  std::vector<StripPiece> pieces;
  for (size_t i = 0; i < d.pairs.size(); ++i) {
    const DPair& p = d.pairs[i];
    const int pi = static_cast<int>(i);
    StripEnd A = detail::strip_end_of(p.a), B = detail::strip_end_of(p.b);
    if (p.word.empty()) {
      pieces.emplace_back(A, B);
      continue;
    }
    // wall points for this line's blobs
    auto wall_pair = [&](char blob) -> std::pair<StripEnd, StripEnd> {
      // returns (upper, lower)
      if (blob == 'L') {
        int k = west_block.at(pi);
        return {sW(2 * k + 1), sW(2 * k + 2)};
      }
      int k = east_block.at(pi);
      return {sE(2 * k + 1), sE(2 * k + 2)};
    };
    auto entry_is_a = [&](char blob) {
      return (blob == 'L' ? west_entry.at(pi) : east_entry.at(pi)) == p.a;
    };
    if (p.word.size() == 1) {
      auto [up, down] = wall_pair(p.word[0]);
      bool a_up = entry_is_a(p.word[0]);
      pieces.emplace_back(A, a_up ? up : down);
      pieces.emplace_back(B, a_up ? down : up);
    } else {
      // two blobs, word read from end a: first blob adjacent to the
      // a-side prefix, second to the b-side suffix
      auto [up1, down1] = wall_pair(p.word[0]);
      auto [up2, down2] = wall_pair(p.word[1]);
      bool a_up1 = entry_is_a(p.word[0]);   // prefix vs middle at blob 1
      bool a_up2 = entry_is_a(p.word[1]);   // middle vs suffix at blob 2
      pieces.emplace_back(A, a_up1 ? up1 : down1);
      pieces.emplace_back(a_up1 ? down1 : up1, a_up2 ? up2 : down2);
      pieces.emplace_back(a_up2 ? down2 : up2, B);
    }
  }

  Strip s(d.n, std::move(pieces));
  if (!s.is_noncrossing()) return std::nullopt;
  return s;
}

inline Strip unfold_mux(const Diagram& d) {
  auto s = try_unfold(d);
  if (!s) throw std::invalid_argument("diagram is not a left-right blob diagram");
  return *s;
}

// Folds a colouring-composable strip back into the rectangle: wall
// points are joined in consecutive pairs by a blobbed arc (L on the
// 0-wall, R on the 1-wall).  Closed chains become decorated loops, and
// each free symmetric loop pair folds onto one undecorated loop.
inline Diagram fold_nu(const Strip& s) {
  const int p = s.wall_points(StripEnd::Kind::W), q = s.wall_points(StripEnd::Kind::E);
  if (p % 2 || q % 2) throw NotCC();

  // locate the piece-end at every wall point
  std::map<StripEnd, std::pair<int, bool>> at;  // end -> (piece, is_a)
  for (size_t i = 0; i < s.pieces.size(); ++i) {
    at[s.pieces[i].a] = {static_cast<int>(i), true};
    at[s.pieces[i].b] = {static_cast<int>(i), false};
  }
  auto partner = [&](StripEnd e) -> StripEnd {
    // the other point of e's consecutive wall pair
    int h = e.idx;
    int mate = (h % 2 == 1) ? h + 1 : h - 1;
    return StripEnd{e.kind, mate};
  };

  std::vector<bool> used(s.pieces.size(), false);
  std::vector<DPair> out_pairs;
  std::map<Word, int> out_loops;

  auto trace = [&](int start_piece, StripEnd start_end, bool closed_mode) {
    Word word;
    int pi = start_piece;
    StripEnd cur = start_end;  // the end we entered the piece at
    End first_boundary{};
    if (!closed_mode)
      first_boundary =
          cur.kind == StripEnd::Kind::N ? End::north(cur.idx) : End::southern(cur.idx);
    while (true) {
      used[pi] = true;
      const StripPiece& piece = s.pieces[pi];
      StripEnd far = (piece.a == cur) ? piece.b : piece.a;
      if (far.kind == StripEnd::Kind::N || far.kind == StripEnd::Kind::S) {
        End fb = far.kind == StripEnd::Kind::N ? End::north(far.idx) : End::southern(far.idx);
        out_pairs.emplace_back(first_boundary, fb, word);
        return;
      }
      // wall end: hop to the paired point with the wall's blob letter
      word += far.kind == StripEnd::Kind::W ? 'L' : 'R';
      StripEnd next = partner(far);
      auto it = at.find(next);
      if (it == at.end()) throw std::logic_error("unpaired wall point " + next.to_string());
      auto [npi, is_a] = it->second;
      (void)is_a;
      if (used[npi]) {
        out_loops[canonical_loop_word(word)] += 1;  // chain closed
        return;
      }
      pi = npi;
      cur = next;
    }
  };

  for (size_t i = 0; i < s.pieces.size(); ++i) {
    if (used[i]) continue;
    StripEnd a = s.pieces[i].a, b = s.pieces[i].b;
    bool a_bdry = a.kind == StripEnd::Kind::N || a.kind == StripEnd::Kind::S;
    bool b_bdry = b.kind == StripEnd::Kind::N || b.kind == StripEnd::Kind::S;
    if (a_bdry)
      trace(static_cast<int>(i), a, false);
    else if (b_bdry)
      trace(static_cast<int>(i), b, false);
  }
  for (size_t i = 0; i < s.pieces.size(); ++i) {
    if (used[i]) continue;
    trace(static_cast<int>(i), s.pieces[i].a, true);
  }
  if (s.loops) out_loops[""] += s.loops;

  return Diagram(s.m, s.m, std::move(out_pairs), std::move(out_loops));
}

// Multiplication of left-right blob diagram elements, computed on the
// periodic side: unfold, compose there, fold back.
inline DiagramElement compose_x(const DiagramElement& a, const DiagramElement& b) {
  DiagramElement out;
  for (const auto& [da, ca] : a.terms)
    for (const auto& [db, cb] : b.terms) {
      auto [k, strip] = compose_phi(unfold_mux(da), unfold_mux(db));
      out.add(fold_nu(strip), ca * cb * k);
    }
  return out;
}

// --- the achiral algebra b' -----------------------------------------------------

// The unfolding map mu on blob diagrams; the image is the left-right
// symmetric TL picture, i.e. a strip that never touches the 1-wall.
inline Strip fold_blob_mu(const Diagram& d) {
  for (const auto& p : d.pairs)
    if (p.word.find('R') != Word::npos)
      throw std::invalid_argument("blob diagrams carry only L beads");
  return unfold_mux(d);
}

// Product of symmetric TL diagrams with the deformed scalar rule: delta
// for a mirror pair of off-axis loops, delta_e (= dL) for white and
// kappa (= kL) for black axis-crossing loops.
inline std::pair<Laurent, Strip> compose_bprime(const Strip& a, const Strip& b) {
  if (a.wall_points(StripEnd::Kind::E) || b.wall_points(StripEnd::Kind::E))
    throw std::invalid_argument("achiral diagrams do not touch the 1-wall");
  return compose_phi(a, b);
}

}  // namespace sympblob
