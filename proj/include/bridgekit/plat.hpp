#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "bridgekit/braid.hpp"
#include "bridgekit/diagram.hpp"

namespace bridgekit {

/// The projection of the top trivial tangle: punctures 1..2n in order and
/// one upper bow over each bottom arc.
inline ChordDiagram standard_diagram(int n) {
  if (n < 1) throw IndexOutOfRange("bridge number must be at least 1");
  ChordDiagram d;
  d.n = n;
  for (int i = 1; i <= 2 * n; ++i) d.boundary.push_back(MarkedPoint::puncture(i));
  for (int i = 1; i <= n; ++i) d.upper.push_back({2 * i - 2, 2 * i - 1});
  d.arc_at_puncture.resize(2 * n);
  for (int i = 1; i <= n; ++i)
    d.arc_at_puncture[2 * i - 2] = d.arc_at_puncture[2 * i - 1] = i;
  return d;
}

namespace detail {

// The half twist about the loop segment [q_k, q_{k+1}] rewrites the chords
// meeting that segment. Chords with both endpoints on the segment reflect
// through its midpoint and change hemisphere. A chord with one endpoint on
// the segment is dragged around one end of the twist disk: it picks up one
// fresh crossing just outside the segment (before q_k or after q_{k+1},
// depending on its hemisphere and the twist sign) and continues to the
// reflected attachment point in the other hemisphere. Within each group the
// fresh crossings inherit the boundary order of their stub endpoints.
inline ChordDiagram twist_tokens(const ChordDiagram& d, int k, int sign) {
  TokenDiagram t = to_tokens(d);
  const int m = static_cast<int>(t.boundary.size());

  // Work with the boundary rotated to start at puncture 1 so that the
  // segment [q_k, q_{k+1}] is a contiguous index range.
  {
    int start = 0;
    while (t.boundary[start] != 1) ++start;
    std::rotate(t.boundary.begin(), t.boundary.begin() + start, t.boundary.end());
  }
  int pa = 0, pb = 0;
  for (int p = 0; p < m; ++p) {
    if (t.boundary[p] == k) pa = p;
    if (t.boundary[p] == k + 1) pb = p;
  }

  auto in_segment = [&](int p) { return p >= pa && p <= pb; };
  // Chord endpoints at a swapped puncture reattach at the other slot.
  auto sigma = [&](int tok) {
    if (tok == k) return k + 1;
    if (tok == k + 1) return k;
    return tok;
  };
  auto position = [&](int tok) {
    for (int p = 0; p < m; ++p)
      if (t.boundary[p] == tok) return p;
    throw InternalError("token not found");
  };

  int next_id = 1;
  for (int tok : t.boundary)
    if (tok < 0) next_id = std::max(next_id, -tok + 1);

  struct Stub {
    int r;      // boundary position of the segment endpoint
    int token;  // fresh crossing token
  };
  std::vector<Stub> left_group, right_group;
  std::vector<std::pair<int, int>> new_upper, new_lower;
  auto out = [&](Hemisphere h) -> std::vector<std::pair<int, int>>& {
    return h == Hemisphere::upper ? new_upper : new_lower;
  };

  for (Hemisphere h : {Hemisphere::upper, Hemisphere::lower}) {
    for (const auto& c : t.chords(h)) {
      int pu = position(c.first), pv = position(c.second);
      bool iu = in_segment(pu), iv = in_segment(pv);
      if (iu && iv) {
        out(opposite(h)).emplace_back(sigma(c.first), sigma(c.second));
      } else if (iu || iv) {
        int inside_tok = iu ? c.first : c.second;
        int outside_tok = iu ? c.second : c.first;
        int r = iu ? pu : pv;
        int x = -(next_id++);
        bool left = (h == Hemisphere::upper) == (sign > 0);
        (left ? left_group : right_group).push_back({r, x});
        out(h).emplace_back(x, outside_tok);
        out(opposite(h)).emplace_back(x, sigma(inside_tok));
      } else {
        out(h).push_back(c);
      }
    }
  }

  auto by_r = [](const Stub& a, const Stub& b) { return a.r < b.r; };
  std::sort(left_group.begin(), left_group.end(), by_r);
  std::sort(right_group.begin(), right_group.end(), by_r);

  std::vector<int> nb;
  nb.reserve(m + left_group.size() + right_group.size());
  for (int p = 0; p < pa; ++p) nb.push_back(t.boundary[p]);
  for (const Stub& s : left_group) nb.push_back(s.token);
  nb.push_back(k);
  for (int p = pb - 1; p > pa; --p) nb.push_back(t.boundary[p]);
  nb.push_back(k + 1);
  for (const Stub& s : right_group) nb.push_back(s.token);
  for (int p = pb + 1; p < m; ++p) nb.push_back(t.boundary[p]);

  TokenDiagram nt;
  nt.n = t.n;
  nt.boundary = std::move(nb);
  nt.upper = std::move(new_upper);
  nt.lower = std::move(new_lower);
  nt.arc_at_puncture = t.arc_at_puncture;
  std::swap(nt.arc_at_puncture[k - 1], nt.arc_at_puncture[k]);
  return from_tokens(nt);
}

}  // namespace detail

/// Applies the braid half twist s_k^sign as a mapping class of the punctured
/// sphere (positive sign: q_k sweeps through the lower hemisphere, q_{k+1}
/// through the upper). Returns the canonical form of the image arc system.
inline ChordDiagram apply_generator(const ChordDiagram& d, int k, int sign) {
  if (k < 1 || k > 2 * d.n - 1)
    throw IndexOutOfRange("generator s_" + std::to_string(k) + " out of range for " +
                          std::to_string(2 * d.n) + " strands");
  if (sign != 1 && sign != -1) throw IndexOutOfRange("twist sign must be +1 or -1");
  ChordDiagram image = detail::twist_tokens(d, k, sign);
  image = validate(std::move(image));  // internal consistency gate
  ChordDiagram result = canonical_form(image);
  result.arc_at_puncture = image.arc_at_puncture;
  return result;
}

/// Applies a braid word letter by letter, top to bottom.
inline ChordDiagram apply_word(ChordDiagram d, const BraidWord& w) {
  if (w.strand_count > 2 * d.n)
    throw IndexOutOfRange("word needs " + std::to_string(w.strand_count) + " strands, diagram has " +
                          std::to_string(2 * d.n));
  for (const BraidLetter& l : w.letters) d = apply_generator(d, l.index, l.sign);
  return d;
}

/// The bridge diagram of the plat closure: the top bows pushed down through
/// the braid onto the sphere above the bottom bows.
inline ChordDiagram plat_closure(const PlatPresentation& p) {
  if (p.word.strand_count != 2 * p.n && !p.word.letters.empty())
    throw IndexOutOfRange("plat word strand count must equal 2n");
  return apply_word(standard_diagram(p.n), p.word);
}

/// Undoes one elementary stabilization when the pattern is visible: some top
/// arc is a single chord whose endpoints are exactly the two punctures of a
/// gap, with nothing between them on the gap side. The two bottom arcs next
/// to that gap merge with the chord into one bottom arc. The pattern is
/// sufficient, not necessary.
inline std::optional<ChordDiagram> destabilize(const ChordDiagram& d) {
  if (d.n < 2) throw IndexOutOfRange("destabilize needs bridge number at least 2");
  const int m = d.size();

  for (int j = 1; j <= d.n; ++j) {
    int qa = 2 * j;                    // gap runs from q_{2j} ...
    int qb = (2 * j) % (2 * d.n) + 1;  // ... to q_{2j+1}, cyclically
    int pa = position_of_puncture(d, qa);
    int pb = position_of_puncture(d, qb);
    if ((pa + 1) % m != pb) continue;  // gap side must carry no marked point
    Chord want = make_chord(pa, pb);
    bool found = false;
    for (Hemisphere h : {Hemisphere::upper, Hemisphere::lower}) {
      const auto& list = d.chords(h);
      if (std::find(list.begin(), list.end(), want) != list.end()) found = true;
    }
    if (!found) continue;

    detail::TokenDiagram t = detail::to_tokens(d);
    for (Hemisphere h : {Hemisphere::upper, Hemisphere::lower}) {
      auto& list = t.chords(h);
      for (auto it = list.begin(); it != list.end(); ++it)
        if ((it->first == qa && it->second == qb) || (it->first == qb && it->second == qa)) {
          list.erase(it);
          break;
        }
    }
    t.boundary.erase(std::find(t.boundary.begin(), t.boundary.end(), qa));
    t.boundary.erase(std::find(t.boundary.begin(), t.boundary.end(), qb));

    // Renumber the surviving punctures so the merged interval becomes a
    // bottom arc again. For j < n indices simply close up; for j = n the
    // numbering restarts at the old q_{2n-1}.
    auto renumber = [&](int tok) {
      if (tok < 0) return tok;
      if (j < d.n) return tok > qa ? tok - 2 : tok;
      return tok == 2 * d.n - 1 ? 1 : tok;
    };
    for (int& tok : t.boundary) tok = renumber(tok);
    for (Hemisphere h : {Hemisphere::upper, Hemisphere::lower})
      for (auto& c : t.chords(h)) c = {renumber(c.first), renumber(c.second)};
    t.n = d.n - 1;
    t.arc_at_puncture.clear();  // labels reassigned by the standalone rule

    ChordDiagram nd = validate(detail::from_tokens(t));
    ChordDiagram result = canonical_form(nd);
    result.arc_at_puncture = nd.arc_at_puncture;
    return result;
  }
  return std::nullopt;
}

}  // namespace bridgekit
