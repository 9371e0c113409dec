#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bridgekit/diagram.hpp"

namespace bridgekit {

class CriterionOutOfScope : public std::runtime_error {
 public:
  explicit CriterionOutOfScope(const std::string& msg) : std::runtime_error(msg) {}
};

/// One chord of a separating family, with the label of the top arc it
/// belongs to.
struct FamilyChord {
  Hemisphere hemisphere = Hemisphere::upper;
  Chord chord;
  int arc_label = 0;
};

/// The chords of one hemisphere separating gap i from gap j, ordered by
/// nesting from the gap-i side to the gap-j side. Always a nested family.
struct SeparatingFamily {
  int i = 0, j = 0;
  Hemisphere hemisphere = Hemisphere::upper;
  std::vector<FamilyChord> chords;
};

struct EdgeWitness {
  Chord chord_v, chord_w;  // an adjacent pair realizing the edge
};

struct AdjacencyGraph {
  int n = 0;  // vertices 1..n
  std::vector<std::pair<int, int>> edges;  // v < w, sorted
  std::vector<EdgeWitness> witnesses;      // parallel to edges

  bool has_edge(int v, int w) const {
    if (v > w) std::swap(v, w);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(v, w));
  }
};

/// Why a graph fails to be 2-connected: either the graph splits on its own
/// (no cut vertex involved) or deleting `cut_vertex` splits it.
struct CutWitness {
  std::optional<int> cut_vertex;
  std::vector<std::vector<int>> components;
};

struct GraphRecord {
  int i = 0, j = 0;
  Hemisphere hemisphere = Hemisphere::upper;
  AdjacencyGraph graph;
  bool two_connected = false;
  std::optional<CutWitness> witness;
};

enum class Verdict { certified_strongly_irreducible, inconclusive };

inline const char* to_string(Verdict v) {
  return v == Verdict::certified_strongly_irreducible ? "CertifiedStronglyIrreducible"
                                                      : "Inconclusive";
}

struct CriterionReport {
  int n = 0;
  Verdict verdict = Verdict::inconclusive;
  std::vector<GraphRecord> records;  // (i<j, upper then lower), lexicographic
  std::string narrative;
};

namespace detail {

// Number of boundary edges walked from position a to position b forward.
inline int arc_len(int a, int b, int m) { return ((b - a) % m + m) % m; }

// The open gap t runs from puncture 2t to puncture 2t+1 (cyclically).
struct GapSpan {
  int start;  // boundary position of puncture 2t
  int len;    // edges to puncture 2t+1
};

inline GapSpan gap_span(const ChordDiagram& d, int t) {
  int qa = 2 * t;
  int qb = (2 * t) % (2 * d.n) + 1;
  int pa = position_of_puncture(d, qa);
  int pb = position_of_puncture(d, qb);
  return {pa, arc_len(pa, pb, d.size())};
}

// Whether the open gap lies inside the open side of the chord reached by
// walking forward from `from` for `side_len` edges.
inline bool gap_inside_side(const GapSpan& gap, int from, int side_len, int m) {
  int off = arc_len(from, gap.start, m);
  return off + gap.len <= side_len;
}

}  // namespace detail

/// Whether chord c separates gap i from gap j in its hemisphere disk: one
/// open side interval contains one open gap, the other side the other gap.
/// An endpoint on a gap boundary puncture does not disqualify separation.
inline bool chord_separates(const ChordDiagram& d, const Chord& c, int i, int j) {
  const int m = d.size();
  detail::GapSpan gi = detail::gap_span(d, i);
  detail::GapSpan gj = detail::gap_span(d, j);
  int lenA = detail::arc_len(c.first, c.second, m);
  int lenB = m - lenA;
  bool iA = detail::gap_inside_side(gi, c.first, lenA, m);
  bool iB = detail::gap_inside_side(gi, c.second, lenB, m);
  bool jA = detail::gap_inside_side(gj, c.first, lenA, m);
  bool jB = detail::gap_inside_side(gj, c.second, lenB, m);
  return (iA && jB) || (iB && jA);
}

/// The family A_{i,j,eps}: all chords of the hemisphere separating the two
/// gaps, ordered by nesting from the gap-i side outward.
inline SeparatingFamily separating_family(const ChordDiagram& d, int i, int j, Hemisphere h) {
  if (d.n < 3) throw CriterionOutOfScope("separating families need bridge number at least 3");
  if (i == j || i < 1 || j < 1 || i > d.n || j > d.n)
    throw CriterionOutOfScope("gap indices must be distinct and within 1..n");

  ArcDecomposition dec = decompose_arcs(d);
  const auto& labels = h == Hemisphere::upper ? dec.label_of_upper : dec.label_of_lower;
  const int m = d.size();

  SeparatingFamily fam;
  fam.i = i;
  fam.j = j;
  fam.hemisphere = h;
  const auto& list = d.chords(h);
  for (size_t ci = 0; ci < list.size(); ++ci)
    if (chord_separates(d, list[ci], i, j))
      fam.chords.push_back({h, list[ci], labels[ci]});

  // Sort by the size of the side containing gap i: nesting order outward.
  detail::GapSpan gi = detail::gap_span(d, i);
  auto i_side_len = [&](const Chord& c) {
    int lenA = detail::arc_len(c.first, c.second, m);
    return detail::gap_inside_side(gi, c.first, lenA, m) ? lenA : m - lenA;
  };
  std::sort(fam.chords.begin(), fam.chords.end(),
            [&](const FamilyChord& a, const FamilyChord& b) {
              return i_side_len(a.chord) < i_side_len(b.chord);
            });
  return fam;
}

/// True when no third chord of the hemisphere strictly separates c from c2:
/// equivalently the two chords border a common face of the disk cut along
/// all its chords (the face route is the test oracle).
inline bool chords_adjacent(const ChordDiagram& d, Hemisphere h, const Chord& c, const Chord& c2) {
  if (c == c2) throw InternalError("chords_adjacent needs distinct chords");
  const int m = d.size();
  for (const Chord& e : d.chords(h)) {
    if (e == c || e == c2) continue;
    int lenA = detail::arc_len(e.first, e.second, m);
    auto strictly_in_A = [&](int p) {
      int off = detail::arc_len(e.first, p, m);
      return off > 0 && off < lenA;
    };
    auto strictly_in_B = [&](int p) {
      int off = detail::arc_len(e.second, p, m);
      return off > 0 && off < m - lenA;
    };
    bool c_in_A = strictly_in_A(c.first) && strictly_in_A(c.second);
    bool c_in_B = strictly_in_B(c.first) && strictly_in_B(c.second);
    bool c2_in_A = strictly_in_A(c2.first) && strictly_in_A(c2.second);
    bool c2_in_B = strictly_in_B(c2.first) && strictly_in_B(c2.second);
    if ((c_in_A && c2_in_B) || (c_in_B && c2_in_A)) return false;
  }
  return true;
}

/// The graph G_{i,j,eps}: vertices are arc labels 1..n, an edge joins v, w
/// when the family holds an adjacent chord pair with those labels.
inline AdjacencyGraph graph(const ChordDiagram& d, int i, int j, Hemisphere h) {
  SeparatingFamily fam = separating_family(d, i, j, h);
  AdjacencyGraph g;
  g.n = d.n;
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<std::pair<int, int>, EdgeWitness>> found;
  for (size_t a = 0; a < fam.chords.size(); ++a)
    for (size_t b = a + 1; b < fam.chords.size(); ++b) {
      int v = fam.chords[a].arc_label, w = fam.chords[b].arc_label;
      if (v == w) continue;
      if (v > w) std::swap(v, w);
      if (seen.count({v, w})) continue;
      if (chords_adjacent(d, h, fam.chords[a].chord, fam.chords[b].chord)) {
        seen.insert({v, w});
        found.push_back({{v, w}, {fam.chords[a].chord, fam.chords[b].chord}});
      }
    }
  std::sort(found.begin(), found.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [e, wit] : found) {
    g.edges.push_back(e);
    g.witnesses.push_back(wit);
  }
  return g;
}

namespace detail {

inline std::vector<std::vector<int>> components_without(const AdjacencyGraph& g, int removed) {
  std::vector<int> comp(g.n + 1, 0);
  int next = 0;
  for (int v = 1; v <= g.n; ++v) {
    if (v == removed || comp[v] != 0) continue;
    ++next;
    std::vector<int> stack{v};
    comp[v] = next;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& [a, b] : g.edges) {
        int other = a == u ? b : (b == u ? a : 0);
        if (other == 0 || other == removed || comp[other] != 0) continue;
        comp[other] = next;
        stack.push_back(other);
      }
    }
  }
  std::vector<std::vector<int>> out(next);
  for (int v = 1; v <= g.n; ++v)
    if (v != removed) out[comp[v] - 1].push_back(v);
  return out;
}

}  // namespace detail

/// Connected after deleting any single vertex. On failure reports a vertex
/// whose removal splits the graph, or the split of the graph itself.
inline std::pair<bool, std::optional<CutWitness>> is_two_connected(const AdjacencyGraph& g) {
  if (g.n < 3) throw CriterionOutOfScope("2-connectivity check needs at least 3 vertices");
  auto whole = detail::components_without(g, 0);
  if (whole.size() != 1) return {false, CutWitness{std::nullopt, whole}};
  for (int v = 1; v <= g.n; ++v) {
    auto parts = detail::components_without(g, v);
    if (parts.size() != 1) return {false, CutWitness{v, parts}};
  }
  return {true, std::nullopt};
}

/// Evaluates every graph G_{i,j,eps} of the diagram. Certified exactly when
/// all of them are 2-connected; the certificate implies the bridge sphere is
/// strongly irreducible and hence destabilized (bridge number at least 3).
inline CriterionReport check(const ChordDiagram& input) {
  if (input.n < 3)
    throw CriterionOutOfScope("the criterion needs bridge number at least 3, got n = " +
                              std::to_string(input.n));
  ChordDiagram d = reduce(validate(input)).first;

  CriterionReport rep;
  rep.n = d.n;
  bool all = true;
  for (int i = 1; i <= d.n; ++i)
    for (int j = i + 1; j <= d.n; ++j)
      for (Hemisphere h : {Hemisphere::upper, Hemisphere::lower}) {
        GraphRecord rec;
        rec.i = i;
        rec.j = j;
        rec.hemisphere = h;
        rec.graph = graph(d, i, j, h);
        auto [ok, wit] = is_two_connected(rec.graph);
        rec.two_connected = ok;
        rec.witness = wit;
        all = all && ok;
        rep.records.push_back(std::move(rec));
      }
  rep.verdict = all ? Verdict::certified_strongly_irreducible : Verdict::inconclusive;
  rep.narrative =
      all ? "every separating-family graph is 2-connected: the bridge sphere is "
            "strongly irreducible, hence destabilized"
          : "some separating-family graph is not 2-connected: no certificate "
            "(this does not show the sphere is stabilized)";
  return rep;
}

}  // namespace bridgekit
