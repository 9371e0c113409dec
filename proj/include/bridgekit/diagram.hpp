#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bridgekit {

enum class Hemisphere { upper, lower };

inline Hemisphere opposite(Hemisphere h) {
  return h == Hemisphere::upper ? Hemisphere::lower : Hemisphere::upper;
}

inline const char* to_string(Hemisphere h) {
  return h == Hemisphere::upper ? "upper" : "lower";
}

/// A marked point on the reference loop: either a puncture (index 1..2n,
/// listed in cyclic order) or a transverse crossing of the top arc system
/// with the loop (unique positive id).
struct MarkedPoint {
  enum class Kind { puncture, crossing };
  Kind kind = Kind::puncture;
  int value = 0;

  static MarkedPoint puncture(int index) { return {Kind::puncture, index}; }
  static MarkedPoint crossing(int id) { return {Kind::crossing, id}; }

  bool is_puncture() const { return kind == Kind::puncture; }
  bool is_crossing() const { return kind == Kind::crossing; }

  friend bool operator==(const MarkedPoint& a, const MarkedPoint& b) {
    return a.kind == b.kind && a.value == b.value;
  }
  friend bool operator!=(const MarkedPoint& a, const MarkedPoint& b) { return !(a == b); }
};

/// A chord of one hemisphere disk, as a pair of boundary positions.
/// Stored normalized with first < second.
using Chord = std::pair<int, int>;

inline Chord make_chord(int a, int b) { return a < b ? Chord{a, b} : Chord{b, a}; }

/// Combinatorial bridge diagram: the bottom arcs are the intervals
/// [q_{2i-1}, q_{2i}] of the loop, the top arcs are encoded by the
/// non-crossing chords they cut on the two hemisphere disks.
struct ChordDiagram {
  int n = 0;
  std::vector<MarkedPoint> boundary;
  std::vector<Chord> upper;
  std::vector<Chord> lower;
  /// arc_at_puncture[i-1] = label (1..n) of the top arc ending at puncture i.
  std::vector<int> arc_at_puncture;

  int size() const { return static_cast<int>(boundary.size()); }
  int crossing_count() const { return size() - 2 * n; }

  const std::vector<Chord>& chords(Hemisphere h) const {
    return h == Hemisphere::upper ? upper : lower;
  }
  std::vector<Chord>& chords(Hemisphere h) {
    return h == Hemisphere::upper ? upper : lower;
  }

  friend bool operator==(const ChordDiagram& a, const ChordDiagram& b) {
    return a.n == b.n && a.boundary == b.boundary && a.upper == b.upper && a.lower == b.lower;
  }
  friend bool operator!=(const ChordDiagram& a, const ChordDiagram& b) { return !(a == b); }
};

enum class ValidationFault {
  malformed_incidence,
  crossing_chords,
  closed_component,
  bad_puncture_order,
  duplicate_id,
};

inline const char* to_string(ValidationFault f) {
  switch (f) {
    case ValidationFault::malformed_incidence: return "MalformedIncidence";
    case ValidationFault::crossing_chords: return "CrossingChords";
    case ValidationFault::closed_component: return "ClosedComponent";
    case ValidationFault::bad_puncture_order: return "BadPunctureOrder";
    case ValidationFault::duplicate_id: return "DuplicateId";
  }
  return "?";
}

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationFault fault, const std::string& msg)
      : std::runtime_error(std::string(to_string(fault)) + ": " + msg), fault_(fault) {}
  ValidationFault fault() const { return fault_; }

 private:
  ValidationFault fault_;
};

/// Raised when an operation produces data that breaks its own contract.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

namespace detail {

inline void require(bool cond, ValidationFault f, const std::string& msg) {
  if (!cond) throw ValidationError(f, msg);
}

}  // namespace detail

/// Position of puncture `index` in the boundary list.
inline int position_of_puncture(const ChordDiagram& d, int index) {
  for (int p = 0; p < d.size(); ++p)
    if (d.boundary[p].is_puncture() && d.boundary[p].value == index) return p;
  throw InternalError("puncture " + std::to_string(index) + " not on boundary");
}

/// One top arc: its ordered chords and endpoint punctures.
struct Arc {
  int label = 0;
  int puncture_a = 0;  // endpoint puncture indices, puncture_a < puncture_b
  int puncture_b = 0;
  std::vector<std::pair<Hemisphere, Chord>> chords;
};

struct ArcDecomposition {
  std::vector<Arc> arcs;            // indexed by label - 1
  std::vector<int> label_of_upper;  // per chord index in d.upper
  std::vector<int> label_of_lower;
};

namespace detail {

// Per-position chord incidence: index into upper/lower or -1.
struct Incidence {
  std::vector<int> up, lo;
  Incidence(const ChordDiagram& d) : up(d.boundary.size(), -1), lo(d.boundary.size(), -1) {
    for (size_t c = 0; c < d.upper.size(); ++c) {
      check_set(up, d.upper[c].first, static_cast<int>(c));
      check_set(up, d.upper[c].second, static_cast<int>(c));
    }
    for (size_t c = 0; c < d.lower.size(); ++c) {
      check_set(lo, d.lower[c].first, static_cast<int>(c));
      check_set(lo, d.lower[c].second, static_cast<int>(c));
    }
  }
  static void check_set(std::vector<int>& v, int pos, int c) {
    require(pos >= 0 && pos < static_cast<int>(v.size()), ValidationFault::malformed_incidence,
            "chord endpoint position " + std::to_string(pos) + " out of range");
    require(v[pos] == -1, ValidationFault::malformed_incidence,
            "two chords of one hemisphere meet position " + std::to_string(pos));
    v[pos] = c;
  }
};

}  // namespace detail

/// Splits the chord set into the n open arc paths. Assumes the diagram has
/// already passed the incidence and non-crossing checks.
inline ArcDecomposition decompose_arcs(const ChordDiagram& d) {
  detail::Incidence inc(d);
  const int m = d.size();
  ArcDecomposition out;
  out.label_of_upper.assign(d.upper.size(), 0);
  out.label_of_lower.assign(d.lower.size(), 0);

  std::vector<bool> seen_up(d.upper.size(), false), seen_lo(d.lower.size(), false);
  std::vector<Arc> arcs;
  for (int p = 0; p < m; ++p) {
    if (!d.boundary[p].is_puncture()) continue;
    Hemisphere h = inc.up[p] >= 0 ? Hemisphere::upper : Hemisphere::lower;
    int ci = h == Hemisphere::upper ? inc.up[p] : inc.lo[p];
    detail::require(ci >= 0, ValidationFault::malformed_incidence,
                    "puncture " + std::to_string(d.boundary[p].value) + " has no chord");
    auto& seen = h == Hemisphere::upper ? seen_up : seen_lo;
    if (seen[ci]) continue;  // arc already traced from its other end

    Arc arc;
    arc.puncture_a = d.boundary[p].value;
    int pos = p;
    while (true) {
      const Chord& c = d.chords(h)[ci];
      (h == Hemisphere::upper ? seen_up : seen_lo)[ci] = true;
      arc.chords.emplace_back(h, c);
      pos = (c.first == pos) ? c.second : c.first;
      if (d.boundary[pos].is_puncture()) {
        arc.puncture_b = d.boundary[pos].value;
        break;
      }
      h = opposite(h);
      ci = h == Hemisphere::upper ? inc.up[pos] : inc.lo[pos];
      detail::require(ci >= 0, ValidationFault::malformed_incidence,
                      "crossing missing a chord in one hemisphere");
    }
    if (arc.puncture_a > arc.puncture_b) std::swap(arc.puncture_a, arc.puncture_b);
    arcs.push_back(std::move(arc));
  }

  for (bool s : seen_up)
    detail::require(s, ValidationFault::closed_component, "chord cycle through crossings only");
  for (bool s : seen_lo)
    detail::require(s, ValidationFault::closed_component, "chord cycle through crossings only");

  // Standalone labeling rule: arcs ordered by their smallest puncture index.
  std::sort(arcs.begin(), arcs.end(),
            [](const Arc& a, const Arc& b) { return a.puncture_a < b.puncture_a; });
  for (size_t i = 0; i < arcs.size(); ++i) arcs[i].label = static_cast<int>(i) + 1;

  // Respect labels already carried by the diagram (plat outputs).
  if (static_cast<int>(d.arc_at_puncture.size()) == 2 * d.n) {
    for (Arc& a : arcs) a.label = d.arc_at_puncture[a.puncture_a - 1];
  }

  for (const Arc& a : arcs) {
    for (const auto& [h, c] : a.chords) {
      const auto& list = d.chords(h);
      int ci = static_cast<int>(std::find(list.begin(), list.end(), c) - list.begin());
      (h == Hemisphere::upper ? out.label_of_upper : out.label_of_lower)[ci] = a.label;
    }
  }
  out.arcs.resize(arcs.size());
  for (Arc& a : arcs) {
    detail::require(a.label >= 1 && a.label <= d.n && out.arcs[a.label - 1].label == 0,
                    ValidationFault::malformed_incidence, "arc labels are not a bijection");
    out.arcs[a.label - 1] = std::move(a);
  }
  return out;
}

/// Checks every structural invariant. Returns the diagram with arc labels
/// filled in (kept if already present and consistent).
inline ChordDiagram validate(ChordDiagram d) {
  using detail::require;
  require(d.n >= 1, ValidationFault::bad_puncture_order, "bridge number must be positive");
  const int m = d.size();

  // Marked-point multiset: punctures exactly 1..2n, crossing ids unique.
  std::vector<int> punct_count(2 * d.n + 1, 0);
  std::vector<int> cross_ids;
  for (const MarkedPoint& mp : d.boundary) {
    if (mp.is_puncture()) {
      require(mp.value >= 1 && mp.value <= 2 * d.n, ValidationFault::bad_puncture_order,
              "puncture index " + std::to_string(mp.value) + " out of range");
      require(++punct_count[mp.value] == 1, ValidationFault::duplicate_id,
              "puncture " + std::to_string(mp.value) + " listed twice");
    } else {
      require(mp.value >= 1, ValidationFault::duplicate_id, "crossing ids must be positive");
      cross_ids.push_back(mp.value);
    }
  }
  for (int i = 1; i <= 2 * d.n; ++i)
    require(punct_count[i] == 1, ValidationFault::bad_puncture_order,
            "puncture " + std::to_string(i) + " missing");
  std::sort(cross_ids.begin(), cross_ids.end());
  require(std::adjacent_find(cross_ids.begin(), cross_ids.end()) == cross_ids.end(),
          ValidationFault::duplicate_id, "crossing id repeated");

  // Punctures occur in cyclic index order.
  {
    std::vector<int> order;
    for (const MarkedPoint& mp : d.boundary)
      if (mp.is_puncture()) order.push_back(mp.value);
    int start = static_cast<int>(std::find(order.begin(), order.end(), 1) - order.begin());
    for (int i = 0; i < 2 * d.n; ++i)
      require(order[(start + i) % (2 * d.n)] == i + 1, ValidationFault::bad_puncture_order,
              "punctures out of cyclic order");
  }

  // Normalize chords and check shapes.
  for (Hemisphere h : {Hemisphere::upper, Hemisphere::lower}) {
    for (Chord& c : d.chords(h)) {
      require(c.first != c.second, ValidationFault::malformed_incidence, "chord with equal ends");
      c = make_chord(c.first, c.second);
    }
    std::sort(d.chords(h).begin(), d.chords(h).end());
  }

  // Incidence counts per marked point.
  detail::Incidence inc(d);
  for (int p = 0; p < m; ++p) {
    int deg = (inc.up[p] >= 0 ? 1 : 0) + (inc.lo[p] >= 0 ? 1 : 0);
    if (d.boundary[p].is_puncture())
      require(deg == 1, ValidationFault::malformed_incidence,
              "puncture " + std::to_string(d.boundary[p].value) + " has chord degree " +
                  std::to_string(deg));
    else
      require(inc.up[p] >= 0 && inc.lo[p] >= 0, ValidationFault::malformed_incidence,
              "crossing " + std::to_string(d.boundary[p].value) +
                  " must end one upper and one lower chord");
  }

  // Non-crossing within each hemisphere (balanced-bracket scan).
  for (Hemisphere h : {Hemisphere::upper, Hemisphere::lower}) {
    std::vector<int> open_at(m, -1), close_at(m, -1);
    const auto& list = d.chords(h);
    for (size_t c = 0; c < list.size(); ++c) {
      open_at[list[c].first] = static_cast<int>(c);
      close_at[list[c].second] = static_cast<int>(c);
    }
    std::vector<int> stack;
    for (int p = 0; p < m; ++p) {
      if (close_at[p] >= 0) {
        require(!stack.empty() && stack.back() == close_at[p], ValidationFault::crossing_chords,
                "interleaved chords in " + std::string(to_string(h)) + " hemisphere");
        stack.pop_back();
      }
      if (open_at[p] >= 0) stack.push_back(open_at[p]);
    }
  }

  // Path decomposition (throws on cycles) and label assignment.
  ArcDecomposition dec = decompose_arcs(d);
  d.arc_at_puncture.assign(2 * d.n, 0);
  for (const Arc& a : dec.arcs) {
    d.arc_at_puncture[a.puncture_a - 1] = a.label;
    d.arc_at_puncture[a.puncture_b - 1] = a.label;
  }
  return d;
}

// ---------------------------------------------------------------------------
// Token form: a stable identity per marked point, used while editing the
// boundary. Punctures are +index, crossings are -id.

namespace detail {

inline int token_of(const MarkedPoint& mp) {
  return mp.is_puncture() ? mp.value : -mp.value;
}

inline MarkedPoint point_of(int token) {
  return token > 0 ? MarkedPoint::puncture(token) : MarkedPoint::crossing(-token);
}

struct TokenDiagram {
  int n = 0;
  std::vector<int> boundary;
  std::vector<std::pair<int, int>> upper, lower;
  std::vector<int> arc_at_puncture;

  std::vector<std::pair<int, int>>& chords(Hemisphere h) {
    return h == Hemisphere::upper ? upper : lower;
  }
};

inline TokenDiagram to_tokens(const ChordDiagram& d) {
  TokenDiagram t;
  t.n = d.n;
  t.arc_at_puncture = d.arc_at_puncture;
  t.boundary.reserve(d.boundary.size());
  for (const MarkedPoint& mp : d.boundary) t.boundary.push_back(token_of(mp));
  auto conv = [&](const std::vector<Chord>& in, std::vector<std::pair<int, int>>& out) {
    for (const Chord& c : in)
      out.emplace_back(t.boundary[c.first], t.boundary[c.second]);
  };
  conv(d.upper, t.upper);
  conv(d.lower, t.lower);
  return t;
}

inline ChordDiagram from_tokens(const TokenDiagram& t) {
  ChordDiagram d;
  d.n = t.n;
  d.arc_at_puncture = t.arc_at_puncture;
  std::vector<int> pos;  // token -> position, via a map over the boundary
  d.boundary.reserve(t.boundary.size());
  for (int tok : t.boundary) d.boundary.push_back(point_of(tok));
  auto position = [&](int tok) {
    for (int p = 0; p < static_cast<int>(t.boundary.size()); ++p)
      if (t.boundary[p] == tok) return p;
    throw InternalError("dangling chord token");
  };
  auto conv = [&](const std::vector<std::pair<int, int>>& in, std::vector<Chord>& out) {
    for (const auto& c : in) out.push_back(make_chord(position(c.first), position(c.second)));
    std::sort(out.begin(), out.end());
  };
  conv(t.upper, d.upper);
  conv(t.lower, d.lower);
  return d;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Reduction to taut position.

struct ReductionMove {
  enum class Kind { bigon, end_bigon };
  Kind kind = Kind::bigon;
  Hemisphere hemisphere = Hemisphere::upper;  // hemisphere of the removed chord
  int crossing_a = 0;                         // removed crossing id(s)
  int crossing_b = 0;                         // bigon only
  int puncture = 0;                           // end-bigon only
};

struct ReductionTrace {
  int initial_crossings = 0;
  int final_crossings = 0;
  std::vector<ReductionMove> moves;
};

namespace detail {

struct MoveSite {
  ReductionMove::Kind kind;
  Hemisphere h;
  Chord chord;  // positions
};

// A chord is removable when its endpoints are cyclically adjacent, i.e. one
// of its two side intervals carries no marked point, and at least one
// endpoint is a crossing.
inline std::vector<MoveSite> find_moves(const ChordDiagram& d) {
  std::vector<MoveSite> bigons, ends;
  const int m = d.size();
  for (Hemisphere h : {Hemisphere::upper, Hemisphere::lower}) {
    for (const Chord& c : d.chords(h)) {
      bool adjacent = (c.second == c.first + 1) || (c.first == 0 && c.second == m - 1);
      if (!adjacent) continue;
      const MarkedPoint& a = d.boundary[c.first];
      const MarkedPoint& b = d.boundary[c.second];
      if (a.is_crossing() && b.is_crossing())
        bigons.push_back({ReductionMove::Kind::bigon, h, c});
      else if (a.is_crossing() || b.is_crossing())
        ends.push_back({ReductionMove::Kind::end_bigon, h, c});
    }
  }
  bigons.insert(bigons.end(), ends.begin(), ends.end());
  return bigons;
}

inline ChordDiagram apply_move(const ChordDiagram& d, const MoveSite& site, ReductionMove& rec) {
  TokenDiagram t = to_tokens(d);
  const int ta = t.boundary[site.chord.first];
  const int tb = t.boundary[site.chord.second];
  Hemisphere h = site.h;
  Hemisphere g = opposite(h);

  auto& hs = t.chords(h);
  auto& gs = t.chords(g);
  auto erase_chord = [](std::vector<std::pair<int, int>>& v, int x, int y) {
    for (auto it = v.begin(); it != v.end(); ++it)
      if ((it->first == x && it->second == y) || (it->first == y && it->second == x)) {
        v.erase(it);
        return;
      }
    throw InternalError("chord to erase not found");
  };
  auto other_end_in = [](std::vector<std::pair<int, int>>& v, int x) {
    for (const auto& c : v)
      if (c.first == x || c.second == x) return c.first == x ? c.second : c.first;
    throw InternalError("expected opposite-hemisphere chord at crossing");
  };
  auto erase_token = [&](int tok) {
    t.boundary.erase(std::find(t.boundary.begin(), t.boundary.end(), tok));
  };

  erase_chord(hs, ta, tb);
  rec.hemisphere = h;
  if (site.kind == ReductionMove::Kind::bigon) {
    int a2 = other_end_in(gs, ta);
    int b2 = other_end_in(gs, tb);
    erase_chord(gs, ta, a2);
    erase_chord(gs, tb, b2);
    gs.emplace_back(a2, b2);
    erase_token(ta);
    erase_token(tb);
    rec.kind = ReductionMove::Kind::bigon;
    rec.crossing_a = -ta;
    rec.crossing_b = -tb;
  } else {
    int tq = ta > 0 ? ta : tb;  // puncture token
    int tx = ta > 0 ? tb : ta;  // crossing token
    int b2 = other_end_in(gs, tx);
    erase_chord(gs, tx, b2);
    gs.emplace_back(tq, b2);
    erase_token(tx);
    rec.kind = ReductionMove::Kind::end_bigon;
    rec.crossing_a = -tx;
    rec.puncture = tq;
  }
  return from_tokens(t);
}

inline std::pair<ChordDiagram, ReductionTrace> reduce_with_picker(
    ChordDiagram d, const std::function<size_t(size_t)>& pick) {
  ReductionTrace trace;
  trace.initial_crossings = d.crossing_count();
  while (true) {
    auto sites = find_moves(d);
    if (sites.empty()) break;
    const MoveSite& site = sites[pick(sites.size())];
    ReductionMove rec;
    d = apply_move(d, site, rec);
    trace.moves.push_back(rec);
  }
  trace.final_crossings = d.crossing_count();
  return {std::move(d), std::move(trace)};
}

}  // namespace detail

/// Eliminates bigons and end bigons until the diagram is taut.
/// Move order is deterministic; the crossing count of the result does not
/// depend on it (checked by the confluence suite).
inline std::pair<ChordDiagram, ReductionTrace> reduce(const ChordDiagram& d) {
  return detail::reduce_with_picker(d, [](size_t) { return size_t{0}; });
}

/// Reduction with a caller-chosen move picker; used by the confluence tests.
inline std::pair<ChordDiagram, ReductionTrace> reduce_randomized(
    const ChordDiagram& d, const std::function<size_t(size_t)>& pick) {
  return detail::reduce_with_picker(d, pick);
}

/// Exchanges the two hemispheres.
inline ChordDiagram mirror(ChordDiagram d) {
  std::swap(d.upper, d.lower);
  return d;
}

/// Reduces, flips every free chord (one side interval empty) to the upper
/// hemisphere, renumbers crossings along the boundary and rotates the
/// boundary to start at puncture 1. Two diagrams encode isotopic top arc
/// systems exactly when their canonical forms are equal.
inline ChordDiagram canonical_form(const ChordDiagram& d) {
  ChordDiagram r = reduce(d).first;
  const int m = r.size();

  // Free chords join cyclically adjacent marked points; after reduction both
  // endpoints are punctures. Flip the lower ones up.
  {
    std::vector<Chord> keep;
    for (const Chord& c : r.lower) {
      bool adjacent = (c.second == c.first + 1) || (c.first == 0 && c.second == m - 1);
      if (adjacent)
        r.upper.push_back(c);
      else
        keep.push_back(c);
    }
    r.lower = std::move(keep);
  }

  // Rotate boundary to start at puncture 1 and renumber crossings in order.
  detail::TokenDiagram t = detail::to_tokens(r);
  int start = position_of_puncture(r, 1);
  std::rotate(t.boundary.begin(), t.boundary.begin() + start, t.boundary.end());
  std::vector<std::pair<int, int>> renames;  // old token -> new token
  int next_id = 1;
  for (int& tok : t.boundary)
    if (tok < 0) {
      renames.emplace_back(tok, -(next_id++));
      tok = renames.back().second;
    }
  auto rename = [&](int tok) {
    if (tok > 0) return tok;
    for (const auto& [from, to] : renames)
      if (from == tok) return to;
    throw InternalError("unknown crossing token");
  };
  for (Hemisphere h : {Hemisphere::upper, Hemisphere::lower})
    for (auto& c : t.chords(h)) c = {rename(c.first), rename(c.second)};
  return detail::from_tokens(t);
}

/// Canonical form rendered as a compact string key (for sets and test maps).
inline std::string canonical_key(const ChordDiagram& canonical) {
  std::ostringstream os;
  os << canonical.n << ';';
  for (const MarkedPoint& mp : canonical.boundary)
    os << (mp.is_puncture() ? 'p' : 'x') << mp.value << ',';
  os << ';';
  for (const Chord& c : canonical.upper) os << c.first << '-' << c.second << ',';
  os << ';';
  for (const Chord& c : canonical.lower) os << c.first << '-' << c.second << ',';
  return os.str();
}

}  // namespace bridgekit
