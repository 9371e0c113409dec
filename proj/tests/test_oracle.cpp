#include <catch2/catch_amalgamated.hpp>

#include "bridgekit/criterion.hpp"
#include "bridgekit/diagram.hpp"
#include "bridgekit/plat.hpp"
#include "oracle/faces.hpp"
#include "oracle/pl_twist.hpp"
#include "support/generators.hpp"

using namespace bridgekit;
using oracle::PLArcSystem;
using oracle::Pt;
using oracle::Q;
using testsupport::Rng;

namespace {

Q tri_area2(const std::array<Pt, 3>& t) {
  return oracle::cross(t[1] - t[0], t[2] - t[0]);
}

// Whether segment [p,q] meets the open L-infinity ball of radius r about c.
bool segment_meets_open_box(Pt p, Pt q, const Pt& c, const Q& r) {
  // Liang-Barsky style clipping with exact rationals.
  Q t0 = 0, t1 = 1;
  Pt d = q - p;
  auto clip = [&](const Q& den, const Q& num) {
    // den * t < num required for strict interior
    if (den == 0) return num > 0;
    Q t = num / den;
    if (den > 0) {
      if (t <= t0) return false;
      t1 = std::min(t1, t);
    } else {
      if (t >= t1) return false;
      t0 = std::max(t0, t);
    }
    return t0 < t1;
  };
  // interior: c.x - r < x < c.x + r and same for y
  return clip(d.x, c.x + r - p.x) && clip(-d.x, p.x - (c.x - r)) &&
         clip(d.y, c.y + r - p.y) && clip(-d.y, p.y - (c.y - r));
}

}  // namespace

TEST_CASE("twist cell complex: orientations, areas, ring containment") {
  oracle::detail::TwistMap tm(2);
  REQUIRE(tm.tris.size() == 64);

  // Every source/image triangle positively oriented.
  for (const auto& t : tm.tris) {
    CHECK(tri_area2(t.src) > 0);
    CHECK(tri_area2(t.img) > 0);
  }

  // Per ring, source and image triangles each tile the ring area exactly.
  for (int j = 1; j <= 4; ++j) {
    Q rin = tm.radii[j - 1], rout = tm.radii[j];
    Q ring_area2 = 2 * (4 * rout * rout - 4 * rin * rin);
    Q src_sum = 0, img_sum = 0;
    for (int t = (j - 1) * 16; t < j * 16; ++t) {
      src_sum += tri_area2(tm.tris[t].src);
      img_sum += tri_area2(tm.tris[t].img);
    }
    CHECK(src_sum == ring_area2);
    CHECK(img_sum == ring_area2);

    // No triangle edge dips into the open inner square of its ring.
    for (int t = (j - 1) * 16; t < j * 16; ++t)
      for (const auto& tri : {tm.tris[t].src, tm.tris[t].img})
        for (int e = 0; e < 3; ++e)
          CHECK_FALSE(segment_meets_open_box(tri[e], tri[(e + 1) % 3], tm.center, rin));
  }

  // Boundary consistency: inner square vertices reflect, outer stay fixed.
  for (int probe = 0; probe < 8; ++probe) {
    Pt on_inner{tm.center.x + tm.radii[0], tm.center.y};
    CHECK(tm.apply(on_inner) == tm.reflect(on_inner));
    Pt on_outer{tm.center.x + tm.radii[4], tm.center.y};
    CHECK(tm.apply(on_outer) == on_outer);
  }
}

TEST_CASE("extract reads the straight system back") {
  for (int n : {1, 2, 4}) {
    ChordDiagram d = oracle::extract(oracle::standard_system(n));
    CHECK(d == standard_diagram(n));
    CHECK(d.arc_at_puncture == standard_diagram(n).arc_at_puncture);
  }
}

TEST_CASE("extract is insensitive to small perturbation of interior vertices") {
  PLArcSystem sys = oracle::standard_system(2);
  PLArcSystem wiggled = sys;
  wiggled.arcs[0][1] = wiggled.arcs[0][1] + Pt{Q(1, 1000), Q(1, 997)};
  wiggled.arcs[1][2] = wiggled.arcs[1][2] + Pt{Q(-1, 1013), Q(1, 991)};
  CHECK(oracle::extract(sys) == oracle::extract(wiggled));
}

TEST_CASE("pl twist followed by its inverse is the identity on canonical forms") {
  Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    int n = testsupport::rand_int(rng, 1, 3);
    PLArcSystem sys = oracle::pl_apply_word(oracle::standard_system(n),
                                            testsupport::rand_word(rng, 2 * n, 3));
    int k = testsupport::rand_int(rng, 1, 2 * n - 1);
    int s = testsupport::rand_int(rng, 0, 1) ? 1 : -1;
    PLArcSystem roundtrip = oracle::pl_twist(oracle::pl_twist(sys, k, s), k, -s);
    CHECK(oracle::extract(roundtrip) == oracle::extract(sys));
  }
}

TEST_CASE("oracle confirms the s_2 image of the standard 2-bridge diagram") {
  PLArcSystem sys = oracle::pl_twist(oracle::standard_system(2), 2, 1);
  REQUIRE(oracle::embedded(sys));
  ChordDiagram d = oracle::extract(sys);
  CHECK(d == apply_generator(standard_diagram(2), 2, 1));
  CHECK(d.crossing_count() == 0);
}

TEST_CASE("embeddedness is preserved along random words") {
  Rng rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    int n = testsupport::rand_int(rng, 1, 3);
    PLArcSystem sys = oracle::pl_apply_word(oracle::standard_system(n),
                                            testsupport::rand_word(rng, 2 * n, 4));
    REQUIRE(oracle::embedded(sys));
  }
}

TEST_CASE("engine and oracle agree on random plat closures") {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    int n = testsupport::rand_int(rng, 2, 3);
    BraidWord w = testsupport::rand_word(rng, 2 * n, 5);
    ChordDiagram engine = plat_closure({n, w});
    ChordDiagram orac = oracle::extract(oracle::pl_apply_word(oracle::standard_system(n), w));
    REQUIRE(engine == orac);
    REQUIRE(engine.arc_at_puncture == orac.arc_at_puncture);
  }
}

TEST_CASE("face enumeration basics") {
  ChordDiagram d = validate(standard_diagram(3));
  CHECK(oracle::faces_brute(d, Hemisphere::lower).size() == 1);
  CHECK(oracle::faces_brute(d, Hemisphere::upper).size() == 4);

  // face count = chord count + 1 on a diagram with crossings
  ChordDiagram r = plat_closure({2, parse_braid("1 2 1", 4)});
  for (Hemisphere h : {Hemisphere::upper, Hemisphere::lower})
    CHECK(oracle::faces_brute(r, h).size() == r.chords(h).size() + 1);
}

TEST_CASE("no-separator adjacency equals shared-face adjacency") {
  Rng rng(43);
  for (int trial = 0; trial < 120; ++trial) {
    ChordDiagram d = testsupport::rand_reduced_diagram(rng, 2, 4, 8);
    for (Hemisphere h : {Hemisphere::upper, Hemisphere::lower}) {
      auto adj = oracle::face_adjacency(d, h);
      const auto& list = d.chords(h);
      for (size_t a = 0; a < list.size(); ++a)
        for (size_t b = a + 1; b < list.size(); ++b)
          REQUIRE(chords_adjacent(d, h, list[a], list[b]) == adj[a][b]);
    }
  }
}
