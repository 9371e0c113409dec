#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <tuple>

#include "bridgekit/criterion.hpp"
#include "bridgekit/diagram.hpp"
#include "bridgekit/plat.hpp"
#include "support/generators.hpp"

using namespace bridgekit;
using testsupport::Rng;

TEST_CASE("standard 3-bridge diagram: empty families, edgeless graphs, inconclusive") {
  ChordDiagram d = standard_diagram(3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      for (Hemisphere h : {Hemisphere::upper, Hemisphere::lower})
        CHECK(separating_family(d, i, j, h).chords.empty());
    }
  CriterionReport rep = check(d);
  CHECK(rep.verdict == Verdict::inconclusive);
  for (const GraphRecord& r : rep.records) {
    CHECK(r.graph.edges.empty());
    CHECK_FALSE(r.two_connected);
    REQUIRE(r.witness.has_value());
    CHECK_FALSE(r.witness->cut_vertex.has_value());
  }
}

TEST_CASE("criterion scope errors") {
  CHECK_THROWS_AS(check(standard_diagram(2)), CriterionOutOfScope);
  CHECK_THROWS_AS(separating_family(standard_diagram(3), 2, 2, Hemisphere::upper),
                  CriterionOutOfScope);
  AdjacencyGraph tiny;
  tiny.n = 2;
  CHECK_THROWS_AS(is_two_connected(tiny), CriterionOutOfScope);
}

TEST_CASE("two-connectivity on small graphs") {
  AdjacencyGraph tri;
  tri.n = 3;
  tri.edges = {{1, 2}, {1, 3}, {2, 3}};
  CHECK(is_two_connected(tri).first);

  AdjacencyGraph path;
  path.n = 3;
  path.edges = {{1, 2}, {2, 3}};
  auto [ok, wit] = is_two_connected(path);
  CHECK_FALSE(ok);
  REQUIRE(wit.has_value());
  REQUIRE(wit->cut_vertex.has_value());
  CHECK(*wit->cut_vertex == 2);

  AdjacencyGraph empty;
  empty.n = 3;
  auto [ok2, wit2] = is_two_connected(empty);
  CHECK_FALSE(ok2);
  REQUIRE(wit2.has_value());
}

TEST_CASE("separating families are nested and exclude gap-interior endpoints") {
  Rng rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    ChordDiagram d = testsupport::rand_reduced_diagram(rng, 3, 5, 8);
    const int m = d.size();
    for (int i = 1; i <= d.n; ++i)
      for (int j = i + 1; j <= d.n; ++j)
        for (Hemisphere h : {Hemisphere::upper, Hemisphere::lower}) {
          SeparatingFamily fam = separating_family(d, i, j, h);
          // pairwise non-interleaved, i.e. nested
          for (size_t a = 0; a < fam.chords.size(); ++a)
            for (size_t b = a + 1; b < fam.chords.size(); ++b) {
              const Chord& ca = fam.chords[a].chord;
              const Chord& cb = fam.chords[b].chord;
              auto inside = [&](int p) {
                int off = detail::arc_len(ca.first, p, m);
                return off > 0 && off < detail::arc_len(ca.first, ca.second, m);
              };
              REQUIRE(inside(cb.first) == inside(cb.second));
            }
        }
  }
}

TEST_CASE("chord adjacency is symmetric") {
  Rng rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    ChordDiagram d = testsupport::rand_reduced_diagram(rng, 2, 4, 7);
    for (Hemisphere h : {Hemisphere::upper, Hemisphere::lower}) {
      const auto& list = d.chords(h);
      for (size_t a = 0; a < list.size(); ++a)
        for (size_t b = a + 1; b < list.size(); ++b)
          CHECK(chords_adjacent(d, h, list[a], list[b]) ==
                chords_adjacent(d, h, list[b], list[a]));
    }
  }
}

TEST_CASE("verdicts swap hemispheres under mirror") {
  Rng rng(79);
  for (int trial = 0; trial < 25; ++trial) {
    ChordDiagram d = testsupport::rand_reduced_diagram(rng, 3, 4, 8);
    CriterionReport a = check(d);
    CriterionReport b = check(mirror(d));
    REQUIRE(a.records.size() == b.records.size());
    std::map<std::tuple<int, int, Hemisphere>, bool> flags;
    for (const GraphRecord& r : b.records)
      flags[std::make_tuple(r.i, r.j, r.hemisphere)] = r.two_connected;
    for (const GraphRecord& r : a.records)
      REQUIRE(r.two_connected == flags.at(std::make_tuple(r.i, r.j, opposite(r.hemisphere))));
    CHECK((a.verdict == b.verdict));
  }
}

TEST_CASE("verdicts are invariant under arc relabeling") {
  Rng rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    ChordDiagram d = testsupport::rand_reduced_diagram(rng, 3, 4, 8);
    ChordDiagram relabeled = d;
    std::vector<int> perm(d.n + 1);
    for (int i = 1; i <= d.n; ++i) perm[i] = i;
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    for (int& label : relabeled.arc_at_puncture) label = perm[label];
    CriterionReport a = check(d);
    CriterionReport b = check(relabeled);
    REQUIRE(a.records.size() == b.records.size());
    for (size_t r = 0; r < a.records.size(); ++r) {
      CHECK(a.records[r].two_connected == b.records[r].two_connected);
      CHECK(a.records[r].graph.edges.size() == b.records[r].graph.edges.size());
    }
    CHECK((a.verdict == b.verdict));
  }
}

TEST_CASE("stabilized plats are never certified (smoke)") {
  Rng rng(89);
  for (int trial = 0; trial < 30; ++trial) {
    PlatPresentation p = testsupport::rand_plat(rng, 2, 4, 8);
    ChordDiagram d = plat_closure(stabilize(p));
    CriterionReport rep = check(d);
    REQUIRE(rep.verdict == Verdict::inconclusive);
  }
}

TEST_CASE("a gap-spanning chord separates its gap from every other gap") {
  ChordDiagram d = plat_closure({3, parse_braid("1 2 3", 6)});
  ArcDecomposition dec = decompose_arcs(d);
  bool found = false;
  for (const Arc& arc : dec.arcs)
    if (arc.chords.size() == 1 && arc.puncture_b == arc.puncture_a + 1 &&
        arc.puncture_a % 2 == 0) {
      int gap = arc.puncture_a / 2;
      for (int other = 1; other <= d.n; ++other) {
        if (other == gap) continue;
        CHECK(chord_separates(d, arc.chords[0].second, gap, other));
      }
      found = true;
    }
  CHECK(found);
}
