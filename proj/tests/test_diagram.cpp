#include "doctest.h"

#include <stdexcept>

#include <set>

#include "khv/diagram.hpp"

using namespace khv;

static const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

TEST_CASE("parse basics") {
  PlanarDiagram empty = PlanarDiagram::parse("");
  CHECK(empty.n_crossings() == 0);
  CHECK(empty.free_loops == 0);

  PlanarDiagram unknot = PlanarDiagram::parse("O(1)");
  CHECK(unknot.n_crossings() == 0);
  CHECK(unknot.free_loops == 1);

  PlanarDiagram t = PlanarDiagram::parse(kTrefoil);
  CHECK(t.n_crossings() == 3);
  CHECK(t.edge_count() == 6);
  CHECK(t.components().size() == 1);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(PlanarDiagram::parse("X(1,2,3)"), std::invalid_argument);
  CHECK_THROWS_AS(PlanarDiagram::parse("Y(1,2,3,4)"), std::invalid_argument);
  // edge 1 appears four times
  CHECK_THROWS_AS(PlanarDiagram::parse("X(1,1,1,1) X(2,3,2,3)"), std::invalid_argument);
  CHECK_THROWS_AS(PlanarDiagram::parse("X(1,2,3,4)"), std::invalid_argument);
}

TEST_CASE("trefoil signs and resolutions") {
  PlanarDiagram t = PlanarDiagram::parse(kTrefoil);
  CHECK(t.n_pos() == 3);
  CHECK(t.n_neg() == 0);

  Resolution r0 = resolve(t, 0b000);
  CHECK(r0.count() == 2);
  Resolution r7 = resolve(t, 0b111);
  CHECK(r7.count() == 3);
  CHECK_THROWS_AS(resolve(t, 0b1000), std::invalid_argument);

  Resolution u = resolve(PlanarDiagram::parse("O(1)"), 0);
  CHECK(u.count() == 1);
}

TEST_CASE("resolution circles partition the edges") {
  PlanarDiagram t = PlanarDiagram::parse(kTrefoil);
  for (std::uint32_t v = 0; v < 8; ++v) {
    Resolution r = resolve(t, v);
    std::set<int> seen;
    for (const auto& c : r.circles)
      for (int e : c) {
        CHECK_FALSE(seen.count(e));
        seen.insert(e);
      }
    CHECK(seen.size() == 6);
  }
}

TEST_CASE("flipping one smoothing changes the circle count by one") {
  for (const char* pd : {kTrefoil, "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)",
                         "X(1,3,2,4) X(3,1,4,2)"}) {
    PlanarDiagram d = PlanarDiagram::parse(pd);
    int n = d.n_crossings();
    for (std::uint32_t v = 0; v < (std::uint32_t(1) << n); ++v)
      for (int i = 0; i < n; ++i) {
        int a = resolve(d, v).count();
        int b = resolve(d, v ^ (std::uint32_t(1) << i)).count();
        CHECK(std::abs(a - b) == 1);
      }
  }
}

TEST_CASE("kink tuples and signs") {
  // positive kink on a 1-crossing unknot: over-strand enters at slot b
  PlanarDiagram pos = PlanarDiagram::parse("X(1,2,2,1)");
  CHECK(pos.n_pos() == 1);
  PlanarDiagram neg = PlanarDiagram::parse("X(1,1,2,2)");
  CHECK(neg.n_pos() == 0);
  CHECK(neg.n_neg() == 1);
}

TEST_CASE("disjoint union") {
  PlanarDiagram u = PlanarDiagram::parse("O(1)");
  PlanarDiagram t = PlanarDiagram::parse(kTrefoil);
  CHECK(disjoint_union(u, u).free_loops == 2);
  PlanarDiagram tu = disjoint_union(t, PlanarDiagram::parse(""));
  CHECK(tu == t);
  PlanarDiagram tt = disjoint_union(t, t);
  CHECK(tt.n_crossings() == 6);
  CHECK(tt.edge_count() == 12);
}

TEST_CASE("connected sum") {
  PlanarDiagram u = PlanarDiagram::parse("O(1)");
  PlanarDiagram uu = connected_sum(u, Basepoint::loop(0), u, Basepoint::loop(0));
  CHECK(uu.free_loops == 1);
  CHECK(uu.n_crossings() == 0);

  PlanarDiagram t = PlanarDiagram::parse(kTrefoil);
  PlanarDiagram tu = connected_sum(t, Basepoint::edge(1), u, Basepoint::loop(0));
  CHECK(tu.crossings == t.crossings);
  CHECK(tu.free_loops == 0);

  PlanarDiagram granny = connected_sum(t, Basepoint::edge(1), t, Basepoint::edge(1));
  CHECK(granny.n_crossings() == 6);
  CHECK(granny.edge_count() == 12);
  CHECK(granny.components().size() == 1);
  CHECK(granny.n_pos() == 6);
}

TEST_CASE("mirror") {
  PlanarDiagram t = PlanarDiagram::parse(kTrefoil);
  PlanarDiagram m = mirror(t);
  CHECK(m.n_pos() == 0);
  CHECK(m.n_neg() == 3);
  CHECK(mirror(m) == t);
  PlanarDiagram u = PlanarDiagram::parse("O(1)");
  CHECK(mirror(u) == u);
}

TEST_CASE("mutation of an empty tangle is the identity") {
  PlanarDiagram t = PlanarDiagram::parse(kTrefoil);
  TangleRegion r{{1, 2, 4, 5}, {}};
  for (Axis a : {Axis::x, Axis::y, Axis::z}) CHECK(mutate(t, r, a) == t);
}

TEST_CASE("mutation is an involution") {
  // rotate the clasp formed by the trefoil's last two crossings
  PlanarDiagram t = PlanarDiagram::parse(kTrefoil);
  // the circle around the clasp meets the sides' bigons in the cyclic order
  // 1, 4, 2, 5 (read off the face structure of the standard diagram)
  TangleRegion region;
  region.interior = {1, 2};
  region.boundary = {1, 4, 2, 5};
  for (Axis a : {Axis::x, Axis::y, Axis::z}) {
    PlanarDiagram once = mutate(t, region, a);
    PlanarDiagram twice = mutate(once, region, a);
    CHECK(twice.crossings == t.crossings);
    CHECK(twice.free_loops == t.free_loops);
  }
}

TEST_CASE("mutation rejects bad regions") {
  PlanarDiagram t = PlanarDiagram::parse(kTrefoil);
  TangleRegion r{{1, 2, 3, 4}, {0, 1, 2}};  // whole diagram: no 4-edge cut
  CHECK_THROWS_AS(mutate(t, r, Axis::y), std::invalid_argument);
}

TEST_CASE("pd text round trip") {
  for (const char* pd : {"", "O(1)", kTrefoil, "X(1,2,2,1)", "X(1,3,2,4) X(3,1,4,2) O(2)"}) {
    PlanarDiagram d = PlanarDiagram::parse(pd);
    CHECK(PlanarDiagram::parse(d.pd_text()) == d);
  }
}

TEST_CASE("json document round trip") {
  PlanarDiagram t = PlanarDiagram::parse(kTrefoil);
  t.basepoints.push_back(Basepoint::edge(2));
  PlanarDiagram back = PlanarDiagram::from_json_text(t.to_json_text());
  CHECK(back == t);
}
