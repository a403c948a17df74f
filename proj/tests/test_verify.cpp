#include "doctest.h"

#include <stdexcept>

#include "khv/bracket.hpp"
#include "khv/fixtures.hpp"
#include "khv/theories.hpp"
#include "khv/verify.hpp"

using namespace khv;

static const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
static const char* kFig8 = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

TEST_CASE("smoothing a crossing") {
  PlanarDiagram t = PlanarDiagram::parse(kTrefoil);
  SmoothedDiagram s0 = smooth_crossing(t, 0, false);
  CHECK(s0.d.n_crossings() == 2);
  SmoothedDiagram s1 = smooth_crossing(t, 0, true);
  CHECK(s1.d.n_crossings() == 2);
  // a smoothed kink closes a circle
  SmoothedDiagram k = smooth_crossing(PlanarDiagram::parse("X(1,2,2,1)"), 0, false);
  CHECK(k.d.n_crossings() == 0);
  CHECK(k.d.free_loops == 1);
}

TEST_CASE("crossing edge map gives the cone of the full complex") {
  for (const char* pd : {kTrefoil, "X(1,3,2,4) X(3,1,4,2)", kFig8}) {
    PlanarDiagram d = PlanarDiagram::parse(pd);
    BigradedDims full = khovanov(d);
    for (int i = 0; i < d.n_crossings(); ++i) {
      CrossingEdgeMap em = crossing_edge_map(d, i, khovanov_theory());
      CHECK(homology(cone(em.map)) == full);
      CHECK(les_exactness(em.map).pass());
    }
  }
}

TEST_CASE("crossing edge map for the deformation") {
  PlanarDiagram d = PlanarDiagram::parse(kTrefoil);
  BigradedDims full = barnatan(d);
  CrossingEdgeMap em = crossing_edge_map(d, 1, barnatan_theory());
  CHECK(homology(cone(em.map)) == full);
  CHECK(les_exactness(em.map).pass());
}

TEST_CASE("kunneth for connected sums") {
  PlanarDiagram u = PlanarDiagram::parse("O(1)");
  KunnethReport uu = kunneth_check(u, Basepoint::loop(0), u, Basepoint::loop(0),
                                   khovanov_theory());
  CHECK(uu.pass);
  CHECK(uu.sum_side.total() == 1);

  PlanarDiagram t = PlanarDiagram::parse(kTrefoil);
  KunnethReport tt = kunneth_check(t, Basepoint::edge(1), t, Basepoint::edge(1),
                                   khovanov_theory());
  CHECK(tt.pass);
  CHECK(tt.sum_side.total() == 9);

  KunnethReport tf = kunneth_check(t, Basepoint::edge(2), PlanarDiagram::parse(kFig8),
                                   Basepoint::edge(3), khovanov_theory());
  CHECK(tf.pass);
  CHECK(tf.sum_side.total() == 15);
}

TEST_CASE("extended theory conditions") {
  for (const char* pd : {"O(1)", kTrefoil, kFig8}) {
    ExtendedReport rep = extended_check(PlanarDiagram::parse(pd), khovanov_theory());
    CHECK(rep.pass);
  }
}

TEST_CASE("mutation of the trefoil clasp") {
  PlanarDiagram t = PlanarDiagram::parse(kTrefoil);
  TangleRegion region{{1, 4, 2, 5}, {1, 2}};
  for (Axis a : {Axis::x, Axis::y, Axis::z}) {
    MutationReport rep = mutation_check(t, region, a, khovanov_theory());
    CHECK(rep.pass);
    MutationReport bn = mutation_check(t, region, a, barnatan_theory());
    CHECK(bn.pass);
  }
}

TEST_CASE("mutation with an empty tangle is trivial") {
  PlanarDiagram t = PlanarDiagram::parse(kTrefoil);
  TangleRegion region{{1, 2, 4, 5}, {}};
  CHECK(mutation_check(t, region, Axis::y, khovanov_theory()).pass);
}

TEST_CASE("granny via the tangle composer matches the connected sum") {
  // stacked horizontal twist regions close into the composite of two trefoils
  Tangle a = horizontal_twists(3, true);
  Tangle b = horizontal_twists(3, true);
  ClosedTangle sum = numerator_closure(vsum(a, b));
  CHECK(sum.d.n_crossings() == 6);
  CHECK(sum.d.components().size() == 1);
  const Fixture& granny = fixture("granny");
  CHECK(kauffman_bracket(sum.d) == kauffman_bracket(granny.diagram));
  CHECK(khovanov(sum.d) == khovanov(granny.diagram));
}

TEST_CASE("composer closures are sane") {
  // the numerator of a horizontal twist region is a (2,n) torus closure;
  // vertical twists close into a plat, an unknot
  ClosedTangle hopf = numerator_closure(horizontal_twists(2, true));
  CHECK(hopf.d.n_crossings() == 2);
  CHECK(hopf.d.components().size() == 2);
  CHECK(khovanov(hopf.d).total() == 4);
  ClosedTangle tre = numerator_closure(horizontal_twists(3, true));
  CHECK(tre.d.components().size() == 1);
  CHECK(khovanov(tre.d).total() == 6);
  ClosedTangle unknot = numerator_closure(vertical_twists(2, true));
  CHECK(khovanov(unknot.d).total() == 2);
  // a rational 4-crossing composite closing to the figure-eight shape
  ClosedTangle f8 = numerator_closure(hsum(vertical_twists(2, true), vertical_twists(3, true)));
  CHECK(determinant(f8.d) == 5);
  CHECK(khovanov(f8.d).total() == 10);
}
