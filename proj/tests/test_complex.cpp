#include "doctest.h"

#include <stdexcept>

#include "khv/bracket.hpp"
#include "khv/complex.hpp"
#include "khv/theories.hpp"

using namespace khv;

namespace {
FilteredComplex two_sphere_complex() {
  // rank 2, zero differential, dims {(0,1):1,(0,-1):1}
  FilteredComplex c;
  c.resize(2);
  c.gens[0] = {0, 1, 0};
  c.gens[1] = {0, -1, 0};
  return c;
}
}  // namespace

TEST_CASE("homology of a zero differential") {
  FilteredComplex c = two_sphere_complex();
  BigradedDims h = homology(c);
  CHECK(h.at(0, 1) == 1);
  CHECK(h.at(0, -1) == 1);
  CHECK(h.total() == 2);
}

TEST_CASE("cone of the identity is acyclic") {
  FilteredComplex c = two_sphere_complex();
  FilteredComplex shifted = shift(c, 1, 0);
  ChainMap f = ChainMap::zero(c, shifted);
  for (std::size_t i = 0; i < c.size(); ++i) f.add_entry(int(i), int(i));
  FilteredComplex cn = cone(f);
  CHECK(homology(cn).total() == 0);
}

TEST_CASE("cone of zero is the direct sum") {
  FilteredComplex c = two_sphere_complex();
  FilteredComplex shifted = shift(c, 1, 0);
  ChainMap z = ChainMap::zero(c, shifted);
  FilteredComplex cn = cone(z);
  CHECK(homology(cn).total() == 4);
}

TEST_CASE("tensor unit and dims") {
  FilteredComplex unit;
  unit.resize(1);
  unit.gens[0] = {0, 0, 0};
  FilteredComplex t = build_complex(PlanarDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"),
                                    khovanov_theory());
  FilteredComplex tu = tensor(t, unit);
  CHECK(tu.chain_dims() == t.chain_dims());
  CHECK(homology(tu) == homology(t));

  FilteredComplex c = two_sphere_complex();
  CHECK(tensor(t, c).size() == t.size() * c.size());
}

TEST_CASE("euler characteristic is elimination-invariant") {
  PlanarDiagram t = PlanarDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
  FilteredComplex c = build_complex(t, khovanov_theory());
  CHECK(c.chain_dims().graded_euler() == homology(c).graded_euler());
  CHECK(homology(c).graded_euler() == kauffman_bracket(t));
}

TEST_CASE("merge-map cone gives the unknot answer") {
  // the 1-crossing positive-kink complex assembled by hand as a cone
  PlanarDiagram two = PlanarDiagram::parse("O(2)");
  PlanarDiagram one = PlanarDiagram::parse("O(1)");
  FilteredComplex a = shift(build_complex(two, khovanov_theory()), 0, 1);
  FilteredComplex b = shift(build_complex(one, khovanov_theory()), 1, 2);
  // merge: labels lex order (1,1),(1,X),(X,1),(X,X) -> (1),(X)
  ChainMap m = ChainMap::zero(a, b);
  m.add_entry(0, 0);  // 1*1 = 1
  m.add_entry(1, 1);  // 1*X = X
  m.add_entry(2, 1);  // X*1 = X
  REQUIRE(m.commutes_with_d());
  BigradedDims h = homology(cone(m));
  CHECK(h.at(0, 1) == 1);
  CHECK(h.at(0, -1) == 1);
  CHECK(h.total() == 2);
}

TEST_CASE("cone long exact sequence is exact") {
  PlanarDiagram two = PlanarDiagram::parse("O(2)");
  PlanarDiagram one = PlanarDiagram::parse("O(1)");
  FilteredComplex a = shift(build_complex(two, khovanov_theory()), 0, 1);
  FilteredComplex b = shift(build_complex(one, khovanov_theory()), 1, 2);
  ChainMap m = ChainMap::zero(a, b);
  m.add_entry(0, 0);
  m.add_entry(1, 1);
  m.add_entry(2, 1);
  LesReport rep = les_exactness(m);
  CHECK(rep.pass());
}

TEST_CASE("induced maps") {
  FilteredComplex t = build_complex(PlanarDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"),
                                    khovanov_theory());
  HomologyData h(t);
  // identity induces the identity
  ChainMap id = ChainMap::identity(t);
  CHECK(HomologyData::is_identity(h, h.induced(id, h)));
  // the differential induces zero
  ChainMap d = ChainMap::zero(t, t);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::int32_t tgt : t.d_cols[i]) d.add_entry(int(i), tgt);
  CHECK(HomologyData::is_zero(h.induced(d, h)));
}

TEST_CASE("direct sum adds homology") {
  FilteredComplex t = build_complex(PlanarDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"),
                                    khovanov_theory());
  FilteredComplex s = direct_sum(t, t);
  CHECK(homology(s) == homology(t) + homology(t));
}
