#include "doctest.h"

#include <stdexcept>

#include "khv/bracket.hpp"
#include "khv/complex.hpp"
#include "khv/theories.hpp"

using namespace khv;

static const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
static const char* kFig8 = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
static const char* kHopf = "X(1,3,2,4) X(3,1,4,2)";
// trefoil with a positive kink inserted on edge 1
static const char* kTrefoilKink = "X(8,4,2,5) X(3,6,4,1) X(5,2,6,3) X(1,7,7,8)";

TEST_CASE("crossingless unknot complex") {
  FilteredComplex c = build_complex(PlanarDiagram::parse("O(1)"), khovanov_theory());
  CHECK(c.size() == 2);
  for (auto& col : c.d_cols) CHECK(col.empty());
  BigradedDims h = homology(c);
  CHECK(h.at(0, 1) == 1);
  CHECK(h.at(0, -1) == 1);
}

TEST_CASE("trefoil chain dimensions from circle counts") {
  FilteredComplex c = build_complex(PlanarDiagram::parse(kTrefoil), khovanov_theory());
  // 2^2 + 3*2^1 + 3*2^2 + 2^3
  CHECK(c.size() == 4 + 6 + 12 + 8);
}

TEST_CASE("khovanov totals") {
  CHECK(khovanov(PlanarDiagram::parse("O(1)")).total() == 2);
  CHECK(khovanov(PlanarDiagram::parse(kTrefoil)).total() == 6);
  CHECK(khovanov(PlanarDiagram::parse(kFig8)).total() == 10);
  CHECK(khovanov(PlanarDiagram::parse(kHopf)).total() == 4);
}

TEST_CASE("bar-natan deformation ranks") {
  CHECK(barnatan(PlanarDiagram::parse("O(1)")).total() == 2);
  CHECK(barnatan(PlanarDiagram::parse(kTrefoil)).total() == 2);
  CHECK(barnatan(PlanarDiagram::parse(kFig8)).total() == 2);
  CHECK(barnatan(PlanarDiagram::parse(kHopf)).total() == 4);
}

TEST_CASE("bar-natan differential is filtered but not q-homogeneous") {
  FilteredComplex c = build_complex(PlanarDiagram::parse(kTrefoil), barnatan_theory());
  CHECK_FALSE(c.d_preserves_q());
  int min_step = -1;
  CHECK(c.d_filtration_ok(&min_step));
  CHECK(min_step == 0);
}

TEST_CASE("kinked trefoil has the same khovanov dims") {
  PlanarDiagram kinked = PlanarDiagram::parse(kTrefoilKink);
  CHECK(kinked.n_pos() == 4);
  CHECK(khovanov(kinked) == khovanov(PlanarDiagram::parse(kTrefoil)));
  CHECK(kauffman_bracket(kinked) == kauffman_bracket(PlanarDiagram::parse(kTrefoil)));
}

TEST_CASE("disjoint union matches the tensor product") {
  PlanarDiagram t = PlanarDiagram::parse(kTrefoil);
  PlanarDiagram h = PlanarDiagram::parse(kHopf);
  PlanarDiagram both = disjoint_union(t, h);
  FilteredComplex ct = build_complex(t, khovanov_theory());
  FilteredComplex ch = build_complex(h, khovanov_theory());
  CHECK(khovanov(both) == homology(tensor(ct, ch)));
  CHECK(khovanov(disjoint_union(PlanarDiagram::parse("O(1)"), PlanarDiagram::parse("O(1)")))
            .total() == 4);
}

TEST_CASE("crossing cap") {
  CHECK_THROWS_AS(build_complex(PlanarDiagram::parse(kTrefoil), khovanov_theory(), 2),
                  std::invalid_argument);
}

TEST_CASE("plugin with empty diagonal section is khovanov") {
  std::string text = std::string("diagram: ") + kHopf + "\nrelation: x^2\n";
  TheorySpec t = parse_plugin_text(text);
  PlanarDiagram h = PlanarDiagram::parse(kHopf);
  FilteredComplex c = build_complex(h, t);
  CHECK(homology(c) == khovanov(h));
}

TEST_CASE("plugin with a zero 2-face map is khovanov") {
  PlanarDiagram h = PlanarDiagram::parse(kHopf);
  std::string text = std::string("diagram: ") + kHopf + "\nrelation: x^2\nface: 00 -> 11\n";
  int rows = 1 << resolve(h, 3).count();
  int cols = 1 << resolve(h, 0).count();
  for (int r = 0; r < rows; ++r) text += std::string(cols, '0') + "\n";
  TheorySpec t = parse_plugin_text(text);
  CHECK(homology(build_complex(h, t)) == khovanov(h));
}

TEST_CASE("inconsistent plugin face maps fail on load with a witness") {
  // a 3-crossing diagram where a lone 2-face map cannot square to zero
  std::string text = std::string("diagram: ") + kTrefoil + "\nrelation: x^2\nface: 100 -> 111\n";
  PlanarDiagram t = PlanarDiagram::parse(kTrefoil);
  int rows = 1 << resolve(t, 7).count();
  int cols = 1 << resolve(t, 1).count();
  // all-ones: certainly not a chain map against the edge differential
  for (int r = 0; r < rows; ++r) text += std::string(cols, '1') + "\n";
  TheorySpec spec = parse_plugin_text(text);
  CHECK_THROWS_WITH_AS(build_complex(t, spec), doctest::Contains("d^2 != 0"),
                       std::invalid_argument);
}

TEST_CASE("plugin refuses edge faces and wrong shapes") {
  CHECK_THROWS_AS(
      parse_plugin_text(std::string("diagram: ") + kHopf + "\nrelation: x^2\nface: 00 -> 01\n"),
      std::invalid_argument);
  CHECK_THROWS_AS(parse_plugin_text(std::string("diagram: ") + kHopf +
                                    "\nrelation: x^2\nface: 00 -> 11\n01\n"),
                  std::invalid_argument);
}

TEST_CASE("plugin round trip") {
  PlanarDiagram h = PlanarDiagram::parse(kHopf);
  std::string text = std::string("diagram: ") + kHopf + "\nrelation: x^2\nface: 00 -> 11\n";
  int rows = 1 << resolve(h, 3).count();
  int cols = 1 << resolve(h, 0).count();
  for (int r = 0; r < rows; ++r) text += std::string(cols, '0') + "\n";
  TheorySpec t = parse_plugin_text(text);
  TheorySpec again = parse_plugin_text(plugin_text(t));
  CHECK(again.faces == t.faces);
  CHECK(again.bound_diagram == t.bound_diagram);
}
