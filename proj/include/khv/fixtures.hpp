#pragma once

#include <array>
#include <string>
#include <vector>

#include "khv/diagram.hpp"

namespace khv {

// A 2-string tangle under construction: four open ends in the plane plus the
// crossings built so far. Labels are local until closure.
struct Tangle {
  std::vector<Crossing> crossings;
  std::array<int, 4> ends{};  // NW, NE, SE, SW
  int next_label = 1;
  int loops = 0;
  std::vector<int> watched;  // labels tracked through gluings
};

// n crossings of two vertical strands twisting around each other;
// left_under picks which strand dives at each crossing.
Tangle vertical_twists(int n, bool left_under);
// the same tangle rotated a quarter turn (two horizontal strands)
Tangle horizontal_twists(int n, bool top_under);
Tangle rotate90(const Tangle& t);
// side-by-side gluing: a.NE-b.NW and a.SE-b.SW
Tangle hsum(const Tangle& a, const Tangle& b);
// a stacked above b: a.SW-b.NW and a.SE-b.NE
Tangle vsum(const Tangle& a, const Tangle& b);

struct ClosedTangle {
  PlanarDiagram d;
  std::vector<int> watched;
};
// close NW-NE over the top and SW-SE under the bottom
ClosedTangle numerator_closure(const Tangle& t);

struct Fixture {
  std::string name;
  PlanarDiagram diagram;
  // mutant-pair data, when the fixture carries a marked Conway circle
  bool has_region = false;
  TangleRegion region;
  Axis axis = Axis::y;
  std::string partner;
};

const std::vector<Fixture>& fixture_library();
const Fixture& fixture(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace khv
