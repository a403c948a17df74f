#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace khv {

// One crossing of a planar diagram. e = (a,b,c,d) lists the four edges
// cyclically starting from the incoming under-strand a; the over-strand
// occupies slots b and d. over_in_b records the over-strand direction
// (entering at b), which makes the crossing positive.
struct Crossing {
  std::array<int, 4> e;
  bool over_in_b = false;

  bool positive() const { return over_in_b; }
  bool operator==(const Crossing& o) const = default;
};

// A marked point on the diagram away from crossings: either on an edge or on
// a crossingless free loop.
struct Basepoint {
  bool on_loop = false;
  int id = 0;  // edge label, or free-loop index

  auto operator<=>(const Basepoint&) const = default;
  static Basepoint edge(int label) { return {false, label}; }
  static Basepoint loop(int index) { return {true, index}; }
  std::string str() const;
  static Basepoint parse(const std::string& s);
};

struct EdgeOcc {
  int crossing;
  int slot;  // 0..3 for a,b,c,d
  bool operator==(const EdgeOcc&) const = default;
};

class PlanarDiagram {
public:
  std::vector<Crossing> crossings;
  int free_loops = 0;
  std::vector<Basepoint> basepoints;

  // Parses "X(a,b,c,d)" and "O(k)" tokens (whitespace/comma separated),
  // validates, and infers the over-strand orientations. "" is the empty
  // diagram. Throws std::invalid_argument on malformed input.
  static PlanarDiagram parse(const std::string& pd_text);
  std::string pd_text() const;

  // Structured-text form carrying explicit orientation and basepoints.
  std::string to_json_text() const;
  static PlanarDiagram from_json_text(const std::string& doc);

  // Every edge label occurs exactly twice; throws otherwise.
  void validate() const;
  // Recomputes over_in_b for every crossing from under-strand propagation,
  // with an increasing-label fallback for components that never pass under.
  void infer_orientation();

  int n_crossings() const { return static_cast<int>(crossings.size()); }
  int edge_count() const;
  std::vector<int> edge_labels() const;  // sorted, distinct
  bool has_edge(int label) const;
  bool has_basepoint(const Basepoint& p) const;
  int n_pos() const;
  int n_neg() const { return n_crossings() - n_pos(); }
  int writhe() const { return 2 * n_pos() - n_crossings(); }
  int max_edge_label() const;

  // label -> its (exactly two) occurrences, in (crossing, slot) order
  std::map<int, std::vector<EdgeOcc>> occurrences() const;
  // Oriented strand components; each is the cycle of edge labels in traversal
  // order. Free loops are not included.
  std::vector<std::vector<int>> components() const;
  // Component index of an edge label, or -1.
  int component_of_edge(int label) const;

  bool operator==(const PlanarDiagram& o) const;
};

// One resolution of the cube: a smoothing choice per crossing. Circles are
// cyclically ordered edge lists sorted by minimal edge label; free loops come
// last as empty lists, in input order.
struct Resolution {
  std::uint32_t vertex = 0;
  std::vector<std::vector<int>> circles;
  int n_edge_circles = 0;

  int count() const { return static_cast<int>(circles.size()); }
  int circle_of_edge(int label) const;  // throws if absent
  int circle_of_loop(int index) const { return n_edge_circles + index; }
  int circle_of(const Basepoint& p) const {
    return p.on_loop ? circle_of_loop(p.id) : circle_of_edge(p.id);
  }
};

Resolution resolve(const PlanarDiagram& d, std::uint32_t vertex);

// A combinatorial Conway circle: the four boundary edges in cyclic position
// order NW, NE, SE, SW, and the crossings inside.
struct TangleRegion {
  std::array<int, 4> boundary;
  std::vector<int> interior;
};

enum class Axis { x, y, z };
Axis axis_from_string(const std::string& s);
std::string axis_to_string(Axis a);

PlanarDiagram disjoint_union(const PlanarDiagram& d1, const PlanarDiagram& d2);
PlanarDiagram connected_sum(const PlanarDiagram& d1, const Basepoint& p,
                            const PlanarDiagram& d2, const Basepoint& q);
PlanarDiagram mutate(const PlanarDiagram& d, const TangleRegion& region, Axis axis);
PlanarDiagram mirror(const PlanarDiagram& d);

// The diagram with crossing i replaced by its 0- or 1-smoothing. The two
// marks point at the smoothing arcs (surviving edge, or freshly closed loop);
// a one-handle between them restores the other smoothing.
struct SmoothedDiagram {
  PlanarDiagram d;
  Basepoint mark1, mark2;
};
SmoothedDiagram smooth_crossing(const PlanarDiagram& d, int crossing, bool one_smoothing);

}  // namespace khv
