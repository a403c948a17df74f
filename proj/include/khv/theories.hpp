#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "khv/complex.hpp"
#include "khv/diagram.hpp"
#include "khv/frobenius.hpp"

namespace khv {

enum class TheoryKind { frobenius_edges, plugin };
enum class FiltrationRule { homological, quantum };

// A pluggable cube theory: Frobenius edge maps from the algebra tables, plus
// (for external plugins) explicit GF(2) matrices on faces of dimension >= 2.
struct TheorySpec {
  std::string name;
  FrobeniusAlgebra algebra = frobenius_algebra(Relation::x_squared);
  TheoryKind kind = TheoryKind::frobenius_edges;
  FiltrationRule filtration = FiltrationRule::homological;
  bool has_bound_diagram = false;
  PlanarDiagram bound_diagram;  // plugins are tied to one diagram
  // (src vertex, tgt vertex) -> dense matrix in the canonical generator bases
  std::map<std::pair<std::uint32_t, std::uint32_t>, F2Matrix> faces;
};

TheorySpec khovanov_theory();
TheorySpec barnatan_theory();

// Plugin text format: `diagram:` and `relation:` header lines, then
// `face: <bits> -> <bits>` blocks each followed by one 0/1 row per target
// generator (row order = target basis, column order = source basis). The
// assembled differential is verified to square to zero on load.
TheorySpec load_plugin(const std::string& path);
TheorySpec parse_plugin_text(const std::string& text);
std::string plugin_text(const TheorySpec& t);

inline constexpr int kDefaultCrossingCap = 16;

// The cube complex of a diagram under a theory, with the labeled-basis
// bookkeeping needed by basepoint and cobordism operations. Generator order:
// vertices ascending (bit i = crossing i), then labels lexicographically in
// circle order with 1 < X.
class TheoryComplex {
public:
  TheoryComplex(const PlanarDiagram& d, const TheorySpec& t, int cap = kDefaultCrossingCap);

  const FilteredComplex& cx() const { return cx_; }
  const PlanarDiagram& diagram() const { return d_; }
  const TheorySpec& theory() const { return t_; }

  int n_crossings() const { return d_.n_crossings(); }
  std::uint32_t n_vertices() const { return std::uint32_t(1) << n_crossings(); }
  std::size_t base(std::uint32_t v) const { return vertex_base_[v]; }
  int circles(std::uint32_t v) const { return circle_count_[v]; }
  int edge_circles(std::uint32_t v) const { return circle_count_[v] - d_.free_loops; }

  std::uint32_t vertex_of(std::size_t gen) const;
  // label of circle j at a generator: true = X
  bool label_x(std::size_t gen, int circle) const;
  std::size_t gen_with_label(std::size_t gen, int circle, bool x) const;
  std::size_t gen_index(std::uint32_t v, const std::vector<bool>& labels) const;

  int circle_of_edge(std::uint32_t v, int edge_label) const;
  int circle_of(std::uint32_t v, const Basepoint& p) const;
  // label of some edge on an edge-circle of the resolution at v
  int circle_rep_edge(std::uint32_t v, int circle) const;

private:
  friend class CubeBuilder;
  PlanarDiagram d_;
  TheorySpec t_;
  FilteredComplex cx_;
  std::vector<std::size_t> vertex_base_;
  std::vector<int> circle_count_;
  std::vector<std::vector<std::int8_t>> edge_circle_;  // per vertex, dense edge -> circle
  std::map<int, int> edge_ix_;                         // label -> dense index
  std::vector<int> edge_labels_;                       // dense index -> label
};

FilteredComplex build_complex(const PlanarDiagram& d, const TheorySpec& t,
                              int cap = kDefaultCrossingCap);
BigradedDims khovanov(const PlanarDiagram& d, int cap = kDefaultCrossingCap);
BigradedDims barnatan(const PlanarDiagram& d, int cap = kDefaultCrossingCap);

}  // namespace khv
