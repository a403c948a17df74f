#include "khv/bracket.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <vector>

namespace khv {

namespace {
// Circle count of one smoothing state, by plain label sweeping over the
// arc graph (kept separate from the union-find used by the cube builder).
int state_circles(const std::vector<std::array<int, 2>>& arcs, int n_edges,
                  const std::vector<int>& edge_ids) {
  std::vector<int> color(n_edges);
  for (int i = 0; i < n_edges; ++i) color[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& arc : arcs) {
      int a = color[arc[0]], b = color[arc[1]];
      if (a == b) continue;
      int m = a < b ? a : b;
      color[arc[0]] = color[arc[1]] = m;
      changed = true;
    }
  }
  (void)edge_ids;
  int count = 0;
  for (int i = 0; i < n_edges; ++i)
    if (color[i] == i) ++count;
  return count;
}
}  // namespace

LaurentPoly kauffman_bracket(const PlanarDiagram& d, int cap) {
  int n = d.n_crossings();
  if (n > cap)
    throw std::invalid_argument("bracket: diagram has " + std::to_string(n) +
                                " crossings, above the cap of " + std::to_string(cap));
  std::vector<int> labels = d.edge_labels();
  std::map<int, int> ix;
  for (std::size_t i = 0; i < labels.size(); ++i) ix[labels[i]] = int(i);
  int ne = int(labels.size());

  int max_circles = ne + d.free_loops + 1;
  std::vector<LaurentPoly> loop_pow(max_circles + 1);
  loop_pow[0] = LaurentPoly::monomial(0);
  LaurentPoly loop = LaurentPoly::monomial(1) + LaurentPoly::monomial(-1);
  for (int k = 1; k <= max_circles; ++k) loop_pow[k] = loop_pow[k - 1] * loop;

  LaurentPoly sum;
  std::vector<std::array<int, 2>> arcs(2 * n);
  for (std::uint32_t v = 0; v < (std::uint32_t(1) << n); ++v) {
    for (int i = 0; i < n; ++i) {
      const auto& e = d.crossings[i].e;
      if ((v >> i) & 1) {
        arcs[2 * i] = {ix[e[0]], ix[e[1]]};
        arcs[2 * i + 1] = {ix[e[2]], ix[e[3]]};
      } else {
        arcs[2 * i] = {ix[e[0]], ix[e[3]]};
        arcs[2 * i + 1] = {ix[e[1]], ix[e[2]]};
      }
    }
    int circles = (ne > 0 ? state_circles(arcs, ne, labels) : 0) + d.free_loops;
    int w = __builtin_popcount(v);
    LaurentPoly term = loop_pow[circles] * LaurentPoly::monomial(w, (w % 2) ? -1 : 1);
    sum = sum + term;
  }
  int np = d.n_pos(), nm = d.n_neg();
  LaurentPoly shift = LaurentPoly::monomial(np - 2 * nm, (nm % 2) ? -1 : 1);
  return sum * shift;
}

LaurentPoly reduced_jones(const PlanarDiagram& d, int cap) {
  LaurentPoly loop = LaurentPoly::monomial(1) + LaurentPoly::monomial(-1);
  return kauffman_bracket(d, cap).divide_exact(loop);
}

long long determinant(const PlanarDiagram& d, int cap) {
  auto [re, im] = reduced_jones(d, cap).eval_at_i();
  if (im != 0)
    throw std::domain_error("determinant: V(i) is not real (diagram is not a knot?)");
  return std::llabs(re);
}

}  // namespace khv
