#include "khv/basepoint.hpp"

#include <stdexcept>

namespace khv {

ChainMap x_action(const TheoryComplex& tc, const Basepoint& p) {
  if (!p.on_loop && !tc.diagram().has_edge(p.id))
    throw std::invalid_argument("x_action: basepoint not on the diagram");
  const FilteredComplex& c = tc.cx();
  ChainMap f = ChainMap::zero(c, c);
  for (std::uint32_t v = 0; v < tc.n_vertices(); ++v) {
    int circle = tc.circle_of(v, p);
    std::size_t base = tc.base(v);
    std::size_t count = std::size_t(1) << tc.circles(v);
    for (std::size_t r = 0; r < count; ++r) {
      std::size_t g = base + r;
      std::uint8_t out = tc.theory().algebra.dot[tc.label_x(g, circle)];
      for (int o = 0; o < 2; ++o)
        if (out & (1 << o)) f.add_entry(int(g), int(tc.gen_with_label(g, circle, o == 1)));
    }
  }
  if (!f.commutes_with_d()) throw std::invalid_argument("x_action: not a chain map");
  return f;
}

ChainMap nu_map(const TheoryComplex& tc) {
  const FilteredComplex& c = tc.cx();
  ChainMap f = ChainMap::zero(c, c);
  for (std::uint32_t v = 0; v < tc.n_vertices(); ++v) {
    std::size_t base = tc.base(v);
    int nc = tc.circles(v);
    std::size_t count = std::size_t(1) << nc;
    for (std::size_t r = 0; r < count; ++r) {
      std::size_t g = base + r;
      for (int j = 0; j < nc; ++j)
        if (tc.label_x(g, j)) f.add_entry(int(g), int(tc.gen_with_label(g, j, false)));
    }
  }
  if (!f.commutes_with_d()) throw std::invalid_argument("nu_map: not a chain map");
  return f;
}

ReducedComplex reduced(const TheoryComplex& tc, const Basepoint& p) {
  if (tc.theory().algebra.relation != Relation::x_squared)
    throw std::invalid_argument("reduced: defined only over the relation x^2");
  if (!p.on_loop && !tc.diagram().has_edge(p.id))
    throw std::invalid_argument("reduced: basepoint not on the diagram");

  const FilteredComplex& host = tc.cx();
  ReducedComplex out;
  out.p = p;
  out.host_to_reduced.assign(host.size(), -1);
  std::vector<int> p_circle(tc.n_vertices());
  for (std::uint32_t v = 0; v < tc.n_vertices(); ++v) p_circle[v] = tc.circle_of(v, p);
  for (std::size_t g = 0; g < host.size(); ++g) {
    std::uint32_t v = tc.vertex_of(g);
    if (!tc.label_x(g, p_circle[v])) continue;
    out.host_to_reduced[g] = std::int32_t(out.host_gen.size());
    out.host_gen.push_back(std::int32_t(g));
  }
  out.cx.resize(out.host_gen.size());
  for (std::size_t i = 0; i < out.host_gen.size(); ++i) {
    const GradedGen& g = host.gens[out.host_gen[i]];
    out.cx.gens[i] = {g.h, g.q + 1, g.filt};
    for (std::int32_t t : host.d_cols[out.host_gen[i]]) {
      std::int32_t rt = out.host_to_reduced[t];
      if (rt < 0)
        throw std::invalid_argument(
            "reduced: differential leaves the X-labeled subcomplex (theory is not reducible)");
      out.cx.add_entry(std::int32_t(i), rt);
    }
  }
  return out;
}

ChainMap transport_map(const TheoryComplex& tc, const ReducedComplex& from,
                       const ReducedComplex& to) {
  ChainMap nu = nu_map(tc);
  ChainMap xq = x_action(tc, to.p);
  ChainMap host = xq.compose_after(nu);
  ChainMap f = ChainMap::zero(from.cx, to.cx);
  for (std::size_t i = 0; i < from.host_gen.size(); ++i) {
    for (std::int32_t t : host.cols[from.host_gen[i]]) {
      std::int32_t rt = to.host_to_reduced[t];
      if (rt < 0)
        throw std::invalid_argument("transport: image left the target reduction");
      f.add_entry(std::int32_t(i), rt);
    }
  }
  if (!f.commutes_with_d()) throw std::invalid_argument("transport: not a chain map");
  return f;
}

SplittingReport splitting_check(const TheoryComplex& tc, const Basepoint& p) {
  SplittingReport rep;
  rep.host = homology(tc.cx());
  rep.red = homology(reduced(tc, p).cx);
  rep.pass = rep.host == rep.red.shifted(0, 1) + rep.red.shifted(0, -1);
  return rep;
}

}  // namespace khv
