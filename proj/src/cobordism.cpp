#include "khv/cobordism.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace khv {

std::string Move::str() const {
  switch (kind) {
    case Kind::zero_handle: return "zero_handle";
    case Kind::one_handle: return "one_handle " + p1.str() + " " + p2.str();
    case Kind::two_handle: return "two_handle " + std::to_string(p1.id);
    case Kind::dot: return "dot " + p1.str();
    case Kind::loop_shuffle: {
      std::string s = "loop_shuffle ";
      for (std::size_t i = 0; i < loop_perm.size(); ++i)
        s += (i ? "," : "") + std::to_string(loop_perm[i]);
      return s;
    }
  }
  return "?";
}

std::string CobordismWord::move_list_text() const {
  std::ostringstream os;
  os << "source: " << source.pd_text() << "\n";
  os << "target: " << target.pd_text() << "\n";
  for (const Move& m : moves) os << m.str() << "\n";
  return os.str();
}

CobordismWord CobordismWord::from_move_list_text(const std::string& text) {
  CobordismWord w;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("source: ", 0) == 0) {
      w.source = PlanarDiagram::parse(line.substr(8));
      continue;
    }
    if (line.rfind("target: ", 0) == 0) {
      w.target = PlanarDiagram::parse(line.substr(8));
      continue;
    }
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "zero_handle") {
      w.moves.push_back(Move::zero_handle());
    } else if (tok == "one_handle") {
      std::string a, b;
      ls >> a >> b;
      w.moves.push_back(Move::one_handle(Basepoint::parse(a), Basepoint::parse(b)));
    } else if (tok == "two_handle") {
      int k;
      ls >> k;
      w.moves.push_back(Move::two_handle(k));
    } else if (tok == "dot") {
      std::string a;
      ls >> a;
      w.moves.push_back(Move::dot(Basepoint::parse(a)));
    } else if (tok == "loop_shuffle") {
      std::string rest;
      ls >> rest;
      std::vector<int> perm;
      std::istringstream ps(rest);
      std::string item;
      while (std::getline(ps, item, ',')) perm.push_back(std::stoi(item));
      w.moves.push_back(Move::loop_shuffle(std::move(perm)));
    } else {
      throw std::invalid_argument("unknown move: " + line);
    }
  }
  return w;
}

namespace {

struct RoleOcc {
  EdgeOcc head, tail;
};

RoleOcc occ_roles(const PlanarDiagram& d, int label) {
  RoleOcc out{{-1, -1}, {-1, -1}};
  for (int ci = 0; ci < d.n_crossings(); ++ci) {
    const Crossing& c = d.crossings[ci];
    for (int s = 0; s < 4; ++s) {
      if (c.e[s] != label) continue;
      bool head = (s == 0) || (s == 1 && c.over_in_b) || (s == 3 && !c.over_in_b);
      if (head) out.head = {ci, s};
      else out.tail = {ci, s};
    }
  }
  if (out.head.crossing < 0 || out.tail.crossing < 0)
    throw std::invalid_argument("edge " + std::to_string(label) + " not found or unoriented");
  return out;
}

void shift_loop_basepoints(PlanarDiagram& d, int removed) {
  for (Basepoint& p : d.basepoints)
    if (p.on_loop && p.id > removed) p.id -= 1;
}

}  // namespace

PlanarDiagram one_handle_surgery(const PlanarDiagram& d, const Basepoint& p1,
                                 const Basepoint& p2) {
  PlanarDiagram out = d;
  if (p1.on_loop && p2.on_loop) {
    if (p1.id == p2.id) {
      out.free_loops += 1;  // split one crossingless circle into two
    } else {
      int removed = std::max(p1.id, p2.id);
      out.free_loops -= 1;
      shift_loop_basepoints(out, removed);
    }
    return out;
  }
  if (p1.on_loop || p2.on_loop) {
    const Basepoint& loop = p1.on_loop ? p1 : p2;
    const Basepoint& edge = p1.on_loop ? p2 : p1;
    if (!d.has_edge(edge.id)) throw std::invalid_argument("one_handle: edge not in diagram");
    if (loop.id < 0 || loop.id >= d.free_loops)
      throw std::invalid_argument("one_handle: loop index out of range");
    out.free_loops -= 1;  // the circle is absorbed into the strand
    shift_loop_basepoints(out, loop.id);
    return out;
  }
  if (!d.has_edge(p1.id) || !d.has_edge(p2.id))
    throw std::invalid_argument("one_handle: edge not in diagram");
  if (p1.id == p2.id) {
    out.free_loops += 1;  // the middle segment closes into a circle
    return out;
  }
  // band between two distinct edges: reconnect head-to-tail
  RoleOcc r1 = occ_roles(d, p1.id);
  RoleOcc r2 = occ_roles(d, p2.id);
  out.crossings[r2.head.crossing].e[r2.head.slot] = p1.id;
  out.crossings[r1.head.crossing].e[r1.head.slot] = p2.id;
  out.validate();
  out.infer_orientation();
  return out;
}

namespace {

// Applies one elementary move: computes the next diagram and the map between
// the two cube complexes, one vertex block at a time.
struct MoveStep {
  PlanarDiagram next;
  std::vector<std::vector<std::int32_t>> cols;
};

MoveStep apply_move(const TheoryComplex& cur, const Move& mv, const TheorySpec& theory, int cap) {
  const PlanarDiagram& d = cur.diagram();
  MoveStep step;

  switch (mv.kind) {
    case Move::Kind::zero_handle: {
      step.next = d;
      step.next.free_loops += 1;
      break;
    }
    case Move::Kind::two_handle: {
      if (mv.p1.id < 0 || mv.p1.id >= d.free_loops)
        throw std::invalid_argument("two_handle: loop index out of range");
      step.next = d;
      step.next.free_loops -= 1;
      shift_loop_basepoints(step.next, mv.p1.id);
      break;
    }
    case Move::Kind::dot:
    case Move::Kind::loop_shuffle: {
      step.next = d;
      if (mv.kind == Move::Kind::loop_shuffle) {
        if (int(mv.loop_perm.size()) != d.free_loops)
          throw std::invalid_argument("loop_shuffle: permutation length mismatch");
        std::set<int> seen(mv.loop_perm.begin(), mv.loop_perm.end());
        if (int(seen.size()) != d.free_loops || *seen.begin() != 0 ||
            *seen.rbegin() != d.free_loops - 1)
          throw std::invalid_argument("loop_shuffle: not a permutation");
        for (Basepoint& p : step.next.basepoints)
          if (p.on_loop) p.id = mv.loop_perm[p.id];
      }
      break;
    }
    case Move::Kind::one_handle: {
      step.next = one_handle_surgery(d, mv.p1, mv.p2);
      break;
    }
  }

  TheoryComplex nextc(step.next, theory, cap);
  step.cols.resize(cur.cx().size());

  const FrobeniusAlgebra& alg = theory.algebra;
  for (std::uint32_t v = 0; v < cur.n_vertices(); ++v) {
    int cv = cur.circles(v);
    int ecv = cur.edge_circles(v);
    int cw = nextc.circles(v);
    std::size_t base = cur.base(v);

    // circle correspondence (-1 marks circles handled by the move itself)
    std::vector<int> perm(cv, -1);
    bool is_merge = false, is_split = false, is_dot = false;
    int c1 = -1, c2 = -1, t_merge = -1, t_split1 = -1, t_split2 = -1;

    auto map_edge_circles = [&] {
      for (int s = 0; s < ecv; ++s) {
        if (s == c1 || s == c2) continue;
        int rep = cur.circle_rep_edge(v, s);
        perm[s] = nextc.circle_of_edge(v, rep);
      }
    };

    switch (mv.kind) {
      case Move::Kind::zero_handle:
        map_edge_circles();
        for (int k = 0; k < d.free_loops; ++k) perm[ecv + k] = nextc.edge_circles(v) + k;
        break;
      case Move::Kind::two_handle:
        c1 = ecv + mv.p1.id;  // dies via the counit
        map_edge_circles();
        for (int k = 0; k < d.free_loops; ++k) {
          if (k == mv.p1.id) continue;
          perm[ecv + k] = nextc.edge_circles(v) + (k < mv.p1.id ? k : k - 1);
        }
        break;
      case Move::Kind::dot:
        is_dot = true;
        c1 = cur.circle_of(v, mv.p1);
        map_edge_circles();
        for (int k = 0; k < d.free_loops; ++k) perm[ecv + k] = nextc.edge_circles(v) + k;
        perm[c1] = c1;  // same complex shape
        break;
      case Move::Kind::loop_shuffle:
        map_edge_circles();
        for (int k = 0; k < d.free_loops; ++k)
          perm[ecv + k] = nextc.edge_circles(v) + mv.loop_perm[k];
        break;
      case Move::Kind::one_handle: {
        c1 = cur.circle_of(v, mv.p1);
        c2 = cur.circle_of(v, mv.p2);
        int ecw = nextc.edge_circles(v);
        is_merge = (c1 != c2);
        is_split = !is_merge;
        map_edge_circles();
        // loop ordinal correspondence depends on the surgery flavor
        auto loop_to_next = [&](int k) -> int {
          if (mv.p1.on_loop && mv.p2.on_loop && mv.p1.id != mv.p2.id) {
            int removed = std::max(mv.p1.id, mv.p2.id);
            if (k == removed) return -1;
            return ecw + (k < removed ? k : k - 1);
          }
          if (mv.p1.on_loop != mv.p2.on_loop) {
            int removed = (mv.p1.on_loop ? mv.p1 : mv.p2).id;
            if (k == removed) return -1;
            return ecw + (k < removed ? k : k - 1);
          }
          return ecw + k;
        };
        for (int k = 0; k < d.free_loops; ++k) {
          int t = loop_to_next(k);
          if (ecv + k != c1 && ecv + k != c2) {
            perm[ecv + k] = t;
          }
        }
        if (is_merge) {
          // target circle: through any surviving marked point
          if (!mv.p1.on_loop) t_merge = nextc.circle_of_edge(v, mv.p1.id);
          else if (!mv.p2.on_loop) t_merge = nextc.circle_of_edge(v, mv.p2.id);
          else t_merge = loop_to_next(std::min(mv.p1.id, mv.p2.id));
        } else {
          if (!mv.p1.on_loop) {
            t_split1 = nextc.circle_of_edge(v, mv.p1.id);
            if (mv.p1.id != mv.p2.id) t_split2 = nextc.circle_of_edge(v, mv.p2.id);
            else t_split2 = ecw + step.next.free_loops - 1;  // the freshly closed circle
          } else {
            t_split1 = ecw + mv.p1.id;
            t_split2 = ecw + step.next.free_loops - 1;
          }
        }
        break;
      }
    }

    std::vector<bool> tl(cw);
    std::size_t count = std::size_t(1) << cv;
    for (std::size_t r = 0; r < count; ++r) {
      std::size_t g = base + r;
      auto label = [&](int s) -> bool { return (r >> (cv - 1 - s)) & 1; };
      for (int s = 0; s < cv; ++s)
        if (perm[s] >= 0) tl[perm[s]] = label(s);

      if (is_dot) {
        std::uint8_t out = alg.dot[label(c1)];
        for (int o = 0; o < 2; ++o) {
          if (!(out & (1 << o))) continue;
          tl[c1] = (o == 1);
          step.cols[g].push_back(std::int32_t(nextc.gen_index(v, tl)));
        }
      } else if (is_merge) {
        std::uint8_t out = alg.mul[label(c1)][label(c2)];
        for (int o = 0; o < 2; ++o) {
          if (!(out & (1 << o))) continue;
          tl[t_merge] = (o == 1);
          step.cols[g].push_back(std::int32_t(nextc.gen_index(v, tl)));
        }
      } else if (is_split) {
        std::uint8_t out = alg.comul[label(c1)];
        for (int pair = 0; pair < 4; ++pair) {
          if (!(out & (1 << pair))) continue;
          tl[t_split1] = (pair >> 1) & 1;
          tl[t_split2] = pair & 1;
          step.cols[g].push_back(std::int32_t(nextc.gen_index(v, tl)));
        }
      } else if (mv.kind == Move::Kind::zero_handle) {
        tl[nextc.edge_circles(v) + step.next.free_loops - 1] = false;  // unit label
        step.cols[g].push_back(std::int32_t(nextc.gen_index(v, tl)));
      } else if (mv.kind == Move::Kind::two_handle) {
        if (alg.counit[label(c1)])
          step.cols[g].push_back(std::int32_t(nextc.gen_index(v, tl)));
      } else {  // loop_shuffle
        step.cols[g].push_back(std::int32_t(nextc.gen_index(v, tl)));
      }
    }
  }
  return step;
}

}  // namespace

ChainMap EvaluatedCobordism::map() const {
  ChainMap f = ChainMap::zero(src->cx(), tgt->cx());
  f.cols = cols;
  return f;
}

EvaluatedCobordism evaluate(const CobordismWord& w, const TheorySpec& t, int cap) {
  if (t.kind == TheoryKind::plugin)
    throw std::invalid_argument(
        "evaluate: cobordism maps need edge-rule handle maps; plugins only define a fixed cube");
  EvaluatedCobordism out;
  out.src = std::make_unique<TheoryComplex>(w.source, t, cap);

  PlanarDiagram cur_d = w.source;
  auto cur = std::make_unique<TheoryComplex>(w.source, t, cap);
  out.cols.resize(cur->cx().size());
  for (std::size_t i = 0; i < out.cols.size(); ++i) out.cols[i].push_back(std::int32_t(i));

  for (const Move& mv : w.moves) {
    MoveStep step = apply_move(*cur, mv, t, cap);
    // compose: new_acc[i] = step(acc[i])
    std::vector<std::vector<std::int32_t>> next_cols(out.cols.size());
    for (std::size_t i = 0; i < out.cols.size(); ++i) {
      std::set<std::int32_t> acc;
      for (std::int32_t m : out.cols[i])
        for (std::int32_t u : step.cols[m]) {
          auto it = acc.find(u);
          if (it == acc.end()) acc.insert(u);
          else acc.erase(it);
        }
      next_cols[i].assign(acc.begin(), acc.end());
    }
    out.cols = std::move(next_cols);
    cur_d = step.next;
    cur = std::make_unique<TheoryComplex>(cur_d, t, cap);
  }

  if (cur_d.crossings != w.target.crossings || cur_d.free_loops != w.target.free_loops)
    throw std::invalid_argument("evaluate: final diagram does not match the declared target");
  out.tgt = std::move(cur);
  if (!out.map().commutes_with_d())
    throw std::invalid_argument("evaluate: composite is not a chain map");
  return out;
}

namespace {
std::vector<int> restore_last_loop_to(int total, int position) {
  // the freshly appended loop (index total-1) returns to `position`
  std::vector<int> perm(total);
  for (int l = 0; l < total - 1; ++l) perm[l] = l < position ? l : l + 1;
  perm[total - 1] = position;
  return perm;
}
}  // namespace

RelationReport check_relation(RelationKind kind, const RelationInstance& inst,
                              const TheorySpec& t, int cap) {
  RelationReport rep;
  const PlanarDiagram& host = inst.host;
  switch (kind) {
    case RelationKind::four_tu: {
      rep.name = "4Tu";
      if (inst.points.size() != 4)
        throw std::invalid_argument("4Tu instance needs four circles");
      for (const Basepoint& p : inst.points)
        if (!p.on_loop) throw std::invalid_argument("4Tu instance uses free loops");
      int total = host.free_loops;
      auto tube = [&](int i, int j) {
        CobordismWord w;
        w.source = host;
        w.target = host;
        int lo = std::min(i, j), hi = std::max(i, j);
        w.moves.push_back(Move::one_handle(Basepoint::loop(i), Basepoint::loop(j)));
        w.moves.push_back(Move::one_handle(Basepoint::loop(lo), Basepoint::loop(lo)));
        w.moves.push_back(Move::loop_shuffle(restore_last_loop_to(total, hi)));
        return evaluate(w, t, cap);
      };
      int a = inst.points[0].id, b = inst.points[1].id, c = inst.points[2].id,
          d = inst.points[3].id;
      F2Matrix sum = tube(a, b).dense();
      sum ^= tube(b, c).dense();
      sum ^= tube(c, d).dense();
      sum ^= tube(d, a).dense();
      rep.pass = sum.is_zero();
      if (!rep.pass) rep.detail = "tube sum is a nonzero chain map";
      return rep;
    }
    case RelationKind::neck_cutting: {
      rep.name = "neck-cutting";
      if (inst.points.size() != 1 || !inst.points[0].on_loop)
        throw std::invalid_argument("neck-cutting instance needs one free loop");
      int k = inst.points[0].id;
      int total = host.free_loops;
      CobordismWord w1;  // dotted cup after cap
      w1.source = host;
      w1.target = host;
      w1.moves.push_back(Move::two_handle(k));
      w1.moves.push_back(Move::zero_handle());
      w1.moves.push_back(Move::dot(Basepoint::loop(total - 1)));
      w1.moves.push_back(Move::loop_shuffle(restore_last_loop_to(total, k)));
      CobordismWord w2;  // cup after dotted cap
      w2.source = host;
      w2.target = host;
      w2.moves.push_back(Move::dot(Basepoint::loop(k)));
      w2.moves.push_back(Move::two_handle(k));
      w2.moves.push_back(Move::zero_handle());
      w2.moves.push_back(Move::loop_shuffle(restore_last_loop_to(total, k)));
      F2Matrix sum = evaluate(w1, t, cap).dense();
      sum ^= evaluate(w2, t, cap).dense();
      rep.pass = sum == F2Matrix::identity(sum.rows());
      if (!rep.pass) rep.detail = "cup-cap sum differs from the identity cylinder";
      return rep;
    }
    case RelationKind::dot_migration: {
      rep.name = "dot migration";
      if (inst.points.size() != 2)
        throw std::invalid_argument("dot migration needs two points");
      const Basepoint &p = inst.points[0], &q = inst.points[1];
      if (p.on_loop != q.on_loop ||
          (p.on_loop && p.id != q.id) ||
          (!p.on_loop && host.component_of_edge(p.id) != host.component_of_edge(q.id)))
        throw std::invalid_argument("dot migration points must share a component");
      CobordismWord wp{host, host, {Move::dot(p)}};
      CobordismWord wq{host, host, {Move::dot(q)}};
      EvaluatedCobordism ep = evaluate(wp, t, cap);
      EvaluatedCobordism eq = evaluate(wq, t, cap);
      HomologyData h(ep.src->cx());
      HomologyData h2(ep.tgt->cx());
      ChainMap fp = ep.map();
      // rebase eq's map onto ep's complexes (same diagram, same bases)
      ChainMap fq = ChainMap::zero(ep.src->cx(), ep.tgt->cx());
      fq.cols = eq.cols;
      rep.pass = h.induced(fp, h2) == h.induced(fq, h2);
      if (!rep.pass) rep.detail = "induced maps differ on homology";
      return rep;
    }
    case RelationKind::cancel: {
      rep.name = "canceling handles";
      if (inst.points.size() != 1)
        throw std::invalid_argument("cancel instance needs one point");
      const Basepoint& p = inst.points[0];
      int total = host.free_loops;
      CobordismWord wa;  // birth then merge into the marked strand
      wa.source = host;
      wa.target = host;
      wa.moves.push_back(Move::zero_handle());
      wa.moves.push_back(Move::one_handle(Basepoint::loop(total), p));
      CobordismWord wb;  // split off a circle then cap it
      wb.source = host;
      wb.target = host;
      wb.moves.push_back(Move::one_handle(p, p));
      wb.moves.push_back(Move::two_handle(total));
      F2Matrix ma = evaluate(wa, t, cap).dense();
      F2Matrix mb = evaluate(wb, t, cap).dense();
      rep.pass = ma == F2Matrix::identity(ma.rows()) && mb == F2Matrix::identity(mb.rows());
      if (!rep.pass) rep.detail = "canceling pair is not the identity at chain level";
      return rep;
    }
  }
  throw std::invalid_argument("unknown relation kind");
}

}  // namespace khv
