#include "khv/fixtures.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace khv {

namespace {

void relabel_all(Tangle& t, int from, int to) {
  for (Crossing& c : t.crossings)
    for (int s = 0; s < 4; ++s)
      if (c.e[s] == from) c.e[s] = to;
  for (int& e : t.ends)
    if (e == from) e = to;
  for (int& w : t.watched)
    if (w == from) w = to;
}

// glue two open ends together; a closed circle becomes a free loop
void unify(Tangle& t, int a, int b) {
  if (a == b) {
    t.loops += 1;
    return;
  }
  relabel_all(t, b, a);
}

Tangle shift_labels(const Tangle& t, int offset) {
  Tangle out = t;
  for (Crossing& c : out.crossings)
    for (int s = 0; s < 4; ++s) c.e[s] += offset;
  for (int& e : out.ends) e += offset;
  for (int& w : out.watched) w += offset;
  out.next_label += offset;
  return out;
}

}  // namespace

Tangle vertical_twists(int n, bool left_under) {
  if (n < 1) throw std::invalid_argument("vertical_twists: need n >= 1");
  Tangle t;
  int l = t.next_label++;
  int r = t.next_label++;
  t.ends[0] = l;  // NW
  t.ends[1] = r;  // NE
  for (int k = 0; k < n; ++k) {
    int l_out = t.next_label++;
    int r_out = t.next_label++;
    if (left_under) {
      // under-strand from NW to SE, over from NE to SW
      t.crossings.push_back({{l, r, l_out, r_out}, false});
    } else {
      // under-strand from NE to SW, over from NW to SE
      t.crossings.push_back({{r, l_out, r_out, l}, false});
    }
    l = r_out;  // the strand leaving SW is the new left
    r = l_out;  // the strand leaving SE is the new right
  }
  t.ends[3] = l;  // SW
  t.ends[2] = r;  // SE
  return t;
}

Tangle rotate90(const Tangle& t) {
  Tangle out = t;
  // quarter turn clockwise: NW<-SW, NE<-NW, SE<-NE, SW<-SE
  out.ends = {t.ends[3], t.ends[0], t.ends[1], t.ends[2]};
  return out;
}

Tangle horizontal_twists(int n, bool top_under) {
  return rotate90(vertical_twists(n, top_under));
}

namespace {
// concatenates crossings/loops/watched and parks both ends arrays at the tail
// of watched so gluings keep them current
Tangle combine(const Tangle& a, const Tangle& b, std::size_t& w0) {
  Tangle bs = shift_labels(b, a.next_label);
  Tangle out = a;
  out.loops += bs.loops;
  out.next_label = bs.next_label;
  out.crossings.insert(out.crossings.end(), bs.crossings.begin(), bs.crossings.end());
  out.watched.insert(out.watched.end(), bs.watched.begin(), bs.watched.end());
  w0 = out.watched.size();
  for (int e : a.ends) out.watched.push_back(e);
  for (int e : bs.ends) out.watched.push_back(e);
  return out;
}
}  // namespace

Tangle hsum(const Tangle& a, const Tangle& b) {
  std::size_t w0 = 0;
  Tangle out = combine(a, b, w0);
  auto at = [&](int i) { return out.watched[w0 + i]; };  // 0..3 a's ends, 4..7 b's
  unify(out, at(1), at(4));  // a.NE - b.NW
  unify(out, at(2), at(7));  // a.SE - b.SW
  out.ends = {at(0), at(5), at(6), at(3)};
  out.watched.resize(w0);
  return out;
}

Tangle vsum(const Tangle& a, const Tangle& b) {
  std::size_t w0 = 0;
  Tangle out = combine(a, b, w0);
  auto at = [&](int i) { return out.watched[w0 + i]; };
  unify(out, at(3), at(4));  // a.SW - b.NW
  unify(out, at(2), at(5));  // a.SE - b.NE
  out.ends = {at(0), at(1), at(6), at(7)};
  out.watched.resize(w0);
  return out;
}

ClosedTangle numerator_closure(const Tangle& t) {
  Tangle work = t;
  std::array<int, 4> e = work.ends;
  unify(work, e[0], e[1]);  // NW - NE
  // ends may have been relabeled by the first gluing
  unify(work, work.ends[3], work.ends[2]);  // SW - SE

  // compact labels to 1..2n
  std::map<int, int> remap;
  for (const Crossing& c : work.crossings)
    for (int s = 0; s < 4; ++s) remap[c.e[s]] = 0;
  int next = 1;
  for (auto& [old_label, fresh] : remap) fresh = next++;

  ClosedTangle out;
  for (Crossing c : work.crossings) {
    for (int s = 0; s < 4; ++s) c.e[s] = remap.at(c.e[s]);
    out.d.crossings.push_back(c);
  }
  out.d.free_loops = work.loops;
  for (int w : work.watched) {
    auto it = remap.find(w);
    out.watched.push_back(it == remap.end() ? -1 : it->second);
  }
  out.d.validate();
  out.d.infer_orientation();
  return out;
}

namespace {

const char* kTrefoilPd = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const char* kFig8Pd = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
const char* kHopfPd = "X(1,3,2,4) X(3,1,4,2)";
const char* kTrefoilKinkPd = "X(8,4,2,5) X(3,6,4,1) X(5,2,6,3) X(1,7,7,8)";

std::vector<Fixture> build_library() {
  std::vector<Fixture> lib;
  auto plain = [&](const std::string& name, const std::string& pd) {
    Fixture f;
    f.name = name;
    f.diagram = PlanarDiagram::parse(pd);
    lib.push_back(std::move(f));
  };
  plain("unknot", "O(1)");
  plain("unlink2", "O(2)");
  plain("trefoil", kTrefoilPd);
  plain("trefoil-kink", kTrefoilKinkPd);
  plain("figure-eight", kFig8Pd);
  plain("hopf", kHopfPd);
  {
    Fixture f;
    f.name = "granny";
    f.diagram = connected_sum(PlanarDiagram::parse(kTrefoilPd), Basepoint::edge(1),
                              PlanarDiagram::parse(kTrefoilPd), Basepoint::edge(1));
    lib.push_back(std::move(f));
  }
  // 11-crossing mutant pair fixtures are appended by build_mutant_fixtures()
  return lib;
}

}  // namespace

const std::vector<Fixture>& fixture_library() {
  static const std::vector<Fixture> lib = build_library();
  return lib;
}

const Fixture& fixture(const std::string& name) {
  for (const Fixture& f : fixture_library())
    if (f.name == name) return f;
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const Fixture& f : fixture_library()) names.push_back(f.name);
  return names;
}

}  // namespace khv
