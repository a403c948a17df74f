#include "khv/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace khv {

std::string Basepoint::str() const {
  return (on_loop ? "o" : "e") + std::to_string(id);
}

Basepoint Basepoint::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty basepoint");
  std::size_t pos = 0;
  bool on_loop = false;
  if (s[0] == 'e' || s[0] == 'o') {
    on_loop = (s[0] == 'o');
    pos = 1;
  }
  int id = 0;
  if (pos >= s.size()) throw std::invalid_argument("bad basepoint: " + s);
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos])))
      throw std::invalid_argument("bad basepoint: " + s);
    id = id * 10 + (s[pos] - '0');
  }
  return {on_loop, id};
}

PlanarDiagram PlanarDiagram::parse(const std::string& text) {
  PlanarDiagram d;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto skip_sep = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  auto read_int = [&]() -> int {
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw std::invalid_argument("expected integer in PD code at offset " +
                                                std::to_string(start));
    return std::stoi(text.substr(start, i - start));
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c)
      throw std::invalid_argument(std::string("expected '") + c + "' in PD code");
    ++i;
  };
  while (true) {
    skip_sep();
    if (i >= text.size()) break;
    char tok = text[i];
    if (tok == 'X' || tok == 'x') {
      ++i;
      expect('(');
      Crossing cr;
      for (int k = 0; k < 4; ++k) {
        cr.e[k] = read_int();
        if (cr.e[k] <= 0) throw std::invalid_argument("edge labels must be positive");
        if (k < 3) expect(',');
      }
      expect(')');
      d.crossings.push_back(cr);
    } else if (tok == 'O' || tok == 'o') {
      ++i;
      expect('(');
      int k = read_int();
      expect(')');
      if (k < 0) throw std::invalid_argument("free loop count must be nonnegative");
      d.free_loops += k;
    } else {
      throw std::invalid_argument(std::string("unexpected token '") + tok + "' in PD code");
    }
  }
  d.validate();
  d.infer_orientation();
  return d;
}

std::string PlanarDiagram::pd_text() const {
  std::string out;
  for (const Crossing& c : crossings) {
    if (!out.empty()) out += " ";
    out += "X(" + std::to_string(c.e[0]) + "," + std::to_string(c.e[1]) + "," +
           std::to_string(c.e[2]) + "," + std::to_string(c.e[3]) + ")";
  }
  if (free_loops > 0) {
    if (!out.empty()) out += " ";
    out += "O(" + std::to_string(free_loops) + ")";
  }
  return out;
}

std::string PlanarDiagram::to_json_text() const {
  nlohmann::json j;
  j["crossings"] = nlohmann::json::array();
  j["orientation"] = nlohmann::json::array();
  for (const Crossing& c : crossings) {
    j["crossings"].push_back({c.e[0], c.e[1], c.e[2], c.e[3]});
    j["orientation"].push_back(c.over_in_b);
  }
  j["free_loops"] = free_loops;
  j["basepoints"] = nlohmann::json::array();
  for (const Basepoint& p : basepoints) j["basepoints"].push_back(p.str());
  return j.dump(2);
}

PlanarDiagram PlanarDiagram::from_json_text(const std::string& doc) {
  nlohmann::json j = nlohmann::json::parse(doc);
  PlanarDiagram d;
  for (auto& arr : j.at("crossings")) {
    Crossing c;
    for (int k = 0; k < 4; ++k) c.e[k] = arr.at(k).get<int>();
    d.crossings.push_back(c);
  }
  if (j.contains("orientation")) {
    auto& ori = j.at("orientation");
    if (ori.size() != d.crossings.size())
      throw std::invalid_argument("orientation length mismatch");
    for (std::size_t k = 0; k < d.crossings.size(); ++k)
      d.crossings[k].over_in_b = ori.at(k).get<bool>();
  }
  d.free_loops = j.value("free_loops", 0);
  if (j.contains("basepoints"))
    for (auto& s : j.at("basepoints"))
      d.basepoints.push_back(Basepoint::parse(s.get<std::string>()));
  d.validate();
  if (!j.contains("orientation")) d.infer_orientation();
  return d;
}

void PlanarDiagram::validate() const {
  std::map<int, int> count;
  for (const Crossing& c : crossings)
    for (int k = 0; k < 4; ++k) {
      if (c.e[k] <= 0) throw std::invalid_argument("edge labels must be positive");
      ++count[c.e[k]];
    }
  for (auto& [label, n] : count)
    if (n != 2)
      throw std::invalid_argument("edge " + std::to_string(label) + " occurs " +
                                  std::to_string(n) + " times (expected 2)");
  for (const Basepoint& p : basepoints) {
    if (p.on_loop) {
      if (p.id < 0 || p.id >= free_loops)
        throw std::invalid_argument("basepoint on missing loop " + std::to_string(p.id));
    } else if (!count.count(p.id)) {
      throw std::invalid_argument("basepoint on missing edge " + std::to_string(p.id));
    }
  }
}

namespace {
// role of an occurrence: 0 unknown, 1 head (flows into the crossing), 2 tail
constexpr int kHead = 1, kTail = 2;

int forced_role(int slot, int bit /* -1 unknown, 0, 1 */) {
  if (slot == 0) return kHead;
  if (slot == 2) return kTail;
  if (bit == -1) return 0;
  if (slot == 1) return bit ? kHead : kTail;
  return bit ? kTail : kHead;  // slot 3
}
}  // namespace

// Strand directions are re-derived from scratch: the under-strand direction
// of each crossing is itself an unknown (diagram surgery can reverse strands
// through a tangle), so tuples whose under-strand comes out reversed are
// rotated by two back into the normal form "a = incoming under".
void PlanarDiagram::infer_orientation() {
  auto occ = occurrences();
  int n = n_crossings();
  // under[ci]: -1 unknown, 0 a->c, 1 c->a; over[ci]: -1 unknown, 0 d->b, 1 b->d
  std::vector<int> under(n, -1), over(n, -1);

  auto role_of = [&](const EdgeOcc& o) -> int {
    if (o.slot == 0 || o.slot == 2) {
      int u = under[o.crossing];
      if (u == -1) return 0;
      bool head = (o.slot == 0) == (u == 0);
      return head ? kHead : kTail;
    }
    int b = over[o.crossing];
    if (b == -1) return 0;
    bool head = (o.slot == 1) == (b == 1);
    return head ? kHead : kTail;
  };

  std::deque<int> queue;
  auto set_under = [&](int ci, int dir) {
    if (under[ci] == dir) return;
    if (under[ci] != -1)
      throw std::invalid_argument("inconsistent orientation at crossing " + std::to_string(ci));
    under[ci] = dir;
    queue.push_back(crossings[ci].e[0]);
    queue.push_back(crossings[ci].e[2]);
  };
  auto set_over = [&](int ci, int dir) {
    if (over[ci] == dir) return;
    if (over[ci] != -1)
      throw std::invalid_argument("inconsistent orientation at crossing " + std::to_string(ci));
    over[ci] = dir;
    queue.push_back(crossings[ci].e[1]);
    queue.push_back(crossings[ci].e[3]);
  };

  auto propagate = [&] {
    while (!queue.empty()) {
      int label = queue.front();
      queue.pop_front();
      auto& os = occ[label];
      int r0 = role_of(os[0]), r1 = role_of(os[1]);
      if (r0 && r1) {
        if (r0 == r1)
          throw std::invalid_argument("inconsistent orientation on edge " + std::to_string(label));
        continue;
      }
      if (!r0 && !r1) continue;
      const EdgeOcc& known = r0 ? os[0] : os[1];
      const EdgeOcc& open = r0 ? os[1] : os[0];
      bool need_head = role_of(known) == kTail;
      if (open.slot == 0 || open.slot == 2) {
        set_under(open.crossing, ((open.slot == 0) == need_head) ? 0 : 1);
      } else {
        set_over(open.crossing, ((open.slot == 1) == need_head) ? 1 : 0);
      }
    }
  };

  for (int ci = 0; ci < n; ++ci) {
    if (under[ci] == -1) {
      set_under(ci, 0);
      propagate();
    }
    if (over[ci] == -1) {
      // component that never passes under here: orient by increasing labels
      int b_e = crossings[ci].e[1], d_e = crossings[ci].e[3];
      set_over(ci, (d_e == b_e + 1 || b_e > d_e + 1) ? 1 : 0);
      propagate();
    }
  }

  for (int ci = 0; ci < n; ++ci) {
    Crossing& c = crossings[ci];
    if (under[ci] == 1) {  // normalize: rotate so the incoming under edge is first
      c.e = {c.e[2], c.e[3], c.e[0], c.e[1]};
      c.over_in_b = (over[ci] == 0);
    } else {
      c.over_in_b = (over[ci] == 1);
    }
  }
}

int PlanarDiagram::edge_count() const {
  return static_cast<int>(edge_labels().size());
}

std::vector<int> PlanarDiagram::edge_labels() const {
  std::set<int> s;
  for (const Crossing& c : crossings) s.insert(c.e.begin(), c.e.end());
  return {s.begin(), s.end()};
}

bool PlanarDiagram::has_edge(int label) const {
  for (const Crossing& c : crossings)
    for (int k = 0; k < 4; ++k)
      if (c.e[k] == label) return true;
  return false;
}

bool PlanarDiagram::has_basepoint(const Basepoint& p) const {
  return std::find(basepoints.begin(), basepoints.end(), p) != basepoints.end();
}

int PlanarDiagram::n_pos() const {
  int n = 0;
  for (const Crossing& c : crossings) n += c.positive() ? 1 : 0;
  return n;
}

int PlanarDiagram::max_edge_label() const {
  int m = 0;
  for (const Crossing& c : crossings)
    for (int k = 0; k < 4; ++k) m = std::max(m, c.e[k]);
  return m;
}

std::map<int, std::vector<EdgeOcc>> PlanarDiagram::occurrences() const {
  std::map<int, std::vector<EdgeOcc>> occ;
  for (int ci = 0; ci < n_crossings(); ++ci)
    for (int s = 0; s < 4; ++s)
      occ[crossings[ci].e[s]].push_back({ci, s});
  return occ;
}

std::vector<std::vector<int>> PlanarDiagram::components() const {
  auto occ = occurrences();
  // successor through each crossing at the head occurrence
  std::map<int, int> succ;
  for (auto& [label, os] : occ) {
    int heads = 0;
    for (const EdgeOcc& o : os) {
      const Crossing& c = crossings[o.crossing];
      int role = forced_role(o.slot, c.over_in_b ? 1 : 0);
      if (role == kHead) {
        ++heads;
        succ[label] = (o.slot == 0) ? c.e[2] : (o.slot == 1 ? c.e[3] : c.e[1]);
      }
    }
    if (heads != 1)
      throw std::invalid_argument("orientation data inconsistent on edge " + std::to_string(label));
  }
  std::vector<std::vector<int>> comps;
  std::set<int> seen;
  for (auto& [label, next] : succ) {
    (void)next;
    if (seen.count(label)) continue;
    std::vector<int> comp;
    int cur = label;
    do {
      comp.push_back(cur);
      seen.insert(cur);
      cur = succ.at(cur);
    } while (cur != label);
    comps.push_back(std::move(comp));
  }
  return comps;
}

int PlanarDiagram::component_of_edge(int label) const {
  auto comps = components();
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (std::find(comps[i].begin(), comps[i].end(), label) != comps[i].end())
      return static_cast<int>(i);
  return -1;
}

bool PlanarDiagram::operator==(const PlanarDiagram& o) const {
  return crossings == o.crossings && free_loops == o.free_loops && basepoints == o.basepoints;
}

namespace {
int partner_slot(bool one_smoothing, int slot) {
  // 0-smoothing joins (a,d) and (b,c); 1-smoothing joins (a,b) and (c,d)
  static constexpr int zero[4] = {3, 2, 1, 0};
  static constexpr int one[4] = {1, 0, 3, 2};
  return one_smoothing ? one[slot] : zero[slot];
}
}  // namespace

Resolution resolve(const PlanarDiagram& d, std::uint32_t vertex) {
  int n = d.n_crossings();
  if (n < 32 && vertex >= (std::uint32_t(1) << n))
    throw std::invalid_argument("resolution vertex out of range");
  auto occ = d.occurrences();
  Resolution res;
  res.vertex = vertex;
  std::set<int> visited;
  for (auto& [start, os] : occ) {
    if (visited.count(start)) continue;
    std::vector<int> circle;
    // virtually enter through os[1], so the first exit is os[0]
    int cur = start;
    EdgeOcc entry = os[1];
    while (true) {
      circle.push_back(cur);
      visited.insert(cur);
      auto& cur_os = occ[cur];
      EdgeOcc exit = (cur_os[0] == entry) ? cur_os[1] : cur_os[0];
      bool smooth1 = (vertex >> exit.crossing) & 1;
      int pslot = partner_slot(smooth1, exit.slot);
      EdgeOcc next_entry{exit.crossing, pslot};
      int next = d.crossings[exit.crossing].e[pslot];
      if (next == start && next_entry == os[1]) break;
      cur = next;
      entry = next_entry;
    }
    res.circles.push_back(std::move(circle));
  }
  res.n_edge_circles = static_cast<int>(res.circles.size());
  for (int k = 0; k < d.free_loops; ++k) res.circles.emplace_back();
  return res;
}

int Resolution::circle_of_edge(int label) const {
  for (int i = 0; i < n_edge_circles; ++i)
    if (std::find(circles[i].begin(), circles[i].end(), label) != circles[i].end()) return i;
  throw std::invalid_argument("edge " + std::to_string(label) + " not in resolution");
}

Axis axis_from_string(const std::string& s) {
  if (s == "x") return Axis::x;
  if (s == "y") return Axis::y;
  if (s == "z") return Axis::z;
  throw std::invalid_argument("axis must be one of x, y, z");
}

std::string axis_to_string(Axis a) {
  switch (a) {
    case Axis::x: return "x";
    case Axis::y: return "y";
    case Axis::z: return "z";
  }
  return "?";
}

PlanarDiagram disjoint_union(const PlanarDiagram& d1, const PlanarDiagram& d2) {
  PlanarDiagram out = d1;
  int off = d1.max_edge_label();
  for (Crossing c : d2.crossings) {
    for (int k = 0; k < 4; ++k) c.e[k] += off;
    out.crossings.push_back(c);
  }
  out.free_loops += d2.free_loops;
  for (Basepoint p : d2.basepoints) {
    if (p.on_loop) p.id += d1.free_loops;
    else p.id += off;
    out.basepoints.push_back(p);
  }
  return out;
}

namespace {
EdgeOcc find_role_occ(const PlanarDiagram& d, int label, bool want_head) {
  for (const auto& [l, os] : d.occurrences()) {
    if (l != label) continue;
    for (const EdgeOcc& o : os) {
      int role = forced_role(o.slot, d.crossings[o.crossing].over_in_b ? 1 : 0);
      if ((role == kHead) == want_head) return o;
    }
  }
  throw std::invalid_argument("edge " + std::to_string(label) + " not found");
}

void drop_loop(PlanarDiagram& d, int loop_index) {
  d.free_loops -= 1;
  for (Basepoint& p : d.basepoints)
    if (p.on_loop && p.id > loop_index) p.id -= 1;
}

void dedup_basepoints(PlanarDiagram& d) {
  std::vector<Basepoint> out;
  for (const Basepoint& p : d.basepoints)
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  d.basepoints = out;
}
}  // namespace

PlanarDiagram connected_sum(const PlanarDiagram& d1, const Basepoint& p,
                            const PlanarDiagram& d2, const Basepoint& q) {
  if (p.on_loop ? (p.id < 0 || p.id >= d1.free_loops) : !d1.has_edge(p.id))
    throw std::invalid_argument("connected_sum: p not on first diagram");
  if (q.on_loop ? (q.id < 0 || q.id >= d2.free_loops) : !d2.has_edge(q.id))
    throw std::invalid_argument("connected_sum: q not on second diagram");

  auto remap = [](PlanarDiagram& d, const Basepoint& from, const Basepoint& to) {
    for (Basepoint& b : d.basepoints)
      if (b == from) b = to;
  };
  if (p.on_loop && q.on_loop) {
    // joining two crossingless circles yields one: the merged circle keeps
    // p's ordinal, matching the one-handle convention
    PlanarDiagram out = disjoint_union(d1, d2);
    int removed = d1.free_loops + q.id;
    remap(out, Basepoint::loop(removed), Basepoint::loop(p.id));
    drop_loop(out, removed);
    out.basepoints.push_back(Basepoint::loop(p.id));
    dedup_basepoints(out);
    return out;
  }
  if (p.on_loop) {
    PlanarDiagram out = disjoint_union(d1, d2);
    Basepoint seam = Basepoint::edge(q.id + d1.max_edge_label());
    remap(out, Basepoint::loop(p.id), seam);
    drop_loop(out, p.id);
    out.basepoints.push_back(seam);
    dedup_basepoints(out);
    return out;
  }
  if (q.on_loop) {
    PlanarDiagram out = disjoint_union(d1, d2);
    int removed = d1.free_loops + q.id;
    remap(out, Basepoint::loop(removed), Basepoint::edge(p.id));
    drop_loop(out, removed);
    out.basepoints.push_back(Basepoint::edge(p.id));
    dedup_basepoints(out);
    return out;
  }

  PlanarDiagram out = disjoint_union(d1, d2);
  int off = d1.max_edge_label();
  int ep = p.id, eq = q.id + off;
  // cut both marked edges and reconnect head-to-tail
  EdgeOcc ep_head = find_role_occ(out, ep, true);
  EdgeOcc eq_head = find_role_occ(out, eq, true);
  out.crossings[eq_head.crossing].e[eq_head.slot] = ep;
  out.crossings[ep_head.crossing].e[ep_head.slot] = eq;
  out.basepoints.push_back(Basepoint::edge(ep));
  out.basepoints.push_back(Basepoint::edge(eq));
  dedup_basepoints(out);
  out.validate();
  return out;
}

SmoothedDiagram smooth_crossing(const PlanarDiagram& d, int crossing, bool one_smoothing) {
  if (crossing < 0 || crossing >= d.n_crossings())
    throw std::invalid_argument("smooth_crossing: index out of range");
  const Crossing removed = d.crossings[crossing];
  SmoothedDiagram out;
  out.d = d;
  out.d.crossings.erase(out.d.crossings.begin() + crossing);

  // 0-smoothing joins (a,d) and (b,c); 1-smoothing joins (a,b) and (c,d)
  std::array<std::pair<int, int>, 2> arcs;
  if (one_smoothing) arcs = {{{removed.e[0], removed.e[1]}, {removed.e[2], removed.e[3]}}};
  else arcs = {{{removed.e[0], removed.e[3]}, {removed.e[1], removed.e[2]}}};

  std::map<int, int> label_map;
  auto mapped = [&](int label) {
    auto it = label_map.find(label);
    return it == label_map.end() ? label : it->second;
  };
  std::array<Basepoint, 2> marks;
  for (int k = 0; k < 2; ++k) {
    int x = mapped(arcs[k].first), y = mapped(arcs[k].second);
    if (x == y) {
      // the arc closes this edge into a crossingless circle
      marks[k] = Basepoint::loop(out.d.free_loops);
      out.d.free_loops += 1;
      for (Basepoint& b : out.d.basepoints)
        if (!b.on_loop && mapped(b.id) == x) b = marks[k];
    } else {
      int keep = std::min(x, y), drop = std::max(x, y);
      for (auto& [from, to] : label_map)
        if (to == drop) to = keep;
      label_map[drop] = keep;
      marks[k] = Basepoint::edge(keep);
    }
  }
  for (Crossing& c : out.d.crossings)
    for (int s = 0; s < 4; ++s) c.e[s] = mapped(c.e[s]);
  for (Basepoint& b : out.d.basepoints)
    if (!b.on_loop) b.id = mapped(b.id);
  dedup_basepoints(out.d);
  out.d.validate();
  out.d.infer_orientation();
  out.mark1 = marks[0];
  out.mark2 = marks[1];
  return out;
}

PlanarDiagram mirror(const PlanarDiagram& d) {
  PlanarDiagram out = d;
  for (Crossing& c : out.crossings) {
    auto e = c.e;
    if (c.over_in_b) {
      c.e = {e[1], e[2], e[3], e[0]};
      c.over_in_b = false;
    } else {
      c.e = {e[3], e[0], e[1], e[2]};
      c.over_in_b = true;
    }
  }
  return out;
}

PlanarDiagram mutate(const PlanarDiagram& d, const TangleRegion& region, Axis axis) {
  for (int label : region.boundary)
    if (!d.has_edge(label))
      throw std::invalid_argument("tangle boundary edge " + std::to_string(label) +
                                  " not in diagram");
  std::set<int> interior(region.interior.begin(), region.interior.end());
  if (interior.size() != region.interior.size())
    throw std::invalid_argument("duplicate interior crossing");
  for (int ci : interior)
    if (ci < 0 || ci >= d.n_crossings())
      throw std::invalid_argument("interior crossing index out of range");

  if (interior.empty()) return d;  // rotating an empty tangle is a planar isotopy

  // cut-set check: edges with exactly one interior occurrence = the boundary
  std::map<int, int> interior_count;
  for (int ci : interior)
    for (int k = 0; k < 4; ++k) interior_count[d.crossings[ci].e[k]] += 1;
  std::set<int> boundary_set(region.boundary.begin(), region.boundary.end());
  if (boundary_set.size() != 4)
    throw std::invalid_argument("tangle boundary must list four distinct edges");
  for (auto& [label, cnt] : interior_count) {
    if (cnt == 1 && !boundary_set.count(label))
      throw std::invalid_argument("edge " + std::to_string(label) +
                                  " crosses the tangle boundary but is not listed");
    if (cnt == 2 && boundary_set.count(label))
      throw std::invalid_argument("boundary edge " + std::to_string(label) +
                                  " lies inside the tangle");
  }
  for (int label : boundary_set)
    if (interior_count.find(label) == interior_count.end() || interior_count[label] != 1)
      throw std::invalid_argument("boundary edge " + std::to_string(label) +
                                  " does not cross the tangle boundary once");

  PlanarDiagram out = d;
  // 180-degree rotation: x and y flip the tangle over, so the over-strand
  // becomes the under-strand and the cyclic order reverses; z is in-plane and
  // leaves tuples alone. Strand directions are renormalized afterwards.
  if (axis != Axis::z) {
    for (int ci : interior) {
      Crossing& c = out.crossings[ci];
      auto e = c.e;
      c.e = {e[1], e[0], e[3], e[2]};
    }
  }
  // reattach boundary ends: position k's interior end joins exterior stub sigma(k)
  static constexpr int sigma_z[4] = {2, 3, 0, 1};  // NW<->SE, NE<->SW
  static constexpr int sigma_y[4] = {1, 0, 3, 2};  // NW<->NE, SE<->SW
  static constexpr int sigma_x[4] = {3, 2, 1, 0};  // NW<->SW, NE<->SE
  const int* sigma = axis == Axis::z ? sigma_z : (axis == Axis::y ? sigma_y : sigma_x);

  struct Patch { int crossing, slot, new_label; };
  std::vector<Patch> patches;
  for (int k = 0; k < 4; ++k) {
    int label = region.boundary[k];
    bool found = false;
    for (int ci : interior) {
      for (int s = 0; s < 4; ++s) {
        if (out.crossings[ci].e[s] == label) {
          patches.push_back({ci, s, region.boundary[sigma[k]]});
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) throw std::invalid_argument("boundary edge lost during mutation");
  }
  for (const Patch& p : patches) out.crossings[p.crossing].e[p.slot] = p.new_label;

  out.validate();
  out.infer_orientation();
  return out;
}

}  // namespace khv
