#include "khv/theories.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace khv {

TheorySpec khovanov_theory() {
  TheorySpec t;
  t.name = "khovanov";
  t.algebra = frobenius_algebra(Relation::x_squared);
  t.filtration = FiltrationRule::homological;
  return t;
}

TheorySpec barnatan_theory() {
  TheorySpec t;
  t.name = "bar-natan";
  t.algebra = frobenius_algebra(Relation::x_squared_plus_x);
  t.filtration = FiltrationRule::quantum;
  return t;
}

namespace {

std::string vertex_bits(std::uint32_t v, int n) {
  std::string s(n, '0');
  for (int k = 0; k < n; ++k)
    if ((v >> k) & 1) s[k] = '1';
  return s;
}

std::uint32_t parse_vertex_bits(const std::string& s, int n) {
  if (int(s.size()) != n)
    throw std::invalid_argument("vertex bit-string '" + s + "' has wrong length");
  std::uint32_t v = 0;
  for (int k = 0; k < n; ++k) {
    if (s[k] == '1') v |= std::uint32_t(1) << k;
    else if (s[k] != '0') throw std::invalid_argument("bad vertex bit-string: " + s);
  }
  return v;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

TheoryComplex::TheoryComplex(const PlanarDiagram& d, const TheorySpec& t, int cap)
    : d_(d), t_(t) {
  d_.validate();
  int n = d_.n_crossings();
  if (n > cap)
    throw std::invalid_argument("diagram has " + std::to_string(n) +
                                " crossings, above the cap of " + std::to_string(cap));
  if (t_.kind == TheoryKind::plugin) {
    if (!t_.has_bound_diagram) throw std::invalid_argument("plugin theory without a diagram");
    if (t_.bound_diagram.crossings != d_.crossings ||
        t_.bound_diagram.free_loops != d_.free_loops)
      throw std::invalid_argument("plugin theory is bound to a different diagram");
  }

  std::vector<int> labels = d_.edge_labels();
  int ne = int(labels.size());
  for (int i = 0; i < ne; ++i) edge_ix_[labels[i]] = i;
  edge_labels_ = labels;
  // dense edge index per crossing slot
  std::vector<std::array<int, 4>> slot_edge(n);
  for (int i = 0; i < n; ++i)
    for (int s = 0; s < 4; ++s) slot_edge[i][s] = edge_ix_.at(d_.crossings[i].e[s]);

  std::uint32_t nv = n_vertices();
  circle_count_.resize(nv);
  edge_circle_.resize(nv);
  std::vector<std::vector<int>> circle_rep(nv);  // first dense edge per edge-circle

  for (std::uint32_t v = 0; v < nv; ++v) {
    UnionFind uf(ne);
    for (int i = 0; i < n; ++i) {
      if ((v >> i) & 1) {  // 1-smoothing joins (a,b) and (c,d)
        uf.unite(slot_edge[i][0], slot_edge[i][1]);
        uf.unite(slot_edge[i][2], slot_edge[i][3]);
      } else {  // 0-smoothing joins (a,d) and (b,c)
        uf.unite(slot_edge[i][0], slot_edge[i][3]);
        uf.unite(slot_edge[i][1], slot_edge[i][2]);
      }
    }
    std::vector<std::int8_t>& ec = edge_circle_[v];
    ec.assign(ne, -1);
    std::vector<int> root_id(ne, -1);
    int next = 0;
    for (int e = 0; e < ne; ++e) {
      int r = uf.find(e);
      if (root_id[r] < 0) {
        root_id[r] = next++;
        circle_rep[v].push_back(e);
      }
      ec[e] = std::int8_t(root_id[r]);
    }
    circle_count_[v] = next + d_.free_loops;
  }

  vertex_base_.resize(nv + 1);
  vertex_base_[0] = 0;
  for (std::uint32_t v = 0; v < nv; ++v)
    vertex_base_[v + 1] = vertex_base_[v] + (std::size_t(1) << circle_count_[v]);

  int n_minus = d_.n_neg(), n_plus = d_.n_pos();
  cx_.resize(vertex_base_[nv]);
  for (std::uint32_t v = 0; v < nv; ++v) {
    int c = circle_count_[v];
    int w = __builtin_popcount(v);
    int h = w - n_minus;
    for (std::uint32_t r = 0; r < (std::uint32_t(1) << c); ++r) {
      std::size_t g = vertex_base_[v] + r;
      int xcount = __builtin_popcount(r);
      cx_.gens[g].h = h;
      cx_.gens[g].q = (c - 2 * xcount) + w + n_plus - 2 * n_minus;
      cx_.gens[g].filt =
          t_.filtration == FiltrationRule::homological ? cx_.gens[g].h : cx_.gens[g].q;
    }
  }

  // edge maps
  for (std::uint32_t v = 0; v < nv; ++v) {
    int cv = circle_count_[v];
    int ecv = cv - d_.free_loops;
    for (int i = 0; i < n; ++i) {
      if ((v >> i) & 1) continue;
      std::uint32_t wv = v | (std::uint32_t(1) << i);
      int cw = circle_count_[wv];
      int ecw = cw - d_.free_loops;
      int c1 = edge_circle_[v][slot_edge[i][0]];
      int c2 = edge_circle_[v][slot_edge[i][1]];
      bool is_merge = (c1 != c2);
      // circle correspondence away from the surgered circles
      std::vector<int> perm(cv, -1);
      for (int s = 0; s < ecv; ++s) {
        if (s == c1 || s == c2) continue;
        perm[s] = edge_circle_[wv][circle_rep[v][s]];
      }
      for (int k = 0; k < d_.free_loops; ++k) perm[ecv + k] = ecw + k;
      // in the 1-smoothing the local arcs pair (a,b) and (c,d)
      int t1 = edge_circle_[wv][slot_edge[i][0]];
      int t2 = edge_circle_[wv][slot_edge[i][2]];

      std::vector<bool> tl(cw);
      for (std::uint32_t r = 0; r < (std::uint32_t(1) << cv); ++r) {
        std::size_t src = vertex_base_[v] + r;
        auto label = [&](int s) -> bool { return (r >> (cv - 1 - s)) & 1; };
        for (int s = 0; s < cv; ++s)
          if (perm[s] >= 0) tl[perm[s]] = label(s);
        if (is_merge) {
          std::uint8_t out = t_.algebra.mul[label(c1)][label(c2)];
          for (int o = 0; o < 2; ++o) {
            if (!(out & (1 << o))) continue;
            tl[t1] = (o == 1);
            std::uint32_t tr = 0;
            for (int j = 0; j < cw; ++j)
              if (tl[j]) tr |= std::uint32_t(1) << (cw - 1 - j);
            cx_.add_entry(std::int32_t(src), std::int32_t(vertex_base_[wv] + tr));
          }
        } else {
          std::uint8_t out = t_.algebra.comul[label(c1)];
          for (int pair = 0; pair < 4; ++pair) {
            if (!(out & (1 << pair))) continue;
            tl[t1] = (pair >> 1) & 1;
            tl[t2] = pair & 1;
            std::uint32_t tr = 0;
            for (int j = 0; j < cw; ++j)
              if (tl[j]) tr |= std::uint32_t(1) << (cw - 1 - j);
            cx_.add_entry(std::int32_t(src), std::int32_t(vertex_base_[wv] + tr));
          }
        }
      }
    }
  }

  // diagonal faces from plugins
  for (const auto& [face, m] : t_.faces) {
    auto [sv, tv] = face;
    if (sv >= nv || tv >= nv) throw std::invalid_argument("plugin face vertex out of range");
    std::size_t scount = std::size_t(1) << circle_count_[sv];
    std::size_t tcount = std::size_t(1) << circle_count_[tv];
    if (m.cols() != scount || m.rows() != tcount)
      throw std::invalid_argument("plugin face matrix at " + vertex_bits(sv, n) + " -> " +
                                  vertex_bits(tv, n) + " has wrong shape");
    for (std::size_t col = 0; col < scount; ++col)
      for (std::size_t row = 0; row < tcount; ++row)
        if (m.get(row, col))
          cx_.add_entry(std::int32_t(vertex_base_[sv] + col),
                        std::int32_t(vertex_base_[tv] + row));
  }

  cx_.sort_entries();
  if (auto bad = cx_.d_squared_witness()) {
    std::uint32_t v = vertex_of(bad->first);
    throw std::invalid_argument("assembled differential has d^2 != 0 at generator vertex=" +
                                vertex_bits(v, n) + " labels=" +
                                std::to_string(bad->first - vertex_base_[v]));
  }
  if (!cx_.d_filtration_ok())
    throw std::invalid_argument("assembled differential decreases the filtration");
}

std::uint32_t TheoryComplex::vertex_of(std::size_t gen) const {
  auto it = std::upper_bound(vertex_base_.begin(), vertex_base_.end(), gen);
  return std::uint32_t(it - vertex_base_.begin()) - 1;
}

bool TheoryComplex::label_x(std::size_t gen, int circle) const {
  std::uint32_t v = vertex_of(gen);
  std::uint32_t r = std::uint32_t(gen - vertex_base_[v]);
  int c = circle_count_[v];
  return (r >> (c - 1 - circle)) & 1;
}

std::size_t TheoryComplex::gen_with_label(std::size_t gen, int circle, bool x) const {
  std::uint32_t v = vertex_of(gen);
  std::uint32_t r = std::uint32_t(gen - vertex_base_[v]);
  int c = circle_count_[v];
  std::uint32_t bit = std::uint32_t(1) << (c - 1 - circle);
  if (x) r |= bit;
  else r &= ~bit;
  return vertex_base_[v] + r;
}

std::size_t TheoryComplex::gen_index(std::uint32_t v, const std::vector<bool>& labels) const {
  int c = circle_count_[v];
  if (int(labels.size()) != c) throw std::invalid_argument("label count mismatch");
  std::uint32_t r = 0;
  for (int j = 0; j < c; ++j)
    if (labels[j]) r |= std::uint32_t(1) << (c - 1 - j);
  return vertex_base_[v] + r;
}

int TheoryComplex::circle_of_edge(std::uint32_t v, int edge_label) const {
  auto it = edge_ix_.find(edge_label);
  if (it == edge_ix_.end())
    throw std::invalid_argument("edge " + std::to_string(edge_label) + " not in diagram");
  return edge_circle_[v][it->second];
}

int TheoryComplex::circle_of(std::uint32_t v, const Basepoint& p) const {
  if (p.on_loop) {
    if (p.id < 0 || p.id >= d_.free_loops) throw std::invalid_argument("loop index out of range");
    return edge_circles(v) + p.id;
  }
  return circle_of_edge(v, p.id);
}

int TheoryComplex::circle_rep_edge(std::uint32_t v, int circle) const {
  const auto& ec = edge_circle_[v];
  for (std::size_t i = 0; i < ec.size(); ++i)
    if (ec[i] == circle) return edge_labels_[i];
  throw std::invalid_argument("circle " + std::to_string(circle) + " has no edges");
}

FilteredComplex build_complex(const PlanarDiagram& d, const TheorySpec& t, int cap) {
  return TheoryComplex(d, t, cap).cx();
}

BigradedDims khovanov(const PlanarDiagram& d, int cap) {
  return homology(build_complex(d, khovanov_theory(), cap));
}

BigradedDims barnatan(const PlanarDiagram& d, int cap) {
  return homology(build_complex(d, barnatan_theory(), cap));
}

TheorySpec parse_plugin_text(const std::string& text) {
  TheorySpec t;
  t.kind = TheoryKind::plugin;
  t.name = "plugin";
  t.filtration = FiltrationRule::homological;

  std::istringstream in(text);
  std::string line;
  bool have_diagram = false, have_relation = false;
  std::vector<int> circle_counts;
  int n = 0;

  auto trim = [](std::string s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };

  std::pair<std::uint32_t, std::uint32_t> face{0, 0};
  std::size_t rows_needed = 0, rows_seen = 0;
  F2Matrix current;

  auto flush_face = [&]() {
    if (rows_needed == 0) return;
    if (rows_seen != rows_needed)
      throw std::invalid_argument("plugin face block ended after " + std::to_string(rows_seen) +
                                  " of " + std::to_string(rows_needed) + " rows");
    if (!t.faces.emplace(face, current).second)
      throw std::invalid_argument("duplicate plugin face");
    rows_needed = rows_seen = 0;
  };

  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("diagram:", 0) == 0) {
      flush_face();
      t.bound_diagram = PlanarDiagram::parse(trim(line.substr(8)));
      t.has_bound_diagram = true;
      have_diagram = true;
      n = t.bound_diagram.n_crossings();
      circle_counts.resize(std::size_t(1) << n);
      for (std::uint32_t v = 0; v < (std::uint32_t(1) << n); ++v)
        circle_counts[v] = resolve(t.bound_diagram, v).count();
      continue;
    }
    if (line.rfind("relation:", 0) == 0) {
      flush_face();
      std::string r = trim(line.substr(9));
      if (r == "x^2") t.algebra = frobenius_algebra(Relation::x_squared);
      else if (r == "x^2+x") t.algebra = frobenius_algebra(Relation::x_squared_plus_x);
      else throw std::invalid_argument("unknown relation '" + r + "' (expected x^2 or x^2+x)");
      have_relation = true;
      continue;
    }
    if (line.rfind("face:", 0) == 0) {
      flush_face();
      if (!have_diagram) throw std::invalid_argument("face block before diagram header");
      std::string rest = trim(line.substr(5));
      std::size_t arrow = rest.find("->");
      if (arrow == std::string::npos) throw std::invalid_argument("face line missing '->'");
      std::uint32_t sv = parse_vertex_bits(trim(rest.substr(0, arrow)), n);
      std::uint32_t tv = parse_vertex_bits(trim(rest.substr(arrow + 2)), n);
      if ((sv & tv) != sv)
        throw std::invalid_argument("face vertices are not comparable");
      int dim = __builtin_popcount(tv) - __builtin_popcount(sv);
      if (dim < 2)
        throw std::invalid_argument(
            "plugin faces must have dimension >= 2 (edge maps come from the algebra)");
      face = {sv, tv};
      rows_needed = std::size_t(1) << circle_counts[tv];
      rows_seen = 0;
      current = F2Matrix(rows_needed, std::size_t(1) << circle_counts[sv]);
      continue;
    }
    // matrix row
    if (rows_needed == 0) throw std::invalid_argument("unexpected line: " + line);
    if (line.size() != current.cols())
      throw std::invalid_argument("face row has length " + std::to_string(line.size()) +
                                  ", expected " + std::to_string(current.cols()));
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (line[c] == '1') current.set(rows_seen, c, true);
      else if (line[c] != '0') throw std::invalid_argument("face rows must be 0/1 strings");
    }
    if (++rows_seen == rows_needed) flush_face();
  }
  flush_face();
  if (!have_diagram) throw std::invalid_argument("plugin missing diagram header");
  if (!have_relation) throw std::invalid_argument("plugin missing relation header");
  return t;
}

TheorySpec load_plugin(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open plugin file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  TheorySpec t = parse_plugin_text(ss.str());
  // eager d^2 = 0 verification on the declared diagram
  TheoryComplex check(t.bound_diagram, t, std::max(kDefaultCrossingCap, t.bound_diagram.n_crossings()));
  return t;
}

std::string plugin_text(const TheorySpec& t) {
  if (!t.has_bound_diagram) throw std::invalid_argument("plugin_text: theory has no diagram");
  std::ostringstream os;
  int n = t.bound_diagram.n_crossings();
  os << "diagram: " << t.bound_diagram.pd_text() << "\n";
  os << "relation: "
     << (t.algebra.relation == Relation::x_squared ? "x^2" : "x^2+x") << "\n";
  for (const auto& [face, m] : t.faces) {
    os << "face: " << vertex_bits(face.first, n) << " -> " << vertex_bits(face.second, n) << "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) os << (m.get(r, c) ? '1' : '0');
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace khv
