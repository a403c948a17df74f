#include "khv/spectral.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace khv {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

// All staircase ranks of one block of the differential, from a single
// persistence-style column reduction. Rows and columns are sorted by
// descending filtration; rank(rows with filt < x, cols with filt >= y) is
// recovered from the pivot positions.
class StaircaseRanks {
public:
  StaircaseRanks(const FilteredComplex& c, const std::vector<int>& col_gens,
                 const std::vector<int>& row_gens) {
    auto by_filt_desc = [&](int a, int b) {
      return c.gens[a].filt != c.gens[b].filt ? c.gens[a].filt > c.gens[b].filt : a < b;
    };
    std::vector<int> cols = col_gens, rows = row_gens;
    std::sort(cols.begin(), cols.end(), by_filt_desc);
    std::sort(rows.begin(), rows.end(), by_filt_desc);
    col_filts_.reserve(cols.size());
    for (int g : cols) col_filts_.push_back(c.gens[g].filt);
    row_filts_.reserve(rows.size());
    for (int g : rows) row_filts_.push_back(c.gens[g].filt);

    std::vector<int> row_pos(c.size(), -1);
    for (std::size_t i = 0; i < rows.size(); ++i) row_pos[rows[i]] = int(i);

    // column reduction with unique lowest pivots
    std::vector<F2Vec> reduced;
    std::vector<int> pivot_owner(rows.size(), -1);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      F2Vec col(rows.size());
      for (std::int32_t t : c.d_cols[cols[j]]) {
        if (row_pos[t] >= 0) col.flip(row_pos[t]);
      }
      int low = lowest(col);
      while (low >= 0 && pivot_owner[low] >= 0) {
        col ^= reduced[pivot_owner[low]];
        low = lowest(col);
      }
      if (low >= 0) {
        pivot_owner[low] = int(reduced.size());
        reduced.push_back(col);
        pivots_.push_back({low, int(j)});
      } else {
        reduced.push_back(std::move(col));
      }
    }
  }

  // rank of the submatrix (rows with filt < x) x (cols with filt >= y)
  int rank(int x, int y) const {
    int c_limit = prefix_count(col_filts_, y);
    int r_start = prefix_count(row_filts_, x);  // rows with filt >= x are a prefix
    int r = 0;
    for (auto& [low, col] : pivots_)
      if (col < c_limit && low >= r_start) ++r;
    return r;
  }

  // dim(F_y within the columns)
  int col_count(int y) const { return prefix_count(col_filts_, y); }

private:
  static int lowest(const F2Vec& v) { return v.highest_set(); }
  static int prefix_count(const std::vector<int>& filts_desc, int y) {
    // number of entries with filt >= y
    int lo = 0, hi = int(filts_desc.size());
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      if (filts_desc[mid] >= y) lo = mid + 1;
      else hi = mid;
    }
    return lo;
  }

  std::vector<int> col_filts_, row_filts_;
  std::vector<std::pair<int, int>> pivots_;  // (low row index, column index)
};

}  // namespace

SpectralSequence leray_pages(const FilteredComplex& c, int k_max) {
  int min_step = 0;
  if (!c.d_filtration_ok(&min_step))
    throw std::invalid_argument("leray_pages: differential decreases the filtration");

  // complementary grading preserved (up to a fixed step) by d
  bool use_q = c.d_preserves_q();
  bool use_h = !use_q && c.d_h_step_one();
  int t_step = use_q ? 0 : (use_h ? 1 : 0);

  SpectralSequence ss;
  bool strictly_raising = true;
  bool has_entries = false;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::int32_t t : c.d_cols[i]) {
      has_entries = true;
      if (c.gens[t].filt - c.gens[i].filt < 1) strictly_raising = false;
    }
  ss.index_shift = (!has_entries || strictly_raising) ? 1 : 0;

  int fmin = 0, fmax = 0;
  if (c.size()) {
    fmin = fmax = c.gens[0].filt;
    for (const GradedGen& g : c.gens) {
      fmin = std::min(fmin, g.filt);
      fmax = std::max(fmax, g.filt);
    }
  }
  int width = fmax - fmin + 1;
  if (k_max < 0) k_max = width + 1;

  // group generators by the complementary grading
  std::map<int, std::vector<int>> groups;
  for (std::size_t i = 0; i < c.size(); ++i)
    groups[use_q ? c.gens[i].q : (use_h ? c.gens[i].h : 0)].push_back(int(i));

  std::map<int, StaircaseRanks> ranks;  // per source grading g: block g -> g + t
  for (auto& [g, cols] : groups) {
    auto it = groups.find(g + t_step);
    static const std::vector<int> empty;
    const std::vector<int>& rows = (t_step == 0) ? cols : (it == groups.end() ? empty : it->second);
    ranks.emplace(g, StaircaseRanks(c, cols, rows));
  }

  auto z_dim = [&](int g, int p, int r) -> int {
    // dim(F_p intersect d^{-1} F_{p+r}) within grading g
    auto it = ranks.find(g);
    if (it == ranks.end()) return 0;
    long long pr = std::min<long long>(static_cast<long long>(p) + r, kInf);
    return it->second.col_count(p) - it->second.rank(int(pr), p);
  };
  auto key_of = [&](int g, int p) -> std::pair<int, int> {
    if (use_q) return {p, g};   // homological-style filtration: p plays h
    if (use_h) return {g, p};   // quantum filtration: p plays q
    return {p, 0};
  };

  auto page_dims = [&](int r) {
    SpectralPage page;
    for (auto& [g, gens] : groups) {
      (void)gens;
      for (int p = fmin; p <= fmax; ++p) {
        int t1 = z_dim(g, p, r);
        int t2 = z_dim(g, p + 1, r - 1);
        // boundary terms arrive from the complementary grading g - t
        int gsrc = g - t_step;
        int t3 = 0, t4 = 0;
        auto it = ranks.find(gsrc);
        if (it != ranks.end()) {
          int y = p - r + 1;
          int k_full = it->second.rank(kInf, y);
          t3 = k_full - it->second.rank(p, y);
          t4 = k_full - it->second.rank(p + 1, y);
        }
        int dim = t1 - t2 - t3 + t4;
        if (dim > 0) page.dims.add(key_of(g, p).first, key_of(g, p).second, dim);
        // rank of d_r out of (p, g)
        int rank_out = (z_dim(g, p, r) - z_dim(g, p, r + 1)) -
                       (z_dim(g, p + 1, r - 1) - z_dim(g, p + 1, r));
        if (rank_out > 0) page.differential_rank[key_of(g, p)] = rank_out;
      }
    }
    return page;
  };

  for (int k = 0; k <= k_max; ++k) {
    SpectralPage page = page_dims(k + ss.index_shift);
    page.k = k;
    ss.pages.push_back(std::move(page));
    if (ss.stabilized_at < 0 && ss.pages.size() >= 2 &&
        ss.pages[ss.pages.size() - 2].dims == ss.pages.back().dims)
      ss.stabilized_at = int(ss.pages.size()) - 2;
  }
  ss.e_infinity = page_dims(width + 2).dims;
  return ss;
}

TwinArrowsReport twin_arrows_check(const TheoryComplex& tc, const Basepoint& p, int k_max) {
  if (tc.theory().algebra.relation != Relation::x_squared)
    throw std::invalid_argument("twin_arrows_check: requires the relation x^2");
  TwinArrowsReport rep;
  if (k_max < 0) k_max = tc.n_crossings() + 1;
  ReducedComplex red = reduced(tc, p);
  rep.host = leray_pages(tc.cx(), k_max);
  rep.red = leray_pages(red.cx, k_max);
  rep.pass = true;
  rep.pages_checked = k_max + 1;
  for (int k = 0; k <= k_max; ++k) {
    const BigradedDims& h = rep.host.pages[k].dims;
    const BigradedDims& r = rep.red.pages[k].dims;
    if (!(h == r.shifted(0, 1) + r.shifted(0, -1))) {
      rep.pass = false;
      rep.failing_page = k;
      break;
    }
  }
  return rep;
}

}  // namespace khv
