#include "doctest.h"

#include <stdexcept>

#include "khv/spectral.hpp"
#include "khv/theories.hpp"

using namespace khv;

static const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
static const char* kFig8 = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

namespace {

// Brute-force page dimensions straight from the subspace formula, with plain
// rank computations; the independent oracle for the staircase engine.
int brute_page_dim(const FilteredComplex& c, int grading, bool grade_by_q, int p, int r) {
  auto in_group = [&](std::size_t i) {
    return grade_by_q ? c.gens[i].q == grading : c.gens[i].h == grading;
  };
  int t_step = grade_by_q ? 0 : 1;
  auto in_target = [&](std::size_t i) {
    return grade_by_q ? c.gens[i].q == grading : c.gens[i].h == grading + t_step;
  };
  auto dim_z = [&](int pp, int rr) {
    // dim(F_pp  intersect d^{-1} F_{pp+rr}) in the group
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (in_group(i) && c.gens[i].filt >= pp) cols.push_back(i);
    std::vector<std::size_t> rows;  // targets outside F_{pp+rr}
    for (std::size_t i = 0; i < c.size(); ++i)
      if (in_target(i) && c.gens[i].filt < pp + rr) rows.push_back(i);
    F2Matrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::int32_t t : c.d_cols[cols[j]])
        for (std::size_t ri = 0; ri < rows.size(); ++ri)
          if (std::size_t(t) == rows[ri]) m.flip(ri, j);
    return int(cols.size()) - int(m.rank());
  };
  auto dim_b = [&](int pp, int y) {
    // dim(d F_y  intersect F_pp) arriving in the group
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < c.size(); ++i) {
      bool src_group = grade_by_q ? c.gens[i].q == grading : c.gens[i].h == grading - t_step;
      if (src_group && c.gens[i].filt >= y) cols.push_back(i);
    }
    std::vector<std::size_t> all_rows, out_rows;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (in_group(i)) {
        all_rows.push_back(i);
        if (c.gens[i].filt < pp) out_rows.push_back(i);
      }
    auto rank_of = [&](const std::vector<std::size_t>& rows) {
      F2Matrix m(rows.size(), cols.size());
      for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::int32_t t : c.d_cols[cols[j]])
          for (std::size_t ri = 0; ri < rows.size(); ++ri)
            if (std::size_t(t) == rows[ri]) m.flip(ri, j);
      return int(m.rank());
    };
    return rank_of(all_rows) - rank_of(out_rows);
  };
  return dim_z(p, r) - dim_z(p + 1, r - 1) - dim_b(p, p - r + 1) + dim_b(p + 1, p - r + 1);
}

BigradedDims brute_page(const FilteredComplex& c, int std_r) {
  bool grade_by_q = c.d_preserves_q();
  BigradedDims out;
  std::vector<int> gradings, filts;
  for (const GradedGen& g : c.gens) {
    gradings.push_back(grade_by_q ? g.q : g.h);
    filts.push_back(g.filt);
  }
  std::sort(gradings.begin(), gradings.end());
  gradings.erase(std::unique(gradings.begin(), gradings.end()), gradings.end());
  std::sort(filts.begin(), filts.end());
  filts.erase(std::unique(filts.begin(), filts.end()), filts.end());
  for (int g : gradings)
    for (int p : filts) {
      int dim = brute_page_dim(c, g, grade_by_q, p, std_r);
      if (dim > 0) {
        if (grade_by_q) out.add(p, g, dim);
        else out.add(g, p, dim);
      }
    }
  return out;
}

}  // namespace

TEST_CASE("pages of a zero differential are the chain dims") {
  FilteredComplex c;
  c.resize(3);
  c.gens[0] = {0, 1, 0};
  c.gens[1] = {1, 1, 1};
  c.gens[2] = {2, 3, 2};
  SpectralSequence ss = leray_pages(c, 4);
  for (const SpectralPage& p : ss.pages) CHECK(p.dims == c.chain_dims());
  CHECK(ss.e_infinity == c.chain_dims());
}

TEST_CASE("khovanov pages collapse at the homology") {
  PlanarDiagram t = PlanarDiagram::parse(kTrefoil);
  FilteredComplex c = build_complex(t, khovanov_theory());
  SpectralSequence ss = leray_pages(c, 4);
  CHECK(ss.index_shift == 1);
  BigradedDims kh = homology(c);
  CHECK(ss.pages[0].dims == c.chain_dims());
  for (std::size_t k = 1; k < ss.pages.size(); ++k) CHECK(ss.pages[k].dims == kh);
  CHECK(ss.e_infinity == kh);
}

TEST_CASE("bar-natan pages interpolate from khovanov to the deformation") {
  PlanarDiagram t = PlanarDiagram::parse(kTrefoil);
  FilteredComplex c = build_complex(t, barnatan_theory());
  SpectralSequence ss = leray_pages(c, -1);
  CHECK(ss.index_shift == 0);
  CHECK(ss.pages[1].dims.total() == 6);  // page 1 = khovanov dims
  CHECK(ss.e_infinity.total() == 2);
  // monotone non-increasing totals, Euler characteristic constant
  LaurentPoly euler;
  for (std::size_t k = 0; k + 1 < ss.pages.size(); ++k) {
    CHECK(ss.pages[k].dims.total() >= ss.pages[k + 1].dims.total());
    if (k == 0) euler = ss.pages[k].dims.graded_euler();
    else CHECK(ss.pages[k].dims.graded_euler() == euler);
  }
}

TEST_CASE("page dims agree with the brute-force subspace formula") {
  PlanarDiagram t = PlanarDiagram::parse(kTrefoil);
  FilteredComplex bn = build_complex(t, barnatan_theory());
  SpectralSequence ss = leray_pages(bn, 4);
  for (int k = 0; k <= 4; ++k) CHECK(ss.pages[k].dims == brute_page(bn, k + ss.index_shift));

  FilteredComplex kh = build_complex(PlanarDiagram::parse(kFig8), khovanov_theory());
  SpectralSequence ss2 = leray_pages(kh, 3);
  for (int k = 0; k <= 3; ++k) CHECK(ss2.pages[k].dims == brute_page(kh, k + ss2.index_shift));
}

TEST_CASE("page transitions match the reported differential ranks") {
  PlanarDiagram t = PlanarDiagram::parse(kTrefoil);
  FilteredComplex c = build_complex(t, barnatan_theory());
  SpectralSequence ss = leray_pages(c, -1);
  for (std::size_t k = 0; k + 1 < ss.pages.size(); ++k) {
    int drop = ss.pages[k].dims.total() - ss.pages[k + 1].dims.total();
    int ranks = 0;
    for (auto& [key, r] : ss.pages[k].differential_rank) ranks += r;
    CHECK(drop == 2 * ranks);
  }
}

TEST_CASE("pages of a direct sum add") {
  FilteredComplex a = build_complex(PlanarDiagram::parse(kTrefoil), barnatan_theory());
  FilteredComplex b = build_complex(PlanarDiagram::parse("O(1)"), barnatan_theory());
  FilteredComplex s = direct_sum(a, b);
  SpectralSequence sa = leray_pages(a, 4), sb = leray_pages(b, 4), sum = leray_pages(s, 4);
  REQUIRE(sa.index_shift == sum.index_shift);
  for (int k = 0; k <= 4; ++k)
    CHECK(sum.pages[k].dims == sa.pages[k].dims + sb.pages[k].dims);
}

TEST_CASE("e-infinity matches total homology") {
  for (const char* pd : {kTrefoil, kFig8}) {
    FilteredComplex kh = build_complex(PlanarDiagram::parse(pd), khovanov_theory());
    CHECK(leray_pages(kh, 2).e_infinity == homology(kh));
    FilteredComplex bn = build_complex(PlanarDiagram::parse(pd), barnatan_theory());
    CHECK(leray_pages(bn, 2).e_infinity.total() == homology(bn).total());
  }
}

TEST_CASE("twin arrows for the khovanov instance") {
  for (const char* pd : {"O(1)", kTrefoil, kFig8, "X(1,3,2,4) X(3,1,4,2)"}) {
    PlanarDiagram d = PlanarDiagram::parse(pd);
    TheoryComplex tc(d, khovanov_theory());
    Basepoint p = d.n_crossings() ? Basepoint::edge(1) : Basepoint::loop(0);
    TwinArrowsReport rep = twin_arrows_check(tc, p);
    CHECK(rep.pass);
  }
}

TEST_CASE("twin arrows rejects the deformation") {
  TheoryComplex bn(PlanarDiagram::parse(kTrefoil), barnatan_theory());
  CHECK_THROWS_AS(twin_arrows_check(bn, Basepoint::edge(1)), std::invalid_argument);
}
