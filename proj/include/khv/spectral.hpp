#pragma once

#include <map>
#include <vector>

#include "khv/basepoint.hpp"
#include "khv/complex.hpp"
#include "khv/theories.hpp"

namespace khv {

// One page of the Leray spectral sequence of a filtered complex. Dimension
// tables are keyed (h, q): for the homological filtration the first key is
// the filtration degree, for the quantum filtration the second is.
struct SpectralPage {
  int k = 0;
  BigradedDims dims;
  std::map<std::pair<int, int>, int> differential_rank;  // rank of d_k out of each key
};

struct SpectralSequence {
  std::vector<SpectralPage> pages;
  // Reported page k is the standard page E_{k + shift}: shift is 1 when every
  // nonzero component of d strictly raises the filtration (so page 1 is the
  // homology of the associated-graded differential), else 0.
  int index_shift = 0;
  int stabilized_at = -1;  // first k with pages[k] == pages[k+1], if seen
  BigradedDims e_infinity;
};

// Pages 0..k_max by rank formulas on filtration-constrained submatrices.
// Requires d non-decreasing on the filtration. k_max < 0 selects the
// filtration width + 1.
SpectralSequence leray_pages(const FilteredComplex& c, int k_max = -1);

struct TwinArrowsReport {
  bool pass = false;
  int pages_checked = 0;
  int failing_page = -1;
  SpectralSequence host;
  SpectralSequence red;
};

// Page-by-page check that E^k(host) == ~E^k{-1} + ~E^k{+1} for the reduction
// at p. Requires the relation x^2.
TwinArrowsReport twin_arrows_check(const TheoryComplex& tc, const Basepoint& p, int k_max = -1);

}  // namespace khv
