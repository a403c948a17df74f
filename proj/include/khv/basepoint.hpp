#pragma once

#include <cstdint>
#include <vector>

#include "khv/complex.hpp"
#include "khv/diagram.hpp"
#include "khv/theories.hpp"

namespace khv {

// The basepoint action: per generator, multiplication by X on the circle
// containing p (the image of the zero-handle / dotted-circle / one-handle
// composite). Bidegree (0,-2) over F[X]/(X^2). Verified to be a chain map.
ChainMap x_action(const TheoryComplex& tc, const Basepoint& p);

// Per generator, the sum over circles of X -> 1 (and 1 -> 0) on that circle,
// identity elsewhere. Bidegree (0,+2). Verified to be a chain map; failure
// signals an inconsistent theory.
ChainMap nu_map(const TheoryComplex& tc);

// The subcomplex of generators whose p-circle is labeled X, regraded by
// q -> q+1. For the Frobenius instances over X^2 this equals Im(X_p) with the
// elimination basis; for plugins it is checked to be a subcomplex.
struct ReducedComplex {
  FilteredComplex cx;
  Basepoint p;
  std::vector<std::int32_t> host_gen;         // reduced index -> host index
  std::vector<std::int32_t> host_to_reduced;  // -1 outside the subcomplex
};

ReducedComplex reduced(const TheoryComplex& tc, const Basepoint& p);

// Restriction of X_q . nu to a map Im(X_p) -> Im(X_q) between two reductions
// of the same theory complex.
ChainMap transport_map(const TheoryComplex& tc, const ReducedComplex& from,
                       const ReducedComplex& to);

struct SplittingReport {
  bool pass = false;
  BigradedDims host;
  BigradedDims red;
};

// H(K) == H(reduced){-1} + H(reduced){+1}
SplittingReport splitting_check(const TheoryComplex& tc, const Basepoint& p);

}  // namespace khv
