#pragma once

#include <string>
#include <vector>

#include "khv/basepoint.hpp"
#include "khv/complex.hpp"
#include "khv/diagram.hpp"
#include "khv/theories.hpp"

namespace khv {

// The edge map between the two smoothings of one crossing, with the grading
// shifts that make the cube of the full diagram literally the cone. Holds the
// shifted complexes the map points into.
struct CrossingEdgeMap {
  FilteredComplex zero_side;  // K(D_0), shifted
  FilteredComplex one_side;   // K(D_1), shifted
  ChainMap map;               // bidegree (+1, 0)
};
CrossingEdgeMap crossing_edge_map(const PlanarDiagram& d, int crossing, const TheorySpec& t,
                                  int cap = kDefaultCrossingCap);

struct KunnethReport {
  bool pass = false;
  bool dims_match = false;        // H(~K(D # D')) equals the tensor table
  bool candidate_iso = false;     // the band-after-nu candidate is an iso
  bool candidates_agree = false;  // both candidates induce the same map
  BigradedDims sum_side;          // H(~K(D # D'))
  BigradedDims tensor_side;       // H(~K(D) (x) ~K(D'))
  std::string detail;
};
KunnethReport kunneth_check(const PlanarDiagram& d1, const Basepoint& p,
                            const PlanarDiagram& d2, const Basepoint& q, const TheorySpec& t,
                            int cap = kDefaultCrossingCap);

struct ExtendedReport {
  bool pass = false;
  bool unreduced_matches_reduced_union = false;  // A(L) = ~A(L u unknot)
  bool skein_exact = false;                      // every crossing's LES is exact
  bool cone_matches = false;                     // H(cone) = H(K(D)) per crossing
  bool transports_iso = false;                   // sampled basepoint transports
  std::string detail;
};
ExtendedReport extended_check(const PlanarDiagram& d, const TheorySpec& t,
                              int cap = kDefaultCrossingCap);

struct MutationReport {
  bool pass = false;
  bool bracket_gate = false;
  bool dims_equal = false;
  bool reduced_equal = false;
  BigradedDims original;
  BigradedDims mutant;
  std::string detail;
};
MutationReport mutation_check(const PlanarDiagram& d, const TangleRegion& region, Axis axis,
                              const TheorySpec& t, int cap = kDefaultCrossingCap);

}  // namespace khv
