#pragma once

#include "khv/diagram.hpp"
#include "khv/laurent.hpp"

namespace khv {

// Kauffman bracket state sum, normalized so a crossingless unknot gives
// q + q^{-1}; equals the graded Euler characteristic of the Khovanov chain
// complex. Deliberately computed by its own state-sum walk, independent of
// the cube machinery, so the two paths can cross-check each other.
LaurentPoly kauffman_bracket(const PlanarDiagram& d, int cap = 16);

// bracket / (q + q^{-1}); exact for knots (and any diagram whose bracket the
// unknot factor divides).
LaurentPoly reduced_jones(const PlanarDiagram& d, int cap = 16);

// |V(q = i)| for a knot diagram.
long long determinant(const PlanarDiagram& d, int cap = 16);

}  // namespace khv
