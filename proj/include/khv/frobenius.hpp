#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace khv {

// Supported relation polynomials for F[X]/(r(X)).
enum class Relation { x_squared, x_squared_plus_x };

inline int label_degree(bool x_label) { return x_label ? -1 : +1; }

// The 2-dimensional Frobenius algebra F[X]/(r(X)) on the basis {1, X},
// deg(1) = +1, deg(X) = -1. Circle labels: false = 1 (v_+), true = X (v_-).
// Small maps are encoded as GF(2) bitmasks: single-output maps over {1, X}
// (bit 0 = coefficient of 1, bit 1 = coefficient of X), comultiplication over
// the tensor basis b_i (x) b_j with bit index (i << 1) | j.
struct FrobeniusAlgebra {
  Relation relation;
  std::array<std::array<std::uint8_t, 2>, 2> mul;  // mul[a][b]
  std::array<std::uint8_t, 2> comul;               // comul[x], 4-bit mask
  std::array<std::uint8_t, 2> counit;              // counit[x] in {0,1}
  std::uint8_t unit;                               // image of 1 in F
  std::array<std::uint8_t, 2> dot;                 // multiplication by X
};

FrobeniusAlgebra frobenius_algebra(Relation r);

enum class FrobOp { mul, comul, unit, counit, dot };

// A GF(2) combination of basis tensors; each term lists one label per factor.
using TensorTerm = std::vector<bool>;

// Table-lookup application with linear extension on a single basis tensor.
// Arities: mul 2->1, comul 1->2, unit 0->1, counit 1->0, dot 1->1.
// Throws std::invalid_argument on arity mismatch.
std::vector<TensorTerm> frobenius_apply(const FrobeniusAlgebra& a, FrobOp op,
                                        const TensorTerm& input);

}  // namespace khv
