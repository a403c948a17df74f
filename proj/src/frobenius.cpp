#include "khv/frobenius.hpp"

#include <stdexcept>

namespace khv {

FrobeniusAlgebra frobenius_algebra(Relation r) {
  FrobeniusAlgebra a;
  a.relation = r;
  // 1*1 = 1, 1*X = X*1 = X, X*X = X^2 reduced mod r.
  a.mul[0][0] = 0b01;
  a.mul[0][1] = 0b10;
  a.mul[1][0] = 0b10;
  a.mul[1][1] = (r == Relation::x_squared) ? 0b00 : 0b10;
  // Coproduct dual to mul under the pairing (u, v) = counit(uv).
  if (r == Relation::x_squared) {
    a.comul[0] = 0b0110;  // 1 -> 1(x)X + X(x)1
    a.comul[1] = 0b1000;  // X -> X(x)X
  } else {
    a.comul[0] = 0b0111;  // 1 -> 1(x)1 + 1(x)X + X(x)1
    a.comul[1] = 0b1000;  // X -> X(x)X
  }
  a.counit = {0, 1};
  a.unit = 0b01;
  a.dot = {a.mul[0][1], a.mul[1][1]};
  return a;
}

std::vector<TensorTerm> frobenius_apply(const FrobeniusAlgebra& a, FrobOp op,
                                        const TensorTerm& in) {
  auto expand1 = [](std::uint8_t mask) {
    std::vector<TensorTerm> out;
    if (mask & 1) out.push_back({false});
    if (mask & 2) out.push_back({true});
    return out;
  };
  switch (op) {
    case FrobOp::mul:
      if (in.size() != 2) throw std::invalid_argument("mul expects 2 inputs");
      return expand1(a.mul[in[0]][in[1]]);
    case FrobOp::comul: {
      if (in.size() != 1) throw std::invalid_argument("comul expects 1 input");
      std::vector<TensorTerm> out;
      std::uint8_t mask = a.comul[in[0]];
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          if (mask & (1 << ((i << 1) | j))) out.push_back({i == 1, j == 1});
      return out;
    }
    case FrobOp::unit:
      if (!in.empty()) throw std::invalid_argument("unit expects 0 inputs");
      return expand1(a.unit);
    case FrobOp::counit:
      if (in.size() != 1) throw std::invalid_argument("counit expects 1 input");
      if (a.counit[in[0]]) return {TensorTerm{}};
      return {};
    case FrobOp::dot:
      if (in.size() != 1) throw std::invalid_argument("dot expects 1 input");
      return expand1(a.dot[in[0]]);
  }
  throw std::invalid_argument("unknown op");
}

}  // namespace khv
