#include "doctest.h"

#include <stdexcept>

#include <cstdint>

#include "khv/f2.hpp"
#include "khv/frobenius.hpp"

using namespace khv;

namespace {
// deterministic xorshift for property-style checks
struct Rng {
  std::uint64_t s = 0x9e3779b97f4a7c15ull;
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  bool bit() { return next() & 1; }
};

F2Matrix random_matrix(Rng& rng, std::size_t r, std::size_t c) {
  F2Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng.bit()) m.set(i, j, true);
  return m;
}
}  // namespace

TEST_CASE("rank basics") {
  CHECK(F2Matrix::identity(5).rank() == 5);
  CHECK(F2Matrix(4, 7).rank() == 0);
  F2Matrix ones(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) ones.set(i, j, true);
  CHECK(ones.rank() == 1);
}

TEST_CASE("solve basics") {
  F2Matrix id = F2Matrix::identity(3);
  F2Vec e1(3);
  e1.set(0, true);
  auto x = id.solve(e1);
  REQUIRE(x.has_value());
  CHECK(*x == e1);

  F2Matrix zero(3, 3);
  CHECK_FALSE(zero.solve(e1).has_value());

  // A = [1 1], b = [1]: first-pivot tie-break picks e_1
  F2Matrix a(1, 2);
  a.set(0, 0, true);
  a.set(0, 1, true);
  F2Vec b(1);
  b.set(0, true);
  auto y = a.solve(b);
  REQUIRE(y.has_value());
  CHECK(y->get(0));
  CHECK_FALSE(y->get(1));
}

TEST_CASE("rank + nullity = cols on random matrices") {
  Rng rng;
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t r = 1 + rng.next() % 12, c = 1 + rng.next() % 12;
    F2Matrix m = random_matrix(rng, r, c);
    auto kernel = m.kernel_basis();
    CHECK(m.rank() + kernel.size() == c);
    for (const F2Vec& k : kernel) {
      // A k = 0
      F2Vec img(r);
      for (std::size_t j = 0; j < c; ++j)
        if (k.get(j)) img ^= m.column(j);
      CHECK_FALSE(img.any());
    }
    // reduction is idempotent
    F2Matrix red = m;
    red.rref();
    CHECK(red.rank() == m.rank());
  }
}

TEST_CASE("image pivot columns span the column space") {
  Rng rng;
  for (int trial = 0; trial < 20; ++trial) {
    F2Matrix m = random_matrix(rng, 1 + rng.next() % 10, 1 + rng.next() % 10);
    auto piv = m.image_pivot_columns();
    CHECK(piv.size() == m.rank());
    F2Solver solver(m);
    for (std::size_t c = 0; c < m.cols(); ++c) CHECK(solver.in_image(m.column(c)));
  }
}

TEST_CASE("frobenius tables") {
  FrobeniusAlgebra kh = frobenius_algebra(Relation::x_squared);
  // m(X (x) X) = 0 over X^2
  CHECK(frobenius_apply(kh, FrobOp::mul, {true, true}).empty());
  // comul(1) = 1(x)X + X(x)1, comul(X) = X(x)X
  auto d1 = frobenius_apply(kh, FrobOp::comul, {false});
  REQUIRE(d1.size() == 2);
  CHECK(((d1[0] == TensorTerm{false, true} && d1[1] == TensorTerm{true, false}) ||
         (d1[1] == TensorTerm{false, true} && d1[0] == TensorTerm{true, false})));
  auto dx = frobenius_apply(kh, FrobOp::comul, {true});
  REQUIRE(dx.size() == 1);
  CHECK(dx[0] == TensorTerm{true, true});

  FrobeniusAlgebra bn = frobenius_algebra(Relation::x_squared_plus_x);
  auto mxx = frobenius_apply(bn, FrobOp::mul, {true, true});
  REQUIRE(mxx.size() == 1);
  CHECK(mxx[0] == TensorTerm{true});

  CHECK_THROWS_AS(frobenius_apply(kh, FrobOp::mul, {true}), std::invalid_argument);
}

TEST_CASE("dot composed with dot is multiplication by X^2 mod r") {
  for (Relation r : {Relation::x_squared, Relation::x_squared_plus_x}) {
    FrobeniusAlgebra a = frobenius_algebra(r);
    for (int x = 0; x < 2; ++x) {
      // dot(dot(x))
      std::uint8_t once = a.dot[x];
      std::uint8_t twice = 0;
      for (int o = 0; o < 2; ++o)
        if (once & (1 << o)) twice ^= a.dot[o];
      std::uint8_t expected = (r == Relation::x_squared) ? 0 : a.dot[x];
      CHECK(twice == expected);
    }
  }
}

TEST_CASE("counit-of-product pairing is nondegenerate") {
  for (Relation r : {Relation::x_squared, Relation::x_squared_plus_x}) {
    FrobeniusAlgebra a = frobenius_algebra(r);
    F2Matrix pairing(2, 2);
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        std::uint8_t prod = a.mul[x][y];
        bool val = false;
        for (int o = 0; o < 2; ++o)
          if (prod & (1 << o)) val ^= (a.counit[o] != 0);
        pairing.set(x, y, val);
      }
    CHECK(pairing.rank() == 2);
  }
}

TEST_CASE("frobenius condition from the tables") {
  // comul(mul(x,y)) == (mul (x) id)(x (x) comul(y)) on every basis tensor
  for (Relation r : {Relation::x_squared, Relation::x_squared_plus_x}) {
    FrobeniusAlgebra a = frobenius_algebra(r);
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        std::uint8_t lhs = 0;  // mask over pairs
        for (auto& t : frobenius_apply(a, FrobOp::mul, {x == 1, y == 1}))
          lhs ^= a.comul[t[0]];
        std::uint8_t rhs = 0;
        for (auto& t : frobenius_apply(a, FrobOp::comul, {y == 1})) {
          std::uint8_t left = a.mul[x][t[0]];
          for (int o = 0; o < 2; ++o)
            if (left & (1 << o)) rhs ^= std::uint8_t(1 << ((o << 1) | (t[1] ? 1 : 0)));
        }
        CHECK(lhs == rhs);
      }
  }
}
