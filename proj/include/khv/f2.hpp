#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace khv {

using word_t = std::uint64_t;

// Bit-packed GF(2) vector.
class F2Vec {
public:
  F2Vec() = default;
  explicit F2Vec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i, bool v) {
    word_t m = word_t(1) << (i & 63);
    if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { w_[i >> 6] ^= word_t(1) << (i & 63); }

  F2Vec& operator^=(const F2Vec& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }
  bool any() const {
    for (word_t w : w_) if (w) return true;
    return false;
  }
  bool operator==(const F2Vec& o) const { return n_ == o.n_ && w_ == o.w_; }
  // Index of the lowest set bit, or -1.
  int lowest_set() const;
  // Index of the highest set bit, or -1.
  int highest_set() const;
  std::size_t popcount() const;
  std::vector<std::size_t> support() const;

  const std::vector<word_t>& words() const { return w_; }
  void xor_words(const word_t* src) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= src[k];
  }

private:
  std::size_t n_ = 0;
  std::vector<word_t> w_;
};

// Bit-packed GF(2) matrix, row-major.
class F2Matrix {
public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

  static F2Matrix identity(std::size_t n);
  static F2Matrix from_columns(const std::vector<F2Vec>& cols);
  static F2Matrix from_rows(const std::vector<F2Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    word_t m = word_t(1) << (c & 63);
    word_t& w = data_[r * wpr_ + (c >> 6)];
    if (v) w |= m; else w &= ~m;
  }
  void flip(std::size_t r, std::size_t c) {
    data_[r * wpr_ + (c >> 6)] ^= word_t(1) << (c & 63);
  }

  void xor_row(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);
  bool row_empty(std::size_t r) const;
  F2Vec row(std::size_t r) const;
  F2Vec column(std::size_t c) const;
  void set_row(std::size_t r, const F2Vec& v);

  bool is_zero() const;
  bool operator==(const F2Matrix& o) const;
  F2Matrix& operator^=(const F2Matrix& o);

  F2Matrix multiply(const F2Matrix& o) const;
  F2Matrix transpose() const;

  std::size_t rank() const;
  // In-place reduction to reduced row echelon form. Pivot columns are chosen
  // left to right (first-pivot convention); returns them, one per pivot row.
  std::vector<std::size_t> rref();
  // Kernel basis, one vector per free column in ascending column order.
  std::vector<F2Vec> kernel_basis() const;
  // Indices of pivot columns: the original columns at these indices form a
  // deterministic basis of the column space.
  std::vector<std::size_t> image_pivot_columns() const;
  // Some x with Ax = b (free variables set to 0), or nullopt.
  std::optional<F2Vec> solve(const F2Vec& b) const;

private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<word_t> data_;
};

// RREF factorization of a fixed matrix for repeated solves and membership tests.
class F2Solver {
public:
  explicit F2Solver(F2Matrix a);

  std::size_t rank() const { return pivot_cols_.size(); }
  const std::vector<std::size_t>& pivot_columns() const { return pivot_cols_; }
  std::optional<F2Vec> solve(const F2Vec& b) const;
  bool in_image(const F2Vec& b) const { return solve(b).has_value(); }

private:
  F2Matrix r_;                         // rref of A
  F2Matrix ops_t_;                     // transpose of the row-op matrix: r_ = ops * A
  std::vector<std::size_t> pivot_cols_;
  std::size_t n_rows_;
};

}  // namespace khv
