#include "khv/f2.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace khv {

int F2Vec::lowest_set() const {
  for (std::size_t k = 0; k < w_.size(); ++k)
    if (w_[k]) return int(k * 64 + std::countr_zero(w_[k]));
  return -1;
}

int F2Vec::highest_set() const {
  for (std::size_t k = w_.size(); k-- > 0;)
    if (w_[k]) return int(k * 64 + 63 - std::countl_zero(w_[k]));
  return -1;
}

std::size_t F2Vec::popcount() const {
  std::size_t c = 0;
  for (word_t w : w_) c += std::popcount(w);
  return c;
}

std::vector<std::size_t> F2Vec::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i)) s.push_back(i);
  return s;
}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

F2Matrix F2Matrix::from_columns(const std::vector<F2Vec>& cols) {
  if (cols.empty()) return F2Matrix(0, 0);
  F2Matrix m(cols[0].size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < cols[c].size(); ++r)
      if (cols[c].get(r)) m.set(r, c, true);
  return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<F2Vec>& rows) {
  if (rows.empty()) return F2Matrix(0, 0);
  F2Matrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

void F2Matrix::xor_row(std::size_t dst, std::size_t src) {
  word_t* d = &data_[dst * wpr_];
  const word_t* s = &data_[src * wpr_];
  for (std::size_t k = 0; k < wpr_; ++k) d[k] ^= s[k];
}

void F2Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t k = 0; k < wpr_; ++k)
    std::swap(data_[a * wpr_ + k], data_[b * wpr_ + k]);
}

bool F2Matrix::row_empty(std::size_t r) const {
  for (std::size_t k = 0; k < wpr_; ++k)
    if (data_[r * wpr_ + k]) return false;
  return true;
}

F2Vec F2Matrix::row(std::size_t r) const {
  F2Vec v(cols_);
  v.xor_words(&data_[r * wpr_]);
  return v;
}

F2Vec F2Matrix::column(std::size_t c) const {
  F2Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (get(r, c)) v.set(r, true);
  return v;
}

void F2Matrix::set_row(std::size_t r, const F2Vec& v) {
  for (std::size_t c = 0; c < cols_; ++c) set(r, c, v.get(c));
}

bool F2Matrix::is_zero() const {
  for (word_t w : data_)
    if (w) return false;
  return true;
}

bool F2Matrix::operator==(const F2Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

F2Matrix& F2Matrix::operator^=(const F2Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("F2Matrix: shape mismatch in ^=");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] ^= o.data_[k];
  return *this;
}

F2Matrix F2Matrix::multiply(const F2Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("F2Matrix: shape mismatch in multiply");
  F2Matrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    word_t* dst = &out.data_[r * out.wpr_];
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) {
        const word_t* src = &o.data_[c * o.wpr_];
        for (std::size_t k = 0; k < o.wpr_; ++k) dst[k] ^= src[k];
      }
    }
  }
  return out;
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) out.set(c, r, true);
  return out;
}

std::size_t F2Matrix::rank() const {
  F2Matrix tmp = *this;
  return tmp.rref().size();
}

std::vector<std::size_t> F2Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < cols_ && next_row < rows_; ++col) {
    std::size_t pr = next_row;
    while (pr < rows_ && !get(pr, col)) ++pr;
    if (pr == rows_) continue;
    swap_rows(next_row, pr);
    for (std::size_t r = 0; r < rows_; ++r)
      if (r != next_row && get(r, col)) xor_row(r, next_row);
    pivots.push_back(col);
    ++next_row;
  }
  return pivots;
}

std::vector<F2Vec> F2Matrix::kernel_basis() const {
  F2Matrix r = *this;
  std::vector<std::size_t> pivots = r.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<F2Vec> basis;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    F2Vec v(cols_);
    v.set(c, true);
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
      if (r.get(pr, c)) v.set(pivots[pr], true);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::size_t> F2Matrix::image_pivot_columns() const {
  F2Matrix tmp = *this;
  return tmp.rref();
}

std::optional<F2Vec> F2Matrix::solve(const F2Vec& b) const {
  return F2Solver(*this).solve(b);
}

F2Solver::F2Solver(F2Matrix a) : r_(std::move(a)), n_rows_(r_.rows()) {
  F2Matrix ops = F2Matrix::identity(n_rows_);
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < r_.cols() && next_row < n_rows_; ++col) {
    std::size_t pr = next_row;
    while (pr < n_rows_ && !r_.get(pr, col)) ++pr;
    if (pr == n_rows_) continue;
    r_.swap_rows(next_row, pr);
    ops.swap_rows(next_row, pr);
    for (std::size_t r = 0; r < n_rows_; ++r) {
      if (r != next_row && r_.get(r, col)) {
        r_.xor_row(r, next_row);
        ops.xor_row(r, next_row);
      }
    }
    pivot_cols_.push_back(col);
    ++next_row;
  }
  ops_t_ = ops.transpose();
}

std::optional<F2Vec> F2Solver::solve(const F2Vec& b) const {
  if (b.size() != n_rows_) throw std::invalid_argument("F2Solver: rhs size mismatch");
  // c = ops * b, accumulated as a combination of ops columns
  F2Vec c(n_rows_);
  for (std::size_t k = 0; k < n_rows_; ++k)
    if (b.get(k)) c ^= ops_t_.row(k);
  for (std::size_t r = pivot_cols_.size(); r < n_rows_; ++r)
    if (c.get(r)) return std::nullopt;
  F2Vec x(r_.cols());
  for (std::size_t pr = 0; pr < pivot_cols_.size(); ++pr)
    if (c.get(pr)) x.set(pivot_cols_[pr], true);
  return x;
}

}  // namespace khv
