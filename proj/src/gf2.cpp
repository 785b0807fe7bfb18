#include "tqd/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace tqd {

std::size_t BitVec::popcount() const {
  std::size_t c = 0;
  for (auto x : w_) c += std::popcount(x);
  return c;
}

bool BitVec::dot(const BitVec& o) const {
  if (n_ != o.n_) throw std::invalid_argument("BitVec::dot: length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
  return std::popcount(acc) & 1u;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), row_(rows, BitVec(cols)) {}

void BitMatrix::append_row(const BitVec& v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
  row_.push_back(v);
  ++rows_;
}

BitVec BitMatrix::mul(const BitVec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("mul: width mismatch");
  BitVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.set(r, row_[r].dot(x));
  return out;
}

namespace {

struct Echelon {
  std::vector<BitVec> rows;            // pivot rows first, leftovers after
  std::vector<std::size_t> pivot_col;  // pivot column of rows[0..npiv)
};

// Reduced row echelon form over the first `cols` columns; scans columns left
// to right and takes the first row with a nonzero entry as pivot. Rows past
// pivot_col.size() are zero on those columns (extra augmented columns may
// survive there).
Echelon rref(const std::vector<BitVec>& in, std::size_t cols) {
  Echelon e;
  e.rows = in;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < e.rows.size(); ++c) {
    std::size_t p = r;
    while (p < e.rows.size() && !e.rows[p].get(c)) ++p;
    if (p == e.rows.size()) continue;
    std::swap(e.rows[r], e.rows[p]);
    for (std::size_t i = 0; i < e.rows.size(); ++i)
      if (i != r && e.rows[i].get(c)) e.rows[i] ^= e.rows[r];
    e.pivot_col.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

std::size_t BitMatrix::rank() const {
  return rref(row_, cols_).pivot_col.size();
}

std::optional<BitVec> BitMatrix::solve(const BitVec& b) const {
  if (b.size() != rows_) throw std::invalid_argument("solve: rhs length mismatch");
  std::vector<BitVec> aug(rows_, BitVec(cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug[r].set(c, row_[r].get(c));
    aug[r].set(cols_, b.get(r));
  }
  Echelon e = rref(aug, cols_);
  for (std::size_t r = e.pivot_col.size(); r < e.rows.size(); ++r)
    if (e.rows[r].get(cols_)) return std::nullopt;
  BitVec x(cols_);
  for (std::size_t r = 0; r < e.pivot_col.size(); ++r)
    if (e.rows[r].get(cols_)) x.set(e.pivot_col[r], true);
  return x;
}

std::vector<BitVec> BitMatrix::nullspace() const {
  Echelon e = rref(row_, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : e.pivot_col) is_pivot[c] = true;
  std::vector<BitVec> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    BitVec v(cols_);
    v.set(f, true);
    for (std::size_t r = 0; r < e.pivot_col.size(); ++r)
      if (e.rows[r].get(f)) v.set(e.pivot_col[r], true);
    basis.push_back(v);
  }
  return basis;
}

}  // namespace tqd
