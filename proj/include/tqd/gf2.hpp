#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace tqd {

// Bit vector over GF(2), packed 64 bits per word.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    std::uint64_t m = std::uint64_t(1) << (i & 63);
    if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  BitVec& operator^=(const BitVec& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }
  bool any() const {
    for (auto x : w_) if (x) return true;
    return false;
  }
  std::size_t popcount() const;
  // Inner product mod 2.
  bool dot(const BitVec& o) const;

  bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }

  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
  friend class BitMatrix;
};

// Row-major GF(2) matrix. Elimination uses deterministic first-nonzero
// pivoting so results are reproducible across runs and platforms.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return row_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { row_[r].set(c, v); }

  const BitVec& row(std::size_t r) const { return row_[r]; }
  void append_row(const BitVec& v);

  std::size_t rank() const;

  // One solution x of A x = b, if the system is consistent.
  std::optional<BitVec> solve(const BitVec& b) const;

  // Basis of {x : A x = 0}.
  std::vector<BitVec> nullspace() const;

  // A * x for a column vector x of length cols().
  BitVec mul(const BitVec& x) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BitVec> row_;
};

}  // namespace tqd
