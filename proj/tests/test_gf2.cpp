#include <random>

#include "doctest.h"
#include "tqd/gf2.hpp"

using namespace tqd;

namespace {

// Build a matrix whose row space is spanned by `basis` plus random
// combinations of it, so the rank is known by construction.
BitMatrix padded_span(const std::vector<BitVec>& basis, std::size_t extra,
                      std::mt19937& rng) {
  BitMatrix m(0, basis[0].size());
  for (const auto& b : basis) m.append_row(b);
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::size_t k = 0; k < extra; ++k) {
    BitVec r(basis[0].size());
    for (const auto& b : basis)
      if (coin(rng)) r ^= b;
    m.append_row(r);
  }
  return m;
}

BitVec from_bits(std::initializer_list<int> bits) {
  BitVec v(bits.size());
  std::size_t i = 0;
  for (int b : bits) v.set(i++, b != 0);
  return v;
}

}  // namespace

TEST_CASE("bitvec basics") {
  BitVec v(130);
  CHECK(v.size() == 130);
  CHECK_FALSE(v.any());
  v.set(0, true);
  v.set(64, true);
  v.set(129, true);
  CHECK(v.popcount() == 3);
  CHECK(v.get(64));
  v.flip(64);
  CHECK_FALSE(v.get(64));
  CHECK(v.popcount() == 2);

  BitVec w(130);
  w.set(0, true);
  w.set(1, true);
  CHECK(v.dot(w));  // overlap only at bit 0
  w.set(129, true);
  CHECK_FALSE(v.dot(w));  // overlap at bits 0 and 129

  BitVec u = v;
  u ^= v;
  CHECK_FALSE(u.any());
}

TEST_CASE("rank of engineered spans") {
  std::mt19937 rng(11);
  for (std::size_t dim : {1u, 3u, 7u, 20u}) {
    std::vector<BitVec> basis;
    for (std::size_t i = 0; i < dim; ++i) {
      BitVec b(100);
      b.set(i, true);          // pivot guarantees independence
      b.set(50 + i, true);     // extra weight off the pivot column
      for (std::size_t j = 60; j < 70; ++j)
        if ((i * 31 + j) % 3 == 0) b.set(j, true);
      basis.push_back(b);
    }
    BitMatrix m = padded_span(basis, 2 * dim + 3, rng);
    CHECK(m.rank() == dim);
  }
}

TEST_CASE("rank-nullity over random matrices") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t rows = 5 + trial % 7, cols = 8 + trial % 9;
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, coin(rng));
    auto ns = m.nullspace();
    CHECK(m.rank() + ns.size() == cols);
    for (const auto& v : ns) {
      BitVec mv = m.mul(v);
      CHECK_FALSE(mv.any());
    }
    // Nullspace basis vectors are independent.
    BitMatrix nb(0, cols);
    for (const auto& v : ns) nb.append_row(v);
    CHECK(nb.rank() == ns.size());
  }
}

TEST_CASE("solve finds a witness exactly when consistent") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t rows = 6, cols = 10;
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, coin(rng));

    // In-span right-hand side: A * (random x).
    BitVec x(cols);
    for (std::size_t c = 0; c < cols; ++c) x.set(c, coin(rng));
    BitVec b = m.mul(x);
    auto sol = m.solve(b);
    REQUIRE(sol.has_value());
    CHECK(m.mul(*sol) == b);
  }

  // An explicitly inconsistent system: rows sum to 0 but rhs does not.
  BitMatrix m(2, 3);
  m.set(0, 0, true);
  m.set(1, 0, true);  // row0 == row1
  BitVec b(2);
  b.set(0, true);  // b0 != b1
  CHECK_FALSE(m.solve(b).has_value());
}

TEST_CASE("solve on a pinned small system") {
  // x0 + x1 = 1, x1 + x2 = 1, x0 + x2 = 0 has solutions {100, 011}.
  BitMatrix m(3, 3);
  m.set(0, 0, true);
  m.set(0, 1, true);
  m.set(1, 1, true);
  m.set(1, 2, true);
  m.set(2, 0, true);
  m.set(2, 2, true);
  BitVec b = from_bits({1, 1, 0});
  auto sol = m.solve(b);
  REQUIRE(sol.has_value());
  CHECK(m.mul(*sol) == b);
  CHECK(m.rank() == 2);
  CHECK(m.nullspace().size() == 1);
}
