#include <Eigen/Dense>
#include <complex>
#include <random>

#include "doctest.h"
#include "tqd/pauli.hpp"

using namespace tqd;
using Cplx = std::complex<double>;
using M2 = Eigen::Matrix2cd;
using Md = Eigen::MatrixXcd;

namespace {

// Independent dense model of the same operator, built letter by letter.
Md dense_of(const PauliOperator& p) {
  M2 I = M2::Identity(), X, Y, Z;
  X << 0, 1, 1, 0;
  Y << 0, Cplx(0, -1), Cplx(0, 1), 0;
  Z << 1, 0, 0, -1;
  Md m = Md::Identity(1, 1);
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    bool x = p.x.get(q), z = p.z.get(q);
    const M2& letter = x ? (z ? Y : X) : (z ? Z : I);
    // Qubit q is bit q of the basis index, so later qubits go on the left.
    Md next(m.rows() * 2, m.cols() * 2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        next.block(r * m.rows(), c * m.cols(), m.rows(), m.cols()) =
            letter(r, c) * m;
    m = next;
    // Stored bits mean the product X^x Z^z, and XZ = -iY.
    if (x && z) m *= Cplx(0, -1);
  }
  return p.phase() * m;
}

PauliOperator random_pauli(std::size_t n, std::mt19937& rng) {
  PauliOperator p(n);
  std::uniform_int_distribution<int> letter(0, 3);
  std::uniform_int_distribution<int> ph(0, 3);
  for (std::size_t q = 0; q < n; ++q) {
    int l = letter(rng);
    p.x.set(q, l == 1 || l == 3);
    p.z.set(q, l == 2 || l == 3);
  }
  p.phase_exp = static_cast<std::uint8_t>(ph(rng));
  return p;
}

}  // namespace

TEST_CASE("single-qubit multiplication table") {
  PauliOperator I = PauliOperator::identity(1);
  PauliOperator X = PauliOperator::x_on(1, {0});
  PauliOperator Z = PauliOperator::z_on(1, {0});
  PauliOperator Y(1);  // i * XZ
  Y.x.set(0, true);
  Y.z.set(0, true);
  Y.phase_exp = 1;
  CHECK(Y.is_hermitian());

  CHECK((dense_of(X * X) - dense_of(I)).norm() == doctest::Approx(0.0));
  CHECK((dense_of(Z * Z) - dense_of(I)).norm() == doctest::Approx(0.0));
  CHECK((dense_of(Y * Y) - dense_of(I)).norm() == doctest::Approx(0.0));
  CHECK((dense_of(X * Z) - dense_of(X) * dense_of(Z)).norm() ==
        doctest::Approx(0.0));
  CHECK((dense_of(Z * X) - dense_of(Z) * dense_of(X)).norm() ==
        doctest::Approx(0.0));
  CHECK(X.sympl(Z) == 1);
  CHECK(X.sympl(X) == 0);
  CHECK(I.sympl(X) == 0);
}

TEST_CASE("products match the dense algebra on random operators") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + trial % 6;
    PauliOperator a = random_pauli(n, rng);
    PauliOperator b = random_pauli(n, rng);
    Md lhs = dense_of(a * b);
    Md rhs = dense_of(a) * dense_of(b);
    CHECK((lhs - rhs).norm() == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("symplectic form agrees with dense commutators") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 5;
    PauliOperator a = random_pauli(n, rng);
    PauliOperator b = random_pauli(n, rng);
    Md da = dense_of(a), db = dense_of(b);
    double comm = (da * db - db * da).norm();
    if (a.sympl(b) == 0) {
      CHECK(comm == doctest::Approx(0.0).epsilon(1e-12));
    } else {
      CHECK(comm > 1.0);  // anticommuting Paulis: [A,B] = 2AB
    }
  }
}

TEST_CASE("hermiticity matches the dense adjoint") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    PauliOperator a = random_pauli(1 + trial % 5, rng);
    Md da = dense_of(a);
    bool dense_herm = (da - da.adjoint()).norm() < 1e-12;
    CHECK(a.is_hermitian() == dense_herm);
  }
}

TEST_CASE("constructors and support") {
  PauliOperator p = PauliOperator::z_on(8, {1, 5});
  CHECK(p.weight() == 2);
  CHECK(p.support().get(1));
  CHECK(p.support().get(5));
  CHECK_FALSE(p.support().get(0));
  CHECK(p.is_hermitian());
  CHECK(p.phase() == Cplx(1, 0));

  PauliOperator q = PauliOperator::x_on(8, {1});
  PauliOperator pq = p * q;
  CHECK(pq.weight() == 2);  // Y1 Z5
  CHECK_FALSE(pq.is_identity());
  CHECK(p.sympl(q) == 1);

  CHECK(PauliOperator::identity(4).is_identity());
  CHECK(PauliOperator::identity(4).to_string() == "+ I");
  CHECK(PauliOperator::z_on(8, {5}).to_string() == "+ Z5");
}

TEST_CASE("group axioms hold with phases") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 1 + trial % 4;
    PauliOperator a = random_pauli(n, rng);
    PauliOperator b = random_pauli(n, rng);
    PauliOperator c = random_pauli(n, rng);
    Md lhs = dense_of((a * b) * c);
    Md rhs = dense_of(a * (b * c));
    CHECK((lhs - rhs).norm() == doctest::Approx(0.0).epsilon(1e-12));
  }
}
