#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "tqd/gf2.hpp"

namespace tqd {

// n-qubit Pauli operator stored as i^t * prod_j X_j^{x_j} Z_j^{z_j}.
// The phase exponent t lives in Z_4.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t n) : x(n), z(n) {}

  static PauliOperator identity(std::size_t n) { return PauliOperator(n); }
  // Z (resp. X) on every listed qubit, +1 phase.
  static PauliOperator z_on(std::size_t n, const std::vector<int>& qubits);
  static PauliOperator x_on(std::size_t n, const std::vector<int>& qubits);

  std::size_t num_qubits() const { return x.size(); }

  PauliOperator operator*(const PauliOperator& o) const;

  // supp = qubits where x or z is set.
  BitVec support() const;
  std::size_t weight() const { return support().popcount(); }

  bool is_identity() const { return !x.any() && !z.any(); }
  bool is_hermitian() const;

  std::complex<double> phase() const;

  // Symplectic product: 0 if the operators commute, 1 if they anticommute.
  int sympl(const PauliOperator& o) const;

  // e.g. "+ X3 Z7 Y12", empty support prints "+ I".
  std::string to_string() const;

  bool same_letters(const PauliOperator& o) const { return x == o.x && z == o.z; }

  BitVec x, z;
  std::uint8_t phase_exp = 0;  // t in i^t
};

}  // namespace tqd
