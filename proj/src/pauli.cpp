#include "tqd/pauli.hpp"

#include <stdexcept>

namespace tqd {

PauliOperator PauliOperator::z_on(std::size_t n, const std::vector<int>& qubits) {
  PauliOperator p(n);
  for (int q : qubits) p.z.set(static_cast<std::size_t>(q), true);
  return p;
}

PauliOperator PauliOperator::x_on(std::size_t n, const std::vector<int>& qubits) {
  PauliOperator p(n);
  for (int q : qubits) p.x.set(static_cast<std::size_t>(q), true);
  return p;
}

PauliOperator PauliOperator::operator*(const PauliOperator& o) const {
  if (num_qubits() != o.num_qubits())
    throw std::invalid_argument("pauli size mismatch");
  PauliOperator r(num_qubits());
  // Reordering Z^{z1} past X^{x2} costs (-1)^{<z1,x2>}.
  int t = phase_exp + o.phase_exp + 2 * static_cast<int>(z.dot(o.x));
  r.x = x;
  r.x ^= o.x;
  r.z = z;
  r.z ^= o.z;
  r.phase_exp = static_cast<std::uint8_t>(t & 3);
  return r;
}

BitVec PauliOperator::support() const {
  BitVec s = x;
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z.get(i)) s.set(i, true);
  return s;
}

bool PauliOperator::is_hermitian() const {
  // Adjoint flips t to -t and flips order, costing (-1)^{<x,z>}.
  return ((phase_exp + x.dot(z)) & 1) == 0;
}

std::complex<double> PauliOperator::phase() const {
  switch (phase_exp & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

int PauliOperator::sympl(const PauliOperator& o) const {
  if (num_qubits() != o.num_qubits())
    throw std::invalid_argument("pauli size mismatch");
  return static_cast<int>((x.dot(o.z) ^ z.dot(o.x)) & 1u);
}

std::string PauliOperator::to_string() const {
  // Fold the per-site XZ = -iY factors into the printed phase.
  int y_count = 0;
  std::string body;
  for (std::size_t i = 0; i < num_qubits(); ++i) {
    bool bx = x.get(i), bz = z.get(i);
    if (!bx && !bz) continue;
    char c = bx ? (bz ? 'Y' : 'X') : 'Z';
    if (c == 'Y') ++y_count;
    body += ' ';
    body += c;
    body += std::to_string(i);
  }
  static const char* kPhase[4] = {"+", "+i", "-", "-i"};
  int t = (phase_exp + 3 * y_count) & 3;
  if (body.empty()) return std::string(kPhase[t]) + " I";
  return std::string(kPhase[t]) + body;
}

}  // namespace tqd
