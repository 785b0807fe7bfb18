#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tqd/lattice.hpp"
#include "tqd/pauli.hpp"
#include "tqd/stabilizer.hpp"

namespace tqd {

// Code states psi_g = V_g |Omega> for g in {1, X, Z, Y}. V_X is a dual
// (X-type) ribbon from blob A to blob B, V_Z a direct (Z-type) ribbon
// between the same blobs, V_Y = V_X * V_Z.
struct CodeStates {
  StabilizerState omega;
  RegionLayout layout;
  PauliOperator v_x, v_z, v_y;

  const PauliOperator& v_of(int g) const;  // g in 1..3 = X, Z, Y
};

CodeStates build_code_states(const StabilizerState& st, const RegionLayout& lay,
                             int min_separation = 4);

// Product of all stars (resp. plaquettes) whose edge set lies inside r.
// Throws when the region encloses no loop or the product leaks out of r.
PauliOperator wilson_star_loop(const StabilizerState& st, const Region& r);
PauliOperator wilson_plaquette_loop(const StabilizerState& st, const Region& r);

struct AuthReport {
  // Rows index the code states 1, X, Z, Y; columns hold the signs of the
  // blob's (star loop, plaquette loop).
  std::array<std::array<int, 2>, 4> alice{};
  std::array<std::array<int, 2>, 4> bob{};
  bool alice_distinct = false;
  bool bob_distinct = false;
};

AuthReport verify_authorized(const CodeStates& cs);

struct ProbeBox {
  int x = 0, y = 0, w = 1, h = 1;
};

// Every w x h face box with w,h <= dmax, intersected with Eve's region,
// plus a seeded sample of box pairs (probe products).
struct EveProbeFamily {
  int dmax = 0;
  std::uint64_t seed = 0;
  std::vector<ProbeBox> boxes;
  std::vector<Region> supports;
  std::vector<std::array<int, 2>> sampled_pairs;
};

EveProbeFamily make_probe_family(const RegionLayout& lay, int dmax,
                                 std::uint64_t seed, int n_pair_samples = 200);

struct Violation {
  std::string kind;  // "diagonal" or "off_diagonal"
  ProbeBox box;
  ProbeBox box2;      // second box of a sampled pair, else equals box
  std::string pair;   // state label(s), e.g. "Z" or "1/X"
  std::string witness;
};

struct VerifyReport {
  bool ok = true;
  int boxes_checked = 0;
  int pairs_checked = 0;
  int elements_checked = 0;
  std::vector<Violation> violations;
};

// Checks that no bounded probe distinguishes the code states: stabilizer
// elements inside a probe support must commute with every V_g (diagonal),
// and no coset V_i V_j S may have a representative inside a support
// (off-diagonal).
VerifyReport verify_unauthorized(const CodeStates& cs, const EveProbeFamily& fam,
                                 int n_threads = 1);

struct CodeSpaceReport {
  int dmax = 0;
  int separation = 0;
  int ghat_dim = 0;     // operators commuting with the bounded constraints
  int trivial_dim = 0;  // ... that are stabilizers or A/B-local
  int raw_bits = 0;     // quotient dimension
  int charge_bits = 0;  // rank of the blob charge signature on the quotient
  int kernel_bits = 0;  // raw_bits - charge_bits
  long index = 1;       // 2^charge_bits
  double log2_index = 0.0;
  double ln_index = 0.0;
  bool probe_bound_removed = false;
};

// Secret-sharing index: group of Pauli classes compatible with Eve's
// constraints, graded by the blob-A charge signature. With the probe bound
// in force the signature sees e- and m-type ribbon classes (index 4); with
// it removed every class collapses (index 1).
CodeSpaceReport compute_index(const StabilizerState& st, const RegionLayout& lay,
                              int dmax, bool probe_bound_removed = false);

struct SuperpositionReport {
  double max_dev = 0.0;
  int n_ops = 0;
  std::vector<double> phases;
};

// Dense check that coherent combinations of two code states look like the
// even mixture to any single-blob-local Hermitian Pauli.
SuperpositionReport superposition_check(const CodeStates& cs, int state_i,
                                        int state_j, int n_samples,
                                        std::uint64_t seed,
                                        const std::vector<double>& phases);

struct SecretChiReport {
  double chi_ab_bits = 0.0;
  double chi_e_bits = 0.0;
  double identity_dev_ab = 0.0;
  double identity_dev_e = 0.0;
  double max_e_trace_distance = 0.0;
  bool support_ok = true;
};

// Dense accessible-information split of the uniform four-state ensemble:
// two bits land on A+B, none on E.
SecretChiReport chi_secret_check(const CodeStates& cs);

}  // namespace tqd
