#pragma once

#include <map>
#include <string>
#include <vector>

#include "tqd/lattice.hpp"
#include "tqd/stabilizer.hpp"

namespace tqd {

// Entanglement entropy of the region in bits. Exact integer for stabilizer
// states: rank of the generators restricted to the complement minus the
// complement size.
int region_entropy(const StabilizerState& st, const Region& r);

struct TeeReport {
  std::string kind;
  int L = 0;
  std::map<std::string, int> entropies;
  int combination_bits = 0;
  double gamma_bits = 0.0;
  bool thin = false;
};

// Topological term from a disk split into three sectors (alternating-sign
// sum, gamma = -combination) or from the four-bar ring difference
// (gamma = combination / 2).
TeeReport tee_combination(const StabilizerState& st, const RegionLayout& lay);

struct AreaLawSample {
  std::string name;
  int boundary_gens = 0;   // straddling star + plaquette count
  int components = 0;      // boundary connected components
  int entropy_bits = 0;
};

// Least-squares fit of S = beta * p - n * gamma over the samples, done in
// exact integer arithmetic (Cramer on the normal equations).
struct AreaLawFit {
  std::vector<AreaLawSample> samples;
  long long det = 0;
  long long beta_num = 0, gamma_num = 0;  // over det
  double beta = 0.0, gamma = 0.0;
  double residual_sumsq = 0.0;
  bool exact = false;  // every residual is exactly zero
};

// Layouts must be rectangles or annuli on the same lattice as the state.
AreaLawFit area_law_fit(const StabilizerState& st,
                        const std::vector<RegionLayout>& layouts);

}  // namespace tqd
