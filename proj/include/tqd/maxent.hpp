#pragma once

#include <vector>

#include "tqd/dense.hpp"

namespace tqd {

// Target reduced state on a subset of qubits (ascending, no repeats).
struct MarginalConstraint {
  std::vector<int> qubits;
  Mat sigma;
};

struct MaxEntropyReport {
  Mat rho;            // solution state
  int k = 0;          // marginal order for uniform k-body runs, else 0
  double entropy_bits = 0.0;
  double residual = 0.0;  // max trace-norm marginal mismatch at exit
  int iterations = 0;
  bool converged = false;
  // Filled by irreducible_correlation: S of the (k-1)- and k-constrained
  // solutions, and their entropy drop.
  std::vector<double> level_entropies_bits;
  double correlation_bits = 0.0;
};

// Maximum-entropy state with the given marginals, found by damped iterative
// proportional fitting on the Gibbs family exp(sum of local terms). Throws
// on invalid constraints and on non-convergence within the iteration cap
// (the message carries the final residual). Dimension capped at 256.
MaxEntropyReport max_entropy_state(
    int n_qubits, const std::vector<MarginalConstraint>& constraints,
    double tol = 1e-9, double damping = 0.5, int max_iter = 10000);

// C^(k) = S(rho~^(k-1)) - S(rho~^(k)) where rho~^(l) is the max-entropy
// state with all l-qubit marginals of rho fixed. Parties are single qubits;
// rho~^(0) is maximally mixed and rho~^(n) is rho itself.
MaxEntropyReport irreducible_correlation(const Mat& rho, int n_qubits, int k,
                                         double tol = 1e-9);

}  // namespace tqd
