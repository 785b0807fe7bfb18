#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "tqd/pauli.hpp"
#include "tqd/stabilizer.hpp"

namespace tqd {

using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

// Dense density matrix; construction checks Hermiticity, unit trace and
// positivity to tolerance.
class DensityMatrix {
 public:
  explicit DensityMatrix(Mat m, double tol = 1e-10);
  const Mat& mat() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  Mat m_;
};

// Computational basis: qubit i is bit i of the index.
// Builds the stabilizer state as an amplitude vector by projecting a basis
// state onto every generator's +1 eigenspace. Throws beyond max_qubits.
Vec statevector_ground(const StabilizerState& st, int max_qubits = 20);

Vec apply_pauli(const PauliOperator& p, const Vec& psi);
std::complex<double> dense_expectation(const Vec& psi, const PauliOperator& p);

// Reduced state on `keep` (X X^dag of the reshaped vector). Cheap when
// `keep` is small.
Mat reduced_from_vec(const Vec& psi, int n_qubits, const std::vector<int>& keep);
// Complement Gram matrix X^dag X; same nonzero spectrum as the reduced
// state on `keep`. Cheap when the complement is small.
Mat gram_complement(const Vec& psi, int n_qubits, const std::vector<int>& keep);

Mat partial_trace(const Mat& rho, int n_qubits, const std::vector<int>& keep);
// Places op (acting on `qubits`, in that order) into the n-qubit space.
Mat embed_operator(int n_qubits, const std::vector<int>& qubits, const Mat& op);

double vn_entropy_bits(const Mat& rho, double cutoff = 1e-12);
double entropy_bits_from_spectrum(const Eigen::VectorXd& evals,
                                  double cutoff = 1e-12);
double trace_distance(const Mat& a, const Mat& b);
// S(rho || sigma) in bits; sets *support_ok = false (and returns +inf) when
// rho has weight outside sigma's support.
double relative_entropy_bits(const Mat& rho, const Mat& sigma,
                             bool* support_ok = nullptr, double cutoff = 1e-12);

struct Ensemble {
  std::vector<double> p;
  std::vector<Mat> rho;
};

struct HolevoReport {
  double chi_bits = 0.0;
  double mix_entropy_bits = 0.0;
  std::vector<double> state_entropy_bits;
  // |chi - sum_x p_x S(rho_x || rho_bar)|
  double identity_dev = 0.0;
  bool support_ok = true;
};

HolevoReport holevo_chi(const Ensemble& ens, double cutoff = 1e-12);

struct StateEnsemble {
  std::vector<Vec> psis;
  std::vector<double> p;
};

// Holevo quantity of the ensemble reduced to `keep`. Uses the reduced
// states directly when 2^|keep| is small, otherwise works through Gram
// matrices so the big reduced state is never materialized.
HolevoReport holevo_chi_states(const StateEnsemble& ens, int n_qubits,
                               const std::vector<int>& keep,
                               double cutoff = 1e-12);

}  // namespace tqd
