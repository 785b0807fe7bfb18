#pragma once

#include <string>
#include <vector>

namespace tqd {

// Fusion multiplicities N[a][b][c] over a finite label set with label 0 as
// the vacuum. validate() checks the unit laws, dual involution, vacuum
// multiplicities and associativity.
struct FusionModel {
  std::vector<std::string> labels;
  std::vector<int> dual;
  std::vector<std::vector<std::vector<int>>> N;

  int n_labels() const { return static_cast<int>(labels.size()); }
  int unit() const { return 0; }
  int label_index(const std::string& name) const;
  void validate() const;

  static FusionModel toric();
  static FusionModel fibonacci();
  static FusionModel ising();
  static FusionModel by_name(const std::string& name);
  static FusionModel from_json_string(const std::string& text);
  static FusionModel from_json_file(const std::string& path);
};

struct QuantumDims {
  std::vector<double> d;  // Perron eigenvalue of each N_a
  double total_sq = 0.0;  // sum of d_a^2
};

QuantumDims quantum_dims(const FusionModel& m);

// Dimension of the space of n punctures fusing to total charge c. Fixed
// type a everywhere, or every type summed at each puncture when mixed.
long long fusion_dim(const FusionModel& m, int a, int n, int c,
                     bool mixed = false);

struct FusionSecretReport {
  bool mixed = false;
  int n_a = 0, n_b = 0, n_e = 0;
  std::vector<long long> f_a;  // per total charge
  std::vector<long long> f_b;
  long long f_e_vac = 0;
  double dim_v = 0.0;     // all three groups fuse to vacuum
  double dim_vhat = 0.0;  // E to vacuum, A and B to conjugate charges
  double ratio = 0.0;     // dim_vhat / dim_v
  double log2_ratio = 0.0;
  double asymptotic_ratio = 0.0;  // sum_c d_c^2
  bool undefined = false;         // dim_v vanishes
};

// Counting form of the secret-sharing index: how much larger the charge-
// correlated pattern space is than the fully neutral one. type_a < 0 uses
// mixed punctures.
FusionSecretReport secret_ratio(const FusionModel& m, int type_a, int n_a,
                                int n_b, int n_e);

}  // namespace tqd
