#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tqd/dense.hpp"

namespace tqd {

// Finite crossed-product model of the inclusion N subset M with a Z2 x Z2
// action. H = C^2 (system) x C^2 (partner) x C^{k/2}; the group unitaries
// V_g act jointly on system and partner so that g -> V_g is a genuine
// (non-projective) representation:
//   V_X = X x X x I,  V_Z = Z x Z x I,  V_Y = V_X V_Z = -Y x Y x I.
// N = M_2 x I (system factor), M is generated by N and the V_g, which is
// M_4 x I_{k/2}. E compresses an element to its V_0 coefficient.
struct CrossedProductModel {
  int d = 2;
  int k = 2;       // even; partner qubit absorbs one factor of 2
  int dim_h = 0;   // d * k
  int dim_hs = 0;  // 4 * d * k
  std::array<Mat, 4> v;  // V_1, V_X, V_Z, V_Y on H
  Mat v_iso;             // first-block isometry H -> H_S

  Mat identity_h() const { return Mat::Identity(dim_h, dim_h); }
};

// d must be 2; k even with 4*d*k <= 64.
CrossedProductModel build_crossed_product(int d, int k);

// Normalized trace tau = tr / dim(H) and its entropy (natural log).
double tau(const CrossedProductModel& m, const Mat& t);
double tau_entropy_nats(const CrossedProductModel& m, const Mat& rho,
                        double cutoff = 1e-12);

// Coefficients A_g of T = sum_g A_g V_g with A_g in N.
std::array<Mat, 4> decompose(const CrossedProductModel& m, const Mat& t);
// Throws when T is not in M (coefficients fail to reconstruct it).
void require_member(const CrossedProductModel& m, const Mat& t,
                    double tol = 1e-8);

Mat cond_exp(const CrossedProductModel& m, const Mat& t);  // E(T) = A_0
Mat pi_rep(const CrossedProductModel& m, const Mat& t);    // 4x4 block form
Mat twirl(const CrossedProductModel& m, const Mat& t);     // (1/4) sum V T V*
Mat group_average(const CrossedProductModel& m);           // p = (1/4) sum V_g
Mat p0(const CrossedProductModel& m);                      // pi(p)

// Random elements of the named subalgebras, seeded.
Mat random_in_m(const CrossedProductModel& m, std::mt19937_64& rng);
Mat random_in_n(const CrossedProductModel& m, std::mt19937_64& rng);
Mat random_in_n_commutant(const CrossedProductModel& m, std::mt19937_64& rng);
Mat random_in_m_commutant(const CrossedProductModel& m, std::mt19937_64& rng);
Mat random_psd_in_m(const CrossedProductModel& m, std::mt19937_64& rng);

struct ConditionalExpectationReport {
  double idempotent_max_err = 0.0;
  double unital_err = 0.0;
  double bimodule_max_err = 0.0;
  double twirl_max_err = 0.0;  // E1(A) P0 = P0 A P0
  double tau_preserve_max_err = 0.0;
  double choi_min_eig = 0.0;
  int samples = 0;
  bool ok = false;
};

ConditionalExpectationReport conditional_expectation_check(
    const CrossedProductModel& m, int samples = 100, std::uint64_t seed = 1);

struct PimsnerPopaReport {
  int samples = 0;
  double min_gap_eig = 0.0;          // min over samples of min eig(E(X) - X/4)
  double witness_gap_min_eig = 0.0;  // min eig(E(p) - p/4)
  double witness_cond_exp_err = 0.0; // ||E(p) - I/4||_max
  double lambda = 0.25;
  long index = 4;
  bool ok = false;
};

PimsnerPopaReport pimsner_popa_check(const CrossedProductModel& m,
                                     int samples = 1000, std::uint64_t seed = 2);

struct StinespringReport {
  double isometry_err = 0.0;
  double pi_mult_max_err = 0.0;
  double pi_adjoint_max_err = 0.0;
  double stinespring_max_err = 0.0;  // E(X) vs V* pi(X) V
  double roundtrip_max_err = 0.0;    // V* R(N) V = N for N in I_2 x M_k
  double commutation_max_err = 0.0;  // [R(N'), pi(X)] for N' in M'
  int minimality_rank = 0;
  int expected_rank = 0;
  bool ok = false;
};

StinespringReport stinespring_verify(const CrossedProductModel& m,
                                     int samples = 100, std::uint64_t seed = 3);

struct EntropyGainReport {
  double bound_nats = 0.0;            // ln 4
  double optimal_value_nats = 0.0;    // four character projections
  double two_outcome_value_nats = 0.0;  // {p, I - p}
  double best_random_value_nats = 0.0;
  double best_value_nats = 0.0;
  int random_povms = 0;
  int ascent_steps = 0;
  std::uint64_t seed = 0;
  bool bound_respected = false;
  bool optimal_attained = false;  // best within 1e-9 of ln 4
};

// Entropy gain sum_i tau(x_i) [S_tau(E(rho_i)) - S_tau(rho_i)] for a POVM
// {x_i} in M, rho_i = x_i / tau(x_i). Throws unless the x_i are PSD members
// of M summing to the identity.
double entropy_gain(const CrossedProductModel& m, const std::vector<Mat>& povm);

EntropyGainReport entropy_gain_search(const CrossedProductModel& m,
                                      int random_povms = 1000,
                                      std::uint64_t seed = 4,
                                      int ascent_steps = 200);

}  // namespace tqd
