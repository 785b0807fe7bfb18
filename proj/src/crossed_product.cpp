#include "tqd/crossed_product.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tqd {

namespace {

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat pauli2(char which) {
  Mat m(2, 2);
  switch (which) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::logic_error("unknown single-qubit letter");
  }
  return m;
}

Mat random_ginibre(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = {g(rng), g(rng)};
  return m;
}

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

// Partial trace onto the first 2-dim factor of C^2 x C^{rest}.
Mat trace_out_rest(const Mat& t, Eigen::Index rest) {
  Mat out = Mat::Zero(2, 2);
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index j = 0; j < 2; ++j)
      for (Eigen::Index r = 0; r < rest; ++r)
        out(i, j) += t(i * rest + r, j * rest + r);
  return out;
}

}  // namespace

CrossedProductModel build_crossed_product(int d, int k) {
  if (d != 2) throw std::invalid_argument("only the d=2 group action is supported");
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("k must be even so the group acts genuinely");
  if (4 * d * k > 64) throw std::invalid_argument("represented dimension above 64");
  CrossedProductModel m;
  m.d = d;
  m.k = k;
  m.dim_h = d * k;
  m.dim_hs = 4 * d * k;
  Mat ik2 = Mat::Identity(k / 2, k / 2);
  Mat x = pauli2('X'), z = pauli2('Z'), id = pauli2('I');
  m.v[0] = kron(kron(id, id), ik2);
  m.v[1] = kron(kron(x, x), ik2);
  m.v[2] = kron(kron(z, z), ik2);
  m.v[3] = m.v[1] * m.v[2];
  m.v_iso = Mat::Zero(m.dim_hs, m.dim_h);
  m.v_iso.topRows(m.dim_h) = Mat::Identity(m.dim_h, m.dim_h);
  return m;
}

double tau(const CrossedProductModel& m, const Mat& t) {
  return std::real(t.trace()) / static_cast<double>(m.dim_h);
}

double tau_entropy_nats(const CrossedProductModel& m, const Mat& rho,
                        double cutoff) {
  Eigen::SelfAdjointEigenSolver<Mat> es(rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    double v = es.eigenvalues()[i];
    if (v > cutoff) s -= v * std::log(v);
  }
  return s / static_cast<double>(m.dim_h);
}

std::array<Mat, 4> decompose(const CrossedProductModel& m, const Mat& t) {
  // T V_g has V_0 coefficient A_g; E reads it off.
  std::array<Mat, 4> a;
  for (int g = 0; g < 4; ++g) a[g] = cond_exp(m, t * m.v[g]);
  return a;
}

void require_member(const CrossedProductModel& m, const Mat& t, double tol) {
  auto a = decompose(m, t);
  Mat rec = Mat::Zero(m.dim_h, m.dim_h);
  for (int g = 0; g < 4; ++g) rec += a[g] * m.v[g];
  if (max_abs(rec - t) > tol)
    throw std::invalid_argument("operator is not in the represented algebra");
}

Mat cond_exp(const CrossedProductModel& m, const Mat& t) {
  if (t.rows() != m.dim_h || t.cols() != m.dim_h)
    throw std::invalid_argument("operator size mismatch");
  Mat sys = trace_out_rest(t, m.k) / static_cast<double>(m.k);
  return kron(sys, Mat::Identity(m.k, m.k));
}

Mat pi_rep(const CrossedProductModel& m, const Mat& t) {
  auto a = decompose(m, t);
  Mat out = Mat::Zero(m.dim_hs, m.dim_hs);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      int g = r ^ c;
      out.block(r * m.dim_h, c * m.dim_h, m.dim_h, m.dim_h) = a[g] * m.v[g];
    }
  return out;
}

Mat twirl(const CrossedProductModel& m, const Mat& t) {
  Mat out = Mat::Zero(m.dim_h, m.dim_h);
  for (int g = 0; g < 4; ++g) out += m.v[g] * t * m.v[g].adjoint();
  return out / 4.0;
}

Mat group_average(const CrossedProductModel& m) {
  Mat p = Mat::Zero(m.dim_h, m.dim_h);
  for (int g = 0; g < 4; ++g) p += m.v[g];
  return p / 4.0;
}

Mat p0(const CrossedProductModel& m) { return pi_rep(m, group_average(m)); }

Mat random_in_m(const CrossedProductModel& m, std::mt19937_64& rng) {
  return kron(random_ginibre(4, rng), Mat::Identity(m.k / 2, m.k / 2));
}

Mat random_in_n(const CrossedProductModel& m, std::mt19937_64& rng) {
  return kron(random_ginibre(2, rng), Mat::Identity(m.k, m.k));
}

Mat random_in_n_commutant(const CrossedProductModel& m, std::mt19937_64& rng) {
  return kron(Mat::Identity(2, 2), random_ginibre(m.k, rng));
}

Mat random_in_m_commutant(const CrossedProductModel& m, std::mt19937_64& rng) {
  return kron(Mat::Identity(4, 4), random_ginibre(m.k / 2, rng));
}

Mat random_psd_in_m(const CrossedProductModel& m, std::mt19937_64& rng) {
  Mat g = random_in_m(m, rng);
  return g * g.adjoint();
}

ConditionalExpectationReport conditional_expectation_check(
    const CrossedProductModel& m, int samples, std::uint64_t seed) {
  ConditionalExpectationReport rep;
  rep.samples = samples;
  std::mt19937_64 rng(seed);
  Mat id = m.identity_h();
  rep.unital_err = max_abs(cond_exp(m, id) - id);
  Mat pp = p0(m);
  for (int s = 0; s < samples; ++s) {
    Mat x = random_in_m(m, rng);
    Mat ex = cond_exp(m, x);
    rep.idempotent_max_err =
        std::max(rep.idempotent_max_err, max_abs(cond_exp(m, ex) - ex));
    Mat a = random_in_n(m, rng), c = random_in_n(m, rng);
    rep.bimodule_max_err = std::max(
        rep.bimodule_max_err, max_abs(cond_exp(m, a * x * c) - a * ex * c));
    rep.twirl_max_err = std::max(
        rep.twirl_max_err, max_abs(pi_rep(m, twirl(m, x)) * pp - pp * pi_rep(m, x) * pp));
    rep.tau_preserve_max_err =
        std::max(rep.tau_preserve_max_err, std::abs(tau(m, ex) - tau(m, x)));
  }
  // Choi matrix of the qubit-level map B1 x B2 -> B1 x tr(B2)/2 I.
  Mat choi = Mat::Zero(16, 16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Mat unit = Mat::Zero(4, 4);
      unit(i, j) = 1.0;
      Mat lifted = kron(unit, Mat::Identity(m.k / 2, m.k / 2));
      // cond_exp output has the form Q x I_{k/2}; read Q off block corners.
      Mat full = cond_exp(m, lifted);
      Mat b4(4, 4);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          b4(r, c) = full(r * (m.k / 2), c * (m.k / 2));
      choi.block(4 * i, 4 * j, 4, 4) = b4;
    }
  Eigen::SelfAdjointEigenSolver<Mat> es(choi, Eigen::EigenvaluesOnly);
  rep.choi_min_eig = es.eigenvalues().minCoeff();
  double tol = 1e-10;
  rep.ok = rep.idempotent_max_err <= tol && rep.unital_err <= tol &&
           rep.bimodule_max_err <= tol && rep.twirl_max_err <= tol &&
           rep.tau_preserve_max_err <= tol && rep.choi_min_eig >= -tol;
  return rep;
}

PimsnerPopaReport pimsner_popa_check(const CrossedProductModel& m, int samples,
                                     std::uint64_t seed) {
  PimsnerPopaReport rep;
  rep.samples = samples;
  std::mt19937_64 rng(seed);
  rep.min_gap_eig = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    Mat x = random_psd_in_m(m, rng);
    Eigen::SelfAdjointEigenSolver<Mat> es(cond_exp(m, x) - x / 4.0,
                                          Eigen::EigenvaluesOnly);
    rep.min_gap_eig = std::min(rep.min_gap_eig, es.eigenvalues().minCoeff());
  }
  Mat p = group_average(m);
  rep.witness_cond_exp_err = max_abs(cond_exp(m, p) - m.identity_h() / 4.0);
  Eigen::SelfAdjointEigenSolver<Mat> es(cond_exp(m, p) - p / 4.0,
                                        Eigen::EigenvaluesOnly);
  rep.witness_gap_min_eig = es.eigenvalues().minCoeff();
  rep.lambda = 0.25;
  rep.index = 4;
  rep.ok = rep.min_gap_eig >= -1e-9 && rep.witness_cond_exp_err <= 1e-12 &&
           std::abs(rep.witness_gap_min_eig) <= 1e-12;
  return rep;
}

StinespringReport stinespring_verify(const CrossedProductModel& m, int samples,
                                     std::uint64_t seed) {
  StinespringReport rep;
  std::mt19937_64 rng(seed);
  rep.isometry_err =
      max_abs(m.v_iso.adjoint() * m.v_iso - Mat::Identity(m.dim_h, m.dim_h));
  for (int s = 0; s < samples; ++s) {
    Mat x = random_in_m(m, rng), y = random_in_m(m, rng);
    Mat px = pi_rep(m, x), py = pi_rep(m, y);
    rep.pi_mult_max_err =
        std::max(rep.pi_mult_max_err, max_abs(pi_rep(m, x * y) - px * py));
    rep.pi_adjoint_max_err = std::max(rep.pi_adjoint_max_err,
                                      max_abs(pi_rep(m, x.adjoint()) - px.adjoint()));
    rep.stinespring_max_err =
        std::max(rep.stinespring_max_err,
                 max_abs(cond_exp(m, x) - m.v_iso.adjoint() * px * m.v_iso));
    Mat n = random_in_n_commutant(m, rng);
    Mat rn = kron(Mat::Identity(4, 4), n);
    rep.roundtrip_max_err =
        std::max(rep.roundtrip_max_err,
                 max_abs(m.v_iso.adjoint() * rn * m.v_iso - n));
    Mat nc = random_in_m_commutant(m, rng);
    Mat rnc = kron(Mat::Identity(4, 4), nc);
    rep.commutation_max_err =
        std::max(rep.commutation_max_err, max_abs(rnc * px - px * rnc));
  }
  // Minimality: pi(M) V H spans H_S.
  int probe = 4 * m.dim_h;
  Mat stack(m.dim_hs, probe);
  int col = 0;
  for (int s = 0; s < 4 && col < probe; ++s) {
    Mat px = pi_rep(m, random_in_m(m, rng));
    for (int t = 0; t < m.dim_h && col < probe; ++t, ++col)
      stack.col(col) = px * m.v_iso.col(t);
  }
  Eigen::ColPivHouseholderQR<Mat> qr(stack);
  qr.setThreshold(1e-9);
  rep.minimality_rank = static_cast<int>(qr.rank());
  rep.expected_rank = m.dim_hs;
  rep.ok = rep.isometry_err <= 1e-12 && rep.pi_mult_max_err <= 1e-10 &&
           rep.pi_adjoint_max_err <= 1e-10 && rep.stinespring_max_err <= 1e-12 &&
           rep.roundtrip_max_err <= 1e-12 && rep.commutation_max_err <= 1e-12 &&
           rep.minimality_rank == rep.expected_rank;
  return rep;
}

double entropy_gain(const CrossedProductModel& m, const std::vector<Mat>& povm) {
  if (povm.empty()) throw std::invalid_argument("empty POVM");
  Mat sum = Mat::Zero(m.dim_h, m.dim_h);
  for (const auto& x : povm) {
    if (x.rows() != m.dim_h || x.cols() != m.dim_h)
      throw std::invalid_argument("POVM element size mismatch");
    if (max_abs(x - x.adjoint()) > 1e-10)
      throw std::invalid_argument("POVM element not Hermitian");
    Eigen::SelfAdjointEigenSolver<Mat> es(x, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
      throw std::invalid_argument("POVM element not positive");
    require_member(m, x);
    sum += x;
  }
  if (max_abs(sum - m.identity_h()) > 1e-10)
    throw std::invalid_argument("POVM does not sum to the identity");
  double gain = 0.0;
  for (const auto& x : povm) {
    double w = tau(m, x);
    if (w < 1e-14) continue;
    Mat rho = x / w;
    gain += w * (tau_entropy_nats(m, cond_exp(m, rho)) - tau_entropy_nats(m, rho));
  }
  return gain;
}

namespace {

// Maximally-entangled-basis projections: spectral projections of the group
// characters, e_j = (1/4) sum_g chi_j(g) V_g.
std::vector<Mat> character_povm(const CrossedProductModel& m) {
  std::vector<Mat> povm;
  for (int j = 0; j < 4; ++j) {
    Mat e = Mat::Zero(m.dim_h, m.dim_h);
    for (int g = 0; g < 4; ++g) {
      int bits = (j & g);
      int sign = (std::popcount(static_cast<unsigned>(bits)) & 1) ? -1 : 1;
      e += sign * m.v[g];
    }
    povm.push_back(e / 4.0);
  }
  return povm;
}

// Renormalize positive seeds G_i into a POVM x_i = S^{-1/2} G_i S^{-1/2}
// with S = sum G_i; the inverse square root stays inside M.
std::vector<Mat> povm_from_seeds(const std::vector<Mat>& gs) {
  Mat sum = Mat::Zero(gs[0].rows(), gs[0].cols());
  for (const auto& g : gs) sum += g;
  Eigen::SelfAdjointEigenSolver<Mat> es(sum);
  Mat inv_sqrt = es.operatorInverseSqrt();
  std::vector<Mat> povm;
  for (const auto& g : gs) {
    Mat x = inv_sqrt * g * inv_sqrt;
    povm.push_back((x + x.adjoint()) / 2.0);
  }
  return povm;
}

std::vector<Mat> random_povm(const CrossedProductModel& m, std::mt19937_64& rng,
                             int outcomes) {
  std::vector<Mat> gs;
  for (int i = 0; i < outcomes; ++i) gs.push_back(random_psd_in_m(m, rng));
  return povm_from_seeds(gs);
}

}  // namespace

EntropyGainReport entropy_gain_search(const CrossedProductModel& m,
                                      int random_povms, std::uint64_t seed,
                                      int ascent_steps) {
  EntropyGainReport rep;
  rep.bound_nats = std::log(4.0);
  rep.seed = seed;
  rep.random_povms = random_povms;
  rep.ascent_steps = ascent_steps;
  rep.optimal_value_nats = entropy_gain(m, character_povm(m));
  Mat p = group_average(m);
  rep.two_outcome_value_nats = entropy_gain(m, {p, m.identity_h() - p});

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> n_out(2, 5);
  double best_random = 0.0;
  std::vector<Mat> best_gs;
  for (int s = 0; s < random_povms; ++s) {
    int outcomes = n_out(rng);
    std::vector<Mat> povm = random_povm(m, rng, outcomes);
    double v = entropy_gain(m, povm);
    if (v > best_random) {
      best_random = v;
      best_gs = povm;
    }
  }
  rep.best_random_value_nats = best_random;
  // Local ascent: remix the best POVM with shrinking random positive kicks.
  double best = best_random;
  if (!best_gs.empty()) {
    double step = 0.05;
    std::vector<Mat> cur = best_gs;
    for (int it = 0; it < ascent_steps; ++it) {
      std::vector<Mat> gs;
      for (const auto& x : cur) gs.push_back(x + step * random_psd_in_m(m, rng));
      std::vector<Mat> povm = povm_from_seeds(gs);
      double v = entropy_gain(m, povm);
      if (v > best) {
        best = v;
        cur = povm;
      } else {
        step *= 0.9;
      }
    }
  }
  rep.best_value_nats = std::max(best, std::max(rep.optimal_value_nats,
                                                rep.two_outcome_value_nats));
  rep.bound_respected =
      rep.best_value_nats <= rep.bound_nats + 1e-9 &&
      rep.best_random_value_nats <= rep.bound_nats + 1e-9;
  rep.optimal_attained = std::abs(rep.optimal_value_nats - rep.bound_nats) <= 1e-9;
  return rep;
}

}  // namespace tqd
