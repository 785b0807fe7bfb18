#include "tqd/dense.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tqd {

namespace {

constexpr double kLog2e = 1.4426950408889634;

struct PauliMasks {
  std::uint64_t x = 0, z = 0;
  int t = 0;
};

PauliMasks masks_of(const PauliOperator& p) {
  if (p.num_qubits() > 63) throw std::invalid_argument("dense path is for small systems");
  PauliMasks m;
  for (std::size_t i = 0; i < p.num_qubits(); ++i) {
    if (p.x.get(i)) m.x |= 1ull << i;
    if (p.z.get(i)) m.z |= 1ull << i;
  }
  m.t = p.phase_exp & 3;
  return m;
}

std::complex<double> i_pow(int t) {
  switch (t & 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

Vec apply_masks(const PauliMasks& m, const Vec& psi) {
  Vec out = Vec::Zero(psi.size());
  std::complex<double> ph = i_pow(m.t);
  for (Eigen::Index b = 0; b < psi.size(); ++b) {
    int sign = std::popcount(static_cast<std::uint64_t>(b) & m.z) & 1;
    std::complex<double> amp = psi[b] * ph;
    out[static_cast<Eigen::Index>(static_cast<std::uint64_t>(b) ^ m.x)] =
        sign ? -amp : amp;
  }
  return out;
}

}  // namespace

DensityMatrix::DensityMatrix(Mat m, double tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("density matrix not square");
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("density matrix not Hermitian");
  if (std::abs(m_.trace() - std::complex<double>(1.0, 0.0)) > tol)
    throw std::invalid_argument("density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<Mat> es((m_ + m_.adjoint()) / 2.0);
  if (es.eigenvalues().minCoeff() < -tol)
    throw std::invalid_argument("density matrix not positive");
}

Vec statevector_ground(const StabilizerState& st, int max_qubits) {
  int n = static_cast<int>(st.num_qubits());
  if (n > max_qubits) throw std::invalid_argument("state too large for dense build");
  Eigen::Index dim = Eigen::Index(1) << n;
  std::vector<PauliMasks> gens;
  gens.reserve(st.gens.size());
  for (const auto& g : st.gens) gens.push_back(masks_of(g));
  std::uint64_t probe = 0;
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vec psi = Vec::Zero(dim);
    psi[static_cast<Eigen::Index>(probe & (static_cast<std::uint64_t>(dim) - 1))] = 1.0;
    for (const auto& g : gens) psi = (psi + apply_masks(g, psi)) / 2.0;
    double nrm = psi.norm();
    if (nrm > 1e-9) {
      psi /= nrm;
      for (const auto& g : gens)
        if ((apply_masks(g, psi) - psi).norm() > 1e-10)
          throw std::runtime_error("built vector escapes a generator eigenspace");
      return psi;
    }
    // Projected to zero: this basis state has no overlap, try another.
    probe = probe * 6364136223846793005ull + 1442695040888963407ull;
  }
  throw std::runtime_error("failed to find a basis state overlapping the code state");
}

Vec apply_pauli(const PauliOperator& p, const Vec& psi) {
  if ((Eigen::Index(1) << p.num_qubits()) != psi.size())
    throw std::invalid_argument("state size mismatch");
  return apply_masks(masks_of(p), psi);
}

std::complex<double> dense_expectation(const Vec& psi, const PauliOperator& p) {
  return psi.dot(apply_pauli(p, psi));
}

namespace {

// Splits a full basis index into (keep bits, rest bits) positions.
struct IndexSplit {
  std::vector<int> keep, rest;
  explicit IndexSplit(int n, const std::vector<int>& keep_in) : keep(keep_in) {
    std::vector<char> is_kept(static_cast<std::size_t>(n), 0);
    for (int q : keep) {
      if (q < 0 || q >= n) throw std::invalid_argument("keep qubit out of range");
      if (is_kept[static_cast<std::size_t>(q)])
        throw std::invalid_argument("duplicate keep qubit");
      is_kept[static_cast<std::size_t>(q)] = 1;
    }
    for (int q = 0; q < n; ++q)
      if (!is_kept[static_cast<std::size_t>(q)]) rest.push_back(q);
  }
  std::uint64_t scatter(std::uint64_t a, const std::vector<int>& pos) const {
    std::uint64_t out = 0;
    for (std::size_t j = 0; j < pos.size(); ++j)
      if (a & (1ull << j)) out |= 1ull << pos[j];
    return out;
  }
};

Mat reshape_state(const Vec& psi, const IndexSplit& sp) {
  Eigen::Index dk = Eigen::Index(1) << sp.keep.size();
  Eigen::Index dr = Eigen::Index(1) << sp.rest.size();
  if ((dk * dr) != psi.size()) throw std::invalid_argument("state size mismatch");
  Mat x(dk, dr);
  for (Eigen::Index a = 0; a < dk; ++a) {
    std::uint64_t abits = sp.scatter(static_cast<std::uint64_t>(a), sp.keep);
    for (Eigen::Index r = 0; r < dr; ++r)
      x(a, r) = psi[static_cast<Eigen::Index>(
          abits | sp.scatter(static_cast<std::uint64_t>(r), sp.rest))];
  }
  return x;
}

}  // namespace

Mat reduced_from_vec(const Vec& psi, int n_qubits, const std::vector<int>& keep) {
  IndexSplit sp(n_qubits, keep);
  Mat x = reshape_state(psi, sp);
  return x * x.adjoint();
}

Mat gram_complement(const Vec& psi, int n_qubits, const std::vector<int>& keep) {
  IndexSplit sp(n_qubits, keep);
  Mat x = reshape_state(psi, sp);
  return x.adjoint() * x;
}

Mat partial_trace(const Mat& rho, int n_qubits, const std::vector<int>& keep) {
  IndexSplit sp(n_qubits, keep);
  Eigen::Index dk = Eigen::Index(1) << sp.keep.size();
  Eigen::Index dr = Eigen::Index(1) << sp.rest.size();
  if (rho.rows() != dk * dr) throw std::invalid_argument("matrix size mismatch");
  Mat out = Mat::Zero(dk, dk);
  for (Eigen::Index r = 0; r < dr; ++r) {
    std::uint64_t rbits = sp.scatter(static_cast<std::uint64_t>(r), sp.rest);
    for (Eigen::Index a1 = 0; a1 < dk; ++a1) {
      std::uint64_t i1 = sp.scatter(static_cast<std::uint64_t>(a1), sp.keep) | rbits;
      for (Eigen::Index a2 = 0; a2 < dk; ++a2) {
        std::uint64_t i2 = sp.scatter(static_cast<std::uint64_t>(a2), sp.keep) | rbits;
        out(a1, a2) += rho(static_cast<Eigen::Index>(i1), static_cast<Eigen::Index>(i2));
      }
    }
  }
  return out;
}

Mat embed_operator(int n_qubits, const std::vector<int>& qubits, const Mat& op) {
  IndexSplit sp(n_qubits, qubits);
  Eigen::Index dk = Eigen::Index(1) << sp.keep.size();
  Eigen::Index dr = Eigen::Index(1) << sp.rest.size();
  if (op.rows() != dk || op.cols() != dk)
    throw std::invalid_argument("operator size mismatch");
  Eigen::Index dim = dk * dr;
  Mat out = Mat::Zero(dim, dim);
  for (Eigen::Index r = 0; r < dr; ++r) {
    std::uint64_t rbits = sp.scatter(static_cast<std::uint64_t>(r), sp.rest);
    for (Eigen::Index a1 = 0; a1 < dk; ++a1) {
      std::uint64_t i1 = sp.scatter(static_cast<std::uint64_t>(a1), sp.keep) | rbits;
      for (Eigen::Index a2 = 0; a2 < dk; ++a2) {
        std::uint64_t i2 = sp.scatter(static_cast<std::uint64_t>(a2), sp.keep) | rbits;
        out(static_cast<Eigen::Index>(i1), static_cast<Eigen::Index>(i2)) = op(a1, a2);
      }
    }
  }
  return out;
}

double entropy_bits_from_spectrum(const Eigen::VectorXd& evals, double cutoff) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    double v = evals[i];
    if (v > cutoff) s -= v * std::log2(v);
  }
  return s;
}

double vn_entropy_bits(const Mat& rho, double cutoff) {
  Eigen::SelfAdjointEigenSolver<Mat> es(rho, Eigen::EigenvaluesOnly);
  return entropy_bits_from_spectrum(es.eigenvalues(), cutoff);
}

double trace_distance(const Mat& a, const Mat& b) {
  Eigen::SelfAdjointEigenSolver<Mat> es(a - b, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double relative_entropy_bits(const Mat& rho, const Mat& sigma,
                             bool* support_ok, double cutoff) {
  Eigen::SelfAdjointEigenSolver<Mat> es(sigma);
  double weight_in = 0.0;
  double cross = 0.0;  // tr(rho log2 sigma) on the support
  for (Eigen::Index j = 0; j < es.eigenvalues().size(); ++j) {
    double lam = es.eigenvalues()[j];
    if (lam <= cutoff) continue;
    Vec u = es.eigenvectors().col(j);
    double w = std::real(u.dot(rho * u));
    weight_in += w;
    cross += w * std::log2(lam);
  }
  bool ok = weight_in >= 1.0 - 1e-9;
  if (support_ok) *support_ok = ok;
  if (!ok) return std::numeric_limits<double>::infinity();
  return -vn_entropy_bits(rho, cutoff) - cross;
}

HolevoReport holevo_chi(const Ensemble& ens, double cutoff) {
  if (ens.p.size() != ens.rho.size() || ens.p.empty())
    throw std::invalid_argument("malformed ensemble");
  Mat avg = Mat::Zero(ens.rho[0].rows(), ens.rho[0].cols());
  for (std::size_t i = 0; i < ens.p.size(); ++i) avg += ens.p[i] * ens.rho[i];
  HolevoReport rep;
  rep.mix_entropy_bits = vn_entropy_bits(avg, cutoff);
  rep.chi_bits = rep.mix_entropy_bits;
  double rel_sum = 0.0;
  for (std::size_t i = 0; i < ens.p.size(); ++i) {
    double s = vn_entropy_bits(ens.rho[i], cutoff);
    rep.state_entropy_bits.push_back(s);
    rep.chi_bits -= ens.p[i] * s;
    bool ok = true;
    rel_sum += ens.p[i] * relative_entropy_bits(ens.rho[i], avg, &ok, cutoff);
    rep.support_ok = rep.support_ok && ok;
  }
  rep.identity_dev = rep.support_ok
                         ? std::abs(rep.chi_bits - rel_sum)
                         : std::numeric_limits<double>::infinity();
  return rep;
}

HolevoReport holevo_chi_states(const StateEnsemble& ens, int n_qubits,
                               const std::vector<int>& keep, double cutoff) {
  if (ens.p.size() != ens.psis.size() || ens.p.empty())
    throw std::invalid_argument("malformed ensemble");
  std::size_t k = keep.size();
  std::size_t m = ens.psis.size();
  if (k <= 10) {
    Ensemble dens;
    dens.p = ens.p;
    for (const auto& psi : ens.psis)
      dens.rho.push_back(reduced_from_vec(psi, n_qubits, keep));
    return holevo_chi(dens, cutoff);
  }
  // Gram route: the reduced mixture rho_bar = sum_i p_i X_i X_i^dag shares
  // its nonzero spectrum with the block Gram matrix
  // G[(i,r),(j,s)] = sqrt(p_i p_j) (X_i^dag X_j)(r,s).
  IndexSplit sp(n_qubits, keep);
  Eigen::Index dr = Eigen::Index(1) << sp.rest.size();
  std::vector<Mat> xs;
  xs.reserve(m);
  for (const auto& psi : ens.psis) xs.push_back(reshape_state(psi, sp));
  Mat g(static_cast<Eigen::Index>(m) * dr, static_cast<Eigen::Index>(m) * dr);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      g.block(static_cast<Eigen::Index>(i) * dr, static_cast<Eigen::Index>(j) * dr,
              dr, dr) =
          std::sqrt(ens.p[i] * ens.p[j]) * (xs[i].adjoint() * xs[j]);
  Eigen::SelfAdjointEigenSolver<Mat> es(g);
  HolevoReport rep;
  rep.mix_entropy_bits = entropy_bits_from_spectrum(es.eigenvalues(), cutoff);
  rep.chi_bits = rep.mix_entropy_bits;
  for (std::size_t i = 0; i < m; ++i) {
    Eigen::SelfAdjointEigenSolver<Mat> esi(xs[i].adjoint() * xs[i],
                                           Eigen::EigenvaluesOnly);
    double s = entropy_bits_from_spectrum(esi.eigenvalues(), cutoff);
    rep.state_entropy_bits.push_back(s);
    rep.chi_bits -= ens.p[i] * s;
  }
  // Support eigenvectors of rho_bar: u_t = (1/sqrt(lam_t)) sum_j sqrt(p_j) X_j w_{j,t}.
  std::vector<double> lam;
  std::vector<Eigen::Index> cols;
  for (Eigen::Index t = 0; t < es.eigenvalues().size(); ++t)
    if (es.eigenvalues()[t] > cutoff) {
      lam.push_back(es.eigenvalues()[t]);
      cols.push_back(t);
    }
  Eigen::Index nt = static_cast<Eigen::Index>(cols.size());
  Mat u = Mat::Zero(xs[0].rows(), nt);
  for (Eigen::Index tt = 0; tt < nt; ++tt) {
    for (std::size_t j = 0; j < m; ++j)
      u.col(tt) += std::sqrt(ens.p[j]) *
                   (xs[j] * es.eigenvectors()
                                .col(cols[static_cast<std::size_t>(tt)])
                                .segment(static_cast<Eigen::Index>(j) * dr, dr));
    u.col(tt) /= std::sqrt(lam[static_cast<std::size_t>(tt)]);
  }
  double rel_sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    Mat proj = xs[i].adjoint() * u;  // dr x nt
    double weight = 0.0, cross = 0.0;
    for (Eigen::Index tt = 0; tt < nt; ++tt) {
      double w = proj.col(tt).squaredNorm();
      weight += w;
      cross += w * std::log2(lam[static_cast<std::size_t>(tt)]);
    }
    if (weight < 1.0 - 1e-9) rep.support_ok = false;
    rel_sum += ens.p[i] * (-rep.state_entropy_bits[i] - cross);
  }
  rep.identity_dev = rep.support_ok
                         ? std::abs(rep.chi_bits - rel_sum)
                         : std::numeric_limits<double>::infinity();
  return rep;
}

}  // namespace tqd
