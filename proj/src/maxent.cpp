#include "tqd/maxent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tqd {

namespace {

constexpr double kLogFloor = 1e-14;

Mat herm_log(const Mat& a) {
  Eigen::SelfAdjointEigenSolver<Mat> es(a);
  Eigen::VectorXd logs(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < logs.size(); ++i)
    logs[i] = std::log(std::max(es.eigenvalues()[i], kLogFloor));
  return es.eigenvectors() * logs.asDiagonal() *
         es.eigenvectors().adjoint();
}

// exp(h) normalized to unit trace; h shifted by its top eigenvalue first.
Mat gibbs(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  double top = es.eigenvalues().maxCoeff();
  Eigen::VectorXd w(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < w.size(); ++i)
    w[i] = std::exp(es.eigenvalues()[i] - top);
  w /= w.sum();
  return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
}

double trace_norm_diff(const Mat& a, const Mat& b) {
  Eigen::SelfAdjointEigenSolver<Mat> es(a - b, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

void validate_constraint(int n_qubits, const MarginalConstraint& c) {
  if (c.qubits.empty()) throw std::invalid_argument("empty constraint subset");
  for (std::size_t i = 0; i < c.qubits.size(); ++i) {
    if (c.qubits[i] < 0 || c.qubits[i] >= n_qubits)
      throw std::invalid_argument("constraint qubit out of range");
    if (i > 0 && c.qubits[i] <= c.qubits[i - 1])
      throw std::invalid_argument("constraint qubits must be ascending");
  }
  Eigen::Index want = Eigen::Index(1) << c.qubits.size();
  if (c.sigma.rows() != want || c.sigma.cols() != want)
    throw std::invalid_argument("marginal dimension mismatch");
  if ((c.sigma - c.sigma.adjoint()).cwiseAbs().maxCoeff() > 1e-8)
    throw std::invalid_argument("marginal not Hermitian");
  if (std::abs(c.sigma.trace().real() - 1.0) > 1e-8)
    throw std::invalid_argument("marginal trace is not 1");
  Eigen::SelfAdjointEigenSolver<Mat> es(c.sigma, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-8)
    throw std::invalid_argument("marginal not positive");
}

double max_residual(const Mat& rho, int n_qubits,
                    const std::vector<MarginalConstraint>& constraints) {
  double r = 0.0;
  for (const auto& c : constraints)
    r = std::max(r, trace_norm_diff(partial_trace(rho, n_qubits, c.qubits),
                                    c.sigma));
  return r;
}

std::vector<std::vector<int>> subsets_of_size(int n, int l) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != l) continue;
    std::vector<int> q;
    for (int b = 0; b < n; ++b)
      if (mask & (1 << b)) q.push_back(b);
    out.push_back(std::move(q));
  }
  return out;
}

// Max-entropy state with all l-body marginals of rho fixed.
MaxEntropyReport level_state(const Mat& rho, int n_qubits, int l, double tol) {
  MaxEntropyReport rep;
  rep.k = l;
  if (l == 0) {
    Eigen::Index dim = rho.rows();
    rep.rho = Mat::Identity(dim, dim) / static_cast<double>(dim);
    rep.entropy_bits = static_cast<double>(n_qubits);
    rep.converged = true;
    return rep;
  }
  if (l == n_qubits) {
    rep.rho = rho;
    rep.entropy_bits = vn_entropy_bits(rho);
    rep.converged = true;
    return rep;
  }
  std::vector<MarginalConstraint> cs;
  for (auto& q : subsets_of_size(n_qubits, l))
    cs.push_back({q, partial_trace(rho, n_qubits, q)});
  MaxEntropyReport out = max_entropy_state(n_qubits, cs, tol);
  out.k = l;
  return out;
}

}  // namespace

MaxEntropyReport max_entropy_state(
    int n_qubits, const std::vector<MarginalConstraint>& constraints,
    double tol, double damping, int max_iter) {
  if (n_qubits < 1 || n_qubits > 8)
    throw std::invalid_argument("total dimension must be at most 256");
  for (const auto& c : constraints) validate_constraint(n_qubits, c);

  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  MaxEntropyReport rep;
  Mat h = Mat::Zero(dim, dim);
  Mat rho = Mat::Identity(dim, dim) / static_cast<double>(dim);
  rep.residual = max_residual(rho, n_qubits, constraints);
  while (rep.residual > tol && rep.iterations < max_iter) {
    for (const auto& c : constraints) {
      Mat mu = partial_trace(rho, n_qubits, c.qubits);
      Mat delta = herm_log(c.sigma) - herm_log(mu);
      h += damping * embed_operator(n_qubits, c.qubits, delta);
      rho = gibbs(h);
    }
    ++rep.iterations;
    rep.residual = max_residual(rho, n_qubits, constraints);
  }
  rep.rho = rho;
  rep.converged = rep.residual <= tol;
  rep.entropy_bits = vn_entropy_bits(rho);
  if (!rep.converged) {
    std::ostringstream msg;
    msg << "marginal fitting did not converge in " << max_iter
        << " iterations; residual " << rep.residual;
    throw std::runtime_error(msg.str());
  }
  return rep;
}

MaxEntropyReport irreducible_correlation(const Mat& rho, int n_qubits, int k,
                                         double tol) {
  if (n_qubits < 1 || n_qubits > 8)
    throw std::invalid_argument("total dimension must be at most 256");
  if (rho.rows() != (Eigen::Index(1) << n_qubits) || rho.rows() != rho.cols())
    throw std::invalid_argument("state dimension mismatch");
  if (k < 1 || k > n_qubits)
    throw std::invalid_argument("marginal order out of range");

  MaxEntropyReport lo = level_state(rho, n_qubits, k - 1, tol);
  MaxEntropyReport hi = level_state(rho, n_qubits, k, tol);
  MaxEntropyReport rep = hi;
  rep.residual = std::max(lo.residual, hi.residual);
  rep.iterations = lo.iterations + hi.iterations;
  rep.converged = lo.converged && hi.converged;
  rep.level_entropies_bits = {lo.entropy_bits, hi.entropy_bits};
  rep.correlation_bits = lo.entropy_bits - hi.entropy_bits;
  return rep;
}

}  // namespace tqd
