#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "tqd/dense.hpp"
#include "tqd/maxent.hpp"

using namespace tqd;

namespace {

Mat diag2(double a, double b) {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

Mat classical(int n_qubits, const std::vector<std::pair<int, double>>& terms) {
  Eigen::Index dim = Eigen::Index(1) << n_qubits;
  Mat rho = Mat::Zero(dim, dim);
  for (auto [basis, w] : terms) rho(basis, basis) = w;
  return rho;
}

double h2_bits(double p) {
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

}  // namespace

TEST_CASE("unconstrained and fully constrained levels are shortcuts") {
  Mat bell = Mat::Zero(4, 4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  MaxEntropyReport lo = irreducible_correlation(bell, 2, 1);
  // One-body marginals of the Bell state are maximally mixed, so the
  // level-1 surrogate is I/4 and C^1 vanishes.
  CHECK(lo.correlation_bits == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(lo.level_entropies_bits[0] == doctest::Approx(2.0));
  CHECK(lo.level_entropies_bits[1] == doctest::Approx(2.0));

  MaxEntropyReport hi = irreducible_correlation(bell, 2, 2);
  CHECK(hi.level_entropies_bits[1] == doctest::Approx(0.0));
  CHECK(hi.correlation_bits == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(hi.converged);
}

TEST_CASE("maximally mixed marginals need no iterations") {
  std::vector<MarginalConstraint> cons;
  cons.push_back({{0}, diag2(0.5, 0.5)});
  cons.push_back({{1}, diag2(0.5, 0.5)});
  MaxEntropyReport rep = max_entropy_state(2, cons);
  CHECK(rep.converged);
  CHECK(rep.iterations == 0);
  CHECK(rep.entropy_bits == doctest::Approx(2.0));
  CHECK(rep.residual <= 1e-12);
  CHECK((rep.rho - Mat::Identity(4, 4) / 4.0).norm() ==
        doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("biased independent constraints converge to the product state") {
  std::vector<MarginalConstraint> cons;
  cons.push_back({{0}, diag2(0.7, 0.3)});
  cons.push_back({{1}, diag2(0.7, 0.3)});
  MaxEntropyReport rep = max_entropy_state(2, cons);
  CHECK(rep.converged);
  CHECK(rep.iterations > 0);
  CHECK(rep.residual <= 1e-9);
  CHECK(rep.entropy_bits == doctest::Approx(2.0 * h2_bits(0.7)).epsilon(1e-6));
  Mat product = Mat::Zero(4, 4);
  product(0, 0) = 0.49;
  product(1, 1) = 0.21;
  product(2, 2) = 0.21;
  product(3, 3) = 0.09;
  CHECK(trace_distance(rep.rho, product) <= 1e-6);

  // The correlated state with the same marginals has strictly less entropy:
  // the solver picked the top of the feasible set.
  Mat correlated = classical(2, {{0, 0.7}, {3, 0.3}});
  CHECK(vn_entropy_bits(correlated) < rep.entropy_bits - 0.5);
}

TEST_CASE("even parity carries exactly one irreducible bit at level three") {
  Mat rho = classical(3, {{0, 0.25}, {3, 0.25}, {5, 0.25}, {6, 0.25}});
  MaxEntropyReport rep = irreducible_correlation(rho, 3, 3);
  CHECK(rep.converged);
  CHECK(rep.residual <= 1e-8);
  CHECK(rep.correlation_bits == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(rep.level_entropies_bits[0] == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(rep.level_entropies_bits[1] == doctest::Approx(2.0));

  // All lower levels are free: pair marginals of the parity state are
  // already uniform.
  MaxEntropyReport c2 = irreducible_correlation(rho, 3, 2);
  CHECK(c2.correlation_bits == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("product states carry no irreducible correlation at any level") {
  Mat q0 = diag2(0.6, 0.4), q1 = diag2(0.8, 0.2), q2 = diag2(0.5, 0.5);
  Mat rho = Mat::Zero(8, 8);
  for (int b = 0; b < 8; ++b)
    rho(b, b) = q0((b >> 0) & 1, (b >> 0) & 1) * q1((b >> 1) & 1, (b >> 1) & 1) *
                q2((b >> 2) & 1, (b >> 2) & 1);
  for (int k = 2; k <= 3; ++k) {
    MaxEntropyReport rep = irreducible_correlation(rho, 3, k);
    CHECK(rep.converged);
    CHECK(rep.correlation_bits == doctest::Approx(0.0).epsilon(1e-8));
  }
}

TEST_CASE("surrogate entropies decrease with the level") {
  Mat rho = classical(3, {{0, 0.4}, {3, 0.3}, {5, 0.2}, {6, 0.1}});
  double prev = 3.0 + 1e-9;
  for (int l = 1; l <= 3; ++l) {
    MaxEntropyReport rep = irreducible_correlation(rho, 3, l);
    // level_entropies_bits = {S(level l-1), S(level l)}.
    double cur = rep.level_entropies_bits[1];
    CHECK(cur <= prev + 1e-7);
    CHECK(rep.correlation_bits >= -1e-7);
    prev = cur;
  }
}

TEST_CASE("constraint validation") {
  CHECK_THROWS_AS(max_entropy_state(9, {}), std::invalid_argument);
  CHECK_THROWS_AS(max_entropy_state(0, {}), std::invalid_argument);

  std::vector<MarginalConstraint> bad_dim;
  bad_dim.push_back({{0, 1}, diag2(0.5, 0.5)});
  CHECK_THROWS_AS(max_entropy_state(2, bad_dim), std::invalid_argument);

  std::vector<MarginalConstraint> out_of_range;
  out_of_range.push_back({{5}, diag2(0.5, 0.5)});
  CHECK_THROWS_AS(max_entropy_state(2, out_of_range), std::invalid_argument);

  std::vector<MarginalConstraint> unsorted;
  unsorted.push_back({{1, 0}, Mat::Identity(4, 4) / 4.0});
  CHECK_THROWS_AS(max_entropy_state(2, unsorted), std::invalid_argument);

  std::vector<MarginalConstraint> not_state;
  not_state.push_back({{0}, diag2(0.9, 0.9)});
  CHECK_THROWS_AS(max_entropy_state(2, not_state), std::invalid_argument);

  Mat bell = Mat::Zero(4, 4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  CHECK_THROWS_AS(irreducible_correlation(bell, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(irreducible_correlation(bell, 2, 3), std::invalid_argument);
}

TEST_CASE("contradictory constraints fail loudly") {
  // Qubit 0 pinned pure by one constraint and maximally mixed by another.
  std::vector<MarginalConstraint> cons;
  cons.push_back({{0}, diag2(1.0, 0.0)});
  cons.push_back({{0, 1}, Mat::Identity(4, 4) / 4.0});
  CHECK_THROWS_AS(max_entropy_state(2, cons, 1e-9, 0.5, 60),
                  std::runtime_error);
}
