#include "tqd/fusion.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tqd {

int FusionModel::label_index(const std::string& name) const {
  for (int i = 0; i < n_labels(); ++i)
    if (labels[i] == name) return i;
  throw std::invalid_argument("unknown fusion label: " + name);
}

void FusionModel::validate() const {
  int k = n_labels();
  if (k < 1) throw std::invalid_argument("fusion model needs labels");
  if (static_cast<int>(dual.size()) != k || static_cast<int>(N.size()) != k)
    throw std::invalid_argument("fusion tables sized off the label set");
  for (int a = 0; a < k; ++a) {
    if (dual[a] < 0 || dual[a] >= k || dual[dual[a]] != a)
      throw std::invalid_argument("dual map is not an involution");
    if (static_cast<int>(N[a].size()) != k)
      throw std::invalid_argument("fusion tables sized off the label set");
    for (int b = 0; b < k; ++b) {
      if (static_cast<int>(N[a][b].size()) != k)
        throw std::invalid_argument("fusion tables sized off the label set");
      for (int c = 0; c < k; ++c)
        if (N[a][b][c] < 0)
          throw std::invalid_argument("negative fusion multiplicity");
    }
  }
  for (int b = 0; b < k; ++b)
    for (int c = 0; c < k; ++c)
      if (N[0][b][c] != (b == c ? 1 : 0) || N[b][0][c] != (b == c ? 1 : 0))
        throw std::invalid_argument("label 0 must be the fusion unit");
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (N[a][b][0] != (b == dual[a] ? 1 : 0))
        throw std::invalid_argument("vacuum channel must pair duals uniquely");
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d) {
          long long lft = 0, rgt = 0;
          for (int e = 0; e < k; ++e)
            lft += static_cast<long long>(N[a][b][e]) * N[e][c][d];
          for (int f = 0; f < k; ++f)
            rgt += static_cast<long long>(N[b][c][f]) * N[a][f][d];
          if (lft != rgt) throw std::invalid_argument("fusion is not associative");
        }
}

FusionModel FusionModel::toric() {
  FusionModel m;
  m.labels = {"1", "e", "m", "f"};
  m.dual = {0, 1, 2, 3};
  // Z2 x Z2 group multiplication.
  m.N.assign(4, std::vector<std::vector<int>>(4, std::vector<int>(4, 0)));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) m.N[a][b][a ^ b] = 1;
  m.validate();
  return m;
}

FusionModel FusionModel::fibonacci() {
  FusionModel m;
  m.labels = {"1", "tau"};
  m.dual = {0, 1};
  m.N.assign(2, std::vector<std::vector<int>>(2, std::vector<int>(2, 0)));
  m.N[0][0][0] = 1;
  m.N[0][1][1] = 1;
  m.N[1][0][1] = 1;
  m.N[1][1][0] = 1;
  m.N[1][1][1] = 1;  // tau x tau = 1 + tau
  m.validate();
  return m;
}

FusionModel FusionModel::ising() {
  FusionModel m;
  m.labels = {"1", "sigma", "psi"};
  m.dual = {0, 1, 2};
  m.N.assign(3, std::vector<std::vector<int>>(3, std::vector<int>(3, 0)));
  auto set_comm = [&](int a, int b, int c) {
    m.N[a][b][c] = 1;
    m.N[b][a][c] = 1;
  };
  set_comm(0, 0, 0);
  set_comm(0, 1, 1);
  set_comm(0, 2, 2);
  m.N[1][1][0] = 1;  // sigma x sigma = 1 + psi
  m.N[1][1][2] = 1;
  set_comm(1, 2, 1);  // sigma x psi = sigma
  m.N[2][2][0] = 1;   // psi x psi = 1
  m.validate();
  return m;
}

FusionModel FusionModel::by_name(const std::string& name) {
  if (name == "toric") return toric();
  if (name == "fibonacci") return fibonacci();
  if (name == "ising") return ising();
  throw std::invalid_argument("unknown fusion model: " + name);
}

FusionModel FusionModel::from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  FusionModel m;
  m.labels = j.at("labels").get<std::vector<std::string>>();
  if (j.at("dual").empty() || j.at("dual")[0].is_string()) {
    for (const auto& d : j.at("dual")) m.dual.push_back(m.label_index(d));
  } else {
    m.dual = j.at("dual").get<std::vector<int>>();
  }
  m.N = j.at("N").get<std::vector<std::vector<std::vector<int>>>>();
  m.validate();
  return m;
}

FusionModel FusionModel::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open fusion model file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_string(ss.str());
}

QuantumDims quantum_dims(const FusionModel& m) {
  int k = m.n_labels();
  QuantumDims q;
  for (int a = 0; a < k; ++a) {
    Eigen::MatrixXd na(k, k);
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) na(b, c) = m.N[a][b][c];
    Eigen::EigenSolver<Eigen::MatrixXd> es(na);
    double best = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
      best = std::max(best, std::abs(es.eigenvalues()[i]));
    q.d.push_back(best);
    q.total_sq += best * best;
  }
  return q;
}

long long fusion_dim(const FusionModel& m, int a, int n, int c, bool mixed) {
  int k = m.n_labels();
  if (!mixed && (a < 0 || a >= k)) throw std::invalid_argument("bad anyon type");
  if (c < 0 || c >= k) throw std::invalid_argument("bad total charge");
  if (n < 0) throw std::invalid_argument("negative puncture count");
  if (n > 48) throw std::invalid_argument("puncture count overflows the counter");
  if (n == 0) return c == m.unit() ? 1 : 0;
  std::vector<long long> v(k, 0);
  if (mixed) {
    for (int t = 0; t < k; ++t) v[t] = 1;
  } else {
    v[a] = 1;
  }
  for (int step = 1; step < n; ++step) {
    std::vector<long long> w(k, 0);
    for (int cc = 0; cc < k; ++cc)
      for (int b = 0; b < k; ++b) {
        if (v[b] == 0) continue;
        long long mult = 0;
        if (mixed) {
          for (int t = 0; t < k; ++t) mult += m.N[t][b][cc];
        } else {
          mult = m.N[a][b][cc];
        }
        w[cc] += mult * v[b];
      }
    v = std::move(w);
  }
  return v[c];
}

FusionSecretReport secret_ratio(const FusionModel& m, int type_a, int n_a,
                                int n_b, int n_e) {
  if (n_a < 1 || n_b < 1 || n_e < 0)
    throw std::invalid_argument("each blob needs at least one puncture");
  FusionSecretReport rep;
  rep.mixed = type_a < 0;
  rep.n_a = n_a;
  rep.n_b = n_b;
  rep.n_e = n_e;
  int k = m.n_labels();
  for (int c = 0; c < k; ++c) {
    rep.f_a.push_back(fusion_dim(m, type_a, n_a, c, rep.mixed));
    rep.f_b.push_back(fusion_dim(m, type_a, n_b, c, rep.mixed));
  }
  rep.f_e_vac = fusion_dim(m, type_a, n_e, m.unit(), rep.mixed);
  double fa1 = static_cast<double>(rep.f_a[0]);
  double fb1 = static_cast<double>(rep.f_b[0]);
  double fe1 = static_cast<double>(rep.f_e_vac);
  rep.dim_v = fa1 * fb1 * fe1;
  rep.dim_vhat = 0.0;
  for (int c = 0; c < k; ++c)
    rep.dim_vhat += static_cast<double>(rep.f_a[c]) *
                    static_cast<double>(rep.f_b[m.dual[c]]) * fe1;
  if (rep.dim_v <= 0.0) {
    rep.undefined = true;
    rep.ratio = 0.0;
    rep.log2_ratio = 0.0;
  } else {
    // Sum of per-charge ratio products keeps big counts in double range.
    rep.ratio = 0.0;
    for (int c = 0; c < k; ++c)
      rep.ratio += (static_cast<double>(rep.f_a[c]) / fa1) *
                   (static_cast<double>(rep.f_b[m.dual[c]]) / fb1);
    rep.log2_ratio = std::log2(rep.ratio);
  }
  rep.asymptotic_ratio = quantum_dims(m).total_sq;
  return rep;
}

}  // namespace tqd
