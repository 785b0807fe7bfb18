#include "tqd/secretshare.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "tqd/dense.hpp"

namespace tqd {

namespace {

const char* kStateName[4] = {"1", "X", "Z", "Y"};

BitVec pauli_bits(const PauliOperator& p) {
  std::size_t n = p.num_qubits();
  BitVec v(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (p.x.get(i)) v.set(i, true);
    if (p.z.get(i)) v.set(n + i, true);
  }
  return v;
}

PauliOperator pauli_from_bits(const BitVec& v) {
  std::size_t n = v.size() / 2;
  PauliOperator p(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (v.get(i)) p.x.set(i, true);
    if (v.get(n + i)) p.z.set(i, true);
  }
  return p;
}

// Row whose dot with (x_P|z_P) is the symplectic product with g.
BitVec sympl_row(const PauliOperator& g) {
  std::size_t n = g.num_qubits();
  BitVec row(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (g.z.get(i)) row.set(i, true);
    if (g.x.get(i)) row.set(n + i, true);
  }
  return row;
}

bool support_inside(const PauliOperator& p, const Region& r) {
  for (std::size_t e = 0; e < p.num_qubits(); ++e)
    if ((p.x.get(e) || p.z.get(e)) && !r.contains(static_cast<int>(e)))
      return false;
  return true;
}

PauliOperator combine(const StabilizerState& st, const BitVec& coeffs) {
  PauliOperator s = PauliOperator::identity(st.num_qubits());
  for (std::size_t j = 0; j < st.gens.size(); ++j)
    if (coeffs.get(j)) s = s * st.gens[j];
  return s;
}

// Coefficient-space basis of the stabilizer subgroup supported inside r.
std::vector<PauliOperator> subgroup_inside(const StabilizerState& st,
                                           const Region& r) {
  std::size_t n = st.num_qubits();
  std::size_t ng = st.gens.size();
  BitMatrix constraints(0, ng);
  for (std::size_t e = 0; e < n; ++e) {
    if (r.contains(static_cast<int>(e))) continue;
    BitVec rx(ng), rz(ng);
    for (std::size_t j = 0; j < ng; ++j) {
      if (st.gens[j].x.get(e)) rx.set(j, true);
      if (st.gens[j].z.get(e)) rz.set(j, true);
    }
    constraints.append_row(rx);
    constraints.append_row(rz);
  }
  std::vector<PauliOperator> basis;
  for (const auto& c : constraints.nullspace()) basis.push_back(combine(st, c));
  return basis;
}

}  // namespace

const PauliOperator& CodeStates::v_of(int g) const {
  switch (g) {
    case 1: return v_x;
    case 2: return v_z;
    case 3: return v_y;
    default:
      // identity needs no transporter, so only 1..3 have one
      throw std::invalid_argument("transporter index must be 1..3");
  }
}

PauliOperator wilson_star_loop(const StabilizerState& st, const Region& r) {
  PauliOperator w = PauliOperator::identity(st.num_qubits());
  bool any = false;
  for (int v = 0; v < st.lat.n_vertices; ++v) {
    PauliOperator s = star_operator(st.lat, v);
    if (support_inside(s, r)) {
      w = w * s;
      any = true;
    }
  }
  if (!any) throw std::invalid_argument("region contains no full star");
  if (!support_inside(w, r))
    throw std::invalid_argument("star loop leaks outside the region");
  return w;
}

PauliOperator wilson_plaquette_loop(const StabilizerState& st, const Region& r) {
  PauliOperator w = PauliOperator::identity(st.num_qubits());
  bool any = false;
  for (int f = 0; f < st.lat.n_faces; ++f) {
    PauliOperator pl = plaquette_operator(st.lat, f);
    if (support_inside(pl, r)) {
      w = w * pl;
      any = true;
    }
  }
  if (!any) throw std::invalid_argument("region contains no full plaquette");
  if (!support_inside(w, r))
    throw std::invalid_argument("plaquette loop leaks outside the region");
  return w;
}

CodeStates build_code_states(const StabilizerState& st, const RegionLayout& lay,
                             int min_separation) {
  if (lay.kind != LayoutKind::two_blob)
    throw std::invalid_argument("code states need a two-blob layout");
  if (lay.separation < min_separation)
    throw std::invalid_argument("blobs too close for independent charges");
  CodeStates cs{st, lay, {}, {}, {}};
  const Lattice& lat = st.lat;
  auto ca = lay.params.center_a, cb = lay.params.center_b;
  int va = lat.vertex(ca[0], ca[1]), vb = lat.vertex(cb[0], cb[1]);
  int fa = lat.face(ca[0], ca[1]), fb = lat.face(cb[0], cb[1]);
  if (va < 0 || vb < 0 || fa < 0 || fb < 0)
    throw std::invalid_argument("blob centers must carry a star and a face");
  cs.v_z = ribbon_operator(lat, direct_route(lat, va, vb));
  cs.v_x = ribbon_operator(lat, dual_route(lat, fa, fb));
  cs.v_y = cs.v_x * cs.v_z;
  return cs;
}

AuthReport verify_authorized(const CodeStates& cs) {
  AuthReport rep;
  const PauliOperator we_a = wilson_star_loop(cs.omega, cs.layout.regions.at("A"));
  const PauliOperator wm_a = wilson_plaquette_loop(cs.omega, cs.layout.regions.at("A"));
  const PauliOperator we_b = wilson_star_loop(cs.omega, cs.layout.regions.at("B"));
  const PauliOperator wm_b = wilson_plaquette_loop(cs.omega, cs.layout.regions.at("B"));
  for (int g = 0; g < 4; ++g) {
    auto sign = [&](const PauliOperator& w) {
      if (g == 0) return 1;
      return cs.v_of(g).sympl(w) ? -1 : 1;
    };
    rep.alice[static_cast<std::size_t>(g)] = {sign(we_a), sign(wm_a)};
    rep.bob[static_cast<std::size_t>(g)] = {sign(we_b), sign(wm_b)};
  }
  auto distinct = [](const std::array<std::array<int, 2>, 4>& t) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (t[static_cast<std::size_t>(i)] == t[static_cast<std::size_t>(j)])
          return false;
    return true;
  };
  rep.alice_distinct = distinct(rep.alice);
  rep.bob_distinct = distinct(rep.bob);
  return rep;
}

EveProbeFamily make_probe_family(const RegionLayout& lay, int dmax,
                                 std::uint64_t seed, int n_pair_samples) {
  if (lay.kind != LayoutKind::two_blob)
    throw std::invalid_argument("probe family needs a two-blob layout");
  if (dmax < 1) throw std::invalid_argument("probe bound must be >= 1");
  const Lattice& lat = lay.lat;
  const Region& eve = lay.regions.at("E");
  EveProbeFamily fam;
  fam.dmax = dmax;
  fam.seed = seed;
  for (int y = 0; y < lat.L; ++y)
    for (int x = 0; x < lat.L; ++x)
      for (int h = 1; h <= dmax; ++h)
        for (int w = 1; w <= dmax; ++w) {
          if (lat.geometry == Geometry::planar &&
              (x + w > lat.L - 1 || y + h > lat.L - 1))
            continue;
          Region box = face_block_edges(lat, "box", x, y, w, h);
          Region sup("sup", lat.n_edges);
          bool nonempty = false;
          for (int e = 0; e < lat.n_edges; ++e)
            if (box.contains(e) && eve.contains(e)) {
              sup.add(e);
              nonempty = true;
            }
          if (!nonempty) continue;
          fam.boxes.push_back({x, y, w, h});
          fam.supports.push_back(std::move(sup));
        }
  std::mt19937_64 rng(seed);
  if (fam.boxes.size() > 1) {
    std::uniform_int_distribution<std::size_t> pick(0, fam.boxes.size() - 1);
    for (int s = 0; s < n_pair_samples; ++s) {
      std::size_t i = pick(rng), j = pick(rng);
      if (i == j) continue;
      fam.sampled_pairs.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  return fam;
}

namespace {

void check_support(const CodeStates& cs, const Region& sup, const ProbeBox& b1,
                   const ProbeBox& b2, VerifyReport& rep) {
  // Diagonal: stabilizer elements Eve can measure must not see the ribbons.
  const PauliOperator* vs[3] = {&cs.v_x, &cs.v_z, &cs.v_y};
  const char* vname[3] = {"X", "Z", "Y"};
  for (const auto& s : subgroup_inside(cs.omega, sup)) {
    for (int k = 0; k < 3; ++k) {
      ++rep.elements_checked;
      if (s.sympl(*vs[k])) {
        rep.ok = false;
        rep.violations.push_back(
            {"diagonal", b1, b2, vname[static_cast<std::size_t>(k)], s.to_string()});
      }
    }
  }
  // Off-diagonal: no coset V_i V_j S may enter the support.
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      PauliOperator q = (i == 0) ? cs.v_of(j) : cs.v_of(i) * cs.v_of(j);
      ++rep.elements_checked;
      auto witness = coset_support_feasible(cs.omega, q, sup);
      if (witness) {
        rep.ok = false;
        rep.violations.push_back({"off_diagonal", b1, b2,
                                  std::string(kStateName[i]) + "/" + kStateName[j],
                                  witness->to_string()});
      }
    }
}

}  // namespace

VerifyReport verify_unauthorized(const CodeStates& cs, const EveProbeFamily& fam,
                                 int n_threads) {
  struct Task {
    Region sup;
    ProbeBox b1, b2;
    bool pair = false;
  };
  std::vector<Task> tasks;
  for (std::size_t b = 0; b < fam.boxes.size(); ++b)
    tasks.push_back({fam.supports[b], fam.boxes[b], fam.boxes[b], false});
  for (const auto& pr : fam.sampled_pairs) {
    std::size_t i = static_cast<std::size_t>(pr[0]);
    std::size_t j = static_cast<std::size_t>(pr[1]);
    tasks.push_back({region_union("pair", fam.supports[i], fam.supports[j]),
                     fam.boxes[i], fam.boxes[j], true});
  }

  // Per-task partial reports, merged in task order so the output does not
  // depend on the thread count.
  std::vector<VerifyReport> parts(tasks.size());
  n_threads = std::max(1, n_threads);
  auto worker = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t t = begin; t < tasks.size(); t += stride)
      check_support(cs, tasks[t].sup, tasks[t].b1, tasks[t].b2, parts[t]);
  };
  if (n_threads == 1 || tasks.size() < 2) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(n_threads),
                                           tasks.size());
    for (std::size_t w = 0; w < nw; ++w) pool.emplace_back(worker, w, nw);
    for (auto& th : pool) th.join();
  }

  VerifyReport rep;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    if (tasks[t].pair) ++rep.pairs_checked;
    else ++rep.boxes_checked;
    rep.elements_checked += parts[t].elements_checked;
    if (!parts[t].ok) rep.ok = false;
    for (auto& v : parts[t].violations) rep.violations.push_back(std::move(v));
  }
  return rep;
}

CodeSpaceReport compute_index(const StabilizerState& st, const RegionLayout& lay,
                              int dmax, bool probe_bound_removed) {
  if (st.lat.geometry != Geometry::torus)
    throw std::invalid_argument("index route is defined on the torus");
  if (lay.kind != LayoutKind::two_blob)
    throw std::invalid_argument("index needs a two-blob layout");
  if (lay.separation < 4)
    throw std::invalid_argument("blobs too close for independent charges");
  if (lay.overlaps_logical)
    throw std::invalid_argument("blob touches the pinned logical loops");
  if (dmax < 1) throw std::invalid_argument("probe bound must be >= 1");

  const Region& a = lay.regions.at("A");
  const Region& b = lay.regions.at("B");
  Region ab = region_union("AB", a, b);
  std::size_t n = st.num_qubits();

  // Constraints Eve's probes impose: commuting with every generator centered
  // in her region; with the bound removed she resolves single qubits instead.
  BitMatrix constraints(0, 2 * n);
  if (probe_bound_removed) {
    for (std::size_t e = 0; e < n; ++e) {
      if (ab.contains(static_cast<int>(e))) continue;
      PauliOperator xe(n), ze(n);
      xe.x.set(e, true);
      ze.z.set(e, true);
      constraints.append_row(sympl_row(xe));
      constraints.append_row(sympl_row(ze));
    }
  } else {
    for (int v = 0; v < st.lat.n_vertices; ++v) {
      PauliOperator s = star_operator(st.lat, v);
      if (!support_inside(s, ab)) constraints.append_row(sympl_row(s));
    }
    for (int f = 0; f < st.lat.n_faces; ++f) {
      PauliOperator pl = plaquette_operator(st.lat, f);
      if (!support_inside(pl, ab)) constraints.append_row(sympl_row(pl));
    }
  }
  std::vector<BitVec> ghat = constraints.nullspace();

  // Trivial directions: stabilizers and anything A/B-local.
  BitMatrix triv(0, 2 * n);
  for (const auto& g : st.gens) triv.append_row(pauli_bits(g));
  for (std::size_t e = 0; e < n; ++e) {
    if (!ab.contains(static_cast<int>(e))) continue;
    BitVec rx(2 * n), rz(2 * n);
    rx.set(e, true);
    rz.set(n + e, true);
    triv.append_row(rx);
    triv.append_row(rz);
  }
  std::size_t rank_triv = triv.rank();
  BitMatrix joined = triv;
  for (const auto& v : ghat) joined.append_row(v);
  std::size_t rank_join = joined.rank();
  std::size_t dim_ghat = ghat.size();
  std::size_t dim_meet = dim_ghat + rank_triv - rank_join;

  CodeSpaceReport rep;
  rep.dmax = dmax;
  rep.separation = lay.separation;
  rep.probe_bound_removed = probe_bound_removed;
  rep.ghat_dim = static_cast<int>(dim_ghat);
  rep.trivial_dim = static_cast<int>(dim_meet);
  rep.raw_bits = static_cast<int>(dim_ghat - dim_meet);

  // Coset representatives of Ghat modulo the trivial directions: keep the
  // basis vectors that grow the joint span. The signature is evaluated on
  // these; on the meet it vanishes (the all-stars and all-plaquettes
  // products are the identity, so a Wilson loop equals the product of the
  // generators outside the blob, which every trivial member commutes with).
  std::vector<BitVec> reps;
  BitMatrix span = triv;
  std::size_t grown = rank_triv;
  for (const auto& g : ghat) {
    span.append_row(g);
    std::size_t r2 = span.rank();
    if (r2 > grown) {
      grown = r2;
      reps.push_back(g);
    }
  }
  if (reps.size() != dim_ghat - dim_meet)
    throw std::logic_error("quotient representative count mismatch");

  PauliOperator we = wilson_star_loop(st, a);
  PauliOperator wm = wilson_plaquette_loop(st, a);
  BitMatrix charge(0, reps.size());
  BitVec row_e(reps.size()), row_m(reps.size());
  for (std::size_t j = 0; j < reps.size(); ++j) {
    PauliOperator pj = pauli_from_bits(reps[j]);
    if (pj.sympl(we)) row_e.set(j, true);
    if (pj.sympl(wm)) row_m.set(j, true);
  }
  charge.append_row(row_e);
  charge.append_row(row_m);
  rep.charge_bits = static_cast<int>(charge.rank());
  rep.kernel_bits = rep.raw_bits - rep.charge_bits;
  rep.index = 1L << rep.charge_bits;
  rep.log2_index = static_cast<double>(rep.charge_bits);
  rep.ln_index = rep.log2_index * std::log(2.0);
  return rep;
}

SuperpositionReport superposition_check(const CodeStates& cs, int state_i,
                                        int state_j, int n_samples,
                                        std::uint64_t seed,
                                        const std::vector<double>& phases) {
  if (state_i == state_j || state_i < 0 || state_j < 0 || state_i > 3 || state_j > 3)
    throw std::invalid_argument("need two distinct code states");
  std::size_t n = cs.omega.num_qubits();
  Vec omega = statevector_ground(cs.omega);
  auto state = [&](int g) {
    return g == 0 ? omega : apply_pauli(cs.v_of(g), omega);
  };
  Vec pi = state(state_i), pj = state(state_j);

  std::vector<int> edges_a = cs.layout.regions.at("A").edges();
  std::vector<int> edges_b = cs.layout.regions.at("B").edges();
  std::vector<PauliOperator> ops;
  ops.push_back(wilson_star_loop(cs.omega, cs.layout.regions.at("A")));
  ops.push_back(wilson_plaquette_loop(cs.omega, cs.layout.regions.at("A")));
  ops.push_back(wilson_star_loop(cs.omega, cs.layout.regions.at("B")));
  ops.push_back(wilson_plaquette_loop(cs.omega, cs.layout.regions.at("B")));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> bit(0, 1);
  while (static_cast<int>(ops.size()) < n_samples) {
    const auto& edges = (ops.size() % 2 == 0) ? edges_a : edges_b;
    PauliOperator p(n);
    for (int e : edges) {
      if (bit(rng)) p.x.set(static_cast<std::size_t>(e), true);
      if (bit(rng)) p.z.set(static_cast<std::size_t>(e), true);
    }
    p.phase_exp = static_cast<std::uint8_t>(p.x.dot(p.z) & 1u);
    ops.push_back(p);
  }

  SuperpositionReport rep;
  rep.n_ops = static_cast<int>(ops.size());
  rep.phases = phases;
  for (double phi : phases) {
    Vec psi = (pi + std::exp(std::complex<double>(0, phi)) * pj) / std::sqrt(2.0);
    for (const auto& p : ops) {
      std::complex<double> sup = psi.dot(apply_pauli(p, psi));
      std::complex<double> mix = 0.5 * (pi.dot(apply_pauli(p, pi)) +
                                        pj.dot(apply_pauli(p, pj)));
      rep.max_dev = std::max(rep.max_dev, std::abs(sup - mix));
    }
  }
  return rep;
}

SecretChiReport chi_secret_check(const CodeStates& cs) {
  int n = static_cast<int>(cs.omega.num_qubits());
  Vec omega = statevector_ground(cs.omega);
  StateEnsemble ens;
  ens.p = {0.25, 0.25, 0.25, 0.25};
  ens.psis.push_back(omega);
  for (int g = 1; g < 4; ++g) ens.psis.push_back(apply_pauli(cs.v_of(g), omega));

  std::vector<int> keep_ab, keep_e;
  const Region& a = cs.layout.regions.at("A");
  const Region& b = cs.layout.regions.at("B");
  for (int e = 0; e < n; ++e) {
    if (a.contains(e) || b.contains(e)) keep_ab.push_back(e);
    else keep_e.push_back(e);
  }
  HolevoReport ab = holevo_chi_states(ens, n, keep_ab);
  HolevoReport ev = holevo_chi_states(ens, n, keep_e);

  SecretChiReport rep;
  rep.chi_ab_bits = ab.chi_bits;
  rep.chi_e_bits = ev.chi_bits;
  rep.identity_dev_ab = ab.identity_dev;
  rep.identity_dev_e = ev.identity_dev;
  rep.support_ok = ab.support_ok && ev.support_ok;
  std::vector<Mat> rho_e;
  for (const auto& psi : ens.psis)
    rho_e.push_back(reduced_from_vec(psi, n, keep_e));
  for (std::size_t i = 0; i < rho_e.size(); ++i)
    for (std::size_t j = i + 1; j < rho_e.size(); ++j)
      rep.max_e_trace_distance =
          std::max(rep.max_e_trace_distance, trace_distance(rho_e[i], rho_e[j]));
  return rep;
}

}  // namespace tqd
