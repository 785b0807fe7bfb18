#include "tqd/stabilizer.hpp"

#include <algorithm>
#include <stdexcept>

namespace tqd {

PauliOperator star_operator(const Lattice& lat, int v) {
  PauliOperator p(static_cast<std::size_t>(lat.n_edges));
  for (int e : lat.star_edges(v)) p.x.set(static_cast<std::size_t>(e), true);
  return p;
}

PauliOperator plaquette_operator(const Lattice& lat, int f) {
  PauliOperator p(static_cast<std::size_t>(lat.n_edges));
  for (int e : lat.plaquette_edges(f)) p.z.set(static_cast<std::size_t>(e), true);
  return p;
}

StabilizerState ground_state(const Lattice& lat) {
  StabilizerState st;
  st.lat = lat;
  int drop_v = lat.vertex(lat.L - 1, lat.L - 1);
  for (int v = 0; v < lat.n_vertices; ++v)
    if (v != drop_v) st.gens.push_back(star_operator(lat, v));
  if (lat.geometry == Geometry::torus) {
    int drop_f = lat.face(lat.L - 1, lat.L - 1);
    for (int f = 0; f < lat.n_faces; ++f)
      if (f != drop_f) st.gens.push_back(plaquette_operator(lat, f));
    // Z loops around the two cycles pin the logical qubits.
    std::vector<int> row0, col0;
    for (int x = 0; x < lat.L; ++x) row0.push_back(lat.h_edge(x, 0));
    for (int y = 0; y < lat.L; ++y) col0.push_back(lat.v_edge(0, y));
    st.gens.push_back(PauliOperator::z_on(st.num_qubits(), row0));
    st.gens.push_back(PauliOperator::z_on(st.num_qubits(), col0));
  } else {
    for (int f = 0; f < lat.n_faces; ++f)
      st.gens.push_back(plaquette_operator(lat, f));
  }
  if (st.gens.size() != st.num_qubits())
    throw std::logic_error("generator count must equal qubit count");
  return st;
}

BitMatrix StabilizerState::tableau() const {
  std::size_t n = num_qubits();
  BitMatrix m(0, 2 * n);
  for (const auto& g : gens) {
    BitVec row(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (g.x.get(i)) row.set(i, true);
      if (g.z.get(i)) row.set(n + i, true);
    }
    m.append_row(row);
  }
  return m;
}

BitMatrix StabilizerState::generator_columns() const {
  std::size_t n = num_qubits();
  BitMatrix m(2 * n, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) {
      if (gens[j].x.get(i)) m.set(i, j, true);
      if (gens[j].z.get(i)) m.set(n + i, j, true);
    }
  return m;
}

int logical_count(const Lattice& lat) {
  std::size_t n = static_cast<std::size_t>(lat.n_edges);
  BitMatrix m(0, 2 * n);
  auto push = [&](const PauliOperator& g) {
    BitVec row(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (g.x.get(i)) row.set(i, true);
      if (g.z.get(i)) row.set(n + i, true);
    }
    m.append_row(row);
  };
  for (int v = 0; v < lat.n_vertices; ++v) push(star_operator(lat, v));
  for (int f = 0; f < lat.n_faces; ++f) push(plaquette_operator(lat, f));
  return lat.n_edges - static_cast<int>(m.rank());
}

namespace {

BitVec pauli_bits(const PauliOperator& p) {
  std::size_t n = p.num_qubits();
  BitVec v(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (p.x.get(i)) v.set(i, true);
    if (p.z.get(i)) v.set(n + i, true);
  }
  return v;
}

PauliOperator combine(const StabilizerState& st, const BitVec& coeffs) {
  PauliOperator s = PauliOperator::identity(st.num_qubits());
  for (std::size_t j = 0; j < st.gens.size(); ++j)
    if (coeffs.get(j)) s = s * st.gens[j];
  return s;
}

}  // namespace

int expectation(const StabilizerState& st, const PauliOperator& p) {
  if (p.num_qubits() != st.num_qubits())
    throw std::invalid_argument("operator size mismatch");
  if (!p.is_hermitian())
    throw std::invalid_argument("expectation needs a Hermitian Pauli");
  auto c = st.generator_columns().solve(pauli_bits(p));
  if (!c) return 0;
  PauliOperator s = combine(st, *c);
  int dt = (static_cast<int>(p.phase_exp) - static_cast<int>(s.phase_exp)) & 3;
  if (dt == 0) return 1;
  if (dt == 2) return -1;
  throw std::logic_error("phase mismatch between Hermitian operators");
}

std::optional<PauliOperator> coset_support_feasible(const StabilizerState& st,
                                                    const PauliOperator& q,
                                                    const Region& r) {
  if (q.num_qubits() != st.num_qubits())
    throw std::invalid_argument("operator size mismatch");
  std::size_t n = st.num_qubits();
  std::size_t ng = st.gens.size();
  // One x-row and one z-row per edge outside r: the product q*s must vanish
  // there.
  std::vector<std::size_t> outside;
  for (std::size_t e = 0; e < n; ++e)
    if (!r.contains(static_cast<int>(e))) outside.push_back(e);
  BitMatrix a(0, ng);
  std::vector<bool> rhs_bits;
  for (std::size_t e : outside) {
    BitVec rx(ng), rz(ng);
    for (std::size_t j = 0; j < ng; ++j) {
      if (st.gens[j].x.get(e)) rx.set(j, true);
      if (st.gens[j].z.get(e)) rz.set(j, true);
    }
    a.append_row(rx);
    rhs_bits.push_back(q.x.get(e));
    a.append_row(rz);
    rhs_bits.push_back(q.z.get(e));
  }
  BitVec rhs(rhs_bits.size());
  for (std::size_t i = 0; i < rhs_bits.size(); ++i)
    if (rhs_bits[i]) rhs.set(i, true);
  auto c = a.solve(rhs);
  if (!c) return std::nullopt;
  PauliOperator rep = q * combine(st, *c);
  for (std::size_t e = 0; e < n; ++e)
    if (!r.contains(static_cast<int>(e)) && (rep.x.get(e) || rep.z.get(e)))
      throw std::logic_error("coset representative leaks outside the region");
  return rep;
}

namespace {

int edge_between(const Lattice& lat, int a, int b) {
  for (int e : lat.star_edges(a)) {
    auto ep = lat.edge_endpoints(e);
    if ((ep[0] == a && ep[1] == b) || (ep[0] == b && ep[1] == a)) return e;
  }
  return -1;
}

int shared_edge(const Lattice& lat, int fa, int fb) {
  auto ea = lat.plaquette_edges(fa);
  auto eb = lat.plaquette_edges(fb);
  for (int e : ea)
    if (std::find(eb.begin(), eb.end(), e) != eb.end()) return e;
  return -1;
}

// Steps the trailing coordinate toward `to`, shorter way around on the torus.
void walk_axis(const Lattice& lat, int to, std::vector<int>& coords) {
  int L = lat.L;
  int cur = coords.back();
  while (cur != to) {
    int d = to - cur;
    int step;
    if (lat.geometry == Geometry::torus) {
      int fwd = ((d % L) + L) % L;
      step = (fwd <= L - fwd) ? 1 : -1;
      cur = ((cur + step) % L + L) % L;
    } else {
      step = d > 0 ? 1 : -1;
      cur += step;
    }
    coords.push_back(cur);
  }
}

}  // namespace

RibbonPath direct_path(const Lattice& lat, const std::vector<int>& vertices) {
  if (vertices.empty()) throw std::invalid_argument("empty ribbon path");
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    if (edge_between(lat, vertices[i], vertices[i + 1]) < 0)
      throw std::invalid_argument("direct path vertices not adjacent");
  return RibbonPath{false, vertices};
}

RibbonPath dual_path(const Lattice& lat, const std::vector<int>& faces) {
  if (faces.empty()) throw std::invalid_argument("empty ribbon path");
  for (std::size_t i = 0; i + 1 < faces.size(); ++i)
    if (shared_edge(lat, faces[i], faces[i + 1]) < 0)
      throw std::invalid_argument("dual path faces not adjacent");
  return RibbonPath{true, faces};
}

RibbonPath direct_route(const Lattice& lat, int va, int vb) {
  auto [ax, ay] = lat.vertex_xy(va);
  auto [bx, by] = lat.vertex_xy(vb);
  std::vector<int> xs{ax}, ys{ay};
  walk_axis(lat, bx, xs);
  walk_axis(lat, by, ys);
  std::vector<int> verts;
  for (int x : xs) verts.push_back(lat.vertex(x, ay));
  for (std::size_t i = 1; i < ys.size(); ++i) verts.push_back(lat.vertex(bx, ys[i]));
  return direct_path(lat, verts);
}

RibbonPath dual_route(const Lattice& lat, int fa, int fb) {
  auto [ax, ay] = lat.face_xy(fa);
  auto [bx, by] = lat.face_xy(fb);
  std::vector<int> xs{ax}, ys{ay};
  walk_axis(lat, bx, xs);
  walk_axis(lat, by, ys);
  std::vector<int> faces;
  for (int x : xs) faces.push_back(lat.face(x, ay));
  for (std::size_t i = 1; i < ys.size(); ++i) faces.push_back(lat.face(bx, ys[i]));
  return dual_path(lat, faces);
}

PauliOperator ribbon_operator(const Lattice& lat, const RibbonPath& path) {
  PauliOperator p(static_cast<std::size_t>(lat.n_edges));
  for (std::size_t i = 0; i + 1 < path.sites.size(); ++i) {
    int e = path.dual ? shared_edge(lat, path.sites[i], path.sites[i + 1])
                      : edge_between(lat, path.sites[i], path.sites[i + 1]);
    if (e < 0) throw std::invalid_argument("broken ribbon path");
    // Repeated edges cancel in the product.
    if (path.dual)
      p.x.flip(static_cast<std::size_t>(e));
    else
      p.z.flip(static_cast<std::size_t>(e));
  }
  return p;
}

PauliOperator ribbon_operator(const Lattice& lat, const RibbonPath& direct,
                              const RibbonPath& dual) {
  if (direct.dual || !dual.dual)
    throw std::invalid_argument("composite ribbon takes one direct and one dual path");
  return ribbon_operator(lat, dual) * ribbon_operator(lat, direct);
}

}  // namespace tqd
