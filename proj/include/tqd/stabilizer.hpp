#pragma once

#include <optional>
#include <vector>

#include "tqd/gf2.hpp"
#include "tqd/lattice.hpp"
#include "tqd/pauli.hpp"

namespace tqd {

// Stabilizer state given by a full set of n independent commuting
// generators (each with +1 eigenvalue convention, phase_exp encodes signs).
struct StabilizerState {
  Lattice lat;
  std::vector<PauliOperator> gens;

  std::size_t num_qubits() const { return static_cast<std::size_t>(lat.n_edges); }

  // Rows are the generators' (x|z) bit strings, 2n columns.
  BitMatrix tableau() const;
  // Columns are the generators; rows are the 2n bit positions. Used to
  // solve "which product of generators equals this Pauli".
  BitMatrix generator_columns() const;
};

// Vertex stars minus one dependent star, all plaquettes (planar) or all
// plaquettes minus one plus the two row-0 / column-0 Z loops (torus).
StabilizerState ground_state(const Lattice& lat);

PauliOperator star_operator(const Lattice& lat, int v);
PauliOperator plaquette_operator(const Lattice& lat, int f);

// Ground-space dimension exponent: n_edges - rank(stars + plaquettes).
int logical_count(const Lattice& lat);

// <P> on the stabilizer state: +1 / -1 when +-P is in the group, else 0.
// P must be Hermitian.
int expectation(const StabilizerState& st, const PauliOperator& p);

// Looks for a member of the coset q*S supported inside r; returns that
// representative when it exists.
std::optional<PauliOperator> coset_support_feasible(const StabilizerState& st,
                                                    const PauliOperator& q,
                                                    const Region& r);

// Ribbon operators. A direct ribbon is Z along a vertex path; a dual ribbon
// is X across a face path (the shared edge of consecutive faces).
struct RibbonPath {
  bool dual = false;
  std::vector<int> sites;  // vertex ids (direct) or face ids (dual)
};

RibbonPath direct_path(const Lattice& lat, const std::vector<int>& vertices);
RibbonPath dual_path(const Lattice& lat, const std::vector<int>& faces);
// L-shaped route between two vertices (x first, then y) or two faces.
RibbonPath direct_route(const Lattice& lat, int va, int vb);
RibbonPath dual_route(const Lattice& lat, int fa, int fb);

PauliOperator ribbon_operator(const Lattice& lat, const RibbonPath& path);
// Composite ribbon: product of a direct and a dual ribbon (Y-type when the
// two overlap).
PauliOperator ribbon_operator(const Lattice& lat, const RibbonPath& direct,
                              const RibbonPath& dual);

}  // namespace tqd
