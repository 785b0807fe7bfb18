#include "tqd/entropy.hpp"

#include <stdexcept>

namespace tqd {

int region_entropy(const StabilizerState& st, const Region& r) {
  std::size_t n = st.num_qubits();
  if (r.mask.size() != n) throw std::invalid_argument("region size mismatch");
  std::vector<std::size_t> outside;
  for (std::size_t e = 0; e < n; ++e)
    if (!r.contains(static_cast<int>(e))) outside.push_back(e);
  // Generators restricted to the complement; kernel = subgroup inside r.
  BitMatrix m(0, 2 * outside.size());
  for (const auto& g : st.gens) {
    BitVec row(2 * outside.size());
    for (std::size_t i = 0; i < outside.size(); ++i) {
      if (g.x.get(outside[i])) row.set(2 * i, true);
      if (g.z.get(outside[i])) row.set(2 * i + 1, true);
    }
    m.append_row(row);
  }
  return static_cast<int>(m.rank()) - static_cast<int>(outside.size());
}

TeeReport tee_combination(const StabilizerState& st, const RegionLayout& lay) {
  TeeReport rep;
  rep.L = lay.lat.L;
  rep.thin = lay.thin;
  if (lay.kind == LayoutKind::kitaev_preskill) {
    rep.kind = "kitaev_preskill";
    const Region& a = lay.regions.at("A");
    const Region& b = lay.regions.at("B");
    const Region& c = lay.regions.at("C");
    Region ab = region_union("AB", a, b);
    Region ac = region_union("AC", a, c);
    Region bc = region_union("BC", b, c);
    Region abc = region_union("ABC", ab, c);
    rep.entropies["A"] = region_entropy(st, a);
    rep.entropies["B"] = region_entropy(st, b);
    rep.entropies["C"] = region_entropy(st, c);
    rep.entropies["AB"] = region_entropy(st, ab);
    rep.entropies["AC"] = region_entropy(st, ac);
    rep.entropies["BC"] = region_entropy(st, bc);
    rep.entropies["ABC"] = region_entropy(st, abc);
    rep.combination_bits = rep.entropies["A"] + rep.entropies["B"] +
                           rep.entropies["C"] - rep.entropies["AB"] -
                           rep.entropies["AC"] - rep.entropies["BC"] +
                           rep.entropies["ABC"];
    rep.gamma_bits = -static_cast<double>(rep.combination_bits);
  } else if (lay.kind == LayoutKind::levin_wen) {
    rep.kind = "levin_wen";
    const Region& l = lay.regions.at("left");
    const Region& r = lay.regions.at("right");
    const Region& t = lay.regions.at("top");
    const Region& bot = lay.regions.at("bottom");
    Region sides = region_union("sides", l, r);
    Region no_bottom = region_union("no_bottom", sides, t);
    Region no_top = region_union("no_top", sides, bot);
    Region ring = region_union("ring", no_bottom, bot);
    rep.entropies["ring"] = region_entropy(st, ring);
    rep.entropies["no_bottom"] = region_entropy(st, no_bottom);
    rep.entropies["no_top"] = region_entropy(st, no_top);
    rep.entropies["sides"] = region_entropy(st, sides);
    rep.combination_bits = rep.entropies["no_bottom"] + rep.entropies["no_top"] -
                           rep.entropies["ring"] - rep.entropies["sides"];
    rep.gamma_bits = static_cast<double>(rep.combination_bits) / 2.0;
  } else {
    throw std::invalid_argument("tee_combination needs a disk or ring layout");
  }
  return rep;
}

AreaLawFit area_law_fit(const StabilizerState& st,
                        const std::vector<RegionLayout>& layouts) {
  AreaLawFit fit;
  if (layouts.size() < 2)
    throw std::invalid_argument("area-law fit needs at least two samples");
  for (const auto& lay : layouts) {
    std::string key;
    if (lay.kind == LayoutKind::rectangle) key = "rect";
    else if (lay.kind == LayoutKind::annulus) key = "ann";
    else throw std::invalid_argument("area-law fit takes rectangles and annuli");
    const Region& r = lay.regions.at(key);
    AreaLawSample s;
    s.name = key + "_" + std::to_string(fit.samples.size());
    s.boundary_gens = boundary_size(st.lat, r);
    s.components = boundary_components(st.lat, r);
    s.entropy_bits = region_entropy(st, r);
    fit.samples.push_back(s);
  }
  // Normal equations for min sum (beta*p_i - gamma*n_i - S_i)^2:
  //   [ Spp  -Spn ] [beta ]   [ SpS ]
  //   [ -Spn  Snn ] [gamma] = [ -SnS ]
  long long spp = 0, spn = 0, snn = 0, sps = 0, sns = 0;
  for (const auto& s : fit.samples) {
    long long p = s.boundary_gens, n = s.components, S = s.entropy_bits;
    spp += p * p;
    spn += p * n;
    snn += n * n;
    sps += p * S;
    sns += n * S;
  }
  fit.det = spp * snn - spn * spn;
  if (fit.det == 0)
    throw std::invalid_argument("degenerate sample family, fit underdetermined");
  fit.beta_num = sps * snn - spn * sns;
  fit.gamma_num = spn * sps - spp * sns;
  fit.beta = static_cast<double>(fit.beta_num) / static_cast<double>(fit.det);
  fit.gamma = static_cast<double>(fit.gamma_num) / static_cast<double>(fit.det);
  fit.exact = true;
  fit.residual_sumsq = 0.0;
  for (const auto& s : fit.samples) {
    long long num = fit.beta_num * s.boundary_gens -
                    fit.gamma_num * s.components - fit.det * s.entropy_bits;
    if (num != 0) fit.exact = false;
    double r = static_cast<double>(num) / static_cast<double>(fit.det);
    fit.residual_sumsq += r * r;
  }
  return fit;
}

}  // namespace tqd
