#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tqd/crossed_product.hpp"
#include "tqd/dense.hpp"
#include "tqd/entropy.hpp"
#include "tqd/fusion.hpp"
#include "tqd/lattice.hpp"
#include "tqd/maxent.hpp"
#include "tqd/secretshare.hpp"
#include "tqd/stabilizer.hpp"

using nlohmann::ordered_json;
using namespace tqd;

namespace {

constexpr const char* kSchema = "tqd-report/1";

int env_threads() {
  const char* s = std::getenv("TQD_THREADS");
  if (!s) return 1;
  int n = 1;
  try {
    n = std::stoi(s);
  } catch (const std::exception&) {
    return 1;
  }
  if (n < 1) return 1;
  if (n > 64) return 64;
  return n;
}

Geometry parse_geometry(const std::string& s) {
  if (s == "torus") return Geometry::torus;
  if (s == "planar") return Geometry::planar;
  throw std::invalid_argument("geometry must be torus or planar");
}

const char* geometry_name(Geometry g) {
  return g == Geometry::torus ? "torus" : "planar";
}

// Default blob placement: radius-1 balls once they fit clear of the pinned
// loop rows, the tighter star+face site blobs below that.
LayoutParams default_blobs(int L) {
  LayoutParams p;
  if (L >= 8) {
    p.radius = 1;
    p.center_a = {2, 2};
    p.center_b = {2 + L / 2, 2 + L / 2};
  } else {
    p.radius = 0;
    p.center_a = {1, 1};
    p.center_b = {1 + L / 2, 1 + L / 2};
  }
  return p;
}

struct LayoutSpec {
  Geometry geometry = Geometry::torus;
  int L = 8;
  LayoutParams params;
  bool have_params = false;
};

// {"geometry": "torus", "L": 8,
//  "layout": {"kind": "two-blob", "centers": [[2,2],[6,6]], "radius": 1}}
LayoutSpec read_layout_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open layout file: " + path);
  ordered_json j = ordered_json::parse(in);
  LayoutSpec spec;
  spec.geometry = parse_geometry(j.at("geometry").get<std::string>());
  spec.L = j.at("L").get<int>();
  const auto& lay = j.at("layout");
  if (lay.at("kind").get<std::string>() != "two-blob")
    throw std::invalid_argument("layout file supports kind two-blob");
  spec.params = default_blobs(spec.L);
  const auto& centers = lay.at("centers");
  if (centers.size() != 2)
    throw std::invalid_argument("layout needs exactly two centers");
  spec.params.center_a = {centers[0][0].get<int>(), centers[0][1].get<int>()};
  spec.params.center_b = {centers[1][0].get<int>(), centers[1][1].get<int>()};
  if (lay.contains("radius")) spec.params.radius = lay.at("radius").get<int>();
  if (lay.contains("min_separation"))
    spec.params.min_separation = lay.at("min_separation").get<int>();
  spec.have_params = true;
  return spec;
}

ordered_json layout_json(const RegionLayout& lay) {
  ordered_json j;
  j["kind"] = "two-blob";
  j["centers"] = {{lay.params.center_a[0], lay.params.center_a[1]},
                  {lay.params.center_b[0], lay.params.center_b[1]}};
  j["radius"] = lay.params.radius;
  j["min_separation"] = lay.params.min_separation;
  j["separation"] = lay.separation;
  return j;
}

ordered_json lattice_json(const Lattice& lat) {
  ordered_json j;
  j["geometry"] = geometry_name(lat.geometry);
  j["L"] = lat.L;
  j["n_edges"] = lat.n_edges;
  j["n_vertices"] = lat.n_vertices;
  j["n_faces"] = lat.n_faces;
  return j;
}

void flatten_csv(const ordered_json& j, const std::string& prefix,
                 std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, val] : j.items())
      flatten_csv(val, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten_csv(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << "," << j.dump() << "\n";
  }
}

void emit(const ordered_json& report, const std::string& format,
          const std::string& out_path) {
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
    out = &file;
  }
  if (format == "csv") {
    flatten_csv(report, "", *out);
  } else {
    *out << report.dump(2) << "\n";
  }
}

struct CommonOpts {
  std::string geometry = "torus";
  int L = 8;
  int dmax = 3;
  std::uint64_t seed = 7;
  std::string layout_file;
  std::string format = "json";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_probes) {
  cmd->add_option("--geometry", o.geometry, "lattice geometry")
      ->check(CLI::IsMember({"torus", "planar"}));
  cmd->add_option("--L", o.L, "linear lattice size");
  if (with_probes) {
    cmd->add_option("--dmax", o.dmax, "probe box side bound");
    cmd->add_option("--seed", o.seed, "probe pair sampling seed");
  }
  cmd->add_option("--layout", o.layout_file, "layout JSON file");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", o.out_path, "write the report to a file");
}

RegionLayout resolve_blob_layout(const CommonOpts& o, Lattice* lat_out) {
  LayoutSpec spec;
  spec.geometry = parse_geometry(o.geometry);
  spec.L = o.L;
  if (!o.layout_file.empty()) spec = read_layout_file(o.layout_file);
  if (!spec.have_params) spec.params = default_blobs(spec.L);
  Lattice lat = build_lattice(spec.geometry, spec.L);
  *lat_out = lat;
  return make_layout(lat, LayoutKind::two_blob, spec.params);
}

int run_index(const CommonOpts& o) {
  Lattice lat;
  RegionLayout lay = resolve_blob_layout(o, &lat);
  StabilizerState st = ground_state(lat);
  CodeSpaceReport rep = compute_index(st, lay, o.dmax);

  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = "index";
  j["inputs"] = {{"geometry", geometry_name(lat.geometry)},
                 {"L", lat.L},
                 {"dmax", o.dmax},
                 {"seed", o.seed},
                 {"layout", layout_json(lay)}};
  j["lattice"] = lattice_json(lat);
  j["tolerances"] = {{"exact_integer", true}};
  j["results"] = {{"index", rep.index},
                  {"charge_bits", rep.charge_bits},
                  {"kernel_bits", rep.kernel_bits},
                  {"log_index_bits", rep.log2_index},
                  {"log_index_nats", rep.ln_index},
                  {"raw_bits", rep.raw_bits},
                  {"ghat_dim", rep.ghat_dim},
                  {"trivial_dim", rep.trivial_dim},
                  {"separation", rep.separation},
                  {"probe_bound_removed", rep.probe_bound_removed}};
  emit(j, o.format, o.out_path);
  return 0;
}

int run_verify(const CommonOpts& o) {
  Lattice lat;
  RegionLayout lay = resolve_blob_layout(o, &lat);
  StabilizerState st = ground_state(lat);
  CodeStates cs = build_code_states(st, lay);
  EveProbeFamily fam = make_probe_family(lay, o.dmax, o.seed);
  VerifyReport rep = verify_unauthorized(cs, fam, env_threads());

  ordered_json vio = ordered_json::array();
  for (const auto& v : rep.violations) {
    vio.push_back({{"kind", v.kind},
                   {"box", {v.box.x, v.box.y, v.box.w, v.box.h}},
                   {"box2", {v.box2.x, v.box2.y, v.box2.w, v.box2.h}},
                   {"pair", v.pair},
                   {"witness", v.witness}});
  }
  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = "verify";
  j["inputs"] = {{"geometry", geometry_name(lat.geometry)},
                 {"L", lat.L},
                 {"dmax", o.dmax},
                 {"seed", o.seed},
                 {"layout", layout_json(lay)}};
  j["lattice"] = lattice_json(lat);
  j["tolerances"] = {{"exact_integer", true}};
  j["results"] = {{"ok", rep.ok},
                  {"boxes_checked", rep.boxes_checked},
                  {"pairs_checked", rep.pairs_checked},
                  {"elements_checked", rep.elements_checked},
                  {"n_violations", vio.size()},
                  {"violations", vio}};
  emit(j, o.format, o.out_path);
  return rep.ok ? 0 : 1;
}

int run_tee(const std::string& layout, int L, std::array<int, 2> anchor,
            const std::string& format, const std::string& out_path) {
  Lattice lat = build_lattice(Geometry::torus, L);
  StabilizerState st = ground_state(lat);

  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = "tee";
  j["lattice"] = lattice_json(lat);

  if (layout == "annulus") {
    // Mixed rectangle family plus a two-boundary annulus pins slope and
    // offset in one exact solve.
    std::vector<RegionLayout> lays;
    ordered_json rects = ordered_json::array();
    for (auto [w, h] : std::vector<std::array<int, 2>>{{2, 2}, {3, 2}, {4, 4}, {5, 3}}) {
      LayoutParams p;
      p.anchor = anchor;
      p.rect_w = w;
      p.rect_h = h;
      lays.push_back(make_layout(lat, LayoutKind::rectangle, p));
      rects.push_back({w, h});
    }
    LayoutParams ap;
    ap.anchor = anchor;
    ap.inner_radius = 1;
    ap.outer_radius = 3;
    lays.push_back(make_layout(lat, LayoutKind::annulus, ap));

    AreaLawFit fit = area_law_fit(st, lays);
    j["inputs"] = {{"layout", layout},
                   {"L", L},
                   {"anchor", {anchor[0], anchor[1]}},
                   {"rectangles", rects},
                   {"annulus", {{"inner_radius", 1}, {"outer_radius", 3}}}};
    j["tolerances"] = {{"exact_integer", true}};
    ordered_json samples = ordered_json::array();
    for (const auto& s : fit.samples)
      samples.push_back({{"name", s.name},
                         {"boundary_gens", s.boundary_gens},
                         {"components", s.components},
                         {"entropy_bits", s.entropy_bits}});
    j["results"] = {{"beta", fit.beta},
                    {"gamma_bits", fit.gamma},
                    {"residual", fit.residual_sumsq},
                    {"exact", fit.exact},
                    {"samples", samples}};
  } else {
    LayoutKind kind = layout == "kitaev_preskill" ? LayoutKind::kitaev_preskill
                                                  : LayoutKind::levin_wen;
    LayoutParams p;
    p.anchor = anchor;
    RegionLayout lay = make_layout(lat, kind, p);
    TeeReport rep = tee_combination(st, lay);
    j["inputs"] = {{"layout", layout}, {"L", L}, {"anchor", {anchor[0], anchor[1]}}};
    j["tolerances"] = {{"exact_integer", true}};
    ordered_json entropies;
    for (const auto& [name, s] : rep.entropies) entropies[name] = s;
    j["results"] = {{"combination_bits", rep.combination_bits},
                    {"gamma_bits", rep.gamma_bits},
                    {"entropies", entropies},
                    {"thin", rep.thin}};
  }
  emit(j, format, out_path);
  return 0;
}

int run_fusion(const std::string& model_name, const std::string& model_file,
               int type_a, int n_a, int n_b, int n_e,
               const std::string& format, const std::string& out_path) {
  FusionModel model = model_file.empty()
                          ? FusionModel::by_name(model_name)
                          : FusionModel::from_json_file(model_file);
  model.validate();
  FusionSecretReport rep = secret_ratio(model, type_a, n_a, n_b, n_e);
  QuantumDims dims = quantum_dims(model);

  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = "fusion";
  j["inputs"] = {{"model", model_file.empty() ? model_name : model_file},
                 {"type_a", type_a},
                 {"mixed", rep.mixed},
                 {"nA", n_a},
                 {"nB", n_b},
                 {"nE", n_e}};
  ordered_json d = ordered_json::array();
  for (double x : dims.d) d.push_back(x);
  j["results"] = {{"undefined", rep.undefined},
                  {"ratio", rep.undefined ? ordered_json() : ordered_json(rep.ratio)},
                  {"D2", dims.total_sq},
                  {"log2_ratio", rep.undefined ? ordered_json() : ordered_json(rep.log2_ratio)},
                  {"dim_v", rep.dim_v},
                  {"dim_vhat", rep.dim_vhat},
                  {"asymptotic_ratio", rep.asymptotic_ratio},
                  {"quantum_dims", d}};
  emit(j, format, out_path);
  if (rep.undefined) {
    std::cerr << "fusion: no pattern fuses every blob to the vacuum; "
                 "ratio undefined for these puncture counts\n";
    return 2;
  }
  return 0;
}

int run_channel(int k, int povms, std::uint64_t seed, const std::string& format,
                const std::string& out_path) {
  CrossedProductModel m = build_crossed_product(2, k);
  ConditionalExpectationReport ce = conditional_expectation_check(m);
  PimsnerPopaReport pp = pimsner_popa_check(m);
  StinespringReport ss = stinespring_verify(m);
  EntropyGainReport eg = entropy_gain_search(m, povms, seed);

  bool ok = ce.ok && pp.ok && ss.ok && eg.bound_respected && eg.optimal_attained;
  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = "channel";
  j["inputs"] = {{"d", 2}, {"k", k}, {"random_povms", povms}, {"seed", seed}};
  j["tolerances"] = {{"identity", 1e-10},
                     {"positivity", -1e-10},
                     {"gain_bound", 1e-9}};
  j["results"]["conditional_expectation"] = {
      {"ok", ce.ok},
      {"idempotent_max_err", ce.idempotent_max_err},
      {"unital_err", ce.unital_err},
      {"bimodule_max_err", ce.bimodule_max_err},
      {"twirl_max_err", ce.twirl_max_err},
      {"tau_preserve_max_err", ce.tau_preserve_max_err},
      {"choi_min_eig", ce.choi_min_eig},
      {"samples", ce.samples}};
  j["results"]["pimsner_popa"] = {{"ok", pp.ok},
                                  {"lambda", pp.lambda},
                                  {"index", pp.index},
                                  {"samples", pp.samples},
                                  {"min_gap_eig", pp.min_gap_eig},
                                  {"witness_gap_min_eig", pp.witness_gap_min_eig},
                                  {"witness_cond_exp_err", pp.witness_cond_exp_err}};
  j["results"]["stinespring"] = {{"ok", ss.ok},
                                 {"isometry_err", ss.isometry_err},
                                 {"pi_mult_max_err", ss.pi_mult_max_err},
                                 {"pi_adjoint_max_err", ss.pi_adjoint_max_err},
                                 {"stinespring_max_err", ss.stinespring_max_err},
                                 {"roundtrip_max_err", ss.roundtrip_max_err},
                                 {"commutation_max_err", ss.commutation_max_err},
                                 {"minimality_rank", ss.minimality_rank},
                                 {"expected_rank", ss.expected_rank}};
  j["results"]["entropy_gain"] = {{"bound_nats", eg.bound_nats},
                                  {"optimal_value_nats", eg.optimal_value_nats},
                                  {"two_outcome_value_nats", eg.two_outcome_value_nats},
                                  {"best_random_value_nats", eg.best_random_value_nats},
                                  {"best_value_nats", eg.best_value_nats},
                                  {"random_povms", eg.random_povms},
                                  {"ascent_steps", eg.ascent_steps},
                                  {"bound_respected", eg.bound_respected},
                                  {"optimal_attained", eg.optimal_attained}};
  j["results"]["ok"] = ok;
  emit(j, format, out_path);
  return ok ? 0 : 1;
}

int run_chi(int L, int n_ops, std::uint64_t seed, const std::string& format,
            const std::string& out_path) {
  Lattice lat = build_lattice(Geometry::torus, L);
  StabilizerState st = ground_state(lat);
  LayoutParams p;
  p.center_a = {1, 1};
  p.center_b = {0, 2};
  p.radius = 0;
  p.min_separation = 0;
  RegionLayout lay = make_layout(lat, LayoutKind::two_blob, p);
  CodeStates cs = build_code_states(st, lay, 0);

  SecretChiReport rep = chi_secret_check(cs);
  std::vector<double> phases = {0.0, 1.0471975511965976, 1.5707963267948966};
  SuperpositionReport sup = superposition_check(cs, 1, 2, n_ops, seed, phases);

  double tol = 1e-9;
  bool ok = rep.support_ok && std::abs(rep.chi_ab_bits - 2.0) <= tol &&
            std::abs(rep.chi_e_bits) <= tol &&
            rep.max_e_trace_distance <= tol && sup.max_dev <= tol;

  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = "chi";
  j["inputs"] = {{"geometry", "torus"},
                 {"L", L},
                 {"layout", layout_json(lay)},
                 {"n_ops", n_ops},
                 {"phases", phases},
                 {"seed", seed}};
  j["lattice"] = lattice_json(lat);
  j["tolerances"] = {{"chi_bits", tol},
                     {"trace_distance", tol},
                     {"superposition", tol}};
  j["results"] = {{"chi_ab_bits", rep.chi_ab_bits},
                  {"chi_e_bits", rep.chi_e_bits},
                  {"identity_dev_ab", rep.identity_dev_ab},
                  {"identity_dev_e", rep.identity_dev_e},
                  {"max_e_trace_distance", rep.max_e_trace_distance},
                  {"support_ok", rep.support_ok},
                  {"superposition_max_dev", sup.max_dev},
                  {"superposition_ops", sup.n_ops},
                  {"ok", ok}};
  emit(j, format, out_path);
  return ok ? 0 : 1;
}

Mat builtin_state(const std::string& name, int* n_qubits) {
  if (name == "even_parity") {
    *n_qubits = 3;
    Mat rho = Mat::Zero(8, 8);
    for (int b : {0, 3, 5, 6}) rho(b, b) = 0.25;
    return rho;
  }
  if (name == "product") {
    *n_qubits = 2;
    Mat rho = Mat::Zero(4, 4);
    rho(0, 0) = 0.49;
    rho(1, 1) = 0.21;
    rho(2, 2) = 0.21;
    rho(3, 3) = 0.09;
    return rho;
  }
  if (name == "classical_pair") {
    *n_qubits = 2;
    Mat rho = Mat::Zero(4, 4);
    rho(0, 0) = 0.7;
    rho(3, 3) = 0.3;
    return rho;
  }
  if (name == "bell") {
    *n_qubits = 2;
    Mat rho = Mat::Zero(4, 4);
    rho(0, 0) = rho(0, 3) = rho(3, 0) = rho(3, 3) = 0.5;
    return rho;
  }
  throw std::invalid_argument("unknown state: " + name);
}

int run_correlation(const std::string& state, int k, const std::string& format,
                    const std::string& out_path) {
  int n = 0;
  Mat rho = builtin_state(state, &n);
  int level = k > 0 ? k : n;
  MaxEntropyReport rep = irreducible_correlation(rho, n, level);

  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = "correlation";
  j["inputs"] = {{"state", state}, {"n_qubits", n}, {"k", level}};
  j["tolerances"] = {{"marginal_residual", 1e-9}};
  j["results"] = {{"correlation_bits", rep.correlation_bits},
                  {"level_entropies_bits",
                   {rep.level_entropies_bits[0], rep.level_entropies_bits[1]}},
                  {"residual", rep.residual},
                  {"iterations", rep.iterations},
                  {"converged", rep.converged}};
  emit(j, format, out_path);
  return rep.converged ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toric code total quantum dimension toolkit"};
  app.require_subcommand(1);

  CommonOpts idx_o;
  CLI::App* idx = app.add_subcommand("index", "secret-sharing index from stabilizer quotients");
  add_common(idx, idx_o, true);

  CommonOpts ver_o;
  CLI::App* ver = app.add_subcommand("verify", "probe the code states with bounded boxes");
  add_common(ver, ver_o, true);

  std::string tee_layout = "annulus";
  int tee_L = 12;
  std::array<int, 2> tee_anchor{1, 1};
  std::string tee_format = "json", tee_out;
  CLI::App* tee = app.add_subcommand("tee", "topological entanglement entropy");
  tee->add_option("--layout", tee_layout, "region family")
      ->check(CLI::IsMember({"annulus", "kitaev_preskill", "levin_wen"}));
  tee->add_option("--L", tee_L, "linear lattice size");
  tee->add_option("--anchor-x", tee_anchor[0], "layout anchor x");
  tee->add_option("--anchor-y", tee_anchor[1], "layout anchor y");
  tee->add_option("--format", tee_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  tee->add_option("--out", tee_out, "write the report to a file");

  std::string fus_model = "toric", fus_file;
  int fus_type = -1, fus_na = 8, fus_nb = 8, fus_ne = 8;
  std::string fus_format = "json", fus_out;
  CLI::App* fus = app.add_subcommand("fusion", "anyon counting ratio");
  fus->add_option("--model", fus_model, "built-in fusion model")
      ->check(CLI::IsMember({"toric", "fibonacci", "ising"}));
  fus->add_option("--model-file", fus_file, "fusion model JSON file");
  fus->add_option("--type", fus_type, "puncture type; negative sums all types");
  fus->add_option("--nA", fus_na, "punctures in blob A");
  fus->add_option("--nB", fus_nb, "punctures in blob B");
  fus->add_option("--nE", fus_ne, "punctures outside the blobs");
  fus->add_option("--format", fus_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  fus->add_option("--out", fus_out, "write the report to a file");

  int ch_k = 4, ch_povms = 1000;
  std::uint64_t ch_seed = 4;
  std::string ch_format = "json", ch_out;
  CLI::App* ch = app.add_subcommand("channel", "crossed-product channel checks");
  ch->add_option("--k", ch_k, "environment multiplicity (even)");
  ch->add_option("--povms", ch_povms, "random measurements in the gain search");
  ch->add_option("--seed", ch_seed, "gain search seed");
  ch->add_option("--format", ch_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  ch->add_option("--out", ch_out, "write the report to a file");

  int chi_L = 3, chi_ops = 200;
  std::uint64_t chi_seed = 11;
  std::string chi_format = "json", chi_out;
  CLI::App* chi = app.add_subcommand("chi", "dense accessible-information split");
  chi->add_option("--L", chi_L, "linear lattice size (statevector scale)");
  chi->add_option("--ops", chi_ops, "sampled local operators per phase");
  chi->add_option("--seed", chi_seed, "operator sampling seed");
  chi->add_option("--format", chi_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  chi->add_option("--out", chi_out, "write the report to a file");

  std::string cor_state = "even_parity";
  int cor_k = 0;
  std::string cor_format = "json", cor_out;
  CLI::App* cor = app.add_subcommand("correlation", "irreducible multipartite correlation");
  cor->add_option("--state", cor_state, "built-in state")
      ->check(CLI::IsMember({"even_parity", "product", "classical_pair", "bell"}));
  cor->add_option("--k", cor_k, "marginal level; 0 uses every qubit");
  cor->add_option("--format", cor_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cor->add_option("--out", cor_out, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  }

  try {
    if (idx->parsed()) return run_index(idx_o);
    if (ver->parsed()) return run_verify(ver_o);
    if (tee->parsed())
      return run_tee(tee_layout, tee_L, tee_anchor, tee_format, tee_out);
    if (fus->parsed())
      return run_fusion(fus_model, fus_file, fus_type, fus_na, fus_nb, fus_ne,
                        fus_format, fus_out);
    if (ch->parsed()) return run_channel(ch_k, ch_povms, ch_seed, ch_format, ch_out);
    if (chi->parsed())
      return run_chi(chi_L, chi_ops, chi_seed, chi_format, chi_out);
    if (cor->parsed()) return run_correlation(cor_state, cor_k, cor_format, cor_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
