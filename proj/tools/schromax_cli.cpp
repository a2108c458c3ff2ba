// schromax command-line front end.
//
//   schromax converge      --config run.json --out-dir out
//   schromax emit-circuit  --config run.json --out-dir out
//   schromax verify        [--skip-ladder] [--inject-sign-error] [--only 2,5]
//   schromax compare-fdtd  --config run.json

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <schromax/config.hpp>
#include <schromax/qasm.hpp>
#include <schromax/verify.hpp>

using namespace schromax;
namespace fs = std::filesystem;

namespace {

struct Common {
  std::string config;
  std::string out_dir;
  std::string mode = "emulation";
  int trotter_order = 0;  // 0 = keep config value
  std::uint64_t seed = verify::Options{}.seed;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config, "JSON run configuration");
  sub->add_option("--out-dir", c.out_dir, "directory for output files (default: stdout)");
  sub->add_option("--mode", c.mode, "emulation or quantum")
      ->check(CLI::IsMember({"emulation", "quantum"}));
  sub->add_option("--trotter-order", c.trotter_order, "1 (Lie) or 2 (Strang)")
      ->check(CLI::IsMember({1, 2}));
  sub->add_option("--seed", c.seed, "seed for randomized suites");
}

RunConfig load(const Common& c) {
  RunConfig rc = c.config.empty() ? RunConfig{} : load_config(c.config);
  if (c.config.empty()) rc.apply_source();
  if (c.trotter_order) rc.problem.trotter_order = c.trotter_order;
  return rc;
}

std::string num(double v) {
  char b[40];
  std::snprintf(b, sizeof b, "%.10e", v);
  return b;
}

void write_out(const Common& c, const std::string& name, const std::string& text) {
  if (c.out_dir.empty()) {
    std::cout << text;
    return;
  }
  fs::create_directories(c.out_dir);
  std::ofstream f(fs::path(c.out_dir) / name, std::ios::binary);
  if (!f) throw Error(ErrorCode::Config, "cannot write " + (fs::path(c.out_dir) / name).string());
  f << text;
}

// ---------------------------------------------------------------- converge

int cmd_converge(const Common& c) {
  const RunConfig rc = load(c);
  const bool quantum = c.mode == "quantum";
  std::ostringstream os;
  os << "dp,ds,dt,err_E_inf,err_B_inf,order_E,order_B,success_prob";
  if (quantum) os << ",state_norm,measurements";
  os << "\n";
  std::vector<double> eE, eB;
  for (int k : rc.ladder) {
    Problem1D pr = rc.problem;
    pr.n_s = k;
    pr.n_p = k;
    pr.Nt = static_cast<int>(std::lround(pr.T * std::ldexp(1.0, k + 1)));
    const Pipeline1DSetup s = setup_1d(pr);
    StateVector st = evolve_1d(pr, s);
    double tracked = 1.0;
    if (quantum) {
      // measurement sees the normalized state; the norm is carried classically
      tracked = st.norm();
      for (auto& a : st.amplitudes()) a /= tracked;
    }
    RecoveryConfig rcfg = pr.recovery;
    rcfg.T = pr.T;
    RecoveryResult rr = recover(st, s.sg, s.pg, rcfg);
    rr.u_rec *= tracked;
    const CVec uh = reference_1d(pr, s.ops);
    const Eigen::Index M = uh.size() / 2;
    const CVec u = rr.u_rec.head(uh.size());
    eE.push_back((u.head(M) - uh.head(M)).cwiseAbs().maxCoeff());
    eB.push_back((u.tail(M) - uh.tail(M)).cwiseAbs().maxCoeff());
    std::string oE, oB;
    if (eE.size() > 1) {
      oE = num(std::log2(eE[eE.size() - 2] / eE.back()));
      oB = num(std::log2(eB[eB.size() - 2] / eB.back()));
    }
    os << num(s.pg.h()) << "," << num(s.sg.h()) << "," << num(pr.tau()) << "," << num(eE.back())
       << "," << num(eB.back()) << "," << oE << "," << oB << "," << num(rr.success_prob);
    if (quantum) os << "," << num(tracked) << "," << num(1.0 / rr.success_prob);
    os << "\n";
    std::cerr << "k=" << k << " done\n";
  }
  write_out(c, "converge.csv", os.str());
  return 0;
}

// ---------------------------------------------------------------- emit-circuit

struct Emission {
  RegisterLayout layout;
  SystemMap sm;
  SourceProfile profile;
  SpectralGrid sg, pg;
  double dx;
};

Emission build_emission(const RunConfig& rc) {
  Emission e;
  e.sm = SystemMap{rc.emit_d, rc.emit_m};
  e.layout = RegisterLayout(e.sm.n_qubits(), rc.emit_n_s, rc.emit_n_p, 40);
  e.sg = SpectralGrid(rc.problem.S, rc.emit_n_s);
  e.pg = SpectralGrid(rc.problem.L, rc.emit_n_p);
  if (rc.emit_d == 1) {
    Problem1D pr = rc.problem;
    pr.m = rc.emit_m;
    pr.n_s = rc.emit_n_s;
    pr.n_p = rc.emit_n_p;
    e.profile = profile_1d(pr);
    e.dx = pr.grid().dx();
  } else {
    e.profile = verify::counting_profile(3, rc.emit_m);
    e.dx = rc.problem.length / static_cast<double>(pow2(rc.emit_m));
  }
  if (!rc.emit_source) e.profile.slices.clear();
  return e;
}

int cmd_emit(const Common& c) {
  const RunConfig rc = load(c);
  const Emission e = build_emission(rc);
  const Circuit V = synth_step(e.layout, e.sm, e.profile, e.sg, e.pg, e.dx, rc.emit_tau,
                               rc.problem.trotter_order);
  const std::string qasm = export_qasm(V);
  const nlohmann::json cj = to_json(V);

  nlohmann::json rep;
  const GateCountReport counted = count_gates(V);
  rep["counted"] = to_json(counted);
  rep["families"] = to_json(family_counts(counted));
  if (rc.problem.trotter_order == 1) {
    std::size_t sites = 0;
    for (auto& sl : e.profile.slices)
      for (auto& t : sl.alpha) sites = std::max(sites, t.sites.size());
    const CountParams cp{rc.emit_m, rc.emit_n_s, rc.emit_n_p, rc.emit_d, static_cast<int>(sites),
                         static_cast<int>(e.profile.slices.size())};
    const GateCountReport pred = predicted_counts(cp);
    rep["predicted"] = to_json(pred);
    rep["predicted_matches"] = pred.total() == counted.total();
    if (rc.emit_d == 3) {
      const ClosedForms pf = closed_forms(cp);
      rep["closed_forms"] = {{"X_p,l_j", pf.x_p_lj_cnot}, {"X_p,l", pf.x_p_l_cnot},
                             {"Y_p,l_j", pf.y_p_lj_cnot}, {"Y_p,l", pf.y_p_l_cnot}};
    }
  }
  // round trips: JSON always, dense unitary when small enough
  const Circuit back = circuit_from_json(nlohmann::json::parse(cj.dump()));
  rep["roundtrip_json"] = to_json(back) == cj;
  if (V.layout().total() <= 12) {
    const auto [nq, ops] = parse_qasm(qasm);
    const CMat a = oracle::circuit_to_unitary(V);
    const CMat b = oracle::gates_to_unitary(ops, nq);
    rep["roundtrip_qasm_max_abs_diff"] = (a - b).cwiseAbs().maxCoeff();
  }
  rep["layout"] = to_json(V.layout());
  rep["tau"] = rc.emit_tau;
  rep["trotter_order"] = rc.problem.trotter_order;

  if (c.out_dir.empty()) {
    std::cout << rep.dump(2) << "\n";
  } else {
    write_out(c, "circuit.qasm", qasm);
    write_out(c, "circuit.json", cj.dump(1) + "\n");
    write_out(c, "gate_report.json", rep.dump(2) + "\n");
  }
  return 0;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Common& c, bool skip_ladder, bool inject, const std::vector<int>& only) {
  if (!c.config.empty()) load(c);  // validates the file
  verify::Options opt;
  opt.seed = c.seed;
  opt.inject_sign_error = inject;
  const auto results = verify::run_all(opt, !skip_ladder, only);
  nlohmann::json j;
  bool all = true;
  j["checks"] = nlohmann::json::array();
  for (auto& r : results) {
    j["checks"].push_back(verify::to_json(r));
    all = all && r.pass;
    std::cerr << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.name << ": " << r.detail << "\n";
  }
  j["seed"] = c.seed;
  j["all_pass"] = all;
  write_out(c, "verify.json", j.dump(2) + "\n");
  return all ? 0 : 1;
}

// ---------------------------------------------------------------- compare-fdtd

int cmd_fdtd(const Common& c) {
  const RunConfig rc = load(c);
  const Problem1D& base = rc.problem;
  std::ostringstream os;
  os << "m,dx,dt,steps,err_E_inf,err_B_inf,order_E,order_B,err_vs_semidiscrete\n";
  std::vector<double> eE, eB;
  for (int m : rc.fdtd_m) {
    Problem1D pr = base;
    pr.m = m;
    const GridSpec g = pr.grid();
    const MaxwellOperators ops = build_operators(g);
    const int steps = static_cast<int>(std::ceil(pr.T / (rc.fdtd_cfl * g.dx()) - 1e-12));
    const double dt = pr.T / steps;
    auto f = [&](double t) { return source_from_J(g, pr.J(t)); };
    MaxwellState st{initial_data(pr), 0.0};
    for (int n = 0; n < steps; ++n) st = classical_fdtd_step(st, ops, f, dt);
    const CVec ex = exact_1d(g, pr.T);
    Problem1D sd = pr;
    sd.reference = Reference::SemiDiscrete;
    const CVec uh = reference_1d(sd, ops);
    const Eigen::Index M = g.M();
    eE.push_back((st.u.head(M) - ex.head(M)).cwiseAbs().maxCoeff());
    eB.push_back((st.u.tail(M) - ex.tail(M)).cwiseAbs().maxCoeff());
    std::string oE, oB;
    if (eE.size() > 1) {
      oE = num(std::log2(eE[eE.size() - 2] / eE.back()));
      oB = num(std::log2(eB[eB.size() - 2] / eB.back()));
    }
    os << m << "," << num(g.dx()) << "," << num(dt) << "," << steps << "," << num(eE.back())
       << "," << num(eB.back()) << "," << oE << "," << oB << ","
       << num((st.u - uh).cwiseAbs().maxCoeff()) << "\n";
  }
  write_out(c, "fdtd.csv", os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schroedingerized Maxwell solver: convergence runs, circuit emission, checks"};
  app.require_subcommand(1);
  Common c;
  auto* conv = app.add_subcommand("converge", "run the 1D pipeline over the (dp, ds, dt) ladder");
  auto* emit = app.add_subcommand("emit-circuit", "write V(tau) as OpenQASM, JSON and a gate report");
  auto* ver = app.add_subcommand("verify", "run the property suites; nonzero exit on failure");
  auto* fdtd = app.add_subcommand("compare-fdtd", "classical leapfrog baseline on the 1D problem");
  for (auto* s : {conv, emit, ver, fdtd}) add_common(s, c);
  bool skip_ladder = false, inject = false;
  ver->add_flag("--skip-ladder", skip_ladder, "skip the slow ladder reproduction");
  ver->add_flag("--inject-sign-error", inject, "debug: corrupt the sign of H_curl");
  std::vector<int> only;
  ver->add_option("--only", only, "criterion ids to run (default: all)")
      ->delimiter(',')
      ->check(CLI::Range(1, 9));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    if (*conv) return cmd_converge(c);
    if (*emit) return cmd_emit(c);
    if (*ver) return cmd_verify(c, skip_ladder, inject, only);
    if (*fdtd) return cmd_fdtd(c);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::Config || e.code() == ErrorCode::Parse) {
      std::cerr << app.help();
      return 2;
    }
    return 3;
  }
  return 0;
}
