#pragma once

// Property suites behind `schromax verify` and the acceptance binary. Every
// tolerance is pinned here.

#include <algorithm>
#include <cmath>
#include <functional>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "kernels.hpp"
#include "oracles.hpp"
#include "pipeline.hpp"
#include "synthesis.hpp"

namespace schromax::verify {

struct CheckResult {
  CheckResult(int i = 0, std::string n = {}) : id(i), name(std::move(n)) {}
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  nlohmann::json data = nlohmann::json::object();
};

struct Options {
  std::uint64_t seed = 20240601;
  bool inject_sign_error = false;  // flips H_curl in the Trotter-bound reference
};

namespace tol {
// ladder reproduction
inline constexpr double ladder_rel = 0.25;
inline constexpr double ladder_order = 1.9;
// Trotter bound
inline constexpr double trotter_slope = 2.0;
inline constexpr double trotter_slope_tol = 0.15;
inline constexpr double trotter_constant = 10.0;
// recovery constant and norm-ratio window share the O(1) cap
inline constexpr double recovery_constant = 10.0;
inline constexpr double norm_ratio_lo = 0.1;
inline constexpr double norm_ratio_hi = 10.0;
// U1 exactness
inline constexpr double u1_exact = 1e-10;
// kernels
inline constexpr double kernel_order = 2.7;
inline constexpr double junction = 1e-12;
// structure
inline constexpr double structural = 1e-12;
inline constexpr double unitarity = 1e-10;
}  // namespace tol

inline const double kLadderE[3] = {4.5819e-01, 1.0865e-01, 1.5440e-02};
inline const double kLadderB[3] = {4.2349e-01, 1.0732e-01, 9.7667e-03};

// ---------------------------------------------------------------- 1

inline CheckResult ladder(const Problem1D& base = {}) {
  CheckResult r{1, "ladder_reproduction"};
  std::vector<double> eE, eB;
  bool ok = true;
  nlohmann::json rows = nlohmann::json::array();
  for (int k = 5; k <= 7; ++k) {
    Problem1D pr = Problem1D::ladder_rung(k);
    pr.curl = base.curl;
    pr.reference = base.reference;
    pr.recovery = base.recovery;
    const auto res = run_1d(pr);
    eE.push_back(res.err_E);
    eB.push_back(res.err_B);
    const double rE = res.err_E / kLadderE[k - 5], rB = res.err_B / kLadderB[k - 5];
    const bool okk = std::abs(rE - 1) <= tol::ladder_rel && std::abs(rB - 1) <= tol::ladder_rel;
    ok = ok && okk;
    rows.push_back({{"k", k}, {"err_E", res.err_E}, {"err_B", res.err_B}, {"ratio_E", rE},
                    {"ratio_B", rB}, {"within_tol", okk}});
  }
  const auto oE = observed_orders(eE), oB = observed_orders(eB);
  for (double o : oE) ok = ok && o >= tol::ladder_order;
  for (double o : oB) ok = ok && o >= tol::ladder_order;
  r.pass = ok;
  r.data = {{"rungs", rows}, {"order_E", oE}, {"order_B", oB}};
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "E %.4g/%.4g/%.4g (x%.2f/x%.2f/x%.2f) B %.4g/%.4g/%.4g (x%.2f/x%.2f/x%.2f) "
                "orders E %.2f,%.2f B %.2f,%.2f",
                eE[0], eE[1], eE[2], eE[0] / kLadderE[0], eE[1] / kLadderE[1], eE[2] / kLadderE[2],
                eB[0], eB[1], eB[2], eB[0] / kLadderB[0], eB[1] / kLadderB[1], eB[2] / kLadderB[2],
                oE[0], oE[1], oB[0], oB[1]);
  r.detail = buf;
  return r;
}

// ---------------------------------------------------------------- 2

/// Right-hand side of the per-step Trotter estimate, without its constant.
inline double trotter_envelope(int d, int m, double tau, double dx, double dp, double ds,
                               double Fmax, double n_sites, double n_slices) {
  const double t2 = tau * tau;
  return d * t2 * (m - 1) / (dx * dx) + t2 * Fmax / (dp * dx) + t2 * Fmax / (dp * ds) +
         t2 / (ds * dx) + (d + 1) * n_sites * n_slices * Fmax * Fmax * t2 / dp;
}

inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double a = std::log(x[i]), b = std::log(y[i]);
    sx += a;
    sy += b;
    sxx += a * a;
    sxy += a * b;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline CheckResult trotter_bound(const Options& opt = {}) {
  CheckResult r{2, "trotter_error_bound"};
  Problem1D pr;
  pr.m = 2;
  pr.n_s = 3;
  pr.n_p = 3;
  pr.curl = CurlWindow::Everywhere;
  const Pipeline1DSetup s = setup_1d(pr);
  AutonomizedHamiltonian H(s.ops.A, s.F, s.sg, s.pg, CurlWindow::Everywhere);
  CMat Hd = CMat(H.assemble());
  if (opt.inject_sign_error) Hd -= 2.0 * CMat(H.H_curl());
  const oracle::HermitianPropagator U(Hd);
  double Fmax = 0;
  for (auto& f : s.F)
    if (f.size()) Fmax = std::max(Fmax, f.cwiseAbs().maxCoeff());
  double n_sites = 0;
  for (auto& sl : s.profile.slices)
    n_sites = std::max(n_sites, static_cast<double>(sl.alpha[AlphaY].sites.size()));
  const double n_slices = static_cast<double>(s.profile.slices.size());
  std::vector<double> taus, errs;
  double C = 0;
  nlohmann::json rows = nlohmann::json::array();
  for (int e = 4; e <= 8; ++e) {
    const double tau = std::ldexp(1.0, -e);
    const Circuit V = synth_step(s.layout, s.sm, s.profile, s.sg, s.pg, s.ops.spec.dx(), tau, 1);
    const CMat Vd = oracle::circuit_to_unitary(V);
    const double err = op_norm(U(tau) - Vd);
    const double env = trotter_envelope(1, pr.m, tau, s.ops.spec.dx(), s.pg.h(), s.sg.h(), Fmax,
                                        n_sites, n_slices);
    taus.push_back(tau);
    errs.push_back(err);
    C = std::max(C, err / env);
    rows.push_back({{"tau", tau}, {"err", err}, {"envelope", env}});
  }
  const double slope = loglog_slope(taus, errs);
  r.pass = std::abs(slope - tol::trotter_slope) <= tol::trotter_slope_tol &&
           C <= tol::trotter_constant;
  r.data = {{"rows", rows}, {"slope", slope}, {"constant", C},
            {"sign_error_injected", opt.inject_sign_error}};
  char buf[160];
  std::snprintf(buf, sizeof buf, "slope %.3f, fitted constant %.3g%s", slope, C,
                opt.inject_sign_error ? " (sign error injected)" : "");
  r.detail = buf;
  return r;
}

// ---------------------------------------------------------------- 3

/// gamma sum_a sum_j eta_a (e^{i lam_a} s_j^- + h.c.) on d registers of n qubits, dense.
inline CMat shift_sum_dense(int n, double gamma, const std::vector<double>& eta,
                            const std::vector<double>& lam) {
  const int d = static_cast<int>(eta.size());
  const Eigen::Index dim = Eigen::Index{1} << (n * d);
  CMat H = CMat::Zero(dim, dim);
  for (int a = 0; a < d; ++a)
    for (int j = 1; j <= n; ++j) {
      // s_j^- = 1^{(n-j)} (x) s01 (x) s10^{(j-1)}
      std::vector<SpMat> fm, fp;
      for (int b = d - 1; b >= 0; --b) {
        if (b != a) {
          fm.push_back(sp_identity(Eigen::Index{1} << n));
          fp.push_back(sp_identity(Eigen::Index{1} << n));
          continue;
        }
        fm.push_back(sp_identity(Eigen::Index{1} << (n - j)));
        fp.push_back(sp_identity(Eigen::Index{1} << (n - j)));
        fm.push_back(sigma(0, 1));
        fp.push_back(sigma(1, 0));
        for (int k = 1; k < j; ++k) {
          fm.push_back(sigma(1, 0));
          fp.push_back(sigma(0, 1));
        }
      }
      H += gamma * eta[a] *
           (std::exp(I1 * lam[a]) * CMat(kron_all(fm)) + std::exp(-I1 * lam[a]) * CMat(kron_all(fp)));
    }
  return H;
}

inline CheckResult shift_product_bound(const Options& opt = {}) {
  CheckResult r{3, "shift_product_bound"};
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0), Upos(0.05, 1.0), Uphase(-kPi, kPi);
  std::uniform_int_distribution<int> Un(2, 5), Ud(1, 2);
  int failures = 0;
  double worst = 0;
  nlohmann::json rows = nlohmann::json::array();
  for (int trial = 0; trial < 50; ++trial) {
    const int n = Un(rng), d = Ud(rng);
    const double gamma = 2.0 * U(rng);
    std::vector<double> eta(d), lam(d);
    for (int a = 0; a < d; ++a) {
      eta[a] = 2.0 * U(rng);
      lam[a] = Uphase(rng);
    }
    const double tau = Upos(rng);
    const CMat H = shift_sum_dense(n, gamma, eta, lam);
    const CMat exact = oracle::HermitianPropagator(H)(tau);
    const CMat V = oracle::gates_to_unitary(shift_sum_circuit(n, gamma, eta, lam, tau), n * d);
    const double err = op_norm(exact - V);
    double se = 0;
    for (double e : eta) se += e * e;
    const double bound = gamma * gamma * tau * tau * (n - 1) / 2 * se;
    if (err > bound) ++failures;
    worst = std::max(worst, bound > 0 ? err / bound : 0.0);
    rows.push_back({{"n", n}, {"d", d}, {"tau", tau}, {"err", err}, {"bound", bound}});
  }
  r.pass = failures == 0;
  r.data = {{"trials", rows}, {"failures", failures}, {"worst_ratio", worst}};
  r.detail = std::to_string(failures) + "/50 trials above the bound, worst err/bound " +
             std::to_string(worst);
  return r;
}

// ---------------------------------------------------------------- 4

/// Source profile for counting: one slice, every component with j1 on one site.
inline SourceProfile counting_profile(int d, int m) {
  SourceProfile p;
  SourceSlice sl;
  sl.l = 0;
  const Eigen::Index site = d == 3 ? (Eigen::Index{1} << (3 * m)) - 1 : 1;
  for (int a = 0; a < 4; ++a) {
    if (d == 1 && a != AlphaY) continue;
    sl.alpha[a].j0 = 0.5 + 0.25 * a;
    sl.alpha[a].j1 = -0.75;
    sl.alpha[a].sites = {site};
  }
  p.slices.push_back(sl);
  p.c0 = compute_c0(p);
  return p;
}

inline CheckResult gate_counts() {
  CheckResult r{4, "gate_count_ledger"};
  int ledger_bad = 0, closed_bad = 0, total = 0;
  nlohmann::json rows = nlohmann::json::array();
  std::string first_closed;
  for (int m = 1; m <= 3; ++m)
    for (int ns = 1; ns <= 3; ++ns)
      for (int np = 1; np <= 3; ++np) {
        ++total;
        const SystemMap sm{3, m};
        RegisterLayout lay(sm.n_qubits(), ns, np, 40);
        const SpectralGrid sg(5.0 / kPi, ns), pg(4.0, np);
        const SourceProfile prof = counting_profile(3, m);
        const Circuit V = synth_step(lay, sm, prof, sg, pg, 0.25, 0.01, 1);
        const GateCountReport got = family_counts(count_gates(V));
        const CountParams cp{m, ns, np, 3, 1, 1};
        const GateCountReport want = predicted_counts(cp);
        bool same = got.total() == want.total() && got.blocks.size() == want.blocks.size();
        for (auto& [name, c] : want.blocks) same = same && got.block(name) == c;
        if (!same) ++ledger_bad;
        // per-alpha block costs against the closed forms
        const ClosedForms pf = closed_forms(cp);
        const long long xlj = got.block("X_p,l_j").n_cnot_equiv / 4;
        const long long xl = got.block("X_p,l").n_cnot_equiv / 4;
        const long long ylj = got.block("Y_p,l_j").n_cnot_equiv / 4;
        const long long yl = got.block("Y_p,l").n_cnot_equiv / 4;
        const bool pok = xlj == pf.x_p_lj_cnot && xl == pf.x_p_l_cnot;
        if (!pok) {
          ++closed_bad;
          if (first_closed.empty())
            first_closed = "(m,n_s,n_p)=(" + std::to_string(m) + "," + std::to_string(ns) + "," +
                            std::to_string(np) + ") X_p,l_j " + std::to_string(xlj) + " vs " +
                            std::to_string(pf.x_p_lj_cnot);
        }
        rows.push_back({{"m", m}, {"n_s", ns}, {"n_p", np}, {"ledger_match", same},
                        {"X_p,l_j", xlj}, {"X_p,l_j_closed_form", pf.x_p_lj_cnot},
                        {"X_p,l", xl}, {"X_p,l_closed_form", pf.x_p_l_cnot},
                        {"Y_p,l_j", ylj}, {"Y_p,l_j_closed_form", pf.y_p_lj_cnot},
                        {"Y_p,l", yl}, {"Y_p,l_closed_form", pf.y_p_l_cnot},
                        {"total_cnot_equiv", got.n_cnot_equiv}, {"total_single", got.n_single}});
      }
  r.pass = ledger_bad == 0 && closed_bad == 0;
  r.data = {{"tuples", rows}, {"ledger_mismatches", ledger_bad},
            {"closed_form_mismatches", closed_bad}};
  r.detail = "ledger " + std::to_string(total - ledger_bad) + "/" + std::to_string(total) +
             ", closed forms " + std::to_string(total - closed_bad) + "/" +
             std::to_string(total) + (first_closed.empty() ? "" : "; first mismatch " + first_closed);
  return r;
}

// ---------------------------------------------------------------- 5

inline CheckResult u1_exact() {
  CheckResult r{5, "u1_exactness"};
  double worst = 0;
  for (int ns = 1; ns <= 4; ++ns) {
    RegisterLayout lay(1, ns, 1);
    const SpectralGrid sg(5.0 / kPi, ns);
    const SpMat Hds = kron_all({sp_identity(2), sp_from_dense(sg.P()), sp_identity(2)});
    for (double tau : {0.01, 0.125, 0.7, 2.3}) {
      const CMat want = oracle::expm_dense(CMat(Hds), -I1 * tau);
      const CMat got = oracle::circuit_to_unitary(synth_U1(lay, sg, tau));
      worst = std::max(worst, (want - got).cwiseAbs().maxCoeff());
    }
  }
  r.pass = worst <= tol::u1_exact;
  r.data = {{"max_abs_diff", worst}};
  char buf[80];
  std::snprintf(buf, sizeof buf, "max |dense(U1) - expm| = %.2e", worst);
  r.detail = buf;
  return r;
}

// ---------------------------------------------------------------- 6

inline CheckResult recovery_error_bound() {
  CheckResult r{6, "recovery_error_bound"};
  double Cmax = 0;
  nlohmann::json rows = nlohmann::json::array();
  for (int k = 5; k <= 7; ++k) {
    Problem1D pr = Problem1D::ladder_rung(k);
    const Pipeline1DSetup s = setup_1d(pr);
    const StateVector st = evolve_1d(pr, s);
    const CVec uh = reference_1d(pr, s.ops);
    CVec uf(2 * uh.size());
    uf << uh, CVec::Constant(uh.size(), s.profile.c0);
    const double h3 = std::pow(s.pg.h(), 3) + std::pow(s.sg.h(), 3);
    for (KRule rule : {KRule::HalfT, KRule::FullT}) {
      RecoveryConfig rc;
      rc.rule = rule;
      rc.T = pr.T;
      const RecoveryResult rr = recover_point(st, s.sg, s.pg, rc);
      const double e = rel_error(rr.u_rec, uf);
      Cmax = std::max(Cmax, e / h3);
      rows.push_back({{"k", k}, {"rule", rule == KRule::HalfT ? "p>T/2" : "p>T"},
                      {"p_k", rr.p_k}, {"rel_err", e}, {"C", e / h3}});
    }
  }
  r.pass = Cmax <= tol::recovery_constant;
  r.data = {{"rows", rows}, {"C", Cmax}};
  r.detail = "fitted C = " + std::to_string(Cmax);
  return r;
}

// ---------------------------------------------------------------- 7

/// max over s0 in [base, base + ds) of |ds sum_l delta_h(s_l - s0) f(s_l) - f(s0)|,
/// s_l = l ds, base on the grid.
inline double delta_quadrature_error(double ds, double base, const std::function<double(double)>& f,
                                     const Kernels& k = {}) {
  double worst = 0;
  for (int i = 0; i < 64; ++i) {
    const double s0 = base + i / 64.0 * ds;
    const long l0 = static_cast<long>(std::floor(s0 / ds));
    double acc = 0;
    for (long l = l0 - k.support - 1; l <= l0 + k.support + 1; ++l)
      acc += ds * k.delta_h(l * ds - s0, ds) * f(l * ds);
    worst = std::max(worst, std::abs(acc - f(s0)));
  }
  return worst;
}

inline CheckResult kernels() {
  CheckResult r{7, "kernel_properties"};
  // partition of unity
  double pou = 0;
  for (int i = 0; i <= 200; ++i) {
    const double x = i / 200.0;
    double s = 0;
    for (int j = -3; j <= 3; ++j) s += beta3(x - j);
    pou = std::max(pou, std::abs(s - 1));
  }
  // third-order reproduction by ds-halving at off-grid points
  auto f = [](double s) { return std::sin(1.3 * s) + 0.2 * s * s * s; };
  double min_order = 1e9;
  std::vector<double> errs;
  for (int e = 2; e <= 7; ++e) errs.push_back(delta_quadrature_error(std::ldexp(1.0, -e), 0.25, f));
  for (std::size_t i = 1; i < errs.size(); ++i)
    min_order = std::min(min_order, std::log2(errs[i - 1] / errs[i]));
  // C^2 junctions of g at p = 0 and p = -1
  double jr = 0;
  for (int dv = 0; dv <= 2; ++dv) {
    jr = std::max(jr, std::abs(g_poly(0.0, dv) - g_exp(0.0, dv)));
    jr = std::max(jr, std::abs(g_poly(-1.0, dv) - g_exp(-1.0, dv)));
  }
  r.pass = pou <= tol::structural && min_order >= tol::kernel_order && jr < tol::junction;
  r.data = {{"partition_of_unity", pou}, {"quadrature_errors", errs}, {"min_order", min_order},
            {"junction_residual", jr}};
  char buf[160];
  std::snprintf(buf, sizeof buf, "partition %.2e, min order %.3f, junction %.2e", pou, min_order, jr);
  r.detail = buf;
  return r;
}

// ---------------------------------------------------------------- 8

inline double hermitian_defect(const SpMat& m) {
  const SpMat d = SpMat(m - SpMat(m.adjoint()));
  return max_abs(d) / std::max(max_abs(m), 1.0);
}

inline CheckResult structure(const Options& opt = {}) {
  CheckResult r{8, "structural_invariants"};
  nlohmann::json data;
  bool ok = true;
  // A skew-Hermitian, 1D and 3D
  double skew = 0;
  for (int d : {1, 3})
    for (int m : {1, 2, 3}) {
      const auto ops = build_operators(GridSpec{m, d, 1.0, 0.5});
      skew = std::max(skew, max_abs(SpMat(ops.A + SpMat(ops.A.adjoint()))));
    }
  ok = ok && skew <= tol::structural;
  data["A_skew_defect"] = skew;
  // H1, H2, H Hermitian and |lambda(H1)| <= 1/2
  Problem1D pr;
  pr.m = 2;
  pr.n_s = 3;
  pr.n_p = 3;
  const Pipeline1DSetup s = setup_1d(pr);
  double herm = 0, lam = 0;
  for (CurlWindow w : {CurlWindow::Everywhere, CurlWindow::SourceNodes}) {
    AutonomizedHamiltonian H(s.ops.A, s.F, s.sg, s.pg, w);
    herm = std::max(herm, hermitian_defect(H.assemble()));
    for (std::uint64_t l = 0; l < s.sg.N(); ++l) {
      herm = std::max(herm, hermitian_defect(H.H1(l)));
      herm = std::max(herm, hermitian_defect(H.H2(l)));
      if (H.source_on(l)) {
        Eigen::SelfAdjointEigenSolver<CMat> es{CMat(H.H1(l))};
        lam = std::max(lam, es.eigenvalues().cwiseAbs().maxCoeff());
      }
    }
  }
  ok = ok && herm <= tol::structural && lam <= 0.5 + tol::structural;
  data["hermitian_defect"] = herm;
  data["max_abs_lambda_H1"] = lam;
  // norm preservation under the synthesized step and a random gate sequence
  std::mt19937_64 rng(opt.seed ^ 0x5eedULL);
  std::normal_distribution<double> N01;
  StateVector st(s.layout);
  for (auto& a : st.amplitudes()) a = cplx(N01(rng), N01(rng));
  const double n0 = st.norm();
  evolve(st, synth_step(s.layout, s.sm, s.profile, s.sg, s.pg, s.ops.spec.dx(), 0.05, 2), 4);
  const double drift = std::abs(st.norm() - n0) / n0;
  const double budget = 10 * std::numeric_limits<double>::epsilon() *
                        std::sqrt(static_cast<double>(s.layout.dim())) * 4 * 200;
  ok = ok && drift <= std::max(budget, tol::structural) && st.finite();
  data["norm_drift"] = drift;
  // block unitarity
  double unit = 0;
  for (auto& f : step_factors(s.layout, s.sm, s.profile, s.sg, s.pg, s.ops.spec.dx()))
    for (auto& t : f.terms) {
      const CMat U = oracle::gates_to_unitary(t.ops(0.3), s.layout.total());
      unit = std::max(unit, (U.adjoint() * U - CMat::Identity(U.rows(), U.cols())).norm());
    }
  ok = ok && unit <= tol::unitarity;
  data["block_unitarity_defect"] = unit;
  r.pass = ok;
  r.data = data;
  char buf[200];
  std::snprintf(buf, sizeof buf, "skew %.1e, herm %.1e, |lam(H1)| %.3f, norm drift %.1e, unitarity %.1e",
                skew, herm, lam, drift, unit);
  r.detail = buf;
  return r;
}

// ---------------------------------------------------------------- 9

inline CheckResult norm_ratio(const Options& opt = {}) {
  CheckResult r{9, "norm_ratio_bounded"};
  std::mt19937_64 rng(opt.seed + 9);
  std::uniform_real_distribution<double> amp(0.1, 5.0), om(0.0, 2 * kPi), ph(-kPi, kPi),
      u0s(-1.0, 1.0);
  double lo = 1e300, hi = 0;
  nlohmann::json rows = nlohmann::json::array();
  for (int trial = 0; trial < 20; ++trial) {
    Problem1D pr;
    const double a = amp(rng), w = om(rng), phi = ph(rng);
    pr.J = [a, w, phi](double t) { return a * std::cos(w * t + phi); };
    CVec u0 = exact_1d(pr.grid(), 0.0);
    u0 *= u0s(rng) * 2;
    u0[0] = 0;  // PEC
    pr.u0 = u0;
    const Pipeline1DSetup s = setup_1d(pr);
    const CVec uT = reference_1d(pr, s.ops);
    CVec ufT(s.uf0.size());
    ufT << uT, CVec::Constant(uT.size(), s.profile.c0);
    const double ratio = s.uf0.norm() / ufT.norm();
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    rows.push_back({{"amplitude", a}, {"omega", w}, {"phase", phi}, {"ratio", ratio}});
  }
  r.pass = lo >= tol::norm_ratio_lo && hi <= tol::norm_ratio_hi;
  r.data = {{"runs", rows}, {"min", lo}, {"max", hi}};
  r.detail = "ratio range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
  return r;
}

struct Check {
  int id;
  std::function<CheckResult()> run;
};

/// The criteria in order; `only` selects ids (empty: all).
inline std::vector<Check> checks(const Options& opt = {}, bool include_ladder = true,
                                 const std::vector<int>& only = {}) {
  std::vector<Check> all = {{1, [] { return ladder(); }},
                            {2, [opt] { return trotter_bound(opt); }},
                            {3, [opt] { return shift_product_bound(opt); }},
                            {4, gate_counts},
                            {5, u1_exact},
                            {6, recovery_error_bound},
                            {7, kernels},
                            {8, [opt] { return structure(opt); }},
                            {9, [opt] { return norm_ratio(opt); }}};
  std::vector<Check> out;
  for (auto& c : all) {
    if (c.id == 1 && !include_ladder) continue;
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    out.push_back(c);
  }
  return out;
}

inline std::vector<CheckResult> run_all(const Options& opt = {}, bool include_ladder = true,
                                        const std::vector<int>& only = {}) {
  std::vector<CheckResult> out;
  for (auto& c : checks(opt, include_ladder, only)) out.push_back(c.run());
  return out;
}

inline nlohmann::json to_json(const CheckResult& c) {
  return {{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"data", c.data}};
}

}  // namespace schromax::verify
