#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grids.hpp"
#include "maxwell.hpp"
#include "oracles.hpp"
#include "recovery.hpp"
#include "schrodingerization.hpp"
#include "synthesis.hpp"

namespace schromax {

enum class Integrator { Exact, Circuit };
enum class Reference { SemiDiscrete, Continuum };

/// Which s-nodes carry the (sampled) source.
enum class SourceWindow {
  ClosedOpen,  // 0 <= s_l < T
  OpenClosed,  // 0 < s_l <= T
};

/// 1D test problem: dE/dt = -dB/dx - J, dB/dt = -dE/dx on [0, length], E = 0 at the walls,
/// with J(t) = pi cos(pi t) and exact solution E = sin(pi(x+t)) - sin(pi t), B = -sin(pi(x+t)).
struct Problem1D {
  int m = 5;
  double length = 2.0;
  double T = 0.5;
  double S = 5.0 / kPi;  // s in (-pi S, pi S)
  double L = 4.0;        // p in (-pi L, pi L)
  int n_s = 5;
  int n_p = 5;
  int Nt = 32;
  Integrator integrator = Integrator::Exact;
  int trotter_order = 1;
  CurlWindow curl = CurlWindow::SourceNodes;  // H_p(s) = 0 outside the source window
  SourceWindow window = SourceWindow::ClosedOpen;
  Reference reference = Reference::SemiDiscrete;
  RecoveryConfig recovery{};
  double ode_tol = 1e-12;
  // J amplitude at time t on the interior sites; defaults to pi cos(pi t)
  std::function<double(double)> J = [](double t) { return kPi * std::cos(kPi * t); };
  // initial data; defaults to the exact solution at t = 0
  std::optional<CVec> u0;

  GridSpec grid() const { return GridSpec{m, 1, length, T}; }
  SpectralGrid sgrid() const { return SpectralGrid(S, n_s); }
  SpectralGrid pgrid() const { return SpectralGrid(L, n_p); }
  double tau() const { return T / Nt; }

  /// Rung k of the ladder (dp, ds, dt) = (8 pi / 2^k, 10 / 2^k, 1 / 2^{k+1}).
  static Problem1D ladder_rung(int k) {
    Problem1D p;
    p.n_s = k;
    p.n_p = k;
    p.Nt = static_cast<int>(std::lround(p.T * std::ldexp(1.0, k + 1)));
    return p;
  }
};

struct Pipeline1DResult {
  CVec u_rec, u_ref;
  double err_E = 0, err_B = 0;  // max-norm errors
  double rel_err = 0;
  double success_prob = 0;
  std::uint64_t k = 0;
  double p_k = 0;
  double norm_uf0 = 0, norm_ufT = 0;
  double seconds = 0;
};

inline bool source_active(const Problem1D& pr, double s) {
  return pr.window == SourceWindow::ClosedOpen ? (s >= 0 && s < pr.T) : (s > 0 && s <= pr.T);
}

/// Source profile on the s-grid: J on sites 1..M-1, zero on the wall site 0.
inline SourceProfile profile_1d(const Problem1D& pr) {
  const SpectralGrid sg = pr.sgrid();
  SourceProfile prof;
  for (std::uint64_t l = 0; l < sg.N(); ++l) {
    const double s = sg.node(l);
    if (!source_active(pr, s)) continue;
    SourceSlice sl;
    sl.l = l;
    auto& t = sl.alpha[AlphaY];
    t.j0 = pr.J(s);
    t.j1 = 0.0;
    t.sites = {0};
    prof.slices.push_back(sl);
  }
  prof.c0 = compute_c0(prof);
  return prof;
}

inline CVec source_from_J(const GridSpec& g, double j) {
  CVec f = CVec::Zero(g.n());
  for (Eigen::Index i = 1; i < g.M(); ++i) f[i] = -j;
  return f;
}

inline CVec initial_data(const Problem1D& pr) { return pr.u0 ? *pr.u0 : exact_1d(pr.grid(), 0.0); }

/// Semi-discrete reference u_h(T) from the adaptive integrator.
inline CVec reference_1d(const Problem1D& pr, const MaxwellOperators& ops) {
  if (pr.reference == Reference::Continuum) return exact_1d(pr.grid(), pr.T);
  const GridSpec g = pr.grid();
  return oracle::integrate_linear(
             ops.A, [&](double t) { return source_from_J(g, pr.J(t)); }, initial_data(pr), pr.T,
             pr.ode_tol)
      .u;
}

struct Pipeline1DSetup {
  MaxwellOperators ops;
  SourceProfile profile;
  SpectralGrid sg, pg;
  CVec uf0;
  std::vector<RVec> F;
  RegisterLayout layout;
  SystemMap sm;
};

inline Pipeline1DSetup setup_1d(const Problem1D& pr) {
  const GridSpec g = pr.grid();
  Pipeline1DSetup s{build_operators(g), profile_1d(pr), pr.sgrid(), pr.pgrid(), {}, {},
                    RegisterLayout(g.m + 2, pr.n_s, pr.n_p), SystemMap{1, g.m}};
  s.layout.validate();
  const double c0 = s.profile.c0;
  const CVec u0 = initial_data(pr);
  s.uf0.resize(2 * g.n());
  s.uf0 << u0, CVec::Constant(g.n(), c0);
  s.F.assign(s.sg.N(), RVec());
  for (auto& sl : s.profile.slices) s.F[sl.l] = F_diag(sl, g, c0);
  return s;
}

/// Evolved state in the physical p basis.
inline StateVector evolve_1d(const Problem1D& pr, const Pipeline1DSetup& s) {
  StateVector st = build_initial_state(s.uf0, s.sg, s.pg);
  // to the Fourier basis of p, where D_p is diagonal
  apply_qft(st, s.layout.p(0), s.layout.n_p, true);
  if (pr.integrator == Integrator::Exact) {
    AutonomizedHamiltonian H(s.ops.A, s.F, s.sg, s.pg, pr.curl);
    const CVec x = st.physical();
    const CVec y = evolve_oracle(H, x, pr.T, true);
    st = StateVector(s.layout, std::vector<cplx>(y.data(), y.data() + y.size()));
  } else {
    if (pr.curl != CurlWindow::Everywhere)
      throw Error(ErrorCode::InvalidArgument, "the circuit applies the curl on every s-node");
    const Circuit step = synth_step(s.layout, s.sm, s.profile, s.sg, s.pg, s.ops.spec.dx(),
                                    pr.tau(), pr.trotter_order);
    evolve(st, step, pr.Nt);
  }
  apply_qft(st, s.layout.p(0), s.layout.n_p, false);
  return st;
}

inline Pipeline1DResult run_1d(const Problem1D& pr) {
  const auto t0 = std::chrono::steady_clock::now();
  const Pipeline1DSetup s = setup_1d(pr);
  const StateVector st = evolve_1d(pr, s);
  RecoveryConfig rc = pr.recovery;
  rc.T = pr.T;
  const RecoveryResult rr = recover(st, s.sg, s.pg, rc);
  Pipeline1DResult r;
  const Eigen::Index n = s.ops.A.rows(), M = n / 2;
  r.u_rec = rr.u_rec.head(n);
  r.u_ref = reference_1d(pr, s.ops);
  r.err_E = (r.u_rec.head(M) - r.u_ref.head(M)).cwiseAbs().maxCoeff();
  r.err_B = (r.u_rec.tail(M) - r.u_ref.tail(M)).cwiseAbs().maxCoeff();
  r.rel_err = rel_error(r.u_rec, r.u_ref);
  r.success_prob = rr.success_prob;
  r.k = rr.k;
  r.p_k = rr.p_k;
  r.norm_uf0 = s.uf0.norm();
  CVec ufT(2 * n);
  ufT << r.u_ref, CVec::Constant(n, s.profile.c0);
  r.norm_ufT = ufT.norm();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// Observed order log2(e_coarse / e_fine) between successive rungs.
inline std::vector<double> observed_orders(const std::vector<double>& errs) {
  std::vector<double> o;
  for (std::size_t i = 1; i < errs.size(); ++i) o.push_back(std::log2(errs[i - 1] / errs[i]));
  return o;
}

}  // namespace schromax
