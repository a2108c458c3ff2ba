#include <gtest/gtest.h>

#include <schromax/oracles.hpp>
#include <schromax/pipeline.hpp>
#include <schromax/verify.hpp>

#include "test_util.hpp"

using namespace schromax;

namespace {

struct Small {
  Pipeline1DSetup s;
  CMat H;
};

Small small_problem() {
  Problem1D pr;
  pr.m = 1;
  pr.n_s = 2;
  pr.n_p = 2;
  pr.curl = CurlWindow::Everywhere;
  Small out{setup_1d(pr), {}};
  AutonomizedHamiltonian H(out.s.ops.A, out.s.F, out.s.sg, out.s.pg, CurlWindow::Everywhere);
  out.H = CMat(H.assemble());
  return out;
}

CMat step_unitary(const Pipeline1DSetup& s, double tau, int order) {
  return oracle::circuit_to_unitary(
      synth_step(s.layout, s.sm, s.profile, s.sg, s.pg, s.ops.spec.dx(), tau, order));
}

}  // namespace

TEST(Synthesis, StepGeneratorIsTheHamiltonian) {
  const Small p = small_problem();
  const double tau = 1e-4;
  const CMat V = step_unitary(p.s, tau, 2);
  // Strang: (V - V^H) / (-2 i tau) = H + O(tau^2)
  const CMat G = (V - V.adjoint()) / (-2.0 * I1 * tau);
  EXPECT_LT((G - p.H).cwiseAbs().maxCoeff(), 1e-4 * std::max(1.0, p.H.cwiseAbs().maxCoeff()));
}

TEST(Synthesis, StepIsUnitary) {
  const Small p = small_problem();
  for (int order : {1, 2}) {
    const CMat V = step_unitary(p.s, 0.1, order);
    EXPECT_LT((V * V.adjoint() - CMat::Identity(V.rows(), V.cols())).norm(), 1e-10);
  }
  EXPECT_THROW(step_unitary(p.s, 0.1, 3), Error);
}

TEST(Synthesis, StrangLocalErrorIsThirdOrder) {
  const Small p = small_problem();
  const oracle::HermitianPropagator U(p.H);
  std::vector<double> taus, errs;
  for (int e = 4; e <= 6; ++e) {
    const double tau = std::ldexp(1.0, -e);
    taus.push_back(tau);
    errs.push_back(op_norm(U(tau) - step_unitary(p.s, tau, 2)));
  }
  EXPECT_GT(verify::loglog_slope(taus, errs), 2.7);
}

TEST(Synthesis, U1MatchesFixture) {
  const auto& fx = testutil::fixtures()["u1"];
  const int ns = fx["n_s"];
  const double tau = fx["tau"];
  RegisterLayout lay(1, ns, 1);
  const SpectralGrid sg(5.0 / kPi, ns);
  // sub-block acting on the s register with sys = p = 0
  const CMat full = oracle::gates_to_unitary(u1_ops(lay, sg, tau), lay.total());
  const int N = 1 << ns;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const cplx want(fx["re"][i][j].get<double>(), fx["im"][i][j].get<double>());
      EXPECT_NEAR(std::abs(full(i << 1, j << 1) - want), 0.0, 1e-12) << i << "," << j;
    }
}

TEST(Synthesis, BellBasisDiagonalization) {
  for (int n = 1; n <= 4; ++n)
    for (double lam : {0.0, 0.6, -2.1}) {
      const CMat V = oracle::gates_to_unitary(bell_diag_V(n, lam), n);
      EXPECT_LT((V * bell_core(n) * V.adjoint() - bell_pair_target(n, lam)).norm(), 1e-13)
          << n << " " << lam;
    }
}

TEST(Synthesis, ShiftSumSingleTermIsExact) {
  // n = 1: one commuting term per register, so the product is exact
  const std::vector<double> eta = {0.7, -0.4}, lam = {0.3, 1.9};
  const CMat H = verify::shift_sum_dense(1, 1.3, eta, lam);
  const CMat V = oracle::gates_to_unitary(shift_sum_circuit(1, 1.3, eta, lam, 0.8), 2);
  EXPECT_LT(op_norm(oracle::HermitianPropagator(H)(0.8) - V), 1e-13);
}

TEST(Synthesis, ShiftSumWithinBound) {
  const std::vector<double> eta = {0.9}, lam = {-0.5};
  const int n = 3;
  const double g = 1.1, tau = 0.3;
  const CMat H = verify::shift_sum_dense(n, g, eta, lam);
  const CMat V = oracle::gates_to_unitary(shift_sum_circuit(n, g, eta, lam, tau), n);
  const double err = op_norm(oracle::HermitianPropagator(H)(tau) - V);
  EXPECT_LE(err, g * g * tau * tau * (n - 1) / 2 * eta[0] * eta[0]);
}

TEST(Counts, PredictedMatchesCounted) {
  for (int m = 1; m <= 2; ++m)
    for (int ns = 1; ns <= 2; ++ns) {
      const SystemMap sm{3, m};
      RegisterLayout lay(sm.n_qubits(), ns, 2, 40);
      const Circuit V = synth_step(lay, sm, verify::counting_profile(3, m), SpectralGrid(1.0, ns),
                                   SpectralGrid(4.0, 2), 0.25, 0.01, 1);
      const GateCountReport got = family_counts(count_gates(V));
      const GateCountReport want = predicted_counts({m, ns, 2, 3, 1, 1});
      EXPECT_EQ(got.total(), want.total()) << m << " " << ns;
      for (auto& [name, c] : want.blocks) EXPECT_EQ(got.block(name), c) << name;
    }
}

TEST(Counts, ThreeDimensionalMatchesFixture) {
  const auto& fx = testutil::fixtures()["counts_3d"];
  const int m = fx["m"], ns = fx["n_s"], np = fx["n_p"];
  const SystemMap sm{3, m};
  RegisterLayout lay(sm.n_qubits(), ns, np, 40);
  const Circuit V = synth_step(lay, sm, verify::counting_profile(3, m), SpectralGrid(1.0, ns),
                               SpectralGrid(4.0, np), 0.25, 0.01, 1);
  const GateCountReport got = family_counts(count_gates(V));
  EXPECT_EQ(got.n_single, fx["n_single"].get<long long>());
  EXPECT_EQ(got.n_cnot_equiv, fx["n_cnot_equiv"].get<long long>());
  for (auto it = fx["families"].begin(); it != fx["families"].end(); ++it) {
    const GateCount c = got.block(it.key());
    EXPECT_EQ(c.n_single, it.value()[0].get<long long>()) << it.key();
    EXPECT_EQ(c.n_cnot_equiv, it.value()[1].get<long long>()) << it.key();
  }
}

TEST(Counts, ClosedFormsAgreeOnlyAtMEquals3) {
  for (int m = 1; m <= 3; ++m) {
    const CountParams cp{m, 2, 2, 3, 1, 1};
    const GateCountReport r = predicted_counts(cp);
    const long long xlj = r.block("X_p,l_j").n_cnot_equiv / 4;
    EXPECT_EQ(xlj == closed_forms(cp).x_p_lj_cnot, m == 3) << m;
  }
}
