#include <gtest/gtest.h>

#include <schromax/pipeline.hpp>

#include "test_util.hpp"

using namespace schromax;

namespace {

StateVector p_profile(const RegisterLayout& l, const std::function<cplx(std::uint64_t)>& w) {
  std::vector<cplx> a(l.dim());
  for (std::uint64_t i = 0; i < l.dim(); ++i) a[i] = w(i % l.Np());
  return StateVector(l, a);
}

}  // namespace

TEST(Recovery, IndexRules) {
  const SpectralGrid pg(4.0, 5);
  RecoveryConfig rc;
  const auto k = recovery_index(pg, rc);
  EXPECT_GT(pg.node(k), 0.5);
  EXPECT_LE(pg.node(k - 1), 0.5);
  rc.rule = KRule::FullT;
  rc.T = 1.0;
  EXPECT_GT(pg.node(recovery_index(pg, rc)), 1.0);
  rc.rule = KRule::Fixed;
  rc.threshold = 100.0;
  try {
    recovery_index(pg, rc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoRecoveryIndex);
  }
}

TEST(Recovery, SuccessProbabilityExtremes) {
  const RegisterLayout l(1, 1, 3);
  const SpectralGrid sg(1.0, 1), pg(4.0, 3);
  RecoveryConfig rc;
  const auto k = recovery_index(pg, rc);
  const StateVector conc = p_profile(l, [&](std::uint64_t q) { return q == k ? 1.0 : 0.0; });
  EXPECT_NEAR(success_probability(conc, k), 1.0, 1e-15);
  const StateVector uni = p_profile(l, [](std::uint64_t) { return 1.0; });
  EXPECT_NEAR(success_probability(uni, k), 1.0 / 8, 1e-15);
  const StateVector zero = p_profile(l, [](std::uint64_t) { return 0.0; });
  EXPECT_EQ(success_probability(zero, k), 0.0);
  const RecoveryResult r = recover_point(zero, sg, pg, rc);
  EXPECT_EQ(r.u_rec.norm(), 0.0);
}

TEST(Recovery, PointAndIntegralOnExactProfile) {
  // w(p) = e^{-p} u for p > 0: both modes return u
  const RegisterLayout l(1, 1, 7);
  const SpectralGrid sg(1.0 / (2 * kPi), 1), pg(4.0, 7);
  const cplx u0(0.8, -0.3), u1(-1.2, 0.0);
  std::vector<cplx> a(l.dim(), 0.0);
  for (std::uint64_t q = 0; q < l.Np(); ++q) {
    const double w = std::exp(-std::abs(pg.node(q)));
    // s register: one node carries all weight, ds * sum = value
    a[(0 * l.Ns() + 1) * l.Np() + q] = u0 * w / sg.h();
    a[(1 * l.Ns() + 1) * l.Np() + q] = u1 * w / sg.h();
  }
  const StateVector st(l, a);
  RecoveryConfig rc;
  const RecoveryResult rp = recover_point(st, sg, pg, rc);
  EXPECT_NEAR(std::abs(rp.u_rec[0] - u0), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(rp.u_rec[1] - u1), 0.0, 1e-13);
  rc.mode = RecoveryMode::Integral;
  const RecoveryResult ri = recover(st, sg, pg, rc);
  // trapezoid on e^{-p} out to pi L: relative error about dp^2 / 12
  EXPECT_NEAR(std::abs(ri.u_rec[0] - u0), 0.0, 1.1 * std::abs(u0) * pg.h() * pg.h() / 12);
  EXPECT_GT(std::abs(ri.u_rec[0] - u0), 0.5 * std::abs(u0) * pg.h() * pg.h() / 12);
}

TEST(Recovery, PipelineRungMatchesFixture) {
  for (const auto& row : testutil::fixtures()["pipeline"]) {
    Problem1D pr = Problem1D::ladder_rung(row["k"].get<int>());
    pr.curl = row["window"] == "everywhere" ? CurlWindow::Everywhere : CurlWindow::SourceNodes;
    const Pipeline1DResult r = run_1d(pr);
    EXPECT_NEAR(r.p_k, row["p_k"].get<double>(), 1e-12);
    EXPECT_NEAR(r.err_E, row["err_E"].get<double>(), 1e-7) << row["window"];
    EXPECT_NEAR(r.err_B, row["err_B"].get<double>(), 1e-7) << row["window"];
    EXPECT_GT(r.success_prob, 0.0);
    EXPECT_LE(r.success_prob, 1.0);
  }
}

TEST(Recovery, CircuitPathTracksExactPath) {
  Problem1D pr;
  pr.m = 2;
  pr.n_s = 3;
  pr.n_p = 3;
  pr.Nt = 64;
  pr.curl = CurlWindow::Everywhere;
  const Pipeline1DResult ex = run_1d(pr);
  pr.integrator = Integrator::Circuit;
  pr.trotter_order = 2;
  const Pipeline1DResult ci = run_1d(pr);
  EXPECT_LT(rel_error(ci.u_rec, ex.u_rec), 1e-2);
  pr.curl = CurlWindow::SourceNodes;
  EXPECT_THROW(run_1d(pr), Error);
}

TEST(Recovery, ObservedOrders) {
  const auto o = observed_orders({1.0, 0.25, 0.0625});
  ASSERT_EQ(o.size(), 2u);
  EXPECT_DOUBLE_EQ(o[0], 2.0);
  EXPECT_DOUBLE_EQ(o[1], 2.0);
}
