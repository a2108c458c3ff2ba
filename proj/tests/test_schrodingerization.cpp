#include <gtest/gtest.h>

#include <schromax/kernels.hpp>
#include <schromax/pipeline.hpp>

#include "test_util.hpp"

using namespace schromax;

TEST(Grids, NodesAndFrequencies) {
  const SpectralGrid g(2.0, 3);
  EXPECT_EQ(g.N(), 8u);
  EXPECT_DOUBLE_EQ(g.node(0), -2 * kPi);
  EXPECT_DOUBLE_EQ(g.node(4), 0.0);
  EXPECT_EQ(g.zero_index(), 4u);
  const CMat Phi = g.Phi();
  EXPECT_LT((Phi.adjoint() * Phi - 8.0 * CMat::Identity(8, 8)).norm(), 1e-12);
  const CMat P = g.P();
  EXPECT_LT((P - P.adjoint()).norm(), 1e-13);
  EXPECT_THROW(SpectralGrid(0.0, 3), Error);
}

TEST(Grids, DefaultWidthsTruncate) {
  const double L = default_L(0.5);
  EXPECT_LT(std::exp(-kPi * L + 0.25), 1e-12 * 1.0001);
  EXPECT_NO_THROW(check_truncation(SpectralGrid(L, 4), 0.25, 1e-12, "p"));
  EXPECT_THROW(check_truncation(SpectralGrid(1.0, 4), 0.25, 1e-12, "p"), Error);
}

TEST(Kernels, BetaPartitionOfUnity) {
  for (double x : {0.0, 0.13, 0.5, 0.77}) {
    double s = 0, m1 = 0;
    for (int j = -3; j <= 3; ++j) {
      s += beta3(x - j);
      m1 += (x - j) * beta3(x - j);
    }
    EXPECT_NEAR(s, 1.0, 1e-14);
    EXPECT_NEAR(m1, 0.0, 1e-14);
  }
  EXPECT_EQ(beta3(2.0), 0.0);
  EXPECT_EQ(beta3(-2.5), 0.0);
}

TEST(Kernels, ExtensionIsC2AtJunctions) {
  for (int k = 0; k <= 2; ++k) {
    EXPECT_NEAR(g_poly(0.0, k), g_exp(0.0, k), 1e-12) << k;
    EXPECT_NEAR(g_poly(-1.0, k), g_exp(-1.0, k), 1e-12) << k;
  }
  EXPECT_DOUBLE_EQ(g_extension(2.0), std::exp(-2.0));
  EXPECT_DOUBLE_EQ(g_extension(-3.0), std::exp(-3.0));
}

TEST(Schrodingerization, SplitOfStretchedMatrix) {
  const auto o = build_operators(GridSpec{2, 1, 2.0, 0.5});
  RVec F = RVec::Zero(o.A.rows());
  F[1] = 0.3;
  F[2] = -0.7;
  const StretchedSystem s = stretch(o.A, F, CVec::Ones(o.A.rows()), 1.5);
  const CMat At = CMat(s.Atilde), H1 = CMat(s.H1), H2 = CMat(s.H2);
  EXPECT_LT((At - (H1 + I1 * H2)).norm(), 1e-14);
  EXPECT_LT((H1 - H1.adjoint()).norm(), 1e-14);
  EXPECT_LT((H2 - H2.adjoint()).norm(), 1e-14);
  EXPECT_EQ(s.uf0.size(), 2 * o.A.rows());
  EXPECT_EQ(s.uf0[o.A.rows()], cplx(1.5));
}

TEST(Schrodingerization, ApplyMatchesAssemble) {
  Problem1D pr;
  pr.m = 2;
  pr.n_s = 3;
  pr.n_p = 3;
  const auto s = setup_1d(pr);
  for (auto w : {CurlWindow::Everywhere, CurlWindow::SourceNodes}) {
    AutonomizedHamiltonian H(s.ops.A, s.F, s.sg, s.pg, w);
    const SpMat Hs = H.assemble();
    EXPECT_LT(max_abs(SpMat(Hs - SpMat(Hs.adjoint()))), 1e-13);
    const CVec x = testutil::random_state(s.layout, 3).physical();
    CVec y(x.size());
    H.apply(x, y);
    EXPECT_LT((y - Hs * x).norm(), 1e-12);
    const CMat Hd = CMat(Hs);
    EXPECT_LE(Hd.selfadjointView<Eigen::Lower>().eigenvalues().cwiseAbs().maxCoeff(),
              H.norm_bound() * (1 + 1e-12));
  }
}

TEST(Schrodingerization, ChebyshevMatchesDense) {
  Problem1D pr;
  pr.m = 2;
  pr.n_s = 3;
  pr.n_p = 3;
  const auto s = setup_1d(pr);
  AutonomizedHamiltonian H(s.ops.A, s.F, s.sg, s.pg, CurlWindow::Everywhere);
  const CVec x = testutil::random_state(s.layout, 8).physical();
  const CVec a = evolve_oracle(H, x, 0.5);
  const CVec b = chebyshev_expm([&](const CVec& v, CVec& o) { H.apply(v, o); }, x, 0.5,
                                H.norm_bound());
  EXPECT_LT((a - b).norm(), 1e-11);
  EXPECT_NEAR(b.norm(), 1.0, 1e-11);
}

TEST(Schrodingerization, InitialStateColumns) {
  const SpectralGrid sg(5.0 / kPi, 3), pg(4.0, 3);
  const RVec d = delta_column(sg);
  // s = 0 is a node, so the delta column is 1/ds there and zero elsewhere
  EXPECT_NEAR(d[sg.zero_index()], 1.0 / sg.h(), 1e-12);
  EXPECT_NEAR(d.sum() - d[sg.zero_index()], 0.0, 1e-12);
  const RVec g = g_column(pg);
  for (std::uint64_t q = 0; q < pg.N(); ++q) EXPECT_DOUBLE_EQ(g[q], g_extension(pg.node(q)));
  CVec uf(2);
  uf << 2.0, -1.0;
  const StateVector st = build_initial_state(uf, sg, pg);
  EXPECT_EQ(st.layout().n_sys, 1);
  const std::uint64_t l0 = sg.zero_index();
  EXPECT_NEAR(std::abs(st[(1 * sg.N() + l0) * pg.N() + 5] - cplx(-d[l0] * g[5])), 0.0, 1e-14);
  CVec bad(3);
  EXPECT_THROW(build_initial_state(bad, sg, pg), Error);
}

TEST(Schrodingerization, PTransformIsQft) {
  RegisterLayout l(1, 1, 3);
  StateVector st = testutil::random_state(l, 12);
  CVec v = st.physical();
  p_transform(v, 8, false);
  apply_qft(st, 0, 3, false);
  EXPECT_LT((v - st.physical()).norm(), 1e-13);
}
