#include <gtest/gtest.h>

#include <algorithm>

#include <schromax/pipeline.hpp>

#include "test_util.hpp"

using namespace schromax;

namespace {

double skew_defect(const SpMat& A) { return max_abs(SpMat(A + SpMat(A.adjoint()))); }

}  // namespace

TEST(Maxwell, ShiftOperators) {
  const CMat sm = CMat(shift_minus(2));
  // S_- e_i = e_{i-1}
  for (int i = 1; i < 4; ++i) EXPECT_EQ(sm(i - 1, i), cplx(1.0));
  EXPECT_EQ(CMat(shift_plus(2)), CMat(sm.adjoint()));
  EXPECT_EQ(CMat(d_plus(3)), CMat(-CMat(d_minus(3)).adjoint()));
}

TEST(Maxwell, AIsSkewHermitian) {
  for (int d : {1, 3})
    for (int m = 1; m <= 3; ++m) {
      const auto o = build_operators(GridSpec{m, d, 1.0, 0.5});
      EXPECT_EQ(o.A.rows(), o.spec.n());
      EXPECT_LT(skew_defect(o.A), 1e-12) << "d=" << d << " m=" << m;
    }
}

TEST(Maxwell, OneDimensionalSpectrumMatchesFixture) {
  const auto o = build_operators(GridSpec{2, 1, 2.0, 0.5});
  Eigen::ComplexEigenSolver<CMat> es(CMat(o.A));
  std::vector<double> im;
  for (auto v : es.eigenvalues()) im.push_back(v.imag());
  std::sort(im.begin(), im.end());
  const auto& want = testutil::fixtures()["operators_1d_m2_eig_imag"];
  ASSERT_EQ(im.size(), want.size());
  for (std::size_t i = 0; i < im.size(); ++i) EXPECT_NEAR(im[i], want[i].get<double>(), 1e-12);
}

TEST(Maxwell, GridBudget) {
  try {
    GridSpec{9, 3, 1.0, 0.5}.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
  }
  EXPECT_THROW(GridSpec({0, 1, 1.0, 0.5}).validate(), Error);
  EXPECT_THROW(GridSpec({2, 2, 1.0, 0.5}).validate(), Error);
}

TEST(Maxwell, SemiDiscreteReferenceMatchesFixture) {
  Problem1D pr;
  const auto ops = build_operators(pr.grid());
  const CVec uh = reference_1d(pr, ops);
  const auto& fx = testutil::fixtures()["semi_discrete_m5"];
  const auto& want = fx["u_h"];
  ASSERT_EQ(uh.size(), static_cast<Eigen::Index>(want.size()));
  for (Eigen::Index i = 0; i < uh.size(); ++i)
    EXPECT_NEAR(uh[i].real(), want[i].get<double>(), 1e-8);
  const CVec ex = exact_1d(pr.grid(), pr.T);
  EXPECT_NEAR((uh.head(32) - ex.head(32)).cwiseAbs().maxCoeff(),
              fx["err_E_vs_exact"].get<double>(), 1e-8);
}

TEST(Maxwell, LeapfrogMatchesFixture) {
  for (const auto& row : testutil::fixtures()["fdtd"]) {
    const int m = row["m"];
    const int steps = row["steps"];
    const GridSpec g{m, 1, 2.0, 0.5};
    const auto ops = build_operators(g);
    const double dt = row["dt"];
    auto f = [&](double t) { return source_from_J(g, kPi * std::cos(kPi * t)); };
    MaxwellState s{exact_1d(g, 0.0), 0.0};
    for (int i = 0; i < steps; ++i) s = classical_fdtd_step(s, ops, f, dt);
    const CVec ex = exact_1d(g, 0.5);
    const Eigen::Index M = g.M();
    EXPECT_NEAR((s.u.head(M) - ex.head(M)).cwiseAbs().maxCoeff(), row["err_E"].get<double>(), 1e-12);
    EXPECT_NEAR((s.u.tail(M) - ex.tail(M)).cwiseAbs().maxCoeff(), row["err_B"].get<double>(), 1e-12);
  }
}

TEST(Maxwell, LeapfrogCflAndEnergy) {
  const GridSpec g{2, 3, 1.0, 0.5};
  const auto ops = build_operators(g);
  MaxwellState s{testutil::random_state(RegisterLayout(g.n_qubits(), 0, 0), 9).physical(), 0.0};
  try {
    classical_fdtd_step(s, ops, {}, g.dx());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CflViolation);
  }
  // the 8-component operator has spectral radius near 4.15/dx, so the
  // leapfrog is stable below about 0.48 dx, inside dx/sqrt(3)
  const double dt = 0.4 * g.dx();
  const double e0 = fdtd_energy(s, ops, dt);
  double worst = 0, peak = 0;
  for (int i = 0; i < 200; ++i) {
    const double before = fdtd_energy(s, ops, dt);
    s = classical_fdtd_step(s, ops, {}, dt);
    worst = std::max(worst, std::abs(fdtd_energy(s, ops, dt) - before));
    peak = std::max(peak, s.u.norm());
  }
  EXPECT_LT(worst, 1e-10);
  EXPECT_NEAR(fdtd_energy(s, ops, dt), e0, 1e-10);
  EXPECT_LT(peak, 2.0);
}

TEST(Maxwell, SourceTensorMatchesDiagonal) {
  const GridSpec g{1, 3, 1.0, 0.5};
  SourceSlice sl;
  sl.alpha[AlphaX] = {0.4, 0.3, {7}};
  sl.alpha[AlphaRho] = {-0.2, 0.0, {}};
  SourceProfile p;
  p.slices.push_back(sl);
  const double c0 = compute_c0(p);
  EXPECT_GE(c0, 1.0);
  const CMat a = CMat(F_from_tensor(sl, g, c0));
  const RVec d = F_diag(sl, g, c0);
  EXPECT_LT((a - CMat(d.cast<cplx>().asDiagonal())).cwiseAbs().maxCoeff(), 1e-15);
}
