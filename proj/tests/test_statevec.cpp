#include <gtest/gtest.h>

#include <schromax/circuit.hpp>
#include <schromax/oracles.hpp>
#include <schromax/statevec.hpp>

#include "test_util.hpp"

using namespace schromax;

TEST(Statevec, RxHalfTurnFlipsWithPhase) {
  RegisterLayout l(1, 0, 0);
  StateVector st(l);
  apply_gate(st, gates::rx(0, kPi));
  EXPECT_NEAR(std::abs(st[0]), 0.0, 1e-15);
  EXPECT_NEAR(st[1].real(), 0.0, 1e-15);
  EXPECT_NEAR(st[1].imag(), -1.0, 1e-15);
}

TEST(Statevec, ZeroPolarityControlNotSatisfied) {
  RegisterLayout l(2, 0, 0);
  StateVector st(l, {0, 0, 1, 0});  // |10>
  apply_gate(st, gates::rx(0, 1.3).ctrl(1, 0));
  EXPECT_EQ(st[2], cplx(1.0));
  EXPECT_EQ(st[0], cplx(0.0));
  apply_gate(st, gates::rx(0, kPi).ctrl(1, 1));
  EXPECT_NEAR(std::abs(st[3]), 1.0, 1e-15);
}

TEST(Statevec, MultiControlledRzMatchesDenseOracle) {
  RegisterLayout l(3, 0, 0);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    StateVector st = testutil::random_state(l, seed);
    const CVec v0 = st.physical();
    GateOp g = gates::rz(static_cast<int>(seed % 3), 0.3 * seed);
    g.ctrl((seed + 1) % 3, seed & 1).ctrl((seed + 2) % 3, 1);
    apply_gate(st, g);
    const CMat U = oracle::gates_to_unitary({g}, 3);
    EXPECT_LT((st.physical() - U * v0).norm(), 1e-13);
  }
}

TEST(Statevec, EveryKindMatchesOracle) {
  RegisterLayout l(2, 1, 1);
  std::vector<GateOp> ops = {gates::h(0),
                             gates::x(3).ctrl(1, 0),
                             gates::p(2, 0.4).ctrl(0, 1),
                             gates::ry(1, -0.9),
                             gates::rx(3, 1.1).ctrl(2, 1).ctrl(0, 0),
                             gates::rz_multi({0, 2, 3}, 0.77).ctrl(1, 1),
                             gates::cnot(3, 0),
                             gates::qft(1, 3),
                             gates::qft(0, 2, true, false),
                             gates::global_phase(0.2)};
  StateVector st = testutil::random_state(l, 7);
  const CVec v0 = st.physical();
  apply_gates(st, ops);
  EXPECT_LT((st.physical() - oracle::gates_to_unitary(ops, 4) * v0).norm(), 1e-13);
}

TEST(Statevec, QftOfZeroIsUniform) {
  RegisterLayout l(2, 0, 0);
  StateVector st(l);
  apply_qft(st, 0, 2, false, false);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(st[i] - cplx(0.5)), 0.0, 1e-15);
}

TEST(Statevec, CenteredQftIsStandardAfterTopX) {
  RegisterLayout l(3, 0, 0);
  StateVector a = testutil::random_state(l, 3), b = a;
  apply_qft(a, 0, 3, false, true);
  apply_gate(b, gates::x(2));
  apply_qft(b, 0, 3, false, false);
  EXPECT_LT((a.physical() - b.physical()).norm(), 1e-14);
  apply_qft(a, 0, 3, true, true);
  apply_qft(b, 0, 3, true, false);
  apply_gate(b, gates::x(2));
  EXPECT_LT((a.physical() - b.physical()).norm(), 1e-14);
}

TEST(Statevec, NormPreservedByRandomCircuit) {
  RegisterLayout l(4, 3, 3);
  StateVector st = testutil::random_state(l, 11);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> q(0, l.total() - 1);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  for (int i = 0; i < 300; ++i) {
    int t = q(rng), c = q(rng);
    if (c == t) c = (t + 1) % l.total();
    switch (i % 5) {
      case 0: apply_gate(st, gates::h(t)); break;
      case 1: apply_gate(st, gates::rx(t, ang(rng)).ctrl(c, i & 1)); break;
      case 2: apply_gate(st, gates::rz_multi({t, c}, ang(rng))); break;
      case 3: apply_gate(st, gates::p(t, ang(rng)).ctrl(c, 0)); break;
      default: apply_qft(st, 0, 3, i & 1); break;
    }
  }
  const double eps = 10 * std::numeric_limits<double>::epsilon() * std::sqrt(double(st.size()));
  EXPECT_NEAR(st.norm(), 1.0, 300 * eps);
  EXPECT_TRUE(st.finite());
}

TEST(Statevec, StructuredErrors) {
  RegisterLayout l(2, 0, 0);
  StateVector st(l);
  try {
    apply_gate(st, gates::x(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::QubitOutOfRange);
  }
  try {
    apply_gate(st, gates::x(1).ctrl(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OverlappingQubits);
  }
  RegisterLayout l3(3, 0, 0);
  StateVector s3(l3);
  try {
    apply_qft(s3, std::vector<int>{0, 2}, false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonContiguousRange);
  }
  try {
    RegisterLayout big(20, 5, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
  }
}

TEST(Statevec, ProjectPIndex) {
  RegisterLayout l(1, 1, 2);
  std::vector<cplx> a(l.dim(), 0.0);
  a[(1 << 3) | (1 << 2) | 2] = 2.0;  // sys 1, s 1, p 2
  StateVector st(l, a);
  const CVec v = project_p_index(st, 2);
  EXPECT_EQ(v.size(), 4);
  EXPECT_EQ(v[3], cplx(2.0));
  EXPECT_THROW(project_p_index(st, 4), Error);
}
