#include <gtest/gtest.h>

#include <schromax/circuit.hpp>
#include <schromax/oracles.hpp>
#include <schromax/qasm.hpp>

#include "test_util.hpp"

using namespace schromax;

namespace {

Circuit sample_circuit() {
  Circuit c(RegisterLayout(2, 1, 2));
  c.add_block("a", {gates::h(0), gates::rx(1, 0.3).ctrl(4, 0), gates::cnot(0, 3)});
  c.add_block("b", {gates::rz_multi({1, 2, 4}, -0.4).ctrl(0, 1), gates::qft(2, 3, true),
                    gates::p(3, 1.7).ctrl(0, 0).ctrl(1, 1), gates::ry(4, 0.25),
                    gates::qft(2, 3, false)});
  c.add(gates::global_phase(0.1));
  return c;
}

}  // namespace

TEST(Circuit, InverseUndoes) {
  const Circuit c = sample_circuit();
  StateVector st = testutil::random_state(c.layout(), 4);
  const CVec v0 = st.physical();
  run(st, c);
  run(st, c.inverse());
  EXPECT_LT((st.physical() - v0).norm(), 1e-13);
}

TEST(Circuit, JsonRoundTrip) {
  const Circuit c = sample_circuit();
  const nlohmann::json j = to_json(c);
  const Circuit back = circuit_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(to_json(back), j);
  EXPECT_EQ(back.blocks().size(), c.blocks().size());
  EXPECT_LT((oracle::circuit_to_unitary(back) - oracle::circuit_to_unitary(c)).norm(), 1e-15);
}

TEST(Circuit, JsonRejectsUnknownGate) {
  nlohmann::json j = to_json(gates::h(0));
  j["kind"] = "toffoli";
  EXPECT_THROW(gate_from_json(j), Error);
}

TEST(Circuit, QasmRoundTripSameUnitary) {
  const Circuit c = sample_circuit();
  const std::string text = export_qasm(c);
  EXPECT_NE(text.find("OPENQASM"), std::string::npos);
  const auto [nq, ops] = parse_qasm(text);
  EXPECT_EQ(nq, c.layout().total());
  const CMat a = oracle::circuit_to_unitary(c);
  const CMat b = oracle::gates_to_unitary(ops, nq);
  // qasm drops the global phase
  const cplx ph = (a.array() * b.conjugate().array()).sum() / double(a.rows());
  EXPECT_NEAR(std::abs(ph), 1.0, 1e-10);
  EXPECT_LT((a - ph * b).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Circuit, QasmParseErrors) {
  try {
    parse_qasm("OPENQASM 2.0;\nqreg q[2];\nfoo q[0];\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
  }
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[2];\nh q[0]\n"), Error);
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\n"), Error);
}

TEST(Circuit, ValidateCatchesBadOp) {
  Circuit c(RegisterLayout(2, 0, 0));
  EXPECT_THROW(c.add(gates::x(3)), Error);
}

TEST(Counts, ElementaryCosts) {
  EXPECT_EQ(count_op(gates::h(0)), (GateCount{1, 0}));
  EXPECT_EQ(count_op(gates::cnot(0, 1)), (GateCount{0, 1}));
  EXPECT_EQ(mc_rotation_cost(0), 0);
  EXPECT_EQ(mc_rotation_cost(1), 1);
  EXPECT_EQ(mc_rotation_cost(3), 24);
  EXPECT_EQ(count_op(gates::rx(0, 0.1).ctrl(1).ctrl(2).ctrl(3)).n_cnot_equiv, 24);
}

TEST(Counts, BlocksSumToTotal) {
  const GateCountReport r = count_gates(sample_circuit());
  long long s = 0, c = 0;
  for (auto& [n, g] : r.blocks) {
    s += g.n_single;
    c += g.n_cnot_equiv;
  }
  EXPECT_EQ(s, r.n_single);
  EXPECT_EQ(c, r.n_cnot_equiv);
}

TEST(Oracles, ExpmDenseAgainstEigen) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> n01;
  CMat h(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) h(i, j) = {n01(rng), n01(rng)};
  h = (h + h.adjoint()).eval();
  const oracle::HermitianPropagator U(h);
  EXPECT_LT((oracle::expm_dense(h, -I1 * 0.7) - U(0.7)).norm(), 1e-12);
  EXPECT_THROW(oracle::expm_dense(CMat::Identity(8, 8), 1.0, 4), Error);
}

TEST(Oracles, OdeMatchesClosedForm) {
  // u' = i w u
  const double w = 2.5;
  auto rhs = [&](const CVec& u, CVec& du, double) { du = I1 * w * u; };
  CVec u0(1);
  u0[0] = 1.0;
  const auto r = oracle::integrate_ode(rhs, u0, 3.0, 1e-11);
  EXPECT_LT(std::abs(r.u[0] - std::exp(I1 * w * 3.0)), 1e-8);
  EXPECT_THROW(oracle::integrate_ode(rhs, u0, 1.0, 1e-16), Error);
}

TEST(Oracles, InterpolationErrorSmallForSmooth) {
  // periodic and band-limited: exact up to rounding
  EXPECT_LT(oracle::interp_error([](double x) { return std::sin(2 * kPi * x) + 0.3 * std::cos(6 * kPi * x); },
                                 0.0, 1.0, 16),
            1e-12);
  EXPECT_GT(oracle::interp_error([](double x) { return x * x; }, 0.0, 1.0, 16), 1e-3);
}
