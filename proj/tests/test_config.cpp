#include <gtest/gtest.h>

#include <schromax/config.hpp>

using namespace schromax;
using nlohmann::json;

TEST(Config, DefaultsFromEmptyObject) {
  const RunConfig c = config_from_json(json::object());
  EXPECT_EQ(c.problem.m, 5);
  EXPECT_EQ(c.ladder, (std::vector<int>{5, 6, 7}));
  EXPECT_EQ(c.problem.curl, CurlWindow::SourceNodes);
  EXPECT_NEAR(c.problem.J(0.0), kPi, 1e-15);
}

TEST(Config, FieldsParsed) {
  const json j = json::parse(R"({
    "grid": {"m": 4, "T": 0.25},
    "source": {"amplitude": 2.0, "omega": 1.0},
    "schrodingerization": {"n_s": 6, "n_p": 7, "curl_window": "everywhere"},
    "trotter": {"order": 2, "Nt": 10},
    "recovery": {"mode": "integral", "rule": "full_T"},
    "reference": "continuum",
    "ladder": {"k": [5]},
    "emit": {"d": 3, "m": 1, "source": false},
    "fdtd": {"m": [3], "cfl": 0.25}
  })");
  const RunConfig c = config_from_json(j);
  EXPECT_EQ(c.problem.m, 4);
  EXPECT_DOUBLE_EQ(c.problem.recovery.T, 0.25);
  EXPECT_EQ(c.problem.n_p, 7);
  EXPECT_EQ(c.problem.trotter_order, 2);
  EXPECT_EQ(c.problem.recovery.mode, RecoveryMode::Integral);
  EXPECT_EQ(c.problem.recovery.rule, KRule::FullT);
  EXPECT_EQ(c.problem.reference, Reference::Continuum);
  EXPECT_FALSE(c.emit_source);
  EXPECT_EQ(c.emit_d, 3);
  EXPECT_DOUBLE_EQ(c.fdtd_cfl, 0.25);
  EXPECT_NEAR(c.problem.J(1.0), 2.0 * std::cos(1.0), 1e-15);
}

TEST(Config, CircuitIntegratorDefaultsToFullCurl) {
  RunConfig c = config_from_json(json::parse(R"({"trotter": {"integrator": "circuit"}})"));
  EXPECT_EQ(c.problem.curl, CurlWindow::Everywhere);
  c = config_from_json(json::parse(
      R"({"trotter": {"integrator": "circuit"}, "schrodingerization": {"curl_window": "source_nodes"}})"));
  EXPECT_EQ(c.problem.curl, CurlWindow::SourceNodes);
}

TEST(Config, Errors) {
  auto code = [](const json& j) {
    try {
      config_from_json(j);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code(json::parse(R"({"bogus": {}})")), ErrorCode::Config);
  EXPECT_EQ(code(json::parse(R"({"trotter": {"order": 3}})")), ErrorCode::Config);
  EXPECT_EQ(code(json::parse(R"({"grid": {"m": "five"}})")), ErrorCode::Config);
  EXPECT_EQ(code(json::parse(R"({"recovery": {"rule": "sometimes"}})")), ErrorCode::Config);
  try {
    load_config("/nonexistent/config.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Config);
  }
}
