#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "pipeline.hpp"

namespace schromax {

/// Run configuration. Every field has a default matching the 1D test problem;
/// see README for the JSON layout.
struct RunConfig {
  Problem1D problem;
  double J_amplitude = kPi;  // J(t) = amplitude * cos(omega t)
  double J_omega = kPi;
  std::vector<int> ladder = {5, 6, 7};

  // emit-circuit
  int emit_d = 1;
  int emit_m = 2;
  int emit_n_s = 2;
  int emit_n_p = 2;
  double emit_tau = 0.05;
  bool emit_source = true;  // false: zero source, no V2 gates

  // compare-fdtd
  std::vector<int> fdtd_m = {4, 5, 6};
  double fdtd_cfl = 0.5;  // dt = cfl * dx

  void apply_source() {
    const double a = J_amplitude, w = J_omega;
    problem.J = [a, w](double t) { return a * std::cos(w * t); };
  }
};

namespace config_detail {

template <class E>
E enum_from(const nlohmann::json& j, const char* key,
            std::initializer_list<std::pair<const char*, E>> table, E dflt) {
  if (!j.contains(key)) return dflt;
  const std::string v = j.at(key).get<std::string>();
  for (auto& [name, e] : table)
    if (v == name) return e;
  throw Error(ErrorCode::Config, std::string("unknown value '") + v + "' for '" + key + "'");
}

template <class T>
void get_if(const nlohmann::json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace config_detail

inline RunConfig config_from_json(const nlohmann::json& j) {
  using namespace config_detail;
  static const char* known[] = {"grid", "source", "schrodingerization", "trotter",
                                "recovery", "reference", "ladder", "emit", "fdtd"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (auto* k : known) ok = ok || it.key() == k;
    if (!ok) throw Error(ErrorCode::Config, "unknown section '" + it.key() + "'");
  }
  RunConfig c;
  auto& p = c.problem;
  try {
    if (j.contains("grid")) {
      const auto& g = j["grid"];
      get_if(g, "m", p.m);
      get_if(g, "length", p.length);
      get_if(g, "T", p.T);
    }
    if (j.contains("source")) {
      get_if(j["source"], "amplitude", c.J_amplitude);
      get_if(j["source"], "omega", c.J_omega);
    }
    if (j.contains("schrodingerization")) {
      const auto& s = j["schrodingerization"];
      get_if(s, "S", p.S);
      get_if(s, "L", p.L);
      get_if(s, "n_s", p.n_s);
      get_if(s, "n_p", p.n_p);
      p.curl = enum_from(s, "curl_window",
                         {{"everywhere", CurlWindow::Everywhere},
                          {"source_nodes", CurlWindow::SourceNodes}},
                         p.curl);
      p.window = enum_from(s, "source_window",
                           {{"closed_open", SourceWindow::ClosedOpen},
                            {"open_closed", SourceWindow::OpenClosed}},
                           p.window);
    }
    if (j.contains("trotter")) {
      const auto& t = j["trotter"];
      p.integrator = enum_from(t, "integrator",
                               {{"exact", Integrator::Exact}, {"circuit", Integrator::Circuit}},
                               p.integrator);
      // the circuit carries the curl on every s-node
      const bool explicit_curl =
          j.contains("schrodingerization") && j["schrodingerization"].contains("curl_window");
      if (p.integrator == Integrator::Circuit && !explicit_curl) p.curl = CurlWindow::Everywhere;
      get_if(t, "order", p.trotter_order);
      get_if(t, "Nt", p.Nt);
    }
    if (j.contains("recovery")) {
      const auto& r = j["recovery"];
      p.recovery.mode = enum_from(r, "mode",
                                  {{"point", RecoveryMode::Point},
                                   {"integral", RecoveryMode::Integral}},
                                  p.recovery.mode);
      p.recovery.rule = enum_from(
          r, "rule", {{"fixed", KRule::Fixed}, {"half_T", KRule::HalfT}, {"full_T", KRule::FullT}},
          p.recovery.rule);
      get_if(r, "threshold", p.recovery.threshold);
    }
    p.reference = enum_from(j, "reference",
                            {{"semi_discrete", Reference::SemiDiscrete},
                             {"continuum", Reference::Continuum}},
                            p.reference);
    if (j.contains("ladder")) get_if(j["ladder"], "k", c.ladder);
    if (j.contains("emit")) {
      const auto& e = j["emit"];
      get_if(e, "d", c.emit_d);
      get_if(e, "m", c.emit_m);
      get_if(e, "n_s", c.emit_n_s);
      get_if(e, "n_p", c.emit_n_p);
      get_if(e, "tau", c.emit_tau);
      get_if(e, "source", c.emit_source);
    }
    if (j.contains("fdtd")) {
      get_if(j["fdtd"], "m", c.fdtd_m);
      get_if(j["fdtd"], "cfl", c.fdtd_cfl);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Config, e.what());
  }
  if (p.trotter_order != 1 && p.trotter_order != 2)
    throw Error(ErrorCode::Config, "trotter.order must be 1 or 2");
  if (p.Nt < 1) throw Error(ErrorCode::Config, "trotter.Nt must be positive");
  if (c.ladder.empty()) throw Error(ErrorCode::Config, "ladder.k must not be empty");
  c.problem.T = p.T;
  c.problem.recovery.T = p.T;
  c.apply_source();
  return c;
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Config, "cannot open config '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
  return config_from_json(j);
}

}  // namespace schromax
