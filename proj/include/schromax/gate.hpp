#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"

namespace schromax {

enum class GateKind { X, H, P, RX, RY, RZ, RZMulti, CNOT, QFT, IQFT, GlobalPhase };

inline const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::X: return "x";
    case GateKind::H: return "h";
    case GateKind::P: return "p";
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::RZMulti: return "rz_multi";
    case GateKind::CNOT: return "cnot";
    case GateKind::QFT: return "qft";
    case GateKind::IQFT: return "iqft";
    case GateKind::GlobalPhase: return "global_phase";
  }
  return "?";
}

struct Control {
  int qubit = 0;
  int polarity = 1;
  bool operator==(const Control&) const = default;
};

/// One gate of the IR. Qubit indices are 0-based bit positions, bit 0 being
/// the least significant bit of the basis index.
///
/// QFT / IQFT act on the contiguous range targets[0] .. targets.back().
/// With `centered` set the forward transform is
///   F[j,l] = exp(2 pi i j (l - N/2) / N) / sqrt(N),
/// which equals the standard QFT preceded by X on the top qubit of the range.
struct GateOp {
  GateKind kind = GateKind::X;
  std::vector<int> targets;
  std::vector<Control> controls;
  double angle = 0.0;
  bool centered = true;

  GateOp& ctrl(int q, int polarity = 1) {
    controls.push_back({q, polarity});
    return *this;
  }
  GateOp with_controls(const std::vector<Control>& cs) const {
    GateOp g = *this;
    g.controls.insert(g.controls.end(), cs.begin(), cs.end());
    return g;
  }
};

namespace gates {

inline GateOp single(GateKind k, int q, double a = 0.0) {
  GateOp g;
  g.kind = k;
  g.targets = {q};
  g.angle = a;
  return g;
}
inline GateOp x(int q) { return single(GateKind::X, q); }
inline GateOp h(int q) { return single(GateKind::H, q); }
inline GateOp p(int q, double a) { return single(GateKind::P, q, a); }
inline GateOp rx(int q, double a) { return single(GateKind::RX, q, a); }
inline GateOp ry(int q, double a) { return single(GateKind::RY, q, a); }
inline GateOp rz(int q, double a) { return single(GateKind::RZ, q, a); }
inline GateOp cnot(int c, int t) {
  GateOp g = single(GateKind::CNOT, t);
  g.controls = {{c, 1}};
  return g;
}
// exp(-i a/2 Z (x) ... (x) Z) on the listed targets
inline GateOp rz_multi(std::vector<int> ts, double a) {
  GateOp g;
  g.kind = GateKind::RZMulti;
  g.targets = std::move(ts);
  g.angle = a;
  return g;
}
inline GateOp qft(int lo, int n, bool inverse = false, bool centered = true) {
  GateOp g;
  g.kind = inverse ? GateKind::IQFT : GateKind::QFT;
  for (int i = 0; i < n; ++i) g.targets.push_back(lo + i);
  g.centered = centered;
  return g;
}
inline GateOp global_phase(double a) {
  GateOp g;
  g.kind = GateKind::GlobalPhase;
  g.angle = a;
  return g;
}

}  // namespace gates

inline bool is_single_target(GateKind k) {
  return k == GateKind::X || k == GateKind::H || k == GateKind::P || k == GateKind::RX ||
         k == GateKind::RY || k == GateKind::RZ || k == GateKind::CNOT;
}

/// 2x2 matrix of a single-target gate (controls excluded). Row-major a00 a01 a10 a11.
inline std::array<cplx, 4> gate_matrix(const GateOp& g) {
  const double t = g.angle;
  const double c = std::cos(t / 2), s = std::sin(t / 2);
  const double r = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case GateKind::X:
    case GateKind::CNOT: return {0, 1, 1, 0};
    case GateKind::H: return {r, r, r, -r};
    case GateKind::P: return {1, 0, 0, std::exp(I1 * t)};
    case GateKind::RX: return {c, -I1 * s, -I1 * s, c};
    case GateKind::RY: return {c, -s, s, c};
    case GateKind::RZ: return {std::exp(-I1 * (t / 2)), 0, 0, std::exp(I1 * (t / 2))};
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument, std::string("no 2x2 matrix for ") + gate_name(g.kind));
}

/// Inverse of a gate (used to undo basis changes and for IQFT/QFT pairs).
inline GateOp adjoint(const GateOp& g) {
  GateOp a = g;
  switch (g.kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::CNOT: break;
    case GateKind::QFT: a.kind = GateKind::IQFT; break;
    case GateKind::IQFT: a.kind = GateKind::QFT; break;
    default: a.angle = -g.angle; break;
  }
  return a;
}

/// Checks indices against a register of `nq` qubits.
inline void validate_gate(const GateOp& g, int nq) {
  auto in_range = [&](int q) { return q >= 0 && q < nq; };
  if (g.kind == GateKind::GlobalPhase) {
    if (!g.targets.empty() || !g.controls.empty())
      throw Error(ErrorCode::InvalidArgument, "global_phase takes no qubits or controls");
    return;
  }
  if (g.targets.empty()) throw Error(ErrorCode::InvalidArgument, "gate without targets");
  if (is_single_target(g.kind) && g.targets.size() != 1)
    throw Error(ErrorCode::InvalidArgument, std::string(gate_name(g.kind)) + " takes one target");
  if (g.kind == GateKind::CNOT && g.controls.size() != 1)
    throw Error(ErrorCode::InvalidArgument, "cnot takes exactly one control");
  std::vector<int> all = g.targets;
  for (auto& c : g.controls) {
    if (c.polarity != 0 && c.polarity != 1)
      throw Error(ErrorCode::InvalidArgument, "control polarity must be 0 or 1");
    all.push_back(c.qubit);
  }
  for (int q : all)
    if (!in_range(q))
      throw Error(ErrorCode::QubitOutOfRange,
                  "qubit " + std::to_string(q) + " outside register of " + std::to_string(nq));
  std::vector<int> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::OverlappingQubits, std::string(gate_name(g.kind)) +
                                                  ": target/control qubits overlap");
  if (g.kind == GateKind::QFT || g.kind == GateKind::IQFT) {
    for (std::size_t i = 1; i < g.targets.size(); ++i)
      if (g.targets[i] != g.targets[0] + static_cast<int>(i))
        throw Error(ErrorCode::NonContiguousRange, "qft range must be contiguous and ascending");
    if (!g.controls.empty())
      throw Error(ErrorCode::InvalidArgument, "controlled qft is not supported");
  }
}

}  // namespace schromax
