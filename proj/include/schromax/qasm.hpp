#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "circuit.hpp"

namespace schromax {

// Expansion of IR gates into the OpenQASM primitive set
//   h, x, p, rz, cx, cp, gphase
// Multi-controlled rotations use the ancilla-free Walsh expansion
//   prod_c |1><1|_c = 2^{-|C|} sum_{S subset C} (-1)^{|S|} Z_S,
// so a controlled Z-rotation becomes 2^{|C|} parity rotations.

namespace qasm_detail {

inline void parity_rz(std::vector<GateOp>& out, const std::vector<int>& qs, double a) {
  if (qs.empty()) {
    return;  // exp(-i a/2 * I) is a global phase, handled by caller
  }
  for (std::size_t i = 0; i + 1 < qs.size(); ++i) out.push_back(gates::cnot(qs[i], qs[i + 1]));
  out.push_back(gates::rz(qs.back(), a));
  for (std::size_t i = qs.size() - 1; i-- > 0;) out.push_back(gates::cnot(qs[i], qs[i + 1]));
}

/// exp(-i a/2 Z_T (x) prod_{c in C} |1><1|_c)
inline void controlled_parity_rz(std::vector<GateOp>& out, const std::vector<int>& T,
                                 const std::vector<int>& C, double a) {
  const std::size_t nc = C.size();
  const double w = a / static_cast<double>(pow2(static_cast<int>(nc)));
  for (std::uint64_t S = 0; S < pow2(static_cast<int>(nc)); ++S) {
    std::vector<int> qs = T;
    int par = 0;
    for (std::size_t b = 0; b < nc; ++b)
      if ((S >> b) & 1) {
        qs.push_back(C[b]);
        par ^= 1;
      }
    parity_rz(out, qs, par ? -w : w);
  }
}

/// exp(i phi prod_{q in Q} |1><1|_q)
inline void multi_phase(std::vector<GateOp>& out, const std::vector<int>& Q, double phi) {
  const std::size_t n = Q.size();
  const double w = phi / static_cast<double>(pow2(static_cast<int>(n)));
  out.push_back(gates::global_phase(w));
  for (std::uint64_t S = 1; S < pow2(static_cast<int>(n)); ++S) {
    std::vector<int> qs;
    int par = 0;
    for (std::size_t b = 0; b < n; ++b)
      if ((S >> b) & 1) {
        qs.push_back(Q[b]);
        par ^= 1;
      }
    // exp(i w (-1)^|S| Z_S) = rz_multi(-2 w (-1)^|S|)
    parity_rz(out, qs, par ? 2 * w : -2 * w);
  }
}

inline void std_qft(std::vector<GateOp>& out, const std::vector<int>& q) {
  const int n = static_cast<int>(q.size());
  for (int i = n - 1; i >= 0; --i) {
    out.push_back(gates::h(q[i]));
    for (int j = i - 1; j >= 0; --j) {
      GateOp cp = gates::p(q[i], kPi / static_cast<double>(pow2(i - j)));
      cp.ctrl(q[j], 1);
      out.push_back(cp);
    }
  }
  for (int i = 0; i < n / 2; ++i) {
    const int a = q[i], b = q[n - 1 - i];
    out.push_back(gates::cnot(a, b));
    out.push_back(gates::cnot(b, a));
    out.push_back(gates::cnot(a, b));
  }
}

inline std::vector<GateOp> inverse_seq(const std::vector<GateOp>& g) {
  std::vector<GateOp> r;
  for (auto it = g.rbegin(); it != g.rend(); ++it) r.push_back(adjoint(*it));
  return r;
}

}  // namespace qasm_detail

/// Expands one IR gate into primitives. Polarity-0 controls are X-conjugated.
inline std::vector<GateOp> expand_gate(const GateOp& g) {
  using namespace qasm_detail;
  std::vector<GateOp> out, flips;
  std::vector<int> C;
  for (auto& c : g.controls) {
    C.push_back(c.qubit);
    if (c.polarity == 0) flips.push_back(gates::x(c.qubit));
  }
  const bool ctl = !C.empty();
  out.insert(out.end(), flips.begin(), flips.end());
  const int t = g.targets.empty() ? -1 : g.targets[0];
  switch (g.kind) {
    case GateKind::GlobalPhase:
      if (ctl) throw Error(ErrorCode::Unexportable, "controlled global phase");
      out.push_back(g);
      break;
    case GateKind::H:
      if (ctl) throw Error(ErrorCode::Unexportable, "controlled h");
      out.push_back(g);
      break;
    case GateKind::QFT:
    case GateKind::IQFT: {
      if (ctl) throw Error(ErrorCode::Unexportable, "controlled qft");
      std::vector<GateOp> f;
      if (g.centered) f.push_back(gates::x(g.targets.back()));
      std_qft(f, g.targets);
      if (g.kind == GateKind::IQFT) f = inverse_seq(f);
      out.insert(out.end(), f.begin(), f.end());
      break;
    }
    case GateKind::CNOT:
    case GateKind::X:
      if (C.size() <= 1) {
        out.push_back(C.empty() ? gates::x(t) : gates::cnot(C[0], t));
      } else {
        // X = i RX(pi)
        out.push_back(gates::h(t));
        controlled_parity_rz(out, {t}, C, kPi);
        out.push_back(gates::h(t));
        multi_phase(out, C, kPi / 2);
      }
      break;
    case GateKind::P:
      if (!ctl) {
        out.push_back(g);
      } else if (C.size() == 1) {
        out.push_back(gates::p(t, g.angle).ctrl(C[0], 1));  // cp
      } else {
        auto Q = C;
        Q.push_back(t);
        multi_phase(out, Q, g.angle);
      }
      break;
    case GateKind::RZ:
      controlled_parity_rz(out, {t}, C, g.angle);
      break;
    case GateKind::RX:
      out.push_back(gates::h(t));
      controlled_parity_rz(out, {t}, C, g.angle);
      out.push_back(gates::h(t));
      break;
    case GateKind::RY:
      out.push_back(gates::p(t, -kPi / 2));
      out.push_back(gates::h(t));
      controlled_parity_rz(out, {t}, C, g.angle);
      out.push_back(gates::h(t));
      out.push_back(gates::p(t, kPi / 2));
      break;
    case GateKind::RZMulti:
      controlled_parity_rz(out, g.targets, C, g.angle);
      break;
  }
  out.insert(out.end(), flips.begin(), flips.end());
  return out;
}

inline std::vector<GateOp> expand_circuit(const Circuit& c) {
  std::vector<GateOp> out;
  for (auto& g : c.ops()) {
    auto e = expand_gate(g);
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

inline std::string qasm_number(double a) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

inline std::string export_qasm(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 3.0;\ninclude \"stdgates.inc\";\n";
  const auto& l = c.layout();
  os << "// p: q[" << l.p(0) << ".." << l.p(0) + l.n_p - 1 << "], s: q[" << l.s(0) << ".."
     << l.s(0) + l.n_s - 1 << "], system: q[" << l.sys(0) << ".." << l.sys(0) + l.n_sys - 1
     << "]\n";
  os << "qubit[" << l.total() << "] q;\n";
  auto q = [](int i) { return "q[" + std::to_string(i) + "]"; };
  std::size_t bi = 0;
  const auto& blocks = c.blocks();
  for (std::size_t i = 0; i < c.size(); ++i) {
    while (bi < blocks.size() && blocks[bi].end <= i) ++bi;
    if (bi < blocks.size() && blocks[bi].begin == i) os << "// " << blocks[bi].name << "\n";
    for (auto& g : expand_gate(c.ops()[i])) {
      switch (g.kind) {
        case GateKind::GlobalPhase: os << "gphase(" << qasm_number(g.angle) << ");\n"; break;
        case GateKind::H: os << "h " << q(g.targets[0]) << ";\n"; break;
        case GateKind::X: os << "x " << q(g.targets[0]) << ";\n"; break;
        case GateKind::CNOT:
          os << "cx " << q(g.controls[0].qubit) << ", " << q(g.targets[0]) << ";\n";
          break;
        case GateKind::P:
          if (g.controls.empty())
            os << "p(" << qasm_number(g.angle) << ") " << q(g.targets[0]) << ";\n";
          else
            os << "cp(" << qasm_number(g.angle) << ") " << q(g.controls[0].qubit) << ", "
               << q(g.targets[0]) << ";\n";
          break;
        case GateKind::RZ:
          os << "rz(" << qasm_number(g.angle) << ") " << q(g.targets[0]) << ";\n";
          break;
        default:
          throw Error(ErrorCode::Unexportable,
                      std::string("primitive expected, got ") + gate_name(g.kind));
      }
    }
  }
  return os.str();
}

/// Reads back the primitive subset written by export_qasm.
inline std::pair<int, std::vector<GateOp>> parse_qasm(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int nq = -1;
  std::vector<GateOp> ops;
  auto qubit = [](const std::string& s) {
    const auto a = s.find('['), b = s.find(']');
    if (a == std::string::npos || b == std::string::npos)
      throw Error(ErrorCode::Parse, "bad qubit reference '" + s + "'");
    return std::stoi(s.substr(a + 1, b - a - 1));
  };
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto cm = line.find("//");
    if (cm != std::string::npos) line = line.substr(0, cm);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r')) line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("OPENQASM", 0) == 0 || line.rfind("include", 0) == 0) continue;
    if (line.back() != ';') throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": missing ';'");
    line.pop_back();
    if (line.rfind("qubit[", 0) == 0) {
      nq = qubit(line);
      continue;
    }
    std::string head = line, args;
    double angle = 0.0;
    const auto sp = line.find(' ');
    const auto par = line.find('(');
    if (par != std::string::npos && (sp == std::string::npos || par < sp)) {
      const auto close = line.find(')');
      angle = std::stod(line.substr(par + 1, close - par - 1));
      head = line.substr(0, par);
      args = close + 1 < line.size() ? line.substr(close + 1) : "";
    } else {
      head = line.substr(0, sp);
      args = sp == std::string::npos ? "" : line.substr(sp + 1);
    }
    std::vector<int> qs;
    std::istringstream as(args);
    std::string tok;
    while (std::getline(as, tok, ',')) {
      if (tok.find_first_not_of(' ') == std::string::npos) continue;
      qs.push_back(qubit(tok));
    }
    auto need = [&](std::size_t n) {
      if (qs.size() != n)
        throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": '" + head +
                                          "' expects " + std::to_string(n) + " qubits");
    };
    if (head == "gphase") {
      need(0);
      ops.push_back(gates::global_phase(angle));
    } else if (head == "h") {
      need(1);
      ops.push_back(gates::h(qs[0]));
    } else if (head == "x") {
      need(1);
      ops.push_back(gates::x(qs[0]));
    } else if (head == "cx") {
      need(2);
      ops.push_back(gates::cnot(qs[0], qs[1]));
    } else if (head == "p") {
      need(1);
      ops.push_back(gates::p(qs[0], angle));
    } else if (head == "cp") {
      need(2);
      ops.push_back(gates::p(qs[1], angle).ctrl(qs[0], 1));
    } else if (head == "rz") {
      need(1);
      ops.push_back(gates::rz(qs[0], angle));
    } else {
      throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": unknown gate '" + head + "'");
    }
  }
  if (nq < 0) throw Error(ErrorCode::Parse, "missing qubit declaration");
  return {nq, ops};
}

}  // namespace schromax
