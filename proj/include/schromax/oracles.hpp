#pragma once

// Reference computations. Nothing here shares code with the statevector gate
// kernels or with circuit synthesis.

#include <cmath>
#include <functional>
#include <vector>

#include <boost/numeric/odeint.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include "circuit.hpp"
#include "error.hpp"
#include "linalg.hpp"

namespace schromax::oracle {

inline constexpr Eigen::Index kDenseCap = 1 << 12;

/// exp(t * m) by scaling and squaring with Pade approximation.
inline CMat expm_dense(const CMat& m, cplx t = 1.0, Eigen::Index cap = kDenseCap) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "expm of non-square matrix");
  if (m.rows() > cap)
    throw Error(ErrorCode::CapExceeded, "expm_dense dimension " + std::to_string(m.rows()) +
                                            " > cap " + std::to_string(cap));
  CMat a = t * m;
  return a.exp();
}

/// exp(-i H t) for a fixed Hermitian H through one eigendecomposition; cheap to
/// evaluate at many t.
class HermitianPropagator {
 public:
  explicit HermitianPropagator(const CMat& H, Eigen::Index cap = kDenseCap) {
    if (H.rows() > cap)
      throw Error(ErrorCode::CapExceeded, "eigendecomposition dimension " +
                                              std::to_string(H.rows()) + " > cap");
    Eigen::SelfAdjointEigenSolver<CMat> es(H);
    V_ = es.eigenvectors();
    w_ = es.eigenvalues();
  }
  CMat operator()(double t) const {
    CVec ph(w_.size());
    for (Eigen::Index i = 0; i < w_.size(); ++i) ph[i] = std::exp(-I1 * (w_[i] * t));
    return V_ * ph.asDiagonal() * V_.adjoint();
  }
  const RVec& eigenvalues() const { return w_; }

 private:
  CMat V_;
  RVec w_;
};

// ---------------------------------------------------------------- circuits

namespace naive {

inline bool controls_ok(std::uint64_t i, const GateOp& g) {
  for (auto& c : g.controls)
    if (((i >> c.qubit) & 1u) != static_cast<std::uint64_t>(c.polarity)) return false;
  return true;
}

// Column-wise application on an n-qubit dense matrix (each column a state).
inline void apply(CMat& u, int nq, const GateOp& g) {
  const Eigen::Index dim = u.rows();
  if (g.kind == GateKind::GlobalPhase) {
    u *= std::exp(I1 * g.angle);
    return;
  }
  if (g.kind == GateKind::RZMulti) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (!controls_ok(i, g)) continue;
      int par = 0;
      for (int q : g.targets) par ^= static_cast<int>((i >> q) & 1);
      u.row(i) *= std::exp(I1 * (par ? g.angle / 2 : -g.angle / 2));
    }
    return;
  }
  if (g.kind == GateKind::QFT || g.kind == GateKind::IQFT) {
    const int lo = g.targets.front();
    const int q = static_cast<int>(g.targets.size());
    const std::uint64_t N = pow2(q);
    CMat f(N, N);
    for (std::uint64_t j = 0; j < N; ++j)
      for (std::uint64_t l = 0; l < N; ++l) {
        const double shift = g.centered ? static_cast<double>(N) / 2 : 0.0;
        f(j, l) = std::exp(I1 * (2 * kPi * j * (l - shift) / N)) / std::sqrt(double(N));
      }
    if (g.kind == GateKind::IQFT) f = f.adjoint().eval();
    CMat out = CMat::Zero(dim, u.cols());
    const std::uint64_t mask = (N - 1) << lo;
    for (Eigen::Index i = 0; i < dim; ++i) {
      const std::uint64_t j = (i & mask) >> lo;
      const std::uint64_t rest = i & ~mask;
      for (std::uint64_t l = 0; l < N; ++l) out.row(i) += f(j, l) * u.row(rest | (l << lo));
    }
    u = out;
    return;
  }
  const auto m = gate_matrix(g);
  const int t = g.targets[0];
  CMat out = u;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (!controls_ok(i, g)) continue;
    const int b = static_cast<int>((i >> t) & 1);
    const Eigen::Index i0 = i & ~(Eigen::Index{1} << t), i1 = i0 | (Eigen::Index{1} << t);
    out.row(i) = m[2 * b] * u.row(i0) + m[2 * b + 1] * u.row(i1);
  }
  u = out;
  (void)nq;
}

}  // namespace naive

/// Dense unitary of a gate list on nq qubits, global phase included.
inline CMat gates_to_unitary(const std::vector<GateOp>& ops, int nq, int cap_qubits = 12) {
  if (nq > cap_qubits)
    throw Error(ErrorCode::CapExceeded, "circuit_to_unitary limited to " +
                                            std::to_string(cap_qubits) + " qubits");
  CMat u = CMat::Identity(pow2(nq), pow2(nq));
  for (auto& g : ops) naive::apply(u, nq, g);
  return u;
}

inline CMat circuit_to_unitary(const Circuit& c, int cap_qubits = 12) {
  return gates_to_unitary(c.ops(), c.layout().total(), cap_qubits);
}

// ---------------------------------------------------------------- ODEs

using ComplexState = std::vector<cplx>;
using Rhs = std::function<void(const CVec& u, CVec& du, double t)>;

struct OdeResult {
  CVec u;
  std::size_t steps = 0;
};

/// Adaptive Dormand-Prince 5(4) integration of du/dt = rhs(u, t).
inline OdeResult integrate_ode(const Rhs& rhs, const CVec& u0, double T, double tol = 1e-10) {
  namespace ode = boost::numeric::odeint;
  if (tol < 1e-14) throw Error(ErrorCode::InvalidArgument, "tolerance below 1e-14");
  const Eigen::Index n = u0.size();
  ComplexState x(u0.data(), u0.data() + n);
  if (T == 0.0) return {u0, 0};
  CVec ui(n), dui(n);
  auto sys = [&](const ComplexState& xs, ComplexState& dx, double t) {
    for (Eigen::Index i = 0; i < n; ++i) ui[i] = xs[i];
    rhs(ui, dui, t);
    dx.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) dx[i] = dui[i];
  };
  auto stepper = ode::make_controlled(tol, tol, ode::runge_kutta_dopri5<ComplexState>());
  std::size_t steps = 0;
  try {
    steps = ode::integrate_adaptive(stepper, sys, x, 0.0, T, T / 64);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::StepUnderflow, e.what());
  }
  OdeResult r;
  r.u = Eigen::Map<CVec>(x.data(), n);
  r.steps = steps;
  return r;
}

/// Linear system du/dt = A u + f(t).
inline OdeResult integrate_linear(const SpMat& A, const std::function<CVec(double)>& f,
                                  const CVec& u0, double T, double tol = 1e-10) {
  return integrate_ode(
      [&](const CVec& u, CVec& du, double t) {
        du = A * u;
        if (f) du += f(t);
      },
      u0, T, tol);
}

// ---------------------------------------------------------------- interpolation

/// L2 error of the trigonometric interpolant of `f` sampled on the periodic grid
/// x_j = a + j h (j < N, h = (b - a)/N), measured at the cell midpoints.
inline double interp_error(const std::function<double(double)>& f, double a, double b,
                           std::size_t N) {
  const double h = (b - a) / N;
  std::vector<cplx> c(N);
  // c_k for k in [-N/2, N/2), direct DFT
  for (std::size_t kk = 0; kk < N; ++kk) {
    const double k = static_cast<double>(kk) - static_cast<double>(N) / 2;
    cplx s = 0;
    for (std::size_t j = 0; j < N; ++j)
      s += f(a + j * h) * std::exp(-I1 * (2 * kPi * k * j / N));
    c[kk] = s / double(N);
  }
  double err2 = 0;
  for (std::size_t j = 0; j < N; ++j) {
    const double x = a + (j + 0.5) * h;
    cplx v = 0;
    for (std::size_t kk = 0; kk < N; ++kk) {
      const double k = static_cast<double>(kk) - static_cast<double>(N) / 2;
      double w = 1.0;
      if (kk == 0) w = 0.5;  // split the Nyquist mode symmetrically
      v += w * c[kk] * std::exp(I1 * (2 * kPi * k * (x - a) / (b - a)));
      if (kk == 0) v += w * c[kk] * std::exp(-I1 * (2 * kPi * k * (x - a) / (b - a)));
    }
    err2 += std::norm(v - f(x));
  }
  return std::sqrt(err2 * h);
}

}  // namespace schromax::oracle
