#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "error.hpp"
#include "gate.hpp"
#include "linalg.hpp"

namespace schromax {

/// Register split: p occupies bits [0, n_p), s occupies [n_p, n_p + n_s),
/// the system register the remaining high bits. Bit 0 is the bottom wire.
struct RegisterLayout {
  int n_sys = 0;
  int n_s = 0;
  int n_p = 0;
  int cap = 26;

  RegisterLayout() = default;
  RegisterLayout(int sys, int s, int p, int cap_ = 26) : n_sys(sys), n_s(s), n_p(p), cap(cap_) {
    validate();
  }

  int total() const { return n_sys + n_s + n_p; }
  int p_offset() const { return 0; }
  int s_offset() const { return n_p; }
  int sys_offset() const { return n_p + n_s; }
  std::uint64_t dim() const { return pow2(total()); }
  std::uint64_t sys_dim() const { return pow2(n_sys); }
  std::uint64_t Ns() const { return pow2(n_s); }
  std::uint64_t Np() const { return pow2(n_p); }
  // qubit index of bit b of the system register
  int sys(int b) const { return sys_offset() + b; }
  int s(int b) const { return s_offset() + b; }
  int p(int b) const { return b; }

  void validate() const {
    if (n_sys < 0 || n_s < 0 || n_p < 0)
      throw Error(ErrorCode::InvalidArgument, "negative register size");
    if (total() > cap)
      throw Error(ErrorCode::CapExceeded, "register of " + std::to_string(total()) +
                                              " qubits exceeds cap " + std::to_string(cap));
  }
  bool operator==(const RegisterLayout& o) const {
    return n_sys == o.n_sys && n_s == o.n_s && n_p == o.n_p;
  }
};

class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(const RegisterLayout& l) : layout_(l), amp_(l.dim(), cplx(0)) {
    amp_[0] = 1.0;
  }
  StateVector(const RegisterLayout& l, std::vector<cplx> a) : layout_(l), amp_(std::move(a)) {
    if (amp_.size() != l.dim())
      throw Error(ErrorCode::InvalidArgument, "amplitude count does not match layout");
  }

  const RegisterLayout& layout() const { return layout_; }
  int num_qubits() const { return layout_.total(); }
  std::size_t size() const { return amp_.size(); }
  std::vector<cplx>& amplitudes() { return amp_; }
  const std::vector<cplx>& amplitudes() const { return amp_; }
  cplx& operator[](std::size_t i) { return amp_[i]; }
  const cplx& operator[](std::size_t i) const { return amp_[i]; }
  cplx global_phase() const { return phase_; }
  void set_global_phase(cplx g) { phase_ = g; }
  void mul_global_phase(cplx g) { phase_ *= g; }

  double norm() const {
    double s = 0;
    for (auto& a : amp_) s += std::norm(a);
    return std::sqrt(s);
  }
  bool finite() const {
    for (auto& a : amp_)
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) return false;
    return true;
  }
  // Amplitudes with the tracked global phase folded in.
  CVec physical() const {
    CVec v(amp_.size());
    for (std::size_t i = 0; i < amp_.size(); ++i) v[i] = phase_ * amp_[i];
    return v;
  }

 private:
  RegisterLayout layout_;
  std::vector<cplx> amp_;
  cplx phase_{1.0, 0.0};
};

namespace detail {

// Insert zero bits at the ascending positions `fixed` into k.
inline std::uint64_t deposit(std::uint64_t k, const std::vector<int>& fixed) {
  for (int f : fixed) {
    const std::uint64_t low = k & ((std::uint64_t{1} << f) - 1);
    k = ((k >> f) << (f + 1)) | low;
  }
  return k;
}

struct Mask {
  std::vector<int> fixed;  // sorted bit positions pinned by controls (and targets)
  std::uint64_t value = 0; // pinned values of controls
};

inline Mask make_mask(const GateOp& g, const std::vector<int>& extra_fixed) {
  Mask m;
  for (auto& c : g.controls) {
    m.fixed.push_back(c.qubit);
    if (c.polarity) m.value |= std::uint64_t{1} << c.qubit;
  }
  for (int q : extra_fixed) m.fixed.push_back(q);
  std::sort(m.fixed.begin(), m.fixed.end());
  return m;
}

inline void apply_2x2(std::vector<cplx>& a, int nq, const GateOp& g) {
  const auto u = gate_matrix(g);
  const int t = g.targets[0];
  const Mask m = make_mask(g, {t});
  const std::uint64_t bit = std::uint64_t{1} << t;
  const std::uint64_t count = pow2(nq - static_cast<int>(m.fixed.size()));
  const bool is_x = g.kind == GateKind::X || g.kind == GateKind::CNOT;
  const bool diag = g.kind == GateKind::P || g.kind == GateKind::RZ;
  for (std::uint64_t k = 0; k < count; ++k) {
    const std::uint64_t i0 = deposit(k, m.fixed) | m.value;
    const std::uint64_t i1 = i0 | bit;
    if (is_x) {
      std::swap(a[i0], a[i1]);
    } else if (diag) {
      a[i0] *= u[0];
      a[i1] *= u[3];
    } else {
      const cplx x0 = a[i0], x1 = a[i1];
      a[i0] = u[0] * x0 + u[1] * x1;
      a[i1] = u[2] * x0 + u[3] * x1;
    }
  }
}

inline void apply_rz_multi(std::vector<cplx>& a, int nq, const GateOp& g) {
  const Mask m = make_mask(g, {});
  std::uint64_t tmask = 0;
  for (int q : g.targets) tmask |= std::uint64_t{1} << q;
  const cplx ph[2] = {std::exp(-I1 * (g.angle / 2)), std::exp(I1 * (g.angle / 2))};
  const std::uint64_t count = pow2(nq - static_cast<int>(m.fixed.size()));
  for (std::uint64_t k = 0; k < count; ++k) {
    const std::uint64_t i = deposit(k, m.fixed) | m.value;
    a[i] *= ph[std::popcount(i & tmask) & 1];
  }
}

// Transform every fiber of the contiguous bit range [lo, lo+q).
inline void apply_dft(std::vector<cplx>& a, int nq, int lo, int q, bool inverse, bool centered) {
  const std::uint64_t N = pow2(q);
  const std::uint64_t stride = pow2(lo);
  const std::uint64_t outer = pow2(nq - lo - q);
  const double scale = std::sqrt(static_cast<double>(N));
  Eigen::FFT<double> fft;
  std::vector<cplx> in(N), out(N);
  for (std::uint64_t o = 0; o < outer; ++o)
    for (std::uint64_t r = 0; r < stride; ++r) {
      const std::uint64_t base = o * N * stride + r;
      for (std::uint64_t j = 0; j < N; ++j) in[j] = a[base + j * stride];
      if (!inverse) {
        // y_j = sum_l e^{2 pi i j l / N} x_{l'} / sqrt(N), with l' = l xor N/2 when centered
        if (centered && N > 1)
          for (std::uint64_t j = 0; j < N / 2; ++j) std::swap(in[j], in[j + N / 2]);
        fft.inv(out, in);
        for (std::uint64_t j = 0; j < N; ++j) a[base + j * stride] = out[j] * scale;
      } else {
        fft.fwd(out, in);
        for (std::uint64_t j = 0; j < N; ++j) out[j] /= scale;
        if (centered && N > 1)
          for (std::uint64_t j = 0; j < N / 2; ++j) std::swap(out[j], out[j + N / 2]);
        for (std::uint64_t j = 0; j < N; ++j) a[base + j * stride] = out[j];
      }
    }
}

}  // namespace detail

/// Applies `g` in place.
inline void apply_gate(StateVector& st, const GateOp& g) {
  const int nq = st.num_qubits();
  validate_gate(g, nq);
  auto& a = st.amplitudes();
  switch (g.kind) {
    case GateKind::GlobalPhase: st.mul_global_phase(std::exp(I1 * g.angle)); return;
    case GateKind::RZMulti: detail::apply_rz_multi(a, nq, g); return;
    case GateKind::QFT:
    case GateKind::IQFT:
      detail::apply_dft(a, nq, g.targets.front(), static_cast<int>(g.targets.size()),
                        g.kind == GateKind::IQFT, g.centered);
      return;
    default: detail::apply_2x2(a, nq, g); return;
  }
}

inline void apply_gates(StateVector& st, const std::vector<GateOp>& ops) {
  for (auto& g : ops) apply_gate(st, g);
}

/// QFT on the contiguous range [lo, lo+n).
inline void apply_qft(StateVector& st, int lo, int n, bool inverse, bool centered = true) {
  apply_gate(st, gates::qft(lo, n, inverse, centered));
}

/// Range variant used by tests: throws NonContiguousRange for gaps.
inline void apply_qft(StateVector& st, const std::vector<int>& range, bool inverse,
                      bool centered = true) {
  GateOp g;
  g.kind = inverse ? GateKind::IQFT : GateKind::QFT;
  g.targets = range;
  g.centered = centered;
  apply_gate(st, g);
}

/// Un-normalized slice with p-register value k, indexed as sys * N_s + s.
inline CVec project_p_index(const StateVector& st, std::uint64_t k) {
  const auto& l = st.layout();
  if (k >= l.Np())
    throw Error(ErrorCode::IndexOutOfRange,
                "p index " + std::to_string(k) + " >= N_p = " + std::to_string(l.Np()));
  const std::uint64_t rest = pow2(l.n_sys + l.n_s);
  CVec out(rest);
  const cplx g = st.global_phase();
  for (std::uint64_t r = 0; r < rest; ++r) out[r] = g * st[(r << l.n_p) | k];
  return out;
}

}  // namespace schromax
