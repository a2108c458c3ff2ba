#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "error.hpp"
#include "grids.hpp"
#include "kernels.hpp"
#include "linalg.hpp"
#include "maxwell.hpp"
#include "oracles.hpp"
#include "statevec.hpp"

namespace schromax {

// ---------------------------------------------------------------- stretching

struct StretchedSystem {
  SpMat A;      // n x n
  RVec F;       // diagonal of F, length n
  double c0 = 1.0;
  SpMat Atilde; // [[A, F], [0, 0]]
  SpMat H1, H2; // Atilde = H1 + i H2
  CVec uf0;     // [u0 ; c0 ones]
};

inline SpMat stretch_matrix(const SpMat& A, const RVec& F) {
  const Eigen::Index n = A.rows();
  std::vector<Triplet> t;
  add_block(t, A, 0, 0);
  for (Eigen::Index i = 0; i < n; ++i)
    if (F[i] != 0.0) t.emplace_back(i, n + i, F[i]);
  SpMat At(2 * n, 2 * n);
  At.setFromTriplets(t.begin(), t.end());
  return At;
}

/// H1 = 1/2 X (x) F, the Hermitian part of the stretched matrix.
inline SpMat h1_of(const RVec& F) {
  const Eigen::Index n = F.size();
  std::vector<Triplet> t;
  for (Eigen::Index i = 0; i < n; ++i)
    if (F[i] != 0.0) {
      t.emplace_back(i, n + i, 0.5 * F[i]);
      t.emplace_back(n + i, i, 0.5 * F[i]);
    }
  SpMat h(2 * n, 2 * n);
  h.setFromTriplets(t.begin(), t.end());
  return h;
}

/// H2 = (Atilde - Atilde^H) / 2i.
inline SpMat h2_of(const SpMat& A, const RVec& F, bool with_curl = true) {
  const Eigen::Index n = F.size();
  std::vector<Triplet> t;
  if (with_curl) add_block(t, A, 0, 0, -I1);  // (2A)/(2i)
  for (Eigen::Index i = 0; i < n; ++i)
    if (F[i] != 0.0) {
      t.emplace_back(i, n + i, -I1 * 0.5 * F[i]);
      t.emplace_back(n + i, i, I1 * 0.5 * F[i]);
    }
  SpMat h(2 * n, 2 * n);
  h.setFromTriplets(t.begin(), t.end());
  return h;
}

inline StretchedSystem stretch(const SpMat& A, const RVec& F, const CVec& u0, double c0) {
  StretchedSystem s;
  s.A = A;
  s.F = F;
  s.c0 = c0;
  s.Atilde = stretch_matrix(A, F);
  s.H1 = h1_of(F);
  s.H2 = h2_of(A, F);
  s.uf0.resize(2 * A.rows());
  s.uf0 << u0, CVec::Constant(A.rows(), c0);
  return s;
}

// ---------------------------------------------------------------- autonomized H

/// Which s-nodes carry the curl part of -H2. The source part is always limited
/// to the profile's active set.
enum class CurlWindow {
  Everywhere,   // curl on every s-node, as in the circuit's H_curl (x) 1
  SourceNodes,  // H_p(s) = 0 outside the active source nodes
};

/// H = I (x) P_s (x) I + sum_l (H1(s_l) (x) |l><l| (x) D_p - H2(s_l) (x) |l><l| (x) I)
/// on the index  ((a * N_s) + l) * N_p + q.
class AutonomizedHamiltonian {
 public:
  AutonomizedHamiltonian(SpMat A, std::vector<RVec> F_per_l, SpectralGrid sg, SpectralGrid pg,
                         CurlWindow w = CurlWindow::Everywhere)
      : A_(std::move(A)), F_(std::move(F_per_l)), sg_(sg), pg_(pg), window_(w) {
    if (F_.size() != sg_.N()) throw Error(ErrorCode::InvalidArgument, "need one F per s-node");
    n_ = A_.rows();
    curl_ = h2_of(A_, RVec::Zero(n_), true);
    curl_ *= cplx(-1.0);  // -H2 curl part = i A (+) 0
    for (std::size_t l = 0; l < F_.size(); ++l) {
      const bool src = F_[l].size() == n_ && F_[l].cwiseAbs().maxCoeff() > 0;
      has_src_.push_back(src);
      if (src) {
        h1_.push_back(h1_of(F_[l]));
        SpMat m2 = h2_of(A_, F_[l], curl_on(l));
        m2 *= cplx(-1.0);
        mh2_.push_back(m2);
      } else {
        h1_.emplace_back(2 * n_, 2 * n_);
        mh2_.push_back(curl_on(l) ? curl_ : SpMat(2 * n_, 2 * n_));
      }
    }
  }

  Eigen::Index sys_dim() const { return 2 * n_; }
  Eigen::Index dim() const { return 2 * n_ * sg_.N() * pg_.N(); }
  const SpectralGrid& sgrid() const { return sg_; }
  const SpectralGrid& pgrid() const { return pg_; }
  const SpMat& A() const { return A_; }
  const std::vector<RVec>& F() const { return F_; }
  bool curl_on(std::size_t l) const {
    return window_ == CurlWindow::Everywhere || (l < F_.size() && F_[l].size() == n_ &&
                                                 F_[l].cwiseAbs().maxCoeff() > 0);
  }
  bool source_on(std::size_t l) const { return has_src_[l]; }
  const SpMat& H1(std::size_t l) const { return h1_[l]; }
  SpMat H2(std::size_t l) const { return SpMat(-mh2_[l]); }

  // ---- sparse assembly (small sizes)
  SpMat H_Ds() const {
    return kron_all({sp_identity(sys_dim()), sp_from_dense(sg_.P()), sp_identity(pg_.N())});
  }
  SpMat H_F() const { return assemble_sys(true, false); }
  SpMat H_curl() const { return assemble_sys(false, true); }
  SpMat assemble() const { return SpMat(H_Ds() + H_F() + H_curl()); }

  /// Upper bound on the spectral radius.
  double norm_bound() const {
    double b = 0;
    const double pmax = std::abs(pg_.freq(0));
    for (std::size_t l = 0; l < F_.size(); ++l)
      b = std::max(b, pmax * inf_norm(h1_[l]) + inf_norm(mh2_[l]));
    return b + std::abs(sg_.freq(0));
  }

  /// y = H x (matrix-free; P_s by FFT along s).
  void apply(const CVec& x, CVec& y) const {
    const Eigen::Index Ns = sg_.N(), Np = pg_.N(), S = 2 * n_;
    y.setZero(x.size());
    using RowMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    using CMap = Eigen::Map<const RowMat, 0, Eigen::OuterStride<>>;
    using Map = Eigen::Map<RowMat, 0, Eigen::OuterStride<>>;
    const RVec nu_p = pg_.freqs();
    for (Eigen::Index l = 0; l < Ns; ++l) {
      CMap X(x.data() + l * Np, S, Np, Eigen::OuterStride<>(Ns * Np));
      Map Y(y.data() + l * Np, S, Np, Eigen::OuterStride<>(Ns * Np));
      if (mh2_[l].nonZeros()) Y.noalias() += mh2_[l] * X;
      if (has_src_[l]) Y.noalias() += (h1_[l] * X) * nu_p.cast<cplx>().asDiagonal();
    }
    // P_s = F_c diag(nu) F_c^H along every s fiber
    const double sq = std::sqrt(double(Ns));
    const RVec nu_s = sg_.freqs();
    std::vector<cplx> in(Ns), out(Ns);
    for (Eigen::Index a = 0; a < S; ++a)
      for (Eigen::Index q = 0; q < Np; ++q) {
        const Eigen::Index base = a * Ns * Np + q;
        for (Eigen::Index l = 0; l < Ns; ++l) in[l] = x[base + l * Np];
        fft_.fwd(out, in);
        // centered inverse: hat_m = out[m xor Ns/2] / sqrt(Ns)
        for (Eigen::Index mm = 0; mm < Ns; ++mm) in[mm] = out[mm ^ (Ns / 2)] * nu_s[mm] / sq;
        for (Eigen::Index mm = 0; mm < Ns / 2; ++mm) std::swap(in[mm], in[mm + Ns / 2]);
        fft_.inv(out, in);
        for (Eigen::Index l = 0; l < Ns; ++l) y[base + l * Np] += out[l] * sq;
      }
  }

 private:
  SpMat assemble_sys(bool src, bool curl) const {
    const Eigen::Index Ns = sg_.N(), Np = pg_.N();
    SpMat acc(dim(), dim());
    const SpMat Dp = sp_diag(pg_.freqs().cast<cplx>());
    const SpMat Ip = sp_identity(Np);
    for (Eigen::Index l = 0; l < Ns; ++l) {
      SpMat e(Ns, Ns);
      e.insert(l, l) = 1.0;
      if (src && has_src_[l]) {
        // H1 (x) |l><l| (x) D_p - (source part of H2) (x) |l><l| (x) I
        const SpMat mh2src = SpMat(h2_of(A_, F_[l], false) * cplx(-1.0));
        acc += kron_all({h1_[l], e, Dp});
        acc += kron_all({mh2src, e, Ip});
      }
      if (curl && curl_on(l)) acc += kron_all({curl_, e, Ip});
    }
    return acc;
  }

  SpMat A_;
  std::vector<RVec> F_;
  SpectralGrid sg_, pg_;
  CurlWindow window_;
  Eigen::Index n_ = 0;
  SpMat curl_;
  std::vector<bool> has_src_;
  std::vector<SpMat> h1_, mh2_;
  mutable Eigen::FFT<double> fft_;
};

// ---------------------------------------------------------------- initial data

/// delta_h samples on the s-grid, centred at s = 0 (node N_s/2).
inline RVec delta_column(const SpectralGrid& sg, const Kernels& k = {}) {
  RVec d(sg.N());
  for (std::uint64_t i = 0; i < sg.N(); ++i) d[i] = k.delta_h(sg.node(i), sg.h());
  return d;
}

inline RVec g_column(const SpectralGrid& pg, const Kernels& k = {}) {
  RVec g(pg.N());
  for (std::uint64_t i = 0; i < pg.N(); ++i) g[i] = k.g(pg.node(i));
  return g;
}

/// v_h(0) = u_f(0) (x) delta_h (x) g_h, un-normalized (physical p basis).
inline StateVector build_initial_state(const CVec& uf0, const SpectralGrid& sg,
                                       const SpectralGrid& pg, const Kernels& k = {},
                                       int cap = 26) {
  const int nsys = ilog2_exact(uf0.size());
  if (nsys < 0) throw Error(ErrorCode::InvalidArgument, "system length must be a power of two");
  RegisterLayout lay(nsys, sg.n, pg.n, cap);
  const RVec d = delta_column(sg, k), g = g_column(pg, k);
  std::vector<cplx> a(lay.dim());
  const std::uint64_t Ns = sg.N(), Np = pg.N();
  for (Eigen::Index i = 0; i < uf0.size(); ++i)
    for (std::uint64_t l = 0; l < Ns; ++l)
      for (std::uint64_t q = 0; q < Np; ++q) a[(i * Ns + l) * Np + q] = uf0[i] * d[l] * g[q];
  return StateVector(lay, std::move(a));
}

// ---------------------------------------------------------------- propagation

using LinearOp = std::function<void(const CVec&, CVec&)>;

/// exp(-i H t) x by a Chebyshev expansion; `bound` >= spectral radius of H.
inline CVec chebyshev_expm(const LinearOp& H, const CVec& x, double t, double bound,
                           double tol = 1e-14) {
  if (t == 0.0) return x;
  const double a = bound * 1.01 + 1e-12;
  const double z = a * t;
  // coefficients c_k = (2 - delta_k0) (-i)^k J_k(z)
  int K = static_cast<int>(z + 20 + 5 * std::cbrt(z));
  while (K > 1 && std::abs(std::cyl_bessel_j(double(K), std::abs(z))) < tol * 1e-3) --K;
  K += 4;
  CVec t0 = x, t1(x.size()), t2(x.size()), hx(x.size());
  H(t0, hx);
  t1 = hx / a;
  CVec out = std::cyl_bessel_j(0.0, z) * t0;
  cplx ph = -I1;
  out += 2.0 * ph * std::cyl_bessel_j(1.0, z) * t1;
  for (int k = 2; k <= K; ++k) {
    H(t1, hx);
    t2 = 2.0 * hx / a - t0;
    ph *= -I1;
    out += 2.0 * ph * std::cyl_bessel_j(double(k), z) * t2;
    std::swap(t0, t1);
    std::swap(t1, t2);
  }
  return out;
}

/// Reference evolution exp(-i H T) v0: dense for dim <= 2^12, Chebyshev above
/// when `matrix_free` is allowed.
inline CVec evolve_oracle(const AutonomizedHamiltonian& H, const CVec& v0, double T,
                          bool matrix_free = false) {
  if (T == 0.0) return v0;
  if (H.dim() <= oracle::kDenseCap) {
    const CMat Hd = CMat(H.assemble());
    return oracle::expm_dense(Hd, -I1 * T) * v0;
  }
  if (!matrix_free)
    throw Error(ErrorCode::CapExceeded, "dimension " + std::to_string(H.dim()) +
                                            " above dense cap; enable matrix-free propagation");
  return chebyshev_expm([&](const CVec& x, CVec& y) { H.apply(x, y); }, v0, T, H.norm_bound());
}

/// Dense-Hamiltonian variant used with hand-built test matrices.
inline CVec evolve_oracle(const CMat& H, const CVec& v0, double T) {
  if (T == 0.0) return v0;
  return oracle::expm_dense(H, -I1 * T) * v0;
}

// ---------------------------------------------------------------- p-register transforms

/// Apply the centred unitary DFT (or its inverse) along the p index of a
/// full vector laid out as (rest, q).
inline void p_transform(CVec& v, std::uint64_t Np, bool inverse) {
  Eigen::FFT<double> fft;
  const Eigen::Index rest = v.size() / Np;
  const double sq = std::sqrt(double(Np));
  std::vector<cplx> in(Np), out(Np);
  for (Eigen::Index r = 0; r < rest; ++r) {
    for (std::uint64_t q = 0; q < Np; ++q) in[q] = v[r * Np + q];
    if (!inverse) {
      for (std::uint64_t q = 0; q < Np / 2; ++q) std::swap(in[q], in[q + Np / 2]);
      fft.inv(out, in);
      for (std::uint64_t q = 0; q < Np; ++q) v[r * Np + q] = out[q] * sq;
    } else {
      fft.fwd(out, in);
      for (std::uint64_t q = 0; q < Np; ++q) v[r * Np + q] = out[q ^ (Np / 2)] / sq;
    }
  }
}

}  // namespace schromax
