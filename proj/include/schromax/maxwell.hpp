#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"

namespace schromax {

// ---------------------------------------------------------------- 1D stencils

/// S^- |j> = |j-1>
inline SpMat shift_minus(int m) {
  const Eigen::Index M = pow2(m);
  SpMat s(M, M);
  std::vector<Triplet> t;
  for (Eigen::Index j = 1; j < M; ++j) t.emplace_back(j - 1, j, 1.0);
  s.setFromTriplets(t.begin(), t.end());
  return s;
}

/// S^+ |j> = |j+1>
inline SpMat shift_plus(int m) { return SpMat(shift_minus(m).adjoint()); }

/// I^r = 1 - |0><0|
inline SpMat identity_r(int m) {
  const Eigen::Index M = pow2(m);
  SpMat s(M, M);
  std::vector<Triplet> t;
  for (Eigen::Index j = 1; j < M; ++j) t.emplace_back(j, j, 1.0);
  s.setFromTriplets(t.begin(), t.end());
  return s;
}

inline SpMat d_minus(int m) { return SpMat(shift_minus(m) - identity_r(m)); }
inline SpMat d_plus(int m) { return SpMat(identity_r(m) - shift_plus(m)); }

/// S^- rebuilt from its tensor decomposition sum_j 1^{m-j} (x) s01 (x) s10^{j-1}.
inline SpMat shift_minus_tensor(int m) {
  const Eigen::Index M = pow2(m);
  SpMat acc(M, M);
  for (int j = 1; j <= m; ++j) {
    std::vector<SpMat> f;
    if (m - j > 0) f.push_back(sp_identity(pow2(m - j)));
    f.push_back(sigma(0, 1));
    for (int k = 0; k < j - 1; ++k) f.push_back(sigma(1, 0));
    acc += kron_all(f);
  }
  return acc;
}

inline SpMat shift_plus_tensor(int m) {
  const Eigen::Index M = pow2(m);
  SpMat acc(M, M);
  for (int j = 1; j <= m; ++j) {
    std::vector<SpMat> f;
    if (m - j > 0) f.push_back(sp_identity(pow2(m - j)));
    f.push_back(sigma(1, 0));
    for (int k = 0; k < j - 1; ++k) f.push_back(sigma(0, 1));
    acc += kron_all(f);
  }
  return acc;
}

inline SpMat identity_r_tensor(int m) {
  std::vector<SpMat> f(m, sigma(0, 0));
  return SpMat(sp_identity(pow2(m)) - kron_all(f));
}

// ---------------------------------------------------------------- grid

struct GridSpec {
  int m = 2;            // M = 2^m points per axis
  int d = 3;            // 1 or 3
  double length = 1.0;  // domain length per axis
  double T = 0.5;

  Eigen::Index M() const { return pow2(m); }
  double dx() const { return length / static_cast<double>(M()); }
  // state length n of du/dt = A u + f
  Eigen::Index n() const { return d == 3 ? 8 * M() * M() * M() : 2 * M(); }
  int n_qubits() const { return d == 3 ? 3 * m + 3 : m + 1; }

  void validate(Eigen::Index budget = Eigen::Index{1} << 24) const {
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be >= 1 (M >= 2)");
    if (d != 1 && d != 3) throw Error(ErrorCode::InvalidArgument, "d must be 1 or 3");
    if (!(length > 0)) throw Error(ErrorCode::InvalidArgument, "domain length must be positive");
    if (d == 3 && 3 * m + 3 > 40)
      throw Error(ErrorCode::CapExceeded, "grid too large");
    if (n() > budget)
      throw Error(ErrorCode::CapExceeded,
                  "state length n = " + std::to_string(n()) + " (" +
                      (d == 3 ? "8 M^3" : "2 M") + ", M = " + std::to_string(M()) +
                      ") exceeds budget " + std::to_string(budget));
  }
};

struct MaxwellOperators {
  GridSpec spec;
  SpMat S_minus, S_plus, I_r, D_minus, D_plus;
  std::array<SpMat, 3> Dp, Dm;  // x, y, z lifts divided by dx (3D only)
  SpMat M_curl_E, M_curl_B;     // 4M^3 blocks (3D); -D+/dx and -D-/dx in 1D
  SpMat A;
};

/// Yee operators on the cube (d = 3) with PEC walls.
inline MaxwellOperators build_operators(const GridSpec& spec) {
  spec.validate();
  MaxwellOperators o;
  o.spec = spec;
  const int m = spec.m;
  o.S_minus = shift_minus(m);
  o.S_plus = shift_plus(m);
  o.I_r = identity_r(m);
  o.D_minus = d_minus(m);
  o.D_plus = d_plus(m);
  const double h = spec.dx();
  const Eigen::Index M = spec.M();
  if (spec.d == 1) {
    o.M_curl_E = SpMat(-o.D_plus / h);
    o.M_curl_B = SpMat(-o.D_minus / h);
    std::vector<Triplet> t;
    add_block(t, o.M_curl_E, 0, M);
    add_block(t, o.M_curl_B, M, 0);
    o.A = SpMat(2 * M, 2 * M);
    o.A.setFromTriplets(t.begin(), t.end());
    return o;
  }
  const SpMat Id = sp_identity(M);
  // |j> = |j3 j2 j1>, x acts on the last factor
  o.Dp[0] = SpMat(kron_all({Id, Id, o.D_plus}) / h);
  o.Dp[1] = SpMat(kron_all({Id, o.D_plus, Id}) / h);
  o.Dp[2] = SpMat(kron_all({o.D_plus, Id, Id}) / h);
  o.Dm[0] = SpMat(kron_all({Id, Id, o.D_minus}) / h);
  o.Dm[1] = SpMat(kron_all({Id, o.D_minus, Id}) / h);
  o.Dm[2] = SpMat(kron_all({o.D_minus, Id, Id}) / h);
  const Eigen::Index B = M * M * M;
  auto assemble = [&](const std::array<SpMat, 3>& D, double sgn) {
    // rows/cols: x, y, z, r
    const auto& X = D[0];
    const auto& Y = D[1];
    const auto& Z = D[2];
    std::vector<Triplet> t;
    add_block(t, Z, 0, B, -sgn);
    add_block(t, Y, 0, 2 * B, sgn);
    add_block(t, X, 0, 3 * B, -sgn);
    add_block(t, Z, B, 0, sgn);
    add_block(t, X, B, 2 * B, -sgn);
    add_block(t, Y, B, 3 * B, -sgn);
    add_block(t, Y, 2 * B, 0, -sgn);
    add_block(t, X, 2 * B, B, sgn);
    add_block(t, Z, 2 * B, 3 * B, -sgn);
    add_block(t, X, 3 * B, 0, sgn);
    add_block(t, Y, 3 * B, B, sgn);
    add_block(t, Z, 3 * B, 2 * B, sgn);
    SpMat out(4 * B, 4 * B);
    out.setFromTriplets(t.begin(), t.end());
    return out;
  };
  o.M_curl_E = assemble(o.Dp, 1.0);
  o.M_curl_B = assemble(o.Dm, -1.0);
  std::vector<Triplet> t;
  add_block(t, o.M_curl_E, 0, 4 * B);
  add_block(t, o.M_curl_B, 4 * B, 0);
  o.A = SpMat(8 * B, 8 * B);
  o.A.setFromTriplets(t.begin(), t.end());
  return o;
}

/// 1D reduction: dE_y/dt = -dB_z/dx - J_y, dB_z/dt = -dE_y/dx, E_y = 0 at both walls.
/// u = [E_y at x_i = i dx ; B_z at (i + 1/2) dx], i < M.
inline MaxwellOperators reduce_1d(GridSpec spec) {
  spec.d = 1;
  return build_operators(spec);
}

// ---------------------------------------------------------------- sources

enum Alpha { AlphaX = 0, AlphaY = 1, AlphaZ = 2, AlphaRho = 3 };

inline const char* alpha_name(int a) {
  static const char* n[] = {"x", "y", "z", "rho"};
  return n[a];
}

/// Two-valued source of one component at one s-node: value j1 on `sites`, j0 elsewhere.
struct SourceTerm {
  double j0 = 0.0;
  double j1 = 0.0;
  std::vector<Eigen::Index> sites;
  bool active() const { return j0 != 0.0 || (j1 != 0.0 && !sites.empty()) || !sites.empty(); }
};

struct SourceSlice {
  std::size_t l = 0;                 // s-grid index
  std::array<SourceTerm, 4> alpha{}; // x, y, z, rho (1D uses y only)
};

struct SourceProfile {
  std::vector<SourceSlice> slices;  // the active set I_s
  double c0 = 1.0;

  bool empty() const { return slices.empty(); }
  const SourceSlice* find(std::size_t l) const {
    for (auto& s : slices)
      if (s.l == l) return &s;
    return nullptr;
  }
  std::set<std::size_t> active_set() const {
    std::set<std::size_t> r;
    for (auto& s : slices) r.insert(s.l);
    return r;
  }
};

/// c0 = max(max |f|, 1) over the sampled slices.
inline double compute_c0(const SourceProfile& p) {
  double mx = 0;
  for (auto& s : p.slices)
    for (auto& t : s.alpha) {
      if (!t.sites.empty()) mx = std::max(mx, std::abs(t.j1));
      mx = std::max(mx, std::abs(t.j0));
    }
  return std::max(mx, 1.0);
}

/// Component counts: number of sites per component block.
inline Eigen::Index sites_per_component(const GridSpec& g) {
  return g.d == 3 ? g.M() * g.M() * g.M() : g.M();
}

/// Sites where PEC forces J_alpha = 0.
inline bool pec_boundary_site(const GridSpec& g, int alpha, Eigen::Index site) {
  const Eigen::Index M = g.M();
  if (g.d == 1) return alpha == AlphaY && site == 0;
  const Eigen::Index j1 = site % M, j2 = (site / M) % M, j3 = site / (M * M);
  switch (alpha) {
    case AlphaX: return j2 == 0 || j3 == 0;
    case AlphaY: return j1 == 0 || j3 == 0;
    case AlphaZ: return j1 == 0 || j2 == 0;
    default: return false;
  }
}

struct ProfileCaps {
  std::size_t max_slices = 0;  // 0 = derive from n_s
  std::size_t max_sites = 0;   // 0 = derive from m
};

/// Validates a profile against the grid: forces PEC-boundary values to zero where
/// representable, throws ProfileConflict otherwise, warns when the sparsity caps
/// are exceeded.
inline void enforce_pec(SourceProfile& p, const GridSpec& g, int n_s = 0,
                        ProfileCaps caps = {}, std::ostream* warn = &std::cerr) {
  const Eigen::Index B = sites_per_component(g);
  const std::size_t cap_sites = caps.max_sites ? caps.max_sites : std::size_t(4 * g.m + 4);
  const std::size_t cap_slices = caps.max_slices ? caps.max_slices : std::size_t(4 * std::max(n_s, 1));
  if (warn && p.slices.size() > cap_slices)
    *warn << "warning: |I_s| = " << p.slices.size() << " exceeds cap " << cap_slices << "\n";
  for (auto& s : p.slices)
    for (int a = 0; a < 4; ++a) {
      auto& t = s.alpha[a];
      if (g.d == 1 && a != AlphaY && (t.j0 != 0 || !t.sites.empty()))
        throw Error(ErrorCode::ProfileConflict, "1D profile supports only the y component");
      for (auto q : t.sites)
        if (q < 0 || q >= B) throw Error(ErrorCode::IndexOutOfRange, "source site out of range");
      if (a == AlphaRho) continue;
      for (auto q : t.sites)
        if (pec_boundary_site(g, a, q) && t.j1 != 0.0)
          throw Error(ErrorCode::ProfileConflict,
                      std::string("nonzero J_") + alpha_name(a) + " on a PEC wall site");
      if (t.j0 != 0.0) {
        // every boundary site must carry the j1 value, which then has to be zero
        std::set<Eigen::Index> in(t.sites.begin(), t.sites.end());
        for (Eigen::Index q = 0; q < B; ++q)
          if (pec_boundary_site(g, a, q) && !in.count(q)) {
            if (t.j1 != 0.0 && !t.sites.empty())
              throw Error(ErrorCode::ProfileConflict,
                          std::string("J_") + alpha_name(a) +
                              " cannot vanish on the PEC wall with two source values");
            t.sites.push_back(q);
            t.j1 = 0.0;
            in.insert(q);
          }
        std::sort(t.sites.begin(), t.sites.end());
      }
      if (warn && t.sites.size() > cap_sites)
        *warn << "warning: |I_" << alpha_name(a) << "^" << s.l << "| = " << t.sites.size()
              << " exceeds cap " << cap_sites << "\n";
    }
}

/// Unsigned diagonal of F^alpha(s_l): J values divided by c0.
inline RVec falpha_diag(const SourceTerm& t, Eigen::Index nsites, double c0) {
  RVec d = RVec::Constant(nsites, t.j0 / c0);
  for (auto q : t.sites) d[q] = t.j1 / c0;
  return d;
}

/// Physical source vector f at one slice: [-J ; 0] on the E side, rho in the r^b slot.
inline CVec source_vector(const SourceSlice& s, const GridSpec& g) {
  const Eigen::Index B = sites_per_component(g);
  CVec f = CVec::Zero(g.n());
  if (g.d == 1) {
    f.head(B) = -falpha_diag(s.alpha[AlphaY], B, 1.0).cast<cplx>();
    return f;
  }
  for (int a = 0; a < 3; ++a) f.segment(a * B, B) = -falpha_diag(s.alpha[a], B, 1.0).cast<cplx>();
  f.segment(7 * B, B) = falpha_diag(s.alpha[AlphaRho], B, 1.0).cast<cplx>();
  return f;
}

/// F = diag(f / c0).
inline RVec F_diag(const SourceSlice& s, const GridSpec& g, double c0) {
  return source_vector(s, g).real() / c0;
}

/// Signed per-component coefficient: f = sign * J (sign -1 for x,y,z, +1 for rho).
inline double alpha_sign(int a) { return a == AlphaRho ? 1.0 : -1.0; }

/// F(s_l) rebuilt from sum_alpha sigma_{3,alpha} (x) F^alpha (3D only), with physical signs.
inline SpMat F_from_tensor(const SourceSlice& s, const GridSpec& g, double c0) {
  const Eigen::Index B = sites_per_component(g);
  // sigma_{3,alpha} selects block (e, c1, c0) = x:(0,0,0) y:(0,0,1) z:(0,1,0) rho:(1,1,1)
  const int pat[4][3] = {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 1, 1}};
  SpMat acc(8 * B, 8 * B);
  for (int a = 0; a < 4; ++a) {
    SpMat sig = kron_all({sigma(pat[a][0], pat[a][0]), sigma(pat[a][1], pat[a][1]),
                          sigma(pat[a][2], pat[a][2])});
    // F^alpha = sum_{j in I} (j1 - j0)/c0 Theta_j + j0/c0 1
    SpMat fa = sp_identity(B) * cplx(s.alpha[a].j0 / c0);
    for (auto q : s.alpha[a].sites) {
      SpMat th(B, B);
      th.insert(q, q) = 1.0;
      fa += th * cplx((s.alpha[a].j1 - s.alpha[a].j0) / c0);
    }
    acc += kron(sig, fa) * cplx(alpha_sign(a));
  }
  return acc;
}

// ---------------------------------------------------------------- 1D test problem

/// Exact solution of the 1D test: E_y = sin(pi(x+t)) - sin(pi t), B_z = -sin(pi(x+t)).
inline CVec exact_1d(const GridSpec& g, double t) {
  const Eigen::Index M = g.M();
  const double h = g.dx();
  CVec u(2 * M);
  for (Eigen::Index i = 0; i < M; ++i) {
    const double xe = i * h, xb = (i + 0.5) * h;
    u[i] = std::sin(kPi * (xe + t)) - std::sin(kPi * t);
    u[M + i] = -std::sin(kPi * (xb + t));
  }
  return u;
}

/// J_y(t) = pi cos(pi t) away from the wall site 0.
inline CVec source_1d(const GridSpec& g, double t) {
  const Eigen::Index M = g.M();
  CVec f = CVec::Zero(2 * M);
  for (Eigen::Index i = 1; i < M; ++i) f[i] = -kPi * std::cos(kPi * t);
  return f;
}

// ---------------------------------------------------------------- FDTD

struct MaxwellState {
  CVec u;  // [E side ; B side]
  double t = 0.0;
};

/// One Stormer-Verlet leapfrog step: half kick of the B side, full E update, half kick.
inline MaxwellState classical_fdtd_step(const MaxwellState& s, const MaxwellOperators& ops,
                                        const std::function<CVec(double)>& f, double dt) {
  const auto& g = ops.spec;
  const double lim = g.dx() / std::sqrt(static_cast<double>(g.d));
  if (dt > lim * (1 + 1e-12))
    throw Error(ErrorCode::CflViolation,
                "dt = " + std::to_string(dt) + " exceeds dx/sqrt(d) = " + std::to_string(lim));
  const Eigen::Index h = g.n() / 2;
  CVec E = s.u.head(h), B = s.u.tail(h);
  auto src = [&](double t) { return f ? f(t) : CVec(CVec::Zero(g.n())); };
  const CVec f0 = src(s.t), fh = src(s.t + dt / 2), f1 = src(s.t + dt);
  B += (dt / 2) * (ops.M_curl_B * E + f0.tail(h));
  E += dt * (ops.M_curl_E * B + fh.head(h));
  B += (dt / 2) * (ops.M_curl_B * E + f1.tail(h));
  MaxwellState out;
  out.u.resize(g.n());
  out.u << E, B;
  out.t = s.t + dt;
  return out;
}

/// Energy conserved exactly by the leapfrog on source-free runs:
/// |E|^2 + <B^{n+1/2}, B^{n-1/2}> = |E|^2 + |B|^2 - dt^2/4 |M_B E|^2.
inline double fdtd_energy(const MaxwellState& s, const MaxwellOperators& ops, double dt) {
  const Eigen::Index h = ops.spec.n() / 2;
  const CVec E = s.u.head(h), B = s.u.tail(h);
  return E.squaredNorm() + B.squaredNorm() - dt * dt / 4 * (ops.M_curl_B * E).squaredNorm();
}

}  // namespace schromax
