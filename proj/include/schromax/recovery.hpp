#pragma once

#include <cmath>
#include <string>

#include "error.hpp"
#include "grids.hpp"
#include "linalg.hpp"
#include "statevec.hpp"

namespace schromax {

enum class RecoveryMode { Point, Integral };

/// Threshold rules for the recovery index k = min{j : p_j > p*}.
enum class KRule {
  Fixed,      // p* = threshold (default 0.5)
  HalfT,      // p* = T/2
  FullT,      // p* = T
};

struct RecoveryConfig {
  RecoveryMode mode = RecoveryMode::Point;
  KRule rule = KRule::Fixed;
  double threshold = 0.5;
  double T = 0.5;

  double p_star() const {
    switch (rule) {
      case KRule::HalfT: return T / 2;
      case KRule::FullT: return T;
      default: return threshold;
    }
  }
};

struct RecoveryResult {
  CVec u_rec;
  std::uint64_t k = 0;
  double p_k = 0.0;
  double rel_err = -1.0;  // set by the caller against a reference
  double success_prob = 0.0;
};

inline std::uint64_t recovery_index(const SpectralGrid& pg, const RecoveryConfig& cfg) {
  const std::uint64_t k = pg.first_above(cfg.p_star());
  if (k >= pg.N())
    throw Error(ErrorCode::NoRecoveryIndex,
                "no p-node above " + std::to_string(cfg.p_star()) + "; increase L or N_p");
  return k;
}

/// Delta-s weighted sum over s of the p = k slice, indexed by system row.
inline CVec s_summed_slice(const StateVector& v, std::uint64_t k, double ds) {
  const auto& lay = v.layout();
  const CVec sl = project_p_index(v, k);
  const std::uint64_t Ns = lay.Ns();
  CVec out = CVec::Zero(lay.sys_dim());
  for (std::uint64_t a = 0; a < lay.sys_dim(); ++a)
    for (std::uint64_t l = 0; l < Ns; ++l) out[a] += sl[a * Ns + l];
  return out * ds;
}

/// ||M_k v||^2 / ||v||^2 with M_k the projector onto p-index k.
inline double success_probability(const StateVector& v, std::uint64_t k) {
  const double nv = v.norm();
  if (nv == 0.0) return 0.0;
  const CVec sl = project_p_index(v, k);
  return sl.squaredNorm() / (nv * nv);
}

/// u = e^{p_k} ds sum_l v(s_l, p_k). v must be in the physical p basis.
inline RecoveryResult recover_point(const StateVector& v, const SpectralGrid& sg,
                                    const SpectralGrid& pg, const RecoveryConfig& cfg) {
  RecoveryResult r;
  r.k = recovery_index(pg, cfg);
  r.p_k = pg.node(r.k);
  r.u_rec = std::exp(r.p_k) * s_summed_slice(v, r.k, sg.h());
  r.success_prob = success_probability(v, r.k);
  return r;
}

/// u = e^{p_k} int_{p_k}^{pi L} w dp, trapezoid rule on the p-nodes from k up.
inline RecoveryResult recover_integral(const StateVector& v, const SpectralGrid& sg,
                                       const SpectralGrid& pg, const RecoveryConfig& cfg) {
  RecoveryResult r;
  r.k = recovery_index(pg, cfg);
  r.p_k = pg.node(r.k);
  const std::uint64_t N = pg.N();
  CVec acc = CVec::Zero(v.layout().sys_dim());
  for (std::uint64_t q = r.k; q < N; ++q) {
    const double w = (q == r.k || q == N - 1) ? 0.5 : 1.0;
    acc += w * s_summed_slice(v, q, sg.h());
  }
  r.u_rec = std::exp(r.p_k) * pg.h() * acc;
  r.success_prob = success_probability(v, r.k);
  return r;
}

inline RecoveryResult recover(const StateVector& v, const SpectralGrid& sg, const SpectralGrid& pg,
                              const RecoveryConfig& cfg) {
  return cfg.mode == RecoveryMode::Point ? recover_point(v, sg, pg, cfg)
                                         : recover_integral(v, sg, pg, cfg);
}

inline double rel_error(const CVec& got, const CVec& ref) {
  const double n = ref.norm();
  return n == 0.0 ? got.norm() : (got - ref).norm() / n;
}

}  // namespace schromax
