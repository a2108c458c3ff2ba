#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "error.hpp"
#include "linalg.hpp"

namespace schromax {

/// Periodic spectral grid on [-pi W, pi W) with N = 2^n nodes.
/// Used for both p (W = L) and s (W = S).
struct SpectralGrid {
  double W = 1.0;
  int n = 1;

  SpectralGrid() = default;
  SpectralGrid(double w, int nq) : W(w), n(nq) {
    if (!(w > 0)) throw Error(ErrorCode::InvalidArgument, "grid half-width must be positive");
    if (nq < 1) throw Error(ErrorCode::InvalidArgument, "grid needs at least one qubit");
  }

  std::uint64_t N() const { return pow2(n); }
  double h() const { return 2 * kPi * W / static_cast<double>(N()); }
  double node(std::uint64_t j) const { return -kPi * W + static_cast<double>(j) * h(); }
  double freq(std::uint64_t l) const {
    return (static_cast<double>(l) - static_cast<double>(N()) / 2) / W;
  }
  RVec nodes() const {
    RVec r(N());
    for (std::uint64_t j = 0; j < N(); ++j) r[j] = node(j);
    return r;
  }
  RVec freqs() const {
    RVec r(N());
    for (std::uint64_t j = 0; j < N(); ++j) r[j] = freq(j);
    return r;
  }
  /// Phi[j,l] = exp(i nu_l (x_j + pi W)), unnormalized.
  CMat Phi() const {
    CMat f(N(), N());
    for (std::uint64_t j = 0; j < N(); ++j)
      for (std::uint64_t l = 0; l < N(); ++l) f(j, l) = std::exp(I1 * (freq(l) * (node(j) + kPi * W)));
    return f;
  }
  /// Spectral momentum operator -i d/dx = Phi D Phi^{-1}.
  CMat P() const {
    const CMat f = Phi();
    return f * freqs().cast<cplx>().asDiagonal() * f.adjoint() / static_cast<double>(N());
  }
  /// Index of the node at x = 0 (always on grid: N even).
  std::uint64_t zero_index() const { return N() / 2; }
  /// First index with node > x.
  std::uint64_t first_above(double x) const {
    for (std::uint64_t j = 0; j < N(); ++j)
      if (node(j) > x) return j;
    return N();
  }
};

/// Smallest half-width with exp(-pi W + a) <= tol, rounded up so that 2 pi W is
/// a power of two (dyadic mesh for every N).
inline double default_half_width(double a, double tol = 1e-12) {
  const double need = (a - std::log(tol)) / kPi;
  double span = 1.0;
  while (span < 2 * kPi * need) span *= 2;
  return span / (2 * kPi);
}

/// p-domain: exp(-pi L + |lambda_max(H1)| T) <= tol with |lambda_max| <= 1/2.
inline double default_L(double T, double tol = 1e-12) { return default_half_width(0.5 * T, tol); }
/// s-domain: exp(-pi S + T) <= tol.
inline double default_S(double T, double tol = 1e-12) { return default_half_width(T, tol); }

inline void check_truncation(const SpectralGrid& g, double a, double tol, const std::string& what) {
  if (std::exp(-kPi * g.W + a) > tol)
    throw Error(ErrorCode::TruncationViolated,
                what + " half-width " + std::to_string(g.W) + " too small: need >= " +
                    std::to_string((a - std::log(tol)) / kPi));
}

inline nlohmann::json to_json(const SpectralGrid& g) {
  return {{"half_width", g.W}, {"n_qubits", g.n}, {"N", g.N()}, {"h", g.h()}};
}

}  // namespace schromax
