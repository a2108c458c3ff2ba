#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <unsupported/Eigen/KroneckerProduct>

namespace schromax {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using SpMat = Eigen::SparseMatrix<cplx, Eigen::RowMajor>;
using Triplet = Eigen::Triplet<cplx>;

inline constexpr cplx I1{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;

inline SpMat sp_identity(Eigen::Index n) {
  SpMat m(n, n);
  m.setIdentity();
  return m;
}

inline SpMat sp_from_dense(const CMat& d) { return d.sparseView(); }

inline SpMat kron(const SpMat& a, const SpMat& b) {
  SpMat out = Eigen::kroneckerProduct(a, b).eval();
  out.makeCompressed();
  return out;
}

// Left-to-right tensor product: kron_all({A, B, C}) = A (x) B (x) C.
inline SpMat kron_all(const std::vector<SpMat>& fs) {
  SpMat out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = kron(out, fs[i]);
  return out;
}

inline SpMat sp_diag(const CVec& d) {
  SpMat m(d.size(), d.size());
  std::vector<Triplet> t;
  for (Eigen::Index i = 0; i < d.size(); ++i)
    if (d[i] != cplx(0)) t.emplace_back(i, i, d[i]);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

// sigma_ij = |i><j|
inline SpMat sigma(int i, int j) {
  SpMat m(2, 2);
  m.insert(i, j) = 1.0;
  return m;
}

inline SpMat pauli(char p) {
  CMat d(2, 2);
  switch (p) {
    case 'X': d << 0, 1, 1, 0; break;
    case 'Y': d << 0, -I1, I1, 0; break;
    case 'Z': d << 1, 0, 0, -1; break;
    default: d << 1, 0, 0, 1; break;
  }
  return d.sparseView();
}

// Block diagonal / block assembly helper: place b at (r0, c0) of an n x n matrix.
inline void add_block(std::vector<Triplet>& t, const SpMat& b, Eigen::Index r0, Eigen::Index c0,
                      cplx scale = 1.0) {
  for (int k = 0; k < b.outerSize(); ++k)
    for (SpMat::InnerIterator it(b, k); it; ++it)
      t.emplace_back(r0 + it.row(), c0 + it.col(), scale * it.value());
}

inline double max_abs(const SpMat& m) {
  double r = 0;
  for (int k = 0; k < m.outerSize(); ++k)
    for (SpMat::InnerIterator it(m, k); it; ++it) r = std::max(r, std::abs(it.value()));
  return r;
}

// Max absolute row sum, an upper bound on the spectral norm for Hermitian matrices.
inline double inf_norm(const SpMat& m) {
  double r = 0;
  for (int k = 0; k < m.outerSize(); ++k) {
    double s = 0;
    for (SpMat::InnerIterator it(m, k); it; ++it) s += std::abs(it.value());
    r = std::max(r, s);
  }
  return r;
}

// Spectral norm via the largest eigenvalue of m^H m.
inline double op_norm(const CMat& m) {
  CMat g = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<CMat> es(g, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

inline std::uint64_t pow2(int k) { return std::uint64_t{1} << k; }

inline int ilog2_exact(std::uint64_t n) {
  int k = 0;
  while ((std::uint64_t{1} << k) < n) ++k;
  return (std::uint64_t{1} << k) == n ? k : -1;
}

}  // namespace schromax
