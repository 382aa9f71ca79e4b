#pragma once

#include <Eigen/Dense>

#include "symdesign/block_structure.hpp"
#include "symdesign/rng.hpp"

namespace symdesign {

inline Matrix ginibre(Rng& rng, long rows, long cols) {
  Matrix z(rows, cols);
  for (long j = 0; j < cols; ++j)
    for (long i = 0; i < rows; ++i) z(i, j) = rng.cgauss();
  return z;
}

/// Haar-distributed unitary on U(m): QR of a Ginibre matrix with the phase
/// correction that makes the R diagonal positive.
inline Matrix haar_unitary(Rng& rng, long m) {
  if (m == 1) {
    const double a = 6.283185307179586476925286766559 * rng.uniform01();
    Matrix u(1, 1);
    u(0, 0) = Cplx(std::cos(a), std::sin(a));
    return u;
  }
  Matrix z = ginibre(rng, m, m);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (long j = 0; j < m; ++j) {
    Cplx d = r(j, j);
    const double ad = std::abs(d);
    q.col(j) *= (ad > 0) ? d / ad : Cplx(1, 0);
  }
  return q;
}

/// Haar sample from the symmetric unitary group: an independent Haar
/// unitary on each multiplicity space, embedded as id(r) (x) U_lambda.
inline Matrix sample_symmetric_haar(const BlockStructure& bs, Rng& rng) {
  Matrix u = Matrix::Zero(bs.dim, bs.dim);
  for (const auto& sec : bs.sectors) {
    Matrix ul = haar_unitary(rng, sec.m);
    Matrix block = Matrix::Zero(sec.r * sec.m, sec.r * sec.m);
    for (long al = 0; al < sec.r; ++al)
      block.block(al * sec.m, al * sec.m, sec.m, sec.m) = ul;
    u += sec.isometry * block * sec.isometry.adjoint();
  }
  return u;
}

inline double unitarity_residual(const Matrix& u) {
  return (u * u.adjoint() - Matrix::Identity(u.rows(), u.cols()))
      .cwiseAbs()
      .maxCoeff();
}

}  // namespace symdesign
