#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "symdesign/bigint.hpp"
#include "symdesign/symmetry.hpp"

namespace symdesign {

using Cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// One isotypic sector: the isometry maps C^r (x) C^m into the computational
/// space, columns indexed by alpha*m + j (irrep coordinate alpha outer,
/// multiplicity coordinate j inner), so symmetric operators conjugate to
/// id(r) (x) A and the representation to R_lambda (x) id(m).
struct Sector {
  long r = 1;
  long m = 1;
  Matrix isometry;
  std::optional<long> label;  // repdata label index, when known
};

struct BlockStructure {
  long dim = 0;
  std::vector<Sector> sectors;

  long total_block_dim() const {
    long s = 0;
    for (const auto& sec : sectors) s += sec.r * sec.m;
    return s;
  }
};

namespace detail {
inline int popcount_long(unsigned long v) { return __builtin_popcountl(v); }
}  // namespace detail

/// Weight sectors of the computational basis: one sector per Hamming weight
/// w = 0..n (the Z-total eigenvalue is n-2w), each with r = 1 and
/// m = C(n, w).  This is the exact block basis for U(1).
inline BlockStructure u1_block_structure(long n) {
  if (n < 1 || n > 24) throw InputError("u1_block_structure: n out of range");
  const long dim = 1L << n;
  BlockStructure bs;
  bs.dim = dim;
  std::vector<std::vector<long>> states(n + 1);
  for (long x = 0; x < dim; ++x)
    states[detail::popcount_long(static_cast<unsigned long>(x))].push_back(x);
  for (long w = 0; w <= n; ++w) {
    Sector s;
    s.r = 1;
    s.m = static_cast<long>(states[w].size());
    s.label = w;
    s.isometry = Matrix::Zero(dim, s.m);
    for (long j = 0; j < s.m; ++j) s.isometry(states[w][j], j) = 1.0;
    bs.sectors.push_back(std::move(s));
  }
  return bs;
}

/// Parity sectors (eigenvalue of Z^n tensor power): label 0 = even weight,
/// label 1 = odd weight, each with multiplicity 2^{n-1}.
inline BlockStructure z2_block_structure(long n) {
  if (n < 1 || n > 24) throw InputError("z2_block_structure: n out of range");
  const long dim = 1L << n;
  BlockStructure bs;
  bs.dim = dim;
  std::vector<std::vector<long>> states(2);
  for (long x = 0; x < dim; ++x)
    states[detail::popcount_long(static_cast<unsigned long>(x)) & 1].push_back(x);
  for (long p = 0; p <= 1; ++p) {
    Sector s;
    s.r = 1;
    s.m = static_cast<long>(states[p].size());
    s.label = p;
    s.isometry = Matrix::Zero(dim, s.m);
    for (long j = 0; j < s.m; ++j) s.isometry(states[p][j], j) = 1.0;
    bs.sectors.push_back(std::move(s));
  }
  return bs;
}

/// Multiplicity-space trace vector f(A) = (tr A_lambda)_lambda of a
/// symmetric operator: tr(V' A V) counts each multiplicity-space trace r
/// times, so divide by r.
inline Vector f_vector(const BlockStructure& bs, const Matrix& a) {
  Vector f(bs.sectors.size());
  for (size_t i = 0; i < bs.sectors.size(); ++i) {
    const Sector& s = bs.sectors[i];
    Cplx tr = (s.isometry.adjoint() * a * s.isometry).trace();
    f[static_cast<long>(i)] = tr / double(s.r);
  }
  return f;
}

/// Residual of the id(r) (x) A block pattern: conjugates `a` into the sector
/// basis and measures everything that is not of the required form.  Zero
/// (numerically) exactly when `a` is symmetric.
inline double block_pattern_residual(const BlockStructure& bs, const Matrix& a) {
  double worst = 0;
  for (const auto& s : bs.sectors) {
    Matrix blk = s.isometry.adjoint() * a * s.isometry;
    // Average the r diagonal m x m blocks, then compare.
    Matrix avg = Matrix::Zero(s.m, s.m);
    for (long al = 0; al < s.r; ++al)
      avg += blk.block(al * s.m, al * s.m, s.m, s.m);
    avg /= double(s.r);
    Matrix ideal = Matrix::Zero(s.r * s.m, s.r * s.m);
    for (long al = 0; al < s.r; ++al)
      ideal.block(al * s.m, al * s.m, s.m, s.m) = avg;
    worst = std::max(worst, (blk - ideal).cwiseAbs().maxCoeff());
  }
  // Cross-sector leakage.
  for (size_t i = 0; i < bs.sectors.size(); ++i)
    for (size_t j = i + 1; j < bs.sectors.size(); ++j) {
      Matrix cross = bs.sectors[i].isometry.adjoint() * a * bs.sectors[j].isometry;
      worst = std::max(worst, cross.cwiseAbs().maxCoeff());
    }
  return worst;
}

/// Orthonormality and mutual-orthogonality defect of the sector isometries.
inline double isometry_residual(const BlockStructure& bs) {
  double worst = 0;
  for (const auto& s : bs.sectors) {
    Matrix g = s.isometry.adjoint() * s.isometry;
    worst = std::max(worst,
                     (g - Matrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff());
  }
  for (size_t i = 0; i < bs.sectors.size(); ++i)
    for (size_t j = i + 1; j < bs.sectors.size(); ++j) {
      Matrix cross = bs.sectors[i].isometry.adjoint() * bs.sectors[j].isometry;
      worst = std::max(worst, cross.cwiseAbs().maxCoeff());
    }
  return worst;
}

/// Embeds a gate acting on the qubits listed in `support` (bit g of the gate
/// index corresponds to qubit support[g]) into the full n-qubit space.
inline Matrix embed_operator(const Matrix& gate, const std::vector<int>& support,
                             long n) {
  const long k = static_cast<long>(support.size());
  if (gate.rows() != (1L << k) || gate.cols() != (1L << k))
    throw InputError("embed_operator: gate dimension does not match support");
  const long dim = 1L << n;
  const long rest_dim = 1L << (n - k);

  std::vector<long> rest_bits;
  {
    std::vector<bool> used(n, false);
    for (int q : support) {
      if (q < 0 || q >= n || used[q])
        throw InputError("embed_operator: bad support set");
      used[q] = true;
    }
    for (long b = 0; b < n; ++b)
      if (!used[b]) rest_bits.push_back(b);
  }
  auto compose = [&](long gate_idx, long rest_idx) {
    long x = 0;
    for (long g = 0; g < k; ++g)
      if ((gate_idx >> g) & 1) x |= 1L << support[g];
    for (size_t b = 0; b < rest_bits.size(); ++b)
      if ((rest_idx >> b) & 1) x |= 1L << rest_bits[b];
    return x;
  };

  Matrix full = Matrix::Zero(dim, dim);
  for (long rest = 0; rest < rest_dim; ++rest)
    for (long gi = 0; gi < (1L << k); ++gi)
      for (long gj = 0; gj < (1L << k); ++gj)
        full(compose(gi, rest), compose(gj, rest)) = gate(gi, gj);
  return full;
}

/// Hermitian spanning set of the k-qubit operators commuting with the given
/// abelian sector split (same-sector matrix units, symmetrized).
namespace detail {
inline std::vector<Matrix> hermitian_span_from_sectors(
    long dim, const std::vector<std::vector<long>>& sectors) {
  std::vector<Matrix> ops;
  for (const auto& sec : sectors) {
    for (size_t a = 0; a < sec.size(); ++a) {
      Matrix e = Matrix::Zero(dim, dim);
      e(sec[a], sec[a]) = 1.0;
      ops.push_back(e);
      for (size_t b = a + 1; b < sec.size(); ++b) {
        Matrix s = Matrix::Zero(dim, dim);
        s(sec[a], sec[b]) = 1.0;
        s(sec[b], sec[a]) = 1.0;
        ops.push_back(s);
        Matrix t = Matrix::Zero(dim, dim);
        t(sec[a], sec[b]) = Cplx(0, 1);
        t(sec[b], sec[a]) = Cplx(0, -1);
        ops.push_back(t);
      }
    }
  }
  return ops;
}
}  // namespace detail

/// Hermitian basis of the U(1)-symmetric operators on k qubits.
inline std::vector<Matrix> u1_symmetric_operator_span(long k) {
  const long dim = 1L << k;
  std::vector<std::vector<long>> sectors(k + 1);
  for (long x = 0; x < dim; ++x)
    sectors[detail::popcount_long(static_cast<unsigned long>(x))].push_back(x);
  return detail::hermitian_span_from_sectors(dim, sectors);
}

/// Hermitian basis of the parity-symmetric operators on k qubits.
inline std::vector<Matrix> z2_symmetric_operator_span(long k) {
  const long dim = 1L << k;
  std::vector<std::vector<long>> sectors(2);
  for (long x = 0; x < dim; ++x)
    sectors[detail::popcount_long(static_cast<unsigned long>(x)) & 1].push_back(x);
  return detail::hermitian_span_from_sectors(dim, sectors);
}

/// Hermitian spanning set of the SU(2)-symmetric operators on k qubits:
/// symmetrized qubit-permutation operators (Schur-Weyl).
inline std::vector<Matrix> su2_symmetric_operator_span(long k) {
  const long dim = 1L << k;
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  std::vector<Matrix> ops;
  do {
    Matrix q = Matrix::Zero(dim, dim);
    for (long x = 0; x < dim; ++x) {
      long y = 0;
      for (int b = 0; b < k; ++b)
        if ((x >> b) & 1) y |= 1L << perm[b];
      q(y, x) = 1.0;
    }
    ops.push_back(0.5 * (q + q.adjoint()));
    Matrix anti = Cplx(0, 0.5) * (q - q.adjoint());
    if (anti.cwiseAbs().maxCoeff() > 1e-15) ops.push_back(anti);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return ops;
}

inline std::vector<Matrix> symmetric_operator_span(Symmetry s, long k) {
  switch (s) {
    case Symmetry::Z2: return z2_symmetric_operator_span(k);
    case Symmetry::U1: return u1_symmetric_operator_span(k);
    case Symmetry::SU2: return su2_symmetric_operator_span(k);
    case Symmetry::Custom:
      throw InputError("no operator span for custom symmetries");
  }
  throw InputError("unknown symmetry");
}

}  // namespace symdesign
