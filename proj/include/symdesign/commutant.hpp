#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "symdesign/block_structure.hpp"
#include "symdesign/rng.hpp"
#include "symdesign/symmetry.hpp"

namespace symdesign {

/// Thrown when the numeric block alignment fails to converge; carries the
/// residuals so the caller can report them.
struct DecompositionError : std::runtime_error {
  double commutation_residual;
  double pattern_residual;
  DecompositionError(const std::string& what, double comm, double pat)
      : std::runtime_error(what + " (commutation residual " +
                           std::to_string(comm) + ", pattern residual " +
                           std::to_string(pat) + ")"),
        commutation_residual(comm),
        pattern_residual(pat) {}
};

// ---- symmetry generators on n qubits -------------------------------------

inline Matrix pauli_total(long n, char axis) {
  const long dim = 1L << n;
  Matrix g = Matrix::Zero(dim, dim);
  for (long q = 0; q < n; ++q) {
    for (long x = 0; x < dim; ++x) {
      const long bit = (x >> q) & 1;
      switch (axis) {
        case 'Z': g(x, x) += bit ? -1.0 : 1.0; break;
        case 'X': g(x ^ (1L << q), x) += 1.0; break;
        case 'Y': g(x ^ (1L << q), x) += bit ? Cplx(0, -1) : Cplx(0, 1); break;
        default: throw InputError("pauli_total: bad axis");
      }
    }
  }
  return g;
}

inline Matrix z_parity(long n) {
  const long dim = 1L << n;
  Matrix g = Matrix::Zero(dim, dim);
  for (long x = 0; x < dim; ++x)
    g(x, x) = (detail::popcount_long(static_cast<unsigned long>(x)) & 1) ? -1.0 : 1.0;
  return g;
}

/// Generators whose joint commutant is the symmetric-operator algebra.
inline std::vector<Matrix> symmetry_generators(Symmetry s, long n) {
  switch (s) {
    case Symmetry::Z2: return {z_parity(n)};
    case Symmetry::U1: return {pauli_total(n, 'Z')};
    case Symmetry::SU2:
      return {pauli_total(n, 'X'), pauli_total(n, 'Y'), pauli_total(n, 'Z')};
    case Symmetry::Custom:
      throw InputError("no built-in generators for custom symmetries");
  }
  throw InputError("unknown symmetry");
}

struct DecomposeOptions {
  uint64_t rng_seed = 0x5eed;
  int max_sweeps = 20000;
  double projection_tol = 1e-12;
  double cluster_tol = 1e-7;
  double pattern_tol = 1e-8;
  int retries = 3;
};

namespace detail {

/// Orthogonal projection (Hilbert-Schmidt) onto {b : [b, g] = 0} for a
/// Hermitian g with precomputed eigenbasis: zero the blocks between distinct
/// eigenspaces.
struct CommutantProjector {
  Matrix q;                  // eigenvectors
  std::vector<long> starts;  // eigenspace boundaries, ends with dim

  static CommutantProjector build(const Matrix& g, double tol) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(g);
    CommutantProjector p;
    p.q = es.eigenvectors();
    const auto& ev = es.eigenvalues();
    p.starts.push_back(0);
    for (long i = 1; i < ev.size(); ++i)
      if (ev[i] - ev[i - 1] > tol) p.starts.push_back(i);
    p.starts.push_back(ev.size());
    return p;
  }

  Matrix apply(const Matrix& b) const {
    Matrix inbase = q.adjoint() * b * q;
    Matrix masked = Matrix::Zero(inbase.rows(), inbase.cols());
    for (size_t s = 0; s + 1 < starts.size(); ++s) {
      const long lo = starts[s], len = starts[s + 1] - starts[s];
      masked.block(lo, lo, len, len) = inbase.block(lo, lo, len, len);
    }
    return q * masked * q.adjoint();
  }
};

inline double commutation_residual(const std::vector<Matrix>& gens,
                                   const Matrix& b) {
  double worst = 0;
  for (const auto& g : gens)
    worst = std::max(worst, (g * b - b * g).cwiseAbs().maxCoeff());
  return worst;
}

/// Hermitian generators with the same commutant as the input list (a
/// unitary generator is replaced by its Hermitian and anti-Hermitian parts).
inline std::vector<Matrix> hermitianize(const std::vector<Matrix>& gens) {
  std::vector<Matrix> out;
  for (const auto& g : gens) {
    const double herm_defect = (g - g.adjoint()).cwiseAbs().maxCoeff();
    if (herm_defect < 1e-12) {
      out.push_back(g);
    } else {
      out.push_back(0.5 * (g + g.adjoint()));
      out.push_back(Cplx(0, 0.5) * (g - g.adjoint()));
    }
  }
  return out;
}

inline Matrix random_hermitian(long dim, Rng& rng) {
  Matrix h(dim, dim);
  for (long i = 0; i < dim; ++i) {
    h(i, i) = rng.gauss();
    for (long j = i + 1; j < dim; ++j) {
      Cplx v = rng.cgauss();
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

/// Projects onto the joint commutant by alternating the single-generator
/// projections (von Neumann-Halperin); converges linearly for these
/// representations.
inline Matrix project_commutant(const std::vector<CommutantProjector>& projs,
                                const std::vector<Matrix>& gens, Matrix b,
                                const DecomposeOptions& opt) {
  const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
  for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
    for (const auto& p : projs) b = p.apply(b);
    // The residual costs as much as a sweep; sample it sparsely.
    if (sweep % 8 == 7 &&
        commutation_residual(gens, b) < opt.projection_tol * scale)
      return b;
  }
  throw DecompositionError("commutant projection did not converge",
                           commutation_residual(gens, b), 0.0);
}

}  // namespace detail

/// Numeric isotypic decomposition of the joint commutant of `generators`:
/// draws a random Hermitian commutant element, eigendecomposes it, groups
/// the r-fold degenerate eigenvalue clusters into sectors using a second
/// commutant element (whose cross-blocks vanish between inequivalent
/// sectors and are scalar multiples of a unitary within a sector), and
/// aligns the per-cluster bases so symmetric operators take the
/// id(r) (x) A form.  Validated against the generators before returning.
inline BlockStructure decompose_commutant(const std::vector<Matrix>& generators,
                                          long dim,
                                          const DecomposeOptions& opt = {}) {
  if (generators.empty()) throw InputError("decompose_commutant: no generators");
  for (const auto& g : generators)
    if (g.rows() != dim || g.cols() != dim)
      throw InputError("decompose_commutant: generator dimension mismatch");
  if (dim > (1L << 10))
    throw InputError("decompose_commutant: dimension above 2^10");

  const std::vector<Matrix> gens = detail::hermitianize(generators);
  std::vector<detail::CommutantProjector> projs;
  for (const auto& g : gens)
    projs.push_back(detail::CommutantProjector::build(g, 1e-9));

  double last_comm = 0, last_pat = 0;
  for (int attempt = 0; attempt <= opt.retries; ++attempt) {
    Rng rng = Rng::substream(opt.rng_seed, static_cast<uint64_t>(attempt));
    Matrix b1 = detail::project_commutant(
        projs, gens, detail::random_hermitian(dim, rng), opt);
    b1 = 0.5 * (b1 + b1.adjoint());
    Matrix b2 = detail::project_commutant(
        projs, gens, detail::random_hermitian(dim, rng), opt);

    Eigen::SelfAdjointEigenSolver<Matrix> es(b1);
    const auto& ev = es.eigenvalues();
    const Matrix& q = es.eigenvectors();
    const double spread = std::max(1.0, ev.cwiseAbs().maxCoeff());

    // Cluster eigenvalues; each cluster is one multiplicity line and its
    // size is the irrep dimension r of its sector.
    std::vector<std::pair<long, long>> clusters;  // [start, len)
    long start = 0;
    for (long i = 1; i <= ev.size(); ++i) {
      if (i == ev.size() || ev[i] - ev[i - 1] > opt.cluster_tol * spread) {
        clusters.emplace_back(start, i - start);
        start = i;
      }
    }

    // Link clusters that belong to the same sector: the second commutant
    // element has a nonzero (scalar-times-unitary) cross block there.
    const long nc = static_cast<long>(clusters.size());
    std::vector<long> sector_of(nc, -1);
    std::vector<std::vector<long>> groups;
    Matrix b2q = q.adjoint() * b2 * q;
    for (long c = 0; c < nc; ++c) {
      if (sector_of[c] >= 0) continue;
      std::vector<long> grp{c};
      sector_of[c] = static_cast<long>(groups.size());
      for (size_t gi = 0; gi < grp.size(); ++gi) {
        for (long d = 0; d < nc; ++d) {
          if (sector_of[d] >= 0) continue;
          const auto& [s1, l1] = clusters[grp[gi]];
          const auto& [s2, l2] = clusters[d];
          if (l1 != l2) continue;
          if (b2q.block(s1, s2, l1, l2).cwiseAbs().maxCoeff() >
              opt.cluster_tol * spread) {
            sector_of[d] = sector_of[c];
            grp.push_back(d);
          }
        }
      }
      groups.push_back(std::move(grp));
    }

    BlockStructure bs;
    bs.dim = dim;
    bool aligned = true;
    for (const auto& grp : groups) {
      const long r = clusters[grp.front()].second;
      const long m = static_cast<long>(grp.size());
      Sector sec;
      sec.r = r;
      sec.m = m;
      sec.isometry = Matrix::Zero(dim, r * m);

      // Reference cluster basis; align every other cluster to it through
      // the unitary factor of the b2 cross block.
      Matrix q0 = q.middleCols(clusters[grp[0]].first, r);
      std::vector<Matrix> bases{q0};
      for (long j = 1; j < m; ++j) {
        Matrix s = q0.adjoint() * b2 * q.middleCols(clusters[grp[j]].first, r);
        Eigen::JacobiSVD<Matrix> svd(s, Eigen::ComputeFullU | Eigen::ComputeFullV);
        if (svd.singularValues().minCoeff() < 1e-6 * spread) {
          aligned = false;
          break;
        }
        Matrix w = svd.matrixU() * svd.matrixV().adjoint();  // unitary factor
        bases.push_back(q.middleCols(clusters[grp[j]].first, r) * w.adjoint());
      }
      if (!aligned) break;
      for (long al = 0; al < r; ++al)
        for (long j = 0; j < m; ++j)
          sec.isometry.col(al * m + j) = bases[j].col(al);
      bs.sectors.push_back(std::move(sec));
    }

    if (aligned) {
      // Validate on three fronts: the generators must conjugate to
      // G (x) id(m), a fresh commutant element must show the id(r) (x) A
      // pattern (this catches sectors wrongly split by an accidental zero
      // cross block), and the isometries must be orthonormal.
      Matrix b3 = detail::project_commutant(
          projs, gens, detail::random_hermitian(dim, rng), opt);
      double pat = block_pattern_residual(bs, b3);
      for (const auto& g : gens) {
        for (const auto& sec : bs.sectors) {
          Matrix blk = sec.isometry.adjoint() * g * sec.isometry;
          // Expect blk = G_sector (x) id(m): check the complement pattern.
          for (long a1 = 0; a1 < sec.r; ++a1)
            for (long a2 = 0; a2 < sec.r; ++a2) {
              Matrix sub = blk.block(a1 * sec.m, a2 * sec.m, sec.m, sec.m);
              Cplx mean = sub.trace() / double(sec.m);
              pat = std::max(pat,
                             (sub - mean * Matrix::Identity(sec.m, sec.m))
                                 .cwiseAbs()
                                 .maxCoeff());
            }
          for (const auto& other : bs.sectors) {
            if (&other == &sec) break;
            pat = std::max(pat, (other.isometry.adjoint() * g * sec.isometry)
                                    .cwiseAbs()
                                    .maxCoeff());
          }
        }
      }
      const double iso = isometry_residual(bs);
      last_comm = detail::commutation_residual(gens, b1);
      last_pat = pat;
      if (pat < opt.pattern_tol && iso < 1e-10) {
        std::sort(bs.sectors.begin(), bs.sectors.end(),
                  [](const Sector& a, const Sector& b) {
                    if (a.r != b.r) return a.r > b.r;
                    return a.m < b.m;
                  });
        return bs;
      }
    }
  }
  throw DecompositionError("block alignment failed", last_comm, last_pat);
}

/// Assigns repdata labels to numerically found sectors.  For z2/u1 the
/// diagonal generator eigenvalue identifies the sector; for su2 the irrep
/// dimension r = 2*lambda + 1 does.
inline void assign_labels(BlockStructure& bs, Symmetry sym, long n) {
  if (sym == Symmetry::U1 || sym == Symmetry::Z2) {
    Matrix g = sym == Symmetry::U1 ? pauli_total(n, 'Z') : z_parity(n);
    for (auto& sec : bs.sectors) {
      Cplx e = (sec.isometry.adjoint() * g * sec.isometry).trace() /
               double(sec.r * sec.m);
      if (sym == Symmetry::U1)
        sec.label = std::lround((n - e.real()) / 2.0);
      else
        sec.label = e.real() > 0 ? 0 : 1;
    }
  } else if (sym == Symmetry::SU2) {
    for (auto& sec : bs.sectors) sec.label = (n - sec.r + 1) / 2;
  }
  std::sort(bs.sectors.begin(), bs.sectors.end(),
            [](const Sector& a, const Sector& b) {
              return a.label.value_or(0) < b.label.value_or(0);
            });
}

/// Full-system block structure in repdata label order.  u1/z2 use the exact
/// computational-basis construction; su2 goes through the numeric
/// decomposition of its generator commutant.
inline BlockStructure symmetric_block_structure(Symmetry sym, long n,
                                                const DecomposeOptions& opt = {}) {
  switch (sym) {
    case Symmetry::U1: return u1_block_structure(n);
    case Symmetry::Z2: return z2_block_structure(n);
    case Symmetry::SU2: {
      BlockStructure bs =
          decompose_commutant(symmetry_generators(sym, n), 1L << n, opt);
      assign_labels(bs, sym, n);
      return bs;
    }
    case Symmetry::Custom:
      throw InputError("no block structure for custom symmetries");
  }
  throw InputError("unknown symmetry");
}

}  // namespace symdesign
