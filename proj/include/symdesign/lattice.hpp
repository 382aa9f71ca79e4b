#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <utility>
#include <vector>

#include "symdesign/bigint.hpp"
#include "symdesign/rational_matrix.hpp"

namespace symdesign {

/// Dense big-integer matrix, row-major, rows are vectors.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return IntMatrix();
    IntMatrix m(rows.size(), rows.front().size());
    for (size_t i = 0; i < rows.size(); ++i) {
      assert(rows[i].size() == m.cols());
      for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Int& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Int> row(size_t i) const {
    return std::vector<Int>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  RationalMatrix to_rational() const {
    RationalMatrix m(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) m.at(i, j) = Rat(at(i, j));
    return m;
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

struct HnfResult {
  IntMatrix h;                    // row HNF, zero rows trimmed
  std::vector<size_t> pivot_cols; // strictly increasing, one per row of h
  IntMatrix u;                    // unimodular, u_full * input = [h; 0]
  size_t input_rows = 0;
};

/// Row-style Hermite normal form by integer row operations.
/// Pivots are positive, entries above each pivot are reduced into
/// [0, pivot), and rows below a pivot are zero in its column.  The returned
/// transform spans all input rows: rows [h.rows(), input_rows) of `u` are a
/// basis of the left kernel of the input.
inline HnfResult row_hnf(const IntMatrix& a) {
  HnfResult res;
  res.input_rows = a.rows();
  if (a.empty()) {
    res.h = IntMatrix(0, a.cols());
    res.u = IntMatrix::identity(a.rows());
    return res;
  }
  const size_t m = a.rows(), n = a.cols();
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(m);

  auto row_sub = [&](size_t dst, size_t src, const Int& q) {
    if (q == 0) return;
    for (size_t j = 0; j < n; ++j) h.at(dst, j) -= q * h.at(src, j);
    for (size_t j = 0; j < m; ++j) u.at(dst, j) -= q * u.at(src, j);
  };
  auto row_swap = [&](size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < n; ++c) std::swap(h.at(i, c), h.at(j, c));
    for (size_t c = 0; c < m; ++c) std::swap(u.at(i, c), u.at(j, c));
  };
  auto row_negate = [&](size_t i) {
    for (size_t c = 0; c < n; ++c) h.at(i, c) = -h.at(i, c);
    for (size_t c = 0; c < m; ++c) u.at(i, c) = -u.at(i, c);
  };

  size_t r = 0;
  for (size_t c = 0; c < n && r < m; ++c) {
    // Euclidean reduction within column c on rows >= r.
    while (true) {
      size_t best = m;
      for (size_t i = r; i < m; ++i) {
        if (h.at(i, c) == 0) continue;
        if (best == m ||
            mpz_cmpabs(h.at(i, c).get_mpz_t(), h.at(best, c).get_mpz_t()) < 0)
          best = i;
      }
      if (best == m) break;  // column all zero below r
      row_swap(r, best);
      bool cleared = true;
      for (size_t i = r + 1; i < m; ++i) {
        if (h.at(i, c) == 0) continue;
        Int q = floor_div(h.at(i, c), h.at(r, c));
        row_sub(i, r, q);
        if (h.at(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h.at(r, c) == 0) continue;
    if (h.at(r, c) < 0) row_negate(r);
    for (size_t i = 0; i < r; ++i) {
      Int q = floor_div(h.at(i, c), h.at(r, c));
      row_sub(i, r, q);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }

  IntMatrix htrim(r, n);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < n; ++j) htrim.at(i, j) = h.at(i, j);
  res.h = std::move(htrim);
  res.u = std::move(u);
  return res;
}

/// Integer basis of {x in Z^cols : a x = 0}; saturated by construction since
/// the rows come from a unimodular transform of Z^cols.
inline IntMatrix integer_kernel(const IntMatrix& a) {
  const IntMatrix at = a.transposed();
  HnfResult res = row_hnf(at);
  const size_t rk = res.h.rows();
  const size_t n = a.cols();
  IntMatrix kernel(n - rk, n);
  for (size_t i = rk; i < n; ++i)
    for (size_t j = 0; j < n; ++j) kernel.at(i - rk, j) = res.u.at(i, j);
  return kernel;
}

/// Integer lattice given by a basis (rows).  The engine only constructs
/// saturated bases: the lattice is all integer points of its rational span.
struct LatticeBasis {
  IntMatrix basis;
  size_t ambient_dim = 0;

  size_t dim() const { return basis.rows(); }
};

/// Saturated integer basis of span(K) ∩ Z^cols for a rational kernel basis K.
/// Route: the orthogonal complement of span(K) is itself a rational kernel;
/// scaling it to integers and taking the integer kernel yields exactly the
/// integer points of span(K).
inline LatticeBasis integer_saturation(const RationalMatrix& k,
                                       const WarnSink& warn = nullptr) {
  LatticeBasis lat;
  lat.ambient_dim = k.cols();
  if (k.rows() == 0) {
    lat.basis = IntMatrix(0, k.cols());
    return lat;
  }
  RationalMatrix complement = rational_kernel(k, warn);
  if (complement.rows() == 0) {
    // span(K) is everything; the integer points are Z^cols.
    lat.basis = IntMatrix::identity(k.cols());
    return lat;
  }
  IntMatrix a = IntMatrix::from_rows(detail::integer_scaled_rows(complement));
  lat.basis = integer_kernel(a);
  return lat;
}

/// Elementary divisors (diagonal of the Smith normal form), positive, each
/// dividing the next.  Alternates row and column Hermite reductions until
/// the matrix is diagonal (Kannan-Bachem style, which keeps entries tame),
/// then repairs the divisibility chain with 2x2 gcd steps.
inline std::vector<Int> smith_normal_divisors(const IntMatrix& a) {
  std::vector<Int> divisors;
  if (a.empty()) return divisors;

  auto is_diagonal = [](const IntMatrix& m) {
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j)
        if (i != j && m.at(i, j) != 0) return false;
    return true;
  };

  IntMatrix cur = row_hnf(a).h;
  for (int round = 0; round < 1000 && !is_diagonal(cur); ++round) {
    cur = row_hnf(cur.transposed()).h;
    if (is_diagonal(cur)) break;
    cur = row_hnf(cur).h;
    if (round == 999)
      throw std::logic_error("smith_normal_divisors: no convergence");
  }

  const size_t rk = std::min(cur.rows(), cur.cols());
  for (size_t i = 0; i < rk; ++i) {
    Int d = cur.at(i, i);
    if (d < 0) d = -d;
    if (d != 0) divisors.push_back(d);
  }
  // Repair divisibility: replace (d_i, d_j) by (gcd, lcm) until sorted.
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (size_t i = 0; i + 1 < divisors.size(); ++i)
      for (size_t j = i + 1; j < divisors.size(); ++j) {
        if (divisors[j] % divisors[i] == 0) continue;
        Int g, l;
        mpz_gcd(g.get_mpz_t(), divisors[i].get_mpz_t(), divisors[j].get_mpz_t());
        l = exact_div(divisors[i] * divisors[j], g);
        divisors[i] = g;
        divisors[j] = l;
        dirty = true;
      }
  }
  return divisors;
}

/// A basis is saturated iff every elementary divisor of its matrix is 1.
inline bool is_saturated(const LatticeBasis& lat) {
  if (lat.dim() == 0) return true;
  for (const Int& d : smith_normal_divisors(lat.basis))
    if (d != 1) return false;
  return true;
}

/// Canonical form for lattice-equality comparisons.
inline IntMatrix canonical_hnf(const IntMatrix& a) { return row_hnf(a).h; }

inline bool same_lattice(const LatticeBasis& a, const LatticeBasis& b) {
  return a.ambient_dim == b.ambient_dim &&
         canonical_hnf(a.basis) == canonical_hnf(b.basis);
}

/// Exact membership test against a basis (not necessarily in HNF).
inline bool lattice_contains(const LatticeBasis& lat, const std::vector<Int>& x) {
  assert(x.size() == lat.ambient_dim);
  HnfResult res = row_hnf(lat.basis);
  std::vector<Int> y = x;
  size_t r = 0;
  for (size_t c = 0; c < lat.ambient_dim; ++c) {
    if (r < res.h.rows() && res.pivot_cols[r] == c) {
      Int rem;
      Int q;
      mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), y[c].get_mpz_t(),
                  res.h.at(r, c).get_mpz_t());
      if (rem != 0) return false;
      if (q != 0)
        for (size_t j = c; j < lat.ambient_dim; ++j) y[j] -= q * res.h.at(r, j);
      ++r;
    } else if (y[c] != 0) {
      return false;
    }
  }
  return true;
}

/// Exact inner product over the labels, <a, b> = sum a_i b_i.
inline Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Exact orthogonality of every lattice basis vector to every constraint row.
inline bool orthogonal_to(const LatticeBasis& lat, const RationalMatrix& c) {
  for (size_t i = 0; i < lat.dim(); ++i) {
    for (size_t r = 0; r < c.rows(); ++r) {
      Rat s = 0;
      for (size_t j = 0; j < lat.ambient_dim; ++j)
        s += c.at(r, j) * Rat(lat.basis.at(i, j));
      if (s != 0) return false;
    }
  }
  return true;
}

}  // namespace symdesign
