#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "symdesign/bigint.hpp"
#include "symdesign/lattice.hpp"
#include "symdesign/rational_matrix.hpp"
#include "symdesign/symmetry.hpp"

namespace symdesign {

/// <m, x+> = sum_i m_i * max(x_i, 0).
inline Int positive_part_objective(const std::vector<Int>& m,
                                   const std::vector<Int>& x) {
  if (m.size() != x.size())
    throw std::invalid_argument("positive_part_objective: length mismatch");
  Int s = 0;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] > 0) s += m[i] * x[i];
  return s;
}

/// <m, |x|> = <m, x+> + <m, (-x)+>.
inline Int abs_objective(const std::vector<Int>& m, const std::vector<Int>& x) {
  if (m.size() != x.size())
    throw std::invalid_argument("abs_objective: length mismatch");
  Int s = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    Int a = x[i] >= 0 ? x[i] : Int(-x[i]);
    s += m[i] * a;
  }
  return s;
}

/// Seed for the bounded enumeration: a cheap nonzero lattice point d and the
/// upper bound t0 = <m, d+> it certifies.
struct SeedInfo {
  std::vector<size_t> lambda_prime;  // positions of the J+1 smallest m
  std::vector<Int> d;                // nonzero lattice point
  Int t0;                            // min(<m, d+>, <m, (-d)+>)
  bool sublattice_1d = false;        // d generates the lattice restricted to lambda_prime
};

/// Result of the integer minimization.  `value` is absent exactly in the
/// universal case (trivial lattice); max design order is then unbounded.
struct DesignBound {
  std::optional<Int> value;
  std::vector<Int> witness;  // nonzero lattice point attaining value, if finite
  bool optimal = true;       // false only after node-budget exhaustion
  uint64_t nodes_visited = 0;

  bool is_infinite() const { return !value.has_value(); }
  Int max_design_order() const {
    if (!value) throw std::logic_error("max_design_order: infinite bound");
    return *value - 1;
  }
};

struct MinimizeOptions {
  uint64_t node_budget = 1'000'000'000;
};

namespace detail {

/// Picks the sign of d minimizing <m, d+>; ties resolved toward a positive
/// leading coordinate.
inline std::vector<Int> canonical_sign(const std::vector<Int>& m,
                                       std::vector<Int> d) {
  std::vector<Int> neg(d.size());
  for (size_t i = 0; i < d.size(); ++i) neg[i] = -d[i];
  Int plus = positive_part_objective(m, d);
  Int minus = positive_part_objective(m, neg);
  if (minus < plus) return neg;
  if (plus < minus) return d;
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    return d[i] > 0 ? d : neg;
  }
  return d;
}

}  // namespace detail

/// Builds the enumeration seed.  Restricting the lattice to the labels of
/// the (J+1) smallest multiplicities (J = dim of the constraint space) gives
/// a sublattice of rank >= 1; when that rank is exactly 1 its primitive
/// generator is the point closest to zero and t0 = <m, d+> reproduces the
/// closed-form upper bounds.  Otherwise d is the sublattice basis vector of
/// least <m, |.|>.
inline SeedInfo seed(const SymmetryData& data, const LatticeBasis& lattice) {
  if (lattice.dim() == 0)
    throw std::logic_error("seed: trivial lattice (universal case)");
  const size_t nlab = data.num_labels();
  assert(lattice.ambient_dim == nlab);
  const size_t j_dim = data.c_basis.rows();
  assert(j_dim + 1 <= nlab);

  std::vector<size_t> order(nlab);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    int c = cmp(data.m[a], data.m[b]);
    if (c != 0) return c < 0;
    return a < b;
  });
  SeedInfo s;
  s.lambda_prime.assign(order.begin(), order.begin() + j_dim + 1);
  std::sort(s.lambda_prime.begin(), s.lambda_prime.end());

  // Integer kernel of the constraint matrix restricted to lambda_prime.
  RationalMatrix restricted(data.c_basis.rows(), s.lambda_prime.size());
  for (size_t r = 0; r < data.c_basis.rows(); ++r)
    for (size_t c = 0; c < s.lambda_prime.size(); ++c)
      restricted.at(r, c) = data.c_basis.at(r, s.lambda_prime[c]);
  LatticeBasis sub = integer_saturation(rational_kernel(restricted));

  auto embed = [&](const std::vector<Int>& y) {
    std::vector<Int> x(nlab, Int(0));
    for (size_t c = 0; c < s.lambda_prime.size(); ++c) x[s.lambda_prime[c]] = y[c];
    return x;
  };

  if (sub.dim() == 1) {
    s.sublattice_1d = true;
    s.d = detail::canonical_sign(data.m, embed(sub.basis.row(0)));
  } else if (sub.dim() >= 2) {
    size_t best = 0;
    Int best_obj = abs_objective(data.m, embed(sub.basis.row(0)));
    for (size_t i = 1; i < sub.dim(); ++i) {
      Int obj = abs_objective(data.m, embed(sub.basis.row(i)));
      if (obj < best_obj) {
        best = i;
        best_obj = obj;
      }
    }
    s.d = detail::canonical_sign(data.m, embed(sub.basis.row(best)));
  } else {
    // Cannot happen for consistent inputs (the restricted kernel has rank
    // >= 1 whenever the full lattice is nontrivial); kept as a hard error.
    throw std::logic_error("seed: empty sublattice on lambda_prime");
  }
  s.t0 = positive_part_objective(data.m, s.d);
  return s;
}

/// True iff m_l >= t0 for every label outside lambda_prime.  When the seed
/// sublattice is one-dimensional this certifies that the minimum equals t0
/// (any lattice point leaving the sublattice picks up a coordinate of
/// weight >= t0).
inline bool shortcut_check(const SymmetryData& data, const SeedInfo& s) {
  if (!s.sublattice_1d) return false;
  std::vector<bool> in_prime(data.num_labels(), false);
  for (size_t i : s.lambda_prime) in_prime[i] = true;
  for (size_t i = 0; i < data.num_labels(); ++i)
    if (!in_prime[i] && data.m[i] < s.t0) return false;
  return true;
}

namespace detail {

struct EnumState {
  const IntMatrix* h;                // HNF of the column-permuted basis
  const std::vector<size_t>* pivots;
  const std::vector<Int>* m_perm;    // multiplicities in permuted order
  size_t n = 0, r = 0;
  bool balanced = false;
  Int t0;

  Int incumbent;
  std::vector<Int> best_x_perm;
  bool improved = false;

  uint64_t nodes = 0, budget = 0;
  bool exhausted = false;

  std::vector<Int> acc;  // partial coordinate values, permuted order
};

/// Largest |x| allowed at a coordinate of multiplicity m under the strict
/// box m*|x| < bound; empty (negative) when bound <= 0.
inline Int box_cap(const Int& m, const Int& bound) {
  if (bound <= 0) return Int(-1);
  return floor_div(bound - 1, m);
}

inline void enum_dfs(EnumState& st, size_t depth, const Int& p_plus,
                     const Int& p_minus, bool any_nonzero) {
  if (st.exhausted) return;
  if (depth == st.r) {
    if (!any_nonzero) return;
    assert(!st.balanced || p_plus == p_minus);
    Int val = st.balanced ? p_plus : std::min(p_plus, p_minus);
    if (val < st.incumbent) {
      st.incumbent = val;
      st.best_x_perm = st.acc;
      if (!st.balanced && p_minus < p_plus)
        for (auto& v : st.best_x_perm) v = -v;
      st.improved = true;
    }
    return;
  }

  const size_t pj = (*st.pivots)[depth];
  const size_t seg_end = depth + 1 < st.r ? (*st.pivots)[depth + 1] : st.n;
  const Int box_bound = st.balanced ? st.incumbent : st.t0;

  // Intersect the per-column box intervals over the segment finalized at
  // this depth; every segment value is affine in the coefficient a.
  bool has_bounds = false;
  Int lo, hi;
  for (size_t q = pj; q < seg_end; ++q) {
    const Int& hq = st.h->at(depth, q);
    const Int cap = box_cap((*st.m_perm)[q], box_bound);
    if (cap < 0) return;
    if (hq == 0) {
      Int a = st.acc[q] >= 0 ? st.acc[q] : Int(-st.acc[q]);
      if (a > cap) return;
      continue;
    }
    // -cap <= acc + a*h <= cap; rounding directions depend on sign(h).
    Int l, h2;
    if (hq > 0) {
      l = ceil_div(-cap - st.acc[q], hq);
      h2 = floor_div(cap - st.acc[q], hq);
    } else {
      l = ceil_div(cap - st.acc[q], hq);
      h2 = floor_div(-cap - st.acc[q], hq);
    }
    if (!has_bounds) {
      lo = l;
      hi = h2;
      has_bounds = true;
    } else {
      if (l > lo) lo = l;
      if (h2 < hi) hi = h2;
    }
  }
  assert(has_bounds);  // the pivot column always has h != 0
  if (!any_nonzero && lo < 0) lo = 0;
  if (lo > hi) return;

  // Walk the interval.  Row `depth` contributes to every column from its
  // pivot onward, so acc must be updated over [pj, n); `cur` tracks the
  // coefficient value currently reflected in acc.
  Int cur = lo;
  for (size_t q = pj; q < st.n; ++q)
    if (st.h->at(depth, q) != 0) st.acc[q] += lo * st.h->at(depth, q);

  for (Int a = lo; a <= hi; ++a) {
    if (++st.nodes > st.budget) {
      st.exhausted = true;
      break;
    }
    Int dp = p_plus, dm = p_minus;
    for (size_t q = pj; q < seg_end; ++q) {
      if (st.acc[q] > 0)
        dp += (*st.m_perm)[q] * st.acc[q];
      else if (st.acc[q] < 0)
        dm -= (*st.m_perm)[q] * st.acc[q];
    }
    const bool prune = st.balanced ? (dp >= st.incumbent || dm >= st.incumbent)
                                   : (std::min(dp, dm) >= st.incumbent);
    if (!prune) {
      enum_dfs(st, depth + 1, dp, dm, any_nonzero || a != 0);
      if (st.exhausted) break;
    }
    if (a < hi) {
      for (size_t q = pj; q < st.n; ++q) st.acc[q] += st.h->at(depth, q);
      cur += 1;
    }
  }

  // Restore acc to its value before this depth touched it.
  for (size_t q = pj; q < st.n; ++q)
    if (st.h->at(depth, q) != 0) st.acc[q] -= cur * st.h->at(depth, q);
}

}  // namespace detail

/// Exact minimum of <m, x+> over nonzero lattice points, by depth-first
/// enumeration of HNF coefficients with coordinates processed in order of
/// decreasing multiplicity.  Any coordinate with m_l >= t0 is forced to
/// zero by the box |x_l| < t0/m_l, which collapses the search for the
/// built-in symmetries.  When m is orthogonal to the lattice (always the
/// case when the identity's trace vector lies in the constraint span) the
/// two sign objectives coincide and the box may shrink with the incumbent;
/// otherwise the t0-box is kept fixed and the minimum is taken over it.
inline DesignBound minimize(const SymmetryData& data, const LatticeBasis& lattice,
                            const SeedInfo& s,
                            const MinimizeOptions& opts = {}) {
  DesignBound out;
  if (lattice.dim() == 0) return out;  // infinite

  const size_t nlab = data.num_labels();
  out.value = s.t0;
  out.witness = s.d;
  if (s.t0 == 0) return out;  // nothing can beat a zero objective

  bool balanced = true;
  for (size_t i = 0; i < lattice.dim() && balanced; ++i)
    balanced = dot(data.m, lattice.basis.row(i)) == 0;

  // Columns sorted by multiplicity descending: large-m coordinates get
  // pivots first and are pinned (almost always to zero) near the root.
  std::vector<size_t> perm(nlab);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
    int c = cmp(data.m[a], data.m[b]);
    if (c != 0) return c > 0;
    return a < b;
  });

  IntMatrix permuted(lattice.dim(), nlab);
  for (size_t i = 0; i < lattice.dim(); ++i)
    for (size_t j = 0; j < nlab; ++j)
      permuted.at(i, j) = lattice.basis.at(i, perm[j]);
  HnfResult hnf = row_hnf(permuted);
  assert(hnf.h.rows() == lattice.dim());

  std::vector<Int> m_perm(nlab);
  for (size_t j = 0; j < nlab; ++j) m_perm[j] = data.m[perm[j]];

  detail::EnumState st;
  st.h = &hnf.h;
  st.pivots = &hnf.pivot_cols;
  st.m_perm = &m_perm;
  st.n = nlab;
  st.r = lattice.dim();
  st.balanced = balanced;
  st.t0 = s.t0;
  st.incumbent = s.t0;
  st.budget = opts.node_budget;
  st.acc.assign(nlab, Int(0));

  detail::enum_dfs(st, 0, Int(0), Int(0), false);

  out.nodes_visited = st.nodes;
  out.optimal = !st.exhausted;
  out.value = st.incumbent;
  if (st.improved) {
    std::vector<Int> x(nlab);
    for (size_t j = 0; j < nlab; ++j) x[perm[j]] = st.best_x_perm[j];
    out.witness = balanced ? detail::canonical_sign(data.m, x) : x;
  }
  return out;
}

}  // namespace symdesign
