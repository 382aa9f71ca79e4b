#pragma once

#include <algorithm>
#include <cassert>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "symdesign/bigint.hpp"

namespace symdesign {

/// Sink for non-fatal diagnostics.  Library code never prints; callers that
/// care (CLI, tests) collect the messages.
using WarnSink = std::function<void(const std::string&)>;

/// Dense matrix of exact rationals, row-major.  Rows are the vectors
/// throughout this library (a basis is a list of rows).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RationalMatrix identity(size_t n) {
    RationalMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static RationalMatrix from_rows(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return RationalMatrix();
    RationalMatrix m(rows.size(), rows.front().size());
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols())
        throw std::invalid_argument("from_rows: ragged rows");
      for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rat& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Rat> row(size_t i) const {
    return std::vector<Rat>(a_.begin() + i * cols_,
                            a_.begin() + (i + 1) * cols_);
  }

  void append_row(const std::vector<Rat>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("append_row: bad size");
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
  }

  bool operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

inline std::vector<Rat> matvec(const RationalMatrix& m,
                               const std::vector<Rat>& x) {
  assert(x.size() == m.cols());
  std::vector<Rat> y(m.rows());
  for (size_t i = 0; i < m.rows(); ++i) {
    Rat s = 0;
    for (size_t j = 0; j < m.cols(); ++j) s += m.at(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

namespace detail {

/// Clears denominators row by row: multiplies each row by the lcm of its
/// denominators.  Scaling rows preserves both row span and kernel.
inline std::vector<std::vector<Int>> integer_scaled_rows(
    const RationalMatrix& m) {
  std::vector<std::vector<Int>> out(m.rows(), std::vector<Int>(m.cols()));
  for (size_t i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    for (size_t j = 0; j < m.cols(); ++j) {
      Rat v = m.at(i, j) * Rat(l);
      assert(v.get_den() == 1);
      out[i][j] = v.get_num();
    }
  }
  return out;
}

struct Echelon {
  std::vector<std::vector<Int>> a;   // fraction-free row echelon form
  std::vector<size_t> pivot_cols;    // one per echelon row, increasing
  std::vector<size_t> dropped_rows;  // input rows that reduced to zero
};

/// Bareiss fraction-free elimination.  All divisions are exact, entries stay
/// integral, and row i of the result has its pivot at pivot_cols[i].
inline Echelon bareiss_echelon(std::vector<std::vector<Int>> a) {
  Echelon e;
  if (a.empty()) return e;
  const size_t cols = a.front().size();
  std::vector<size_t> origin(a.size());
  for (size_t i = 0; i < a.size(); ++i) origin[i] = i;

  Int prev_pivot = 1;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < a.size(); ++c) {
    size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    std::swap(origin[r], origin[p]);
    for (size_t i = r + 1; i < a.size(); ++i) {
      for (size_t j = c + 1; j < cols; ++j)
        a[i][j] = exact_div(a[r][c] * a[i][j] - a[i][c] * a[r][j], prev_pivot);
      a[i][c] = 0;
    }
    prev_pivot = a[r][c];
    e.pivot_cols.push_back(c);
    ++r;
  }
  for (size_t i = r; i < a.size(); ++i) e.dropped_rows.push_back(origin[i]);
  a.resize(r);
  e.a = std::move(a);
  return e;
}

}  // namespace detail

inline size_t rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  return detail::bareiss_echelon(detail::integer_scaled_rows(m)).pivot_cols.size();
}

/// Basis of the right kernel {x : M x = 0}, one vector per row.
/// Linearly dependent rows of M are reduced away (reported via `warn`).
inline RationalMatrix rational_kernel(const RationalMatrix& m,
                                      const WarnSink& warn = nullptr) {
  if (m.empty()) {
    // No constraints: kernel is all of Q^cols.
    RationalMatrix k(m.cols(), m.cols());
    for (size_t i = 0; i < m.cols(); ++i) k.at(i, i) = 1;
    return k;
  }
  auto ech = detail::bareiss_echelon(detail::integer_scaled_rows(m));
  if (!ech.dropped_rows.empty() && warn)
    warn("rational_kernel: dropped " + std::to_string(ech.dropped_rows.size()) +
         " linearly dependent row(s)");

  const size_t cols = m.cols();
  const size_t rk = ech.pivot_cols.size();
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : ech.pivot_cols) is_pivot[c] = true;

  RationalMatrix kernel(cols - rk, cols);
  size_t kv = 0;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> x(cols, Rat(0));
    x[f] = 1;
    // Back-substitute pivot coordinates from the bottom echelon row up.
    for (size_t ii = rk; ii-- > 0;) {
      const size_t pc = ech.pivot_cols[ii];
      Rat s = 0;
      for (size_t j = pc + 1; j < cols; ++j)
        if (x[j] != 0) s += Rat(ech.a[ii][j]) * x[j];
      x[pc] = -s / Rat(ech.a[ii][pc]);
    }
    for (size_t j = 0; j < cols; ++j) kernel.at(kv, j) = x[j];
    ++kv;
  }
  return kernel;
}

/// True iff every row of `b` lies in the row span of `a` (exact).
inline bool span_contains(const RationalMatrix& a, const RationalMatrix& b) {
  if (b.rows() == 0) return true;
  const size_t base = rank(a);
  RationalMatrix stacked = a;
  if (stacked.cols() == 0) stacked = RationalMatrix(0, b.cols());
  for (size_t i = 0; i < b.rows(); ++i) stacked.append_row(b.row(i));
  return rank(stacked) == base;
}

inline bool span_equal(const RationalMatrix& a, const RationalMatrix& b) {
  return span_contains(a, b) && span_contains(b, a);
}

}  // namespace symdesign
