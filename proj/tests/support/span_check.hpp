#pragma once

// Analytic-vs-numeric span comparison: numeric f-vectors are compared with a
// rational basis first at floating tolerance (rank + mutual containment),
// then exactly after continued-fraction reconstruction of the entries.

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "symdesign/bigint.hpp"
#include "symdesign/block_structure.hpp"
#include "symdesign/rational_matrix.hpp"

namespace oracles {

/// Nearest rational with denominator <= max_den (continued fractions);
/// returns false if nothing lands within tol.
inline bool reconstruct_rational(double x, symdesign::Rat& out,
                                 long max_den = 1000000, double tol = 1e-6) {
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double v = x;
  for (int it = 0; it < 64; ++it) {
    const double fl = std::floor(v);
    const long a = static_cast<long>(fl);
    long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double approx = double(p1) / double(q1);
    if (std::abs(approx - x) < tol) {
      out = symdesign::Rat(p1, q1);
      out.canonicalize();
      return true;
    }
    const double frac = v - fl;
    if (frac < 1e-12) break;
    v = 1.0 / frac;
  }
  if (std::abs(std::round(x) - x) < tol) {
    out = symdesign::Rat(static_cast<long>(std::llround(x)));
    return true;
  }
  return false;
}

inline Eigen::MatrixXd to_real(const symdesign::RationalMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out(i, j) = m.at(i, j).get_d();
  return out;
}

inline long numeric_rank(const Eigen::MatrixXd& a, double tol = 1e-9) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& sv = svd.singularValues();
  const double cutoff = tol * std::max(1.0, sv(0));
  long r = 0;
  for (long i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++r;
  return r;
}

struct SpanComparison {
  bool numeric_rank_equal = false;
  bool numeric_mutual_containment = false;
  bool exact_equal = false;
  bool ok() const {
    return numeric_rank_equal && numeric_mutual_containment && exact_equal;
  }
};

/// f_rows: numerically computed f-vectors (rows); c: rational basis.
inline SpanComparison compare_spans(const Eigen::MatrixXd& f_rows,
                                    const symdesign::RationalMatrix& c,
                                    double tol = 1e-9) {
  SpanComparison res;
  const Eigen::MatrixXd creal = to_real(c);
  const long rf = numeric_rank(f_rows, tol);
  const long rc = numeric_rank(creal, tol);
  res.numeric_rank_equal = (rf == rc);

  // Mutual containment: stacking must not increase the rank.
  Eigen::MatrixXd stacked(f_rows.rows() + creal.rows(), creal.cols());
  stacked << f_rows, creal;
  res.numeric_mutual_containment = (numeric_rank(stacked, tol) == rf) && (rf == rc);

  // Exact route: reconstruct small rationals and compare row spans exactly.
  symdesign::RationalMatrix f_exact(0, c.cols());
  bool reconstructed = true;
  for (long i = 0; i < f_rows.rows() && reconstructed; ++i) {
    std::vector<symdesign::Rat> row(c.cols());
    for (long j = 0; j < f_rows.cols(); ++j)
      if (!reconstruct_rational(f_rows(i, j), row[j])) {
        reconstructed = false;
        break;
      }
    if (reconstructed) f_exact.append_row(row);
  }
  res.exact_equal = reconstructed && symdesign::span_equal(f_exact, c);
  return res;
}

/// Numeric f-vectors (label order) of a k-local spanning set embedded on the
/// first k qubits, one row per operator.
inline Eigen::MatrixXd numeric_f_rows(const symdesign::BlockStructure& bs,
                                      const std::vector<symdesign::Matrix>& ops,
                                      long n, long k) {
  std::vector<int> support(k);
  for (long i = 0; i < k; ++i) support[i] = static_cast<int>(i);
  Eigen::MatrixXd rows(static_cast<long>(ops.size()),
                       static_cast<long>(bs.sectors.size()));
  for (size_t o = 0; o < ops.size(); ++o) {
    symdesign::Matrix full = symdesign::embed_operator(ops[o], support, n);
    symdesign::Vector f = symdesign::f_vector(bs, full);
    for (long s = 0; s < f.size(); ++s) {
      if (std::abs(f[s].imag()) > 1e-9)
        throw std::runtime_error("numeric f-vector has an imaginary part");
      rows(static_cast<long>(o), s) = f[s].real();
    }
  }
  return rows;
}

}  // namespace oracles
