#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symdesign/bigint.hpp"
#include "symdesign/rational_matrix.hpp"

namespace symdesign {

enum class Symmetry { Z2, U1, SU2, Custom };

inline std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::Z2: return "z2";
    case Symmetry::U1: return "u1";
    case Symmetry::SU2: return "su2";
    case Symmetry::Custom: return "custom";
  }
  return "?";
}

inline Symmetry symmetry_from_string(const std::string& s) {
  if (s == "z2" || s == "Z2") return Symmetry::Z2;
  if (s == "u1" || s == "U1") return Symmetry::U1;
  if (s == "su2" || s == "SU2") return Symmetry::SU2;
  if (s == "custom") return Symmetry::Custom;
  throw InputError("unknown symmetry '" + s + "' (expected z2, u1, su2, custom)");
}

/// Canonical integer encoding of an irrep label.  For u1 this is the
/// Z-total eigenvalue index (0..n), for su2 the integer i with spin
/// n/2 - i (0..floor(n/2)), for z2 the parity bit.
struct IrrepLabel {
  long index = 0;
  friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
  friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;
};

/// Everything the optimizer needs about one symmetry instance:
/// labels, multiplicities m, irrep dimensions r, and a rational basis of the
/// constraint space spanned by the trace vectors of local symmetric
/// operators.  Values are immutable after construction and safe to share.
struct SymmetryData {
  Symmetry symmetry = Symmetry::Custom;
  std::optional<long> n;  // qubit count; unset for non-qubit custom data
  std::vector<IrrepLabel> labels;
  std::vector<Int> m;
  std::vector<Int> r;
  RationalMatrix c_basis;  // rows span the constraint space

  size_t num_labels() const { return labels.size(); }

  Int total_dimension() const {
    Int s = 0;
    for (size_t i = 0; i < m.size(); ++i) s += m[i] * r[i];
    return s;
  }

  /// Throws InputError on any violated structural invariant.
  void validate() const {
    if (labels.empty()) throw InputError("symmetry data: no labels");
    if (m.size() != labels.size() || r.size() != labels.size())
      throw InputError("symmetry data: m/r length mismatch");
    for (size_t i = 0; i < labels.size(); ++i) {
      if (labels[i].index < 0)
        throw InputError("symmetry data: negative label index");
      for (size_t j = i + 1; j < labels.size(); ++j)
        if (labels[i] == labels[j])
          throw InputError("symmetry data: duplicate label " +
                           std::to_string(labels[i].index));
      if (m[i] <= 0) throw InputError("symmetry data: multiplicity must be >= 1");
      if (r[i] <= 0) throw InputError("symmetry data: irrep dimension must be >= 1");
    }
    if (c_basis.rows() > 0 && c_basis.cols() != labels.size())
      throw InputError("symmetry data: c_basis width != number of labels");
    if (c_basis.rows() > 0 && rank(c_basis) != c_basis.rows())
      throw InputError("symmetry data: c_basis rows are linearly dependent");
    if (n) {
      Int dim = total_dimension();
      if (dim != pow2(static_cast<unsigned long>(*n)))
        throw InputError("symmetry data: sum of r*m != 2^n");
    }
  }
};

namespace detail {
inline void require_locality(long n, long k, bool allow_global) {
  if (k < 1) throw InputError("locality k must be >= 1");
  const long min_n = allow_global ? k : k + 1;
  if (n < min_n)
    throw InputError("qubit count n=" + std::to_string(n) +
                     " too small for locality k=" + std::to_string(k) +
                     " (need n >= " + std::to_string(min_n) + ")");
}
}  // namespace detail

/// Parity symmetry generated by Z on every qubit.  Two one-dimensional
/// sectors of multiplicity 2^{n-1} each; the constraint space is spanned by
/// (1, 1) for every locality 1 <= k <= n-1.
inline SymmetryData build_z2(long n, long k) {
  detail::require_locality(n, k, /*allow_global=*/false);
  SymmetryData d;
  d.symmetry = Symmetry::Z2;
  d.n = n;
  d.labels = {IrrepLabel{0}, IrrepLabel{1}};
  d.m = {pow2(n - 1), pow2(n - 1)};
  d.r = {Int(1), Int(1)};
  d.c_basis = RationalMatrix::from_rows({{Rat(1), Rat(1)}});
  d.validate();
  return d;
}

/// U(1) symmetry generated by total Z.  Label λ indexes the Z-total
/// eigenvalue n-2λ (equivalently the Hamming-weight sector), m_λ = C(n, λ).
/// The constraint space is spanned by c_j with (c_j)_λ = C(n-k, λ-j),
/// j = 0..k, one row per Z-total eigenvalue block of a k-qubit symmetric
/// operator.  k = n is allowed and yields a full-rank basis (global gates).
inline SymmetryData build_u1(long n, long k) {
  detail::require_locality(n, k, /*allow_global=*/true);
  SymmetryData d;
  d.symmetry = Symmetry::U1;
  d.n = n;
  for (long lam = 0; lam <= n; ++lam) {
    d.labels.push_back(IrrepLabel{lam});
    d.m.push_back(binomial(n, lam));
    d.r.push_back(Int(1));
  }
  std::vector<std::vector<Rat>> rows;
  for (long j = 0; j <= k; ++j) {
    std::vector<Rat> row(n + 1);
    for (long lam = 0; lam <= n; ++lam) row[lam] = Rat(binomial(n - k, lam - j));
    rows.push_back(std::move(row));
  }
  d.c_basis = RationalMatrix::from_rows(rows);
  d.validate();
  return d;
}

/// SU(2) symmetry generated by the total X, Y, Z operators.  Labels are
/// stored as the integer i = n/2 - λ (λ the spin), so every formula stays in
/// exact integer arithmetic.  m_i = C(n, i) - C(n, i-1), r_i = n - 2i + 1,
/// and the constraint space is spanned by v_j with
/// (v_j)_i = C(n-2j, i-j) - C(n-2j, i-j-1), j = 0..floor(k/2): these are the
/// trace vectors of singlet projectors on 2j qubits padded with identity.
inline SymmetryData build_su2(long n, long k) {
  detail::require_locality(n, k, /*allow_global=*/false);
  SymmetryData d;
  d.symmetry = Symmetry::SU2;
  d.n = n;
  const long imax = n / 2;
  for (long i = 0; i <= imax; ++i) {
    d.labels.push_back(IrrepLabel{i});
    d.m.push_back(binomial(n, i) - binomial(n, i - 1));
    d.r.push_back(Int(n - 2 * i + 1));
  }
  std::vector<std::vector<Rat>> rows;
  for (long j = 0; j <= k / 2; ++j) {
    std::vector<Rat> row(imax + 1);
    for (long i = 0; i <= imax; ++i)
      row[i] = Rat(binomial(n - 2 * j, i - j) - binomial(n - 2 * j, i - j - 1));
    rows.push_back(std::move(row));
  }
  d.c_basis = RationalMatrix::from_rows(rows);
  d.validate();
  return d;
}

inline SymmetryData build_symmetry(Symmetry s, long n, long k) {
  switch (s) {
    case Symmetry::Z2: return build_z2(n, k);
    case Symmetry::U1: return build_u1(n, k);
    case Symmetry::SU2: return build_su2(n, k);
    case Symmetry::Custom:
      throw InputError("custom symmetry requires a data file");
  }
  throw InputError("unknown symmetry");
}

}  // namespace symdesign
