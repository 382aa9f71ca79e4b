#pragma once

#include <string>

#include "symdesign/bigint.hpp"
#include "symdesign/symmetry.hpp"

namespace symdesign {

enum class Regime { Tight, UpperBoundOnly };

inline std::string to_string(Regime r) {
  return r == Regime::Tight ? "tight" : "upper_bound_only";
}

/// Closed-form design bound for one of the built-in symmetries, together
/// with whether the formula is known to be tight at this (n, k) or is only
/// an upper bound on the achievable order.
struct ClosedFormBound {
  Int value;
  Regime regime = Regime::UpperBoundOnly;
  std::string validity;  // human-readable statement of the tightness range
};

namespace detail {
inline void require_formula_range(long n, long k) {
  if (k < 1) throw InputError("locality k must be >= 1");
  if (n < k + 1)
    throw InputError("closed form requires n >= k+1 (got n=" +
                     std::to_string(n) + ", k=" + std::to_string(k) + ")");
}
}  // namespace detail

/// Parity bound 2^{n-1}, tight for every n >= k+1.
inline ClosedFormBound bound_z2(long n, long k) {
  detail::require_formula_range(n, k);
  return {pow2(n - 1), Regime::Tight, "n >= k+1"};
}

/// U(1) bound 2^{floor(k/2)} / ceil(k/2)! * prod_{a=1}^{ceil(k/2)} (n-k+2a-1).
/// Tight for n >= 2^k, and for all n >= k+1 when k is 2, 3 or 4.
inline ClosedFormBound bound_u1(long n, long k) {
  detail::require_formula_range(n, k);
  const long half_up = (k + 1) / 2;
  Int prod = pow2(k / 2);
  for (long a = 1; a <= half_up; ++a) prod *= Int(n - k + 2 * a - 1);
  Int value = exact_div(prod, factorial(half_up));

  ClosedFormBound b;
  b.value = value;
  const bool small_k_tight = (k >= 2 && k <= 4);
  const bool asymptotic = (k < 62) && (n >= (1L << k));
  b.regime = (small_k_tight || asymptotic) ? Regime::Tight : Regime::UpperBoundOnly;
  b.validity = small_k_tight ? "n >= k+1 (k = 2, 3, 4)" : "n >= 2^k";
  return b;
}

/// True when the SU(2) formula's product hits a nonpositive factor (even k
/// at n = k+1).  Those instances are universal — the constraint space has
/// full rank and the engine reports an unbounded design order — so no
/// meaningful closed-form value exists.
inline bool closed_form_degenerate(Symmetry s, long n, long k) {
  return s == Symmetry::SU2 && n <= 2 * (k / 2 + 1) - 1;
}

/// SU(2) bound 2^{floor(k/2)} / (floor(k/2)+1)! * prod_{a=1}^{floor(k/2)+1}
/// (n-2a+1).  Tight for n >= 2^{2(floor(k/2)+1)}; for k = 2, 3 already from
/// n >= 9 and for k = 4 from n >= 13.
inline ClosedFormBound bound_su2(long n, long k) {
  detail::require_formula_range(n, k);
  if (closed_form_degenerate(Symmetry::SU2, n, k))
    throw InputError("su2 closed form degenerates for n <= 2(floor(k/2)+1)-1 "
                     "(universal regime, unbounded design order)");
  const long j = k / 2 + 1;
  Int prod = pow2(k / 2);
  for (long a = 1; a <= j; ++a) prod *= Int(n - 2 * a + 1);
  Int value = exact_div(prod, factorial(j));

  ClosedFormBound b;
  b.value = value;
  bool tight = false;
  std::string validity;
  if (k == 2 || k == 3) {
    tight = n >= 9;
    validity = "n >= 9";
  } else if (k == 4) {
    tight = n >= 13;
    validity = "n >= 13";
  }
  if (!tight && 2 * j < 62 && n >= (1L << (2 * j))) tight = true;
  if (validity.empty()) validity = "n >= 2^(2(floor(k/2)+1))";
  b.regime = tight ? Regime::Tight : Regime::UpperBoundOnly;
  b.validity = validity;
  return b;
}

inline ClosedFormBound closed_form_bound(Symmetry s, long n, long k) {
  switch (s) {
    case Symmetry::Z2: return bound_z2(n, k);
    case Symmetry::U1: return bound_u1(n, k);
    case Symmetry::SU2: return bound_su2(n, k);
    case Symmetry::Custom:
      throw InputError("no closed form for custom symmetries");
  }
  throw InputError("unknown symmetry");
}

}  // namespace symdesign
