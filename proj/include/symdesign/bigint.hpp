#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace symdesign {

/// Arbitrary-precision integer and rational types used by the exact path.
/// No floating point is allowed anywhere in the lattice pipeline.
using Int = mpz_class;
using Rat = mpq_class;

/// Thrown on malformed user input (bad flags, bad custom files, violated
/// preconditions).  The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Binomial coefficient with the convention C(a, b) = 0 for b outside
/// {0, ..., a}.  a must be nonnegative.
inline Int binomial(long a, long b) {
  if (a < 0) throw std::invalid_argument("binomial: negative upper index");
  if (b < 0 || b > a) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return r;
}

inline Int pow2(unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

inline Int factorial(unsigned long k) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

/// Exact division; throws if the divisor does not divide the dividend.
inline Int exact_div(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("exact_div: zero divisor");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("exact_div: not divisible");
  return q;
}

/// Floor division for signed big integers.
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Parses a decimal big integer, rejecting anything else.
inline Int parse_int(const std::string& s) {
  Int v;
  if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
    throw InputError("invalid integer literal: '" + s + "'");
  return v;
}

/// Parses an exact rational "p/q" or plain integer "p".
inline Rat parse_rational(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  Rat v;
  if (mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
    throw InputError("invalid rational literal: '" + s + "'");
  if (mpz_sgn(mpq_denref(v.get_mpq_t())) == 0)
    throw InputError("zero denominator in rational literal: '" + s + "'");
  v.canonicalize();
  return v;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

inline std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

/// Componentwise positive part max(x, 0).
inline std::vector<Int> positive_part(const std::vector<Int>& x) {
  std::vector<Int> p(x.size());
  for (size_t i = 0; i < x.size(); ++i) p[i] = x[i] > 0 ? x[i] : Int(0);
  return p;
}

}  // namespace symdesign
